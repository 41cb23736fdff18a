//! Catalogued implicit kinks against independently frozen reference values:
//! parameters, minima, rate constants, closed-form energies, implicit-relation
//! samples, tail asymptotics, and energy crossovers.

mod common;

use common::{assert_rel, frozen, num, rel};
use kinkforge::num::tanh_sinh;
use kinkforge::poly::Potential;
use kinkforge::{
    case_by_id, closed_form_energy, energy_crossover, implicit_residual, list_cases, Error,
    KinkCase, Params, Side, TailKind,
};
use serde_json::Value;

fn frozen_case(id: &str) -> &'static Value {
    &frozen()["cases"][id]
}

#[test]
fn registry_covers_every_frozen_case() {
    let cases = list_cases();
    assert_eq!(cases.len(), 38);
    let frozen_ids = frozen()["cases"].as_object().unwrap();
    assert_eq!(frozen_ids.len(), 38);
    for case in &cases {
        assert!(
            frozen_ids.contains_key(case.id()),
            "unknown case id {}",
            case.id()
        );
    }
    let phi8 = cases.iter().filter(|c| c.id().starts_with("phi8.")).count();
    let phi10 = cases.iter().filter(|c| c.id().starts_with("phi10.")).count();
    let phi12 = cases.iter().filter(|c| c.id().starts_with("phi12.")).count();
    assert_eq!((phi8, phi10, phi12), (6, 11, 21));
}

#[test]
fn canonical_parameters_match_frozen() {
    for case in list_cases() {
        let f = frozen_case(case.id());
        let p = case.params();
        assert_rel(p.lambda, num(&f["params"]["lam"]), 1e-15, case.id());
        assert_rel(p.a, num(&f["params"]["a"]), 1e-15, case.id());
        if let Some(b) = f["params"].get("b") {
            assert_rel(p.b, num(b), 1e-15, case.id());
        }
        if let Some(c) = f["params"].get("c") {
            assert_rel(p.c, num(c), 1e-15, case.id());
        }
    }
}

#[test]
fn minima_mu_energy_match_frozen() {
    for case in list_cases() {
        let f = frozen_case(case.id());
        let (lo, hi) = case.minima();
        assert_rel(lo, num(&f["lo"]), 1e-14, &format!("{} lo", case.id()));
        assert_rel(hi, num(&f["hi"]), 1e-14, &format!("{} hi", case.id()));
        assert_rel(case.mu(), num(&f["mu"]), 1e-13, &format!("{} mu", case.id()));
        assert_rel(
            closed_form_energy(&case),
            num(&f["E"]),
            1e-13,
            &format!("{} energy", case.id()),
        );
    }
}

#[test]
fn relation_values_match_frozen_grid() {
    // The grid stores (phi, x) samples of the kink locus, x = F(phi)/mu.
    for case in list_cases() {
        let f = frozen_case(case.id());
        for point in f["grid"].as_array().unwrap() {
            let phi = num(&point[0]);
            let want = num(&point[1]);
            let got = case.relation_value(phi) / case.mu();
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "{}: x({phi}) = {got:.17e}, want {want:.17e}",
                case.id()
            );
        }
    }
}

#[test]
fn tails_match_frozen() {
    for case in list_cases() {
        let f = frozen_case(case.id());
        let tails = case.tails();
        for (i, side) in [Side::Lower, Side::Upper].into_iter().enumerate() {
            let ft = &f["tails"][i];
            let t = tails[i];
            assert_eq!(t.side, side);
            let what = format!("{} tail {i}", case.id());
            // Rates and exponents are frozen in closed form; prefactors are
            // frozen as numeric limits of the approach, converged to 1e-8
            // (exponential) and 1e-6 (algebraic).
            match t.kind {
                TailKind::Exponential { rate } => {
                    assert_eq!(ft["kind"].as_str().unwrap(), "exp", "{what}");
                    assert_rel(rate, num(&ft["rate"]), 1e-13, &format!("{what} rate"));
                    assert_rel(t.prefactor, num(&ft["K"]), 2e-8, &format!("{what} K"));
                }
                TailKind::Algebraic { exponent } => {
                    assert_eq!(ft["kind"].as_str().unwrap(), "alg", "{what}");
                    assert_rel(exponent, num(&ft["p"]), 1e-14, &format!("{what} p"));
                    assert_rel(t.prefactor, num(&ft["A"]), 2e-6, &format!("{what} A"));
                }
            }
        }
        let (lo, hi) = case.minima();
        assert_eq!(tails[0].approach_value, lo);
        assert_eq!(tails[1].approach_value, hi);
    }
}

#[test]
fn quadrature_reproduces_closed_form_energy() {
    for case in list_cases() {
        let (lo, hi) = case.minima();
        let q = tanh_sinh(
            |phi| Ok((2.0 * case.value(phi)).max(0.0).sqrt()),
            lo,
            hi,
            1e-12,
        )
        .expect("BPS energy integrand is finite");
        assert_rel(
            q.value,
            closed_form_energy(&case),
            1e-10,
            &format!("{} quadrature energy", case.id()),
        );
    }
}

#[test]
fn relation_is_strictly_increasing() {
    for case in list_cases() {
        let (lo, hi) = case.minima();
        let width = hi - lo;
        let mut prev = f64::NEG_INFINITY;
        for k in 1..400 {
            let phi = lo + width * k as f64 / 400.0;
            let value = case.relation_value(phi);
            assert!(
                value > prev,
                "{}: F not increasing at phi={phi}",
                case.id()
            );
            prev = value;
        }
    }
}

#[test]
fn residual_vanishes_on_the_locus_and_rejects_outside() {
    for case in list_cases() {
        let f = frozen_case(case.id());
        let mu = case.mu();
        for point in f["grid"].as_array().unwrap() {
            let phi = num(&point[0]);
            let x = num(&point[1]);
            let r = implicit_residual(&case, phi, x).unwrap();
            assert!(
                r.abs() <= 1e-12 * (mu * x).abs().max(1.0),
                "{}: residual {r:.3e} off the locus at phi={phi}",
                case.id()
            );
        }
        let (lo, hi) = case.minima();
        assert!(matches!(
            implicit_residual(&case, lo, 0.0),
            Err(Error::DomainError)
        ));
        assert!(matches!(
            implicit_residual(&case, hi + 1.0, 0.0),
            Err(Error::DomainError)
        ));
    }
}

#[test]
fn energy_crossovers_match_frozen() {
    let cross = &frozen()["crossovers"];
    let pairs = [
        ("phi8.4dm", "phi8.4dm.inner", "phi8.4dm.outer", (1.5, 4.0)),
        ("phi10.5dm", "phi10.5dm.inner", "phi10.5dm.outer", (1.2, 2.5)),
        (
            "phi12.5dm.II",
            "phi12.5dm.II.inner",
            "phi12.5dm.II.outer",
            (1.2, 2.5),
        ),
    ];
    for (key, inner, outer, bracket) in pairs {
        let ci = case_by_id(inner).unwrap();
        let co = case_by_id(outer).unwrap();
        let r = energy_crossover(&ci, &co, bracket).unwrap();
        let want = num(&cross[key]);
        assert!(
            (r - want).abs() <= 1e-9,
            "{key}: crossover {r:.15}, want {want:.15}"
        );
        // Equal-energy check at the crossing itself.
        let p = Params {
            b: r * ci.params().a,
            ..ci.params()
        };
        let ei = closed_form_energy(&ci.with_params(p).unwrap());
        let eo = closed_form_energy(&co.with_params(p).unwrap());
        assert!(rel(ei, eo) <= 1e-8, "{key}: energies differ at crossover");
    }
}

#[test]
fn crossover_requires_shared_parameters_and_sign_change() {
    let ci = case_by_id("phi8.4dm.inner").unwrap();
    let co = case_by_id("phi8.4dm.outer").unwrap();
    let rebound = co
        .with_params(Params {
            b: ci.params().b + 0.25,
            ..ci.params()
        })
        .unwrap();
    assert!(matches!(
        energy_crossover(&ci, &rebound, (1.5, 4.0)),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        energy_crossover(&ci, &co, (2.8, 4.0)),
        Err(Error::NoSignChange)
    ));
}

#[test]
fn symmetric_cases_share_tail_data() {
    let expected = [
        "phi8.4dm.inner",
        "phi8.2dm.I",
        "phi8.2dm.II",
        "phi10.4dm.inner",
        "phi10.2dm.I",
        "phi10.2dm.II",
        "phi10.2dm.III",
        "phi12.6dm.inner",
        "phi12.4dm.I.inner",
        "phi12.4dm.II.inner",
        "phi12.4dm.III.inner",
        "phi12.2dm.I",
        "phi12.2dm.II",
        "phi12.2dm.III",
    ];
    for case in list_cases() {
        assert_eq!(
            case.symmetric(),
            expected.contains(&case.id()),
            "symmetry flag for {}",
            case.id()
        );
        if case.symmetric() {
            let [lo, hi] = case.tails();
            assert_eq!(lo.kind, hi.kind, "{}", case.id());
            assert_eq!(lo.prefactor, hi.prefactor, "{}", case.id());
            let (a, b) = case.minima();
            assert_eq!(a, -b, "{}: symmetric cases connect -m to m", case.id());
        }
    }
}

#[test]
fn suspect_prefactors_are_exactly_the_known_three() {
    let mut flagged = Vec::new();
    for case in list_cases() {
        for (side, t) in [Side::Lower, Side::Upper].into_iter().zip(case.tails()) {
            if t.prefactor_suspect {
                flagged.push((case.id(), side));
            }
        }
    }
    flagged.sort_by_key(|(id, side)| (*id, matches!(side, Side::Upper)));
    assert_eq!(
        flagged,
        vec![
            ("phi10.4dm.outer", Side::Upper),
            ("phi12.4dm.III.outer", Side::Lower),
            ("phi12.5dm.II.outer", Side::Upper),
        ]
    );
}

#[test]
fn phase_windows_report_canonical_status() {
    let satisfied: Vec<_> = list_cases()
        .into_iter()
        .filter_map(|c| c.window().map(|(_, ok)| (c.id(), ok)))
        .collect();
    assert_eq!(satisfied.len(), 11, "eleven cases carry a phase window");
    for (id, ok) in satisfied {
        assert_eq!(
            ok,
            id == "phi10.2dm.II",
            "window status at canonical parameters for {id}"
        );
    }
}

#[test]
fn window_predicate_tracks_parameters() {
    let case = case_by_id("phi8.3dm.II").unwrap();
    let (desc, ok_default) = case.window().unwrap();
    assert_eq!(desc, "b > sqrt(2) a");
    assert!(!ok_default);
    let wide = case
        .with_params(Params {
            b: 2.0 * case.params().a,
            ..case.params()
        })
        .unwrap();
    assert!(wide.window().unwrap().1);
}

#[test]
fn constructor_rejects_invalid_parameters() {
    let case = case_by_id("phi8.4dm.inner").unwrap();
    let base = case.params();
    assert!(matches!(
        case.with_params(Params { lambda: 0.0, ..base }),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        case.with_params(Params { a: -1.0, ..base }),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        case.with_params(Params {
            b: 0.5 * base.a,
            ..base
        }),
        Err(Error::ConstraintViolation(_))
    ));
    let six = case_by_id("phi12.6dm.mid").unwrap();
    assert!(matches!(
        six.with_params(Params {
            c: 0.5 * six.params().b,
            ..six.params()
        }),
        Err(Error::ConstraintViolation(_))
    ));
    let decic = case_by_id("phi10.3dm.I").unwrap();
    assert!(matches!(
        decic.with_params(Params {
            c: 0.1,
            ..decic.params()
        }),
        Err(Error::ConstraintViolation(_))
    ));
    assert!(matches!(
        case_by_id("phi9.fake"),
        Err(Error::InvalidParameter(_))
    ));
}

#[test]
fn rescaling_lambda_scales_mu_and_energy_linearly() {
    for case in list_cases() {
        let scaled = case
            .with_params(Params {
                lambda: 3.0,
                ..case.params()
            })
            .unwrap();
        assert_rel(scaled.mu(), 3.0 * case.mu(), 1e-14, case.id());
        assert_rel(
            closed_form_energy(&scaled),
            3.0 * closed_form_energy(&case),
            1e-14,
            case.id(),
        );
        assert_eq!(scaled.minima(), case.minima());
    }
}

#[test]
fn descriptor_serializes_machine_readable_summary() {
    let case = case_by_id("phi12.6dm.mid").unwrap();
    let d = case.descriptor();
    assert_eq!(d["id"], "phi12.6dm.mid");
    assert_eq!(d["family"], "phi12");
    assert_eq!(d["relation"], "exp_form");
    assert!(d["params"]["b"].is_number());
    assert!(d["params"]["c"].is_number());
    assert_eq!(d["tails"].as_array().unwrap().len(), 2);
    assert_eq!(d["symmetric"], false);
    assert!((num(&d["mu"]) - case.mu()).abs() == 0.0);

    let plain = case_by_id("phi12.2dm.III").unwrap().descriptor();
    assert!(plain["params"]["b"].is_null());
    assert!(plain["params"]["c"].is_null());
    assert_eq!(plain["relation"], "log_form");
    assert!(plain["window"].is_null());

    let windowed = case_by_id("phi10.2dm.II").unwrap().descriptor();
    assert_eq!(windowed["window"]["satisfied"], true);

    // Tail serialization round-trips through serde.
    let tail = case.tail(Side::Upper);
    let json = serde_json::to_string(&tail).unwrap();
    let back: kinkforge::TailAsymptote = serde_json::from_str(&json).unwrap();
    assert_eq!(back, tail);
}

#[test]
fn exp_form_cases_are_the_eleven_pure_log_relations() {
    let expected = [
        "phi8.4dm.inner",
        "phi8.4dm.outer",
        "phi8.3dm.II",
        "phi10.5dm.inner",
        "phi10.5dm.outer",
        "phi10.3dm.II",
        "phi12.6dm.inner",
        "phi12.6dm.mid",
        "phi12.6dm.outer",
        "phi12.5dm.I.inner",
        "phi12.5dm.I.outer",
    ];
    for case in list_cases() {
        let is_exp = case.relation_form() == kinkforge::RelationForm::ExpForm;
        assert_eq!(is_exp, expected.contains(&case.id()), "{}", case.id());
    }
}

#[test]
fn potential_vanishes_at_minima_and_is_positive_between() {
    for case in list_cases() {
        let (lo, hi) = case.minima();
        let scale = case.value(0.5 * (lo + hi)).abs().max(1.0);
        assert!(case.value(lo).abs() <= 1e-12 * scale, "{}", case.id());
        assert!(case.value(hi).abs() <= 1e-12 * scale, "{}", case.id());
        for k in 1..50 {
            let phi = lo + (hi - lo) * k as f64 / 50.0;
            assert!(
                case.value(phi) > 0.0,
                "{}: potential not positive at {phi}",
                case.id()
            );
        }
    }
}

fn case_ref(id: &str) -> KinkCase {
    case_by_id(id).unwrap()
}

#[test]
fn sibling_cases_share_potential_values() {
    // Triples / pairs drawn from one potential must agree pointwise.
    let groups: [&[&str]; 3] = [
        &["phi12.6dm.inner", "phi12.6dm.mid", "phi12.6dm.outer"],
        &["phi10.4dm.inner", "phi10.4dm.outer"],
        &["phi12.4dm.II.inner", "phi12.4dm.II.outer"],
    ];
    for group in groups {
        let first = case_ref(group[0]);
        for id in &group[1..] {
            let other = case_ref(id);
            for k in 0..60 {
                let phi = -1.5 + 3.0 * k as f64 / 59.0;
                assert_eq!(
                    first.value(phi),
                    other.value(phi),
                    "{} vs {} at {phi}",
                    group[0],
                    id
                );
            }
        }
    }
}
