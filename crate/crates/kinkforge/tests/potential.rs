mod common;

use common::{assert_rel, frozen, num};
use kinkforge::alpha::{
    check_phi8_first_order, four_degenerate_map, phi10_constraint_scale,
    phi10_four_degenerate_constraint, phi8_ratio_window, RatioWindow,
};
use kinkforge::{
    classify_critical_points, expand_factored, scan_phase, AlphaForm, CriticalKind,
    CriticalPointSet, Error, Factor, FactorSign, FactoredPotential, Family, PolynomialPotential,
    Potential,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn octic(alpha2: f64) -> AlphaForm {
    AlphaForm::new(Family::Phi8, 1.0, vec![0.0625, alpha2, 4.5, 4.0]).unwrap()
}

fn decic(alpha2: f64) -> AlphaForm {
    AlphaForm::new(Family::Phi10, 1.0, vec![-1.0, alpha2, 8.75, 11.5, 5.75]).unwrap()
}

fn factor(shift: f64, sign: FactorSign, exponent: f64) -> Factor {
    Factor { shift, sign, exponent }
}

/// Compare the φ≥0 half of a classification against a frozen table of
/// (location, kind, value) rows.
fn check_against_frozen(set: &CriticalPointSet, rows: &serde_json::Value, what: &str) {
    let rows = rows.as_array().unwrap();
    let half: Vec<_> = set.points.iter().filter(|p| p.location >= -1e-12).collect();
    assert_eq!(half.len(), rows.len(), "{what}: nonnegative critical-point count");
    for (p, row) in half.iter().zip(rows) {
        let loc = num(&row[0]);
        let kind = match row[1].as_str().unwrap() {
            "min" => CriticalKind::Minimum,
            "max" => CriticalKind::Maximum,
            "flat" => CriticalKind::Inflection,
            other => panic!("unknown frozen kind {other}"),
        };
        let val = num(&row[2]);
        assert!(
            (p.location - loc).abs() <= 1e-9 * (1.0 + loc.abs()),
            "{what}: location {} vs frozen {loc}",
            p.location
        );
        assert_eq!(p.kind, kind, "{what}: kind at {loc}");
        assert!(
            (p.value - val).abs() <= 1e-10 * (1.0 + val.abs()),
            "{what}: value {} vs frozen {val}",
            p.value
        );
    }
}

#[test]
fn expansion_of_the_first_order_octic() {
    let a2 = (2.0 - 3.0_f64.sqrt()) / 2.0;
    let b2 = (2.0 + 3.0_f64.sqrt()) / 2.0;
    let f = FactoredPotential::new(
        1.0,
        vec![factor(a2, FactorSign::Minus, 2.0), factor(b2, FactorSign::Minus, 2.0)],
        false,
    )
    .unwrap();
    let p = expand_factored(&f).unwrap();
    let al = AlphaForm::from_potential(Family::Phi8, &p).unwrap();
    assert!((al.alphas[3] - 4.0).abs() < 1e-13);
    assert!((al.alphas[2] - 4.5).abs() < 1e-13);
    assert!((al.alphas[1] - 1.0).abs() < 1e-13);
    assert!((al.alphas[0] - 0.0625).abs() < 1e-14);
}

#[test]
fn expansion_of_a_plain_square() {
    let f = FactoredPotential::new(1.0, vec![factor(1.0, FactorSign::Minus, 2.0)], false).unwrap();
    let p = expand_factored(&f).unwrap();
    assert_eq!(p.coeffs, vec![1.0, 0.0, -2.0, 0.0, 1.0]);
}

#[test]
fn expansion_matches_the_four_degenerate_map() {
    let (a, b, c) = (1.0, 2.0_f64.sqrt(), 0.25);
    let f = FactoredPotential::new(
        1.0,
        vec![
            factor(c * c, FactorSign::Plus, 1.0),
            factor(a * a, FactorSign::Minus, 2.0),
            factor(b * b, FactorSign::Minus, 2.0),
        ],
        false,
    )
    .unwrap();
    let p = expand_factored(&f).unwrap();
    let got = AlphaForm::from_potential(Family::Phi10, &p).unwrap();
    let want = four_degenerate_map(a, b, c, 1.0).unwrap();
    for (g, w) in got.alphas.iter().zip(&want.alphas) {
        assert!((g - w).abs() <= 1e-13 * (1.0 + w.abs()), "{g} vs {w}");
    }
}

#[test]
fn expansion_agrees_with_direct_product_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let nf = rng.gen_range(1..=3);
        let mut factors = Vec::new();
        for _ in 0..nf {
            factors.push(factor(
                rng.gen_range(0.05..2.5),
                if rng.gen_bool(0.5) { FactorSign::Minus } else { FactorSign::Plus },
                rng.gen_range(1..=3) as f64,
            ));
        }
        let f = FactoredPotential::new(rng.gen_range(0.3..2.0), factors, false).unwrap();
        let p = expand_factored(&f).unwrap();
        let phi: f64 = rng.gen_range(-2.0..2.0);
        let direct = f.value(phi);
        let expanded = p.value(phi);
        let scale = p
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, ck)| (ck * phi.powi(k as i32)).abs())
            .sum::<f64>()
            .max(1.0)
            * f.lambda
            * f.lambda;
        assert!(
            (direct - expanded).abs() <= 1e-12 * scale,
            "factored {f:?} at {phi}: {direct} vs {expanded}"
        );
    }
}

#[test]
fn factored_grammar_round_trips() {
    let f = FactoredPotential::parse("(x2-1)^2", 1.0).unwrap();
    assert_eq!(f.factors, vec![factor(1.0, FactorSign::Minus, 2.0)]);
    assert!(!f.absolute);

    let f = FactoredPotential::parse("(x2-0.81) * (x2+0.3)^3", 2.0).unwrap();
    assert_eq!(
        f.factors,
        vec![factor(0.81, FactorSign::Minus, 1.0), factor(0.3, FactorSign::Plus, 3.0)]
    );

    let f = FactoredPotential::parse("|x2-1.5|^2.5", 1.0).unwrap();
    assert!(f.absolute);
    assert_eq!(f.factors, vec![factor(1.5, FactorSign::Minus, 2.5)]);
    assert!(matches!(expand_factored(&f), Err(Error::NonPolynomial(_))));

    assert!(matches!(
        FactoredPotential::parse("(y-1)^2", 1.0),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        FactoredPotential::parse("(x2-1", 1.0),
        Err(Error::InvalidParameter(_))
    ));
}

#[test]
fn alpha_form_round_trip_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for family in [Family::Phi8, Family::Phi10, Family::Phi12] {
        for _ in 0..50 {
            let m = family.half_degree();
            let alphas: Vec<f64> = (0..m).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let form = AlphaForm::new(family, rng.gen_range(0.5..2.0), alphas).unwrap();
            let back = AlphaForm::from_potential(family, &form.to_potential()).unwrap();
            assert_eq!(form, back);
        }
    }
}

#[test]
fn octic_scan_matches_frozen_structure() {
    let grid = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5];
    let sets = scan_phase(&octic(0.0), 1, &grid, 1e-9).unwrap();
    let table = &frozen()["phase"]["octic_family"];
    for (a2, set) in grid.iter().zip(&sets) {
        let key = if *a2 == a2.trunc() && *a2 != 0.5 && *a2 != 1.5 && *a2 != 2.5 {
            format!("{}", *a2 as i64)
        } else {
            format!("{a2}")
        };
        check_against_frozen(set, &table[&key]["critical"], &format!("octic alpha2={a2}"));
    }
    // narrative counts over the full line
    let n_min: Vec<usize> = sets.iter().map(|s| s.count(CriticalKind::Minimum)).collect();
    let n_flat: Vec<usize> = sets.iter().map(|s| s.count(CriticalKind::Inflection)).collect();
    assert_eq!(n_min, vec![1, 4, 4, 4, 2, 2]);
    assert_eq!(n_flat, vec![2, 0, 0, 0, 2, 0]);
}

#[test]
fn octic_first_order_point_has_four_degenerate_minima() {
    let set = classify_critical_points(&octic(1.0).to_potential(), 1e-9).unwrap();
    let inner = num(&frozen()["phase"]["octic_a2_1"]["inner"]);
    let outer = num(&frozen()["phase"]["octic_a2_1"]["outer"]);
    let degs: Vec<f64> = set.degenerate_minima().map(|p| p.location).collect();
    assert_eq!(degs.len(), 4);
    for (got, want) in degs.iter().zip([-outer, -inner, inner, outer]) {
        assert!((got - want).abs() < 1e-9, "{got} vs {want}");
    }
    let maxima: Vec<f64> = set
        .points
        .iter()
        .filter(|p| p.kind == CriticalKind::Maximum)
        .map(|p| p.location)
        .collect();
    assert_eq!(maxima.len(), 3);
    assert!((maxima[0] + 1.0).abs() < 1e-12);
    assert!(maxima[1].abs() < 1e-12);
    assert!((maxima[2] - 1.0).abs() < 1e-12);
}

#[test]
fn octic_zero_alpha2_has_flat_inflections() {
    let set = classify_critical_points(&octic(0.0).to_potential(), 1e-9).unwrap();
    let w = (1.5_f64).sqrt();
    assert_eq!(set.points.len(), 3);
    assert_eq!(set.points[1].kind, CriticalKind::Minimum);
    assert!(set.points[1].location.abs() < 1e-12);
    assert!(set.points[1].degenerate);
    for (p, want) in [(&set.points[0], -w), (&set.points[2], w)] {
        assert_eq!(p.kind, CriticalKind::Inflection);
        assert!((p.location - want).abs() < 1e-9, "{} vs {want}", p.location);
    }
}

#[test]
fn double_well_classification() {
    let p = PolynomialPotential::new(1.0, vec![1.0, 0.0, -2.0, 0.0, 1.0]).unwrap();
    let set = classify_critical_points(&p, 1e-9).unwrap();
    assert_eq!(set.points.len(), 3);
    assert_eq!(set.points[0].kind, CriticalKind::Minimum);
    assert!(set.points[0].degenerate);
    assert_eq!(set.points[1].kind, CriticalKind::Maximum);
    assert_eq!(set.points[2].kind, CriticalKind::Minimum);
    assert!((set.points[2].location - 1.0).abs() < 1e-12);
    let csv = set.to_csv();
    assert!(csv.starts_with("phi_e,kind,value,degenerate\n"));
    assert!(csv.contains("minimum"));
}

#[test]
fn decic_scan_matches_frozen_structure() {
    let table = &frozen()["phase"]["decic_family"];
    for (a2, key) in [(1.0, "1"), (2.2, "2.2"), (2.5, "2.5")] {
        let set = classify_critical_points(&decic(a2).to_potential(), 1e-9).unwrap();
        check_against_frozen(&set, &table[key]["critical"], &format!("decic alpha2={a2}"));
    }
    // at 2.2 the global minima are the outer pair, not zero
    let set = classify_critical_points(&decic(2.2).to_potential(), 1e-9).unwrap();
    let degs: Vec<f64> = set.degenerate_minima().map(|p| p.location).collect();
    assert_eq!(degs.len(), 2);
    assert!(degs[1] > 0.8 && degs[1] < 0.82);
}

#[test]
fn first_order_relation_examples() {
    let ok = check_phi8_first_order(4.0, 4.5, 1.0);
    assert!(ok.satisfied);
    assert!(ok.residual.abs() < 1e-14);
    assert!(!check_phi8_first_order(4.0, 4.5, 0.5).satisfied);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let a2: f64 = rng.gen_range(0.05..1.5);
        let b2: f64 = a2 + rng.gen_range(0.05..2.0);
        let s = a2 + b2;
        let al6 = 2.0 * s;
        let al4 = a2 * a2 + b2 * b2 + 4.0 * a2 * b2;
        let al2 = 2.0 * a2 * b2 * s;
        assert!(check_phi8_first_order(al6, al4, al2).satisfied, "a2={a2}, b2={b2}");
    }
}

#[test]
fn ratio_window_bins() {
    assert_eq!(phi8_ratio_window(4.0, 4.5), RatioWindow::InflectionBoundary);
    assert_eq!(phi8_ratio_window(1.0, 0.26), RatioWindow::LocalMinimaPersist);
    assert_eq!(phi8_ratio_window(1.0, 0.5), RatioWindow::Above);
    assert_eq!(phi8_ratio_window(1.0, 0.2), RatioWindow::Below);
    assert_eq!(phi8_ratio_window(1.0, 0.3), RatioWindow::MinimaVanishEarly);
}

#[test]
fn constraint_vanishes_on_the_map_image() {
    let al = four_degenerate_map(1.0, 2.0_f64.sqrt(), 0.25, 1.0).unwrap();
    let (a8, a6, a4, a2) = (al.alphas[4], al.alphas[3], al.alphas[2], al.alphas[1]);
    let res = phi10_four_degenerate_constraint(a8, a6, a4, a2);
    let scale = phi10_constraint_scale(a8, a6, a4, a2);
    assert!(res.abs() <= 1e-13 * scale, "canonical residual {res:e} vs scale {scale:e}");

    let mut rng = ChaCha8Rng::seed_from_u64(777);
    for _ in 0..300 {
        let a: f64 = rng.gen_range(0.1..1.8);
        let b = a * (1.0 + rng.gen_range(0.05..1.6));
        let c: f64 = rng.gen_range(0.05..2.5);
        let al = four_degenerate_map(a, b, c, 1.0).unwrap();
        let (a8, a6, a4, a2) = (al.alphas[4], al.alphas[3], al.alphas[2], al.alphas[1]);
        let res = phi10_four_degenerate_constraint(a8, a6, a4, a2);
        let scale = phi10_constraint_scale(a8, a6, a4, a2);
        assert!(res.abs() <= 2e-11 * scale, "image residual {res:e} vs scale {scale:e}");
    }
}

#[test]
fn doubled_alpha2_factorizes_with_a_quartic_core() {
    // with α₂ doubled (and the constant re-sat to keep min V = 0) the octic
    // collapses to [φ² − (a²+b²)]² [φ⁴ + 2a²b²]
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let a2: f64 = rng.gen_range(0.05..1.5);
        let b2: f64 = a2 + rng.gen_range(0.05..2.0);
        let s = a2 + b2;
        let t = 2.0 * a2 * b2;
        let p = PolynomialPotential::from_alternating(
            1.0,
            &[s * s * t, 2.0 * s * t, s * s + t, 2.0 * s, 1.0],
        )
        .unwrap();
        for _ in 0..10 {
            let phi: f64 = rng.gen_range(-2.0..2.0);
            let u = phi * phi;
            let prod = (u - s) * (u - s) * (u * u + t);
            let scale = (u * u + s * s) * (u * u + t) + 1.0;
            assert!((p.value(phi) - prod).abs() <= 1e-13 * scale);
        }
    }
    // the octic family instance at α₂ = 2: shift to zero minimum first
    let p = octic(2.0).to_potential().min_shifted().unwrap();
    for phi in [0.0, 0.3, 0.9, 1.2, 1.8] {
        let u: f64 = phi * phi;
        let prod = (u - 2.0) * (u - 2.0) * (u * u + 0.5);
        assert!((p.value(phi) - prod).abs() <= 1e-12 * (1.0 + prod.abs()));
    }
}

#[test]
fn shifted_and_numeric_only_potentials_classify_as_frozen() {
    // octic family member whose constant is lowered so the inner wells touch zero
    let inner = PolynomialPotential::new(
        1.0,
        vec![227.0 / 4096.0, 0.0, -121.0 / 128.0, 0.0, 4.5, 0.0, -4.0, 0.0, 1.0],
    )
    .unwrap();
    let set = classify_critical_points(&inner, 1e-9).unwrap();
    check_against_frozen(&set, &frozen()["misc_phase"]["octic_shifted"]["inner_well"], "inner well");

    let raised = PolynomialPotential::new(
        1.0,
        vec![675.0 / 4096.0, 0.0, -135.0 / 128.0, 0.0, 4.5, 0.0, -4.0, 0.0, 1.0],
    )
    .unwrap();
    let set = classify_critical_points(&raised, 1e-9).unwrap();
    check_against_frozen(&set, &frozen()["misc_phase"]["octic_shifted"]["raised"], "raised octic");
    // exact global minima at ±√(15/8)
    let want = (15.0_f64 / 8.0).sqrt();
    let degs: Vec<f64> = set.degenerate_minima().map(|p| p.location).collect();
    assert_eq!(degs.len(), 2);
    assert!((degs[1] - want).abs() < 1e-12);
    assert!(raised.value(want).abs() < 1e-12);
}

#[test]
fn potential_serialization_round_trip() {
    let p = octic(1.0).to_potential();
    let js = serde_json::to_string(&p).unwrap();
    let back: PolynomialPotential = serde_json::from_str(&js).unwrap();
    assert_eq!(p, back);

    let f = FactoredPotential::parse("(x2-1)^2(x2+0.25)", 1.5).unwrap();
    let js = serde_json::to_string(&f).unwrap();
    let back: FactoredPotential = serde_json::from_str(&js).unwrap();
    assert_eq!(f, back);
}

#[test]
fn symmetry_of_constructed_potentials() {
    let p = decic(1.7).to_potential();
    for phi in [0.1, 0.77, 1.3, 2.4] {
        assert_eq!(p.value(phi), p.value(-phi));
    }
    assert_rel(p.d1(0.9), -p.d1(-0.9), 1e-15, "odd first derivative");
}
