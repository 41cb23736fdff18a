//! Eighth-degree cases: two four-minima kinks, two three-minima kinks, and
//! two double-well kinks with non-degenerate companion factors.

use super::{CaseDef, Params, RelationForm, TailDef, TailKindDef, Window, R2};
use crate::alpha::Family;

fn d(a: f64, b: f64, c: f64) -> Params {
    Params {
        lambda: 1.0,
        a,
        b,
        c,
    }
}

fn need_b_gt_a(p: &Params) -> Option<String> {
    (p.b <= p.a).then(|| format!("requires b > a, got a={}, b={}", p.a, p.b))
}

fn sig(p: &Params) -> f64 {
    (p.a * p.a + p.b * p.b).sqrt()
}

pub(crate) static CASES: [CaseDef; 6] = [
    // V = l^2 (f^2-a^2)^2 (f^2-b^2)^2, kink -a -> a
    CaseDef {
        id: "phi8.4dm.inner",
        family: Family::Phi8,
        relation: RelationForm::ExpForm,
        uses_b: true,
        uses_c: false,
        defaults: || d((3f64.sqrt() - 1.0) / 2.0, (3f64.sqrt() + 1.0) / 2.0, 1.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * (u - p.a * p.a).powi(2) * (u - p.b * p.b).powi(2)
        },
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            ((p.a + f) / (p.a - f)).ln() + (p.a / p.b) * ((p.b - f) / (p.b + f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a),
        energy: |p| {
            (4.0 * R2 / 15.0) * p.lambda * p.a.powi(3) * (5.0 * p.b * p.b - p.a * p.a)
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a),
                prefactor: |p| 2.0 * p.a * ((p.b - p.a) / (p.b + p.a)).powf(p.a / p.b),
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a),
                prefactor: |p| 2.0 * p.a * ((p.b - p.a) / (p.b + p.a)).powf(p.a / p.b),
                suspect: false,
            },
        ],
        symmetric: true,
    },
    // Same potential, kink a -> b
    CaseDef {
        id: "phi8.4dm.outer",
        family: Family::Phi8,
        relation: RelationForm::ExpForm,
        uses_b: true,
        uses_c: false,
        defaults: || d((3f64.sqrt() - 1.0) / 2.0, (3f64.sqrt() + 1.0) / 2.0, 1.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * (u - p.a * p.a).powi(2) * (u - p.b * p.b).powi(2)
        },
        lo: |p| p.a,
        hi: |p| p.b,
        relation_value: |f, p| {
            ((f - p.a) / (f + p.a)).ln() + (p.a / p.b) * ((p.b + f) / (p.b - f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a),
        energy: |p| {
            (2.0 * R2 / 15.0)
                * p.lambda
                * (p.b - p.a).powi(3)
                * (p.b * p.b + 3.0 * p.a * p.b + p.a * p.a)
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a),
                prefactor: |p| 2.0 * p.a * ((p.b - p.a) / (p.b + p.a)).powf(p.a / p.b),
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.b * (p.b * p.b - p.a * p.a),
                prefactor: |p| 2.0 * p.b * ((p.b - p.a) / (p.b + p.a)).powf(p.b / p.a),
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^4 (f^2-a^2)^2, kink 0 -> a; algebraic tail at the origin
    CaseDef {
        id: "phi8.3dm.I",
        family: Family::Phi8,
        relation: RelationForm::LogForm,
        uses_b: false,
        uses_c: false,
        defaults: || d(0.75, 1.0, 1.0),
        structural: None,
        window: None,
        v: |f, p| p.lambda * p.lambda * f.powi(4) * (f * f - p.a * p.a).powi(2),
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| -2.0 * p.a / f + ((p.a + f) / (p.a - f)).ln(),
        mu: |p| 2.0 * R2 * p.lambda * p.a.powi(3),
        energy: |p| (2.0 * R2 / 15.0) * p.lambda * p.a.powi(5),
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| 2.0 * p.a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a.powi(3),
                prefactor: |p| 2.0 * p.a * (-2f64).exp(),
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^2 (f^2-a^2)^2 (f^2+b^2), kink 0 -> a
    CaseDef {
        id: "phi8.3dm.II",
        family: Family::Phi8,
        relation: RelationForm::ExpForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.75, 1.0, 1.0),
        structural: None,
        window: Some(Window {
            description: "b > sqrt(2) a",
            holds: |p| p.b > R2 * p.a,
        }),
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * u * (u - p.a * p.a).powi(2) * (u + p.b * p.b)
        },
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let s = sig(p);
            let t = (p.b * p.b + f * f).sqrt();
            // t - b and s - t in conjugate form: the raw differences lose all
            // digits once f^2 drops below one ulp of b^2.
            (s / p.b) * (f * f / ((t + p.b) * (t + p.b))).ln()
                + ((s + t) * (s + t) / ((p.a - f) * (p.a + f))).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * p.a * sig(p),
        energy: |p| {
            let s = sig(p);
            (R2 / 15.0)
                * p.lambda
                * (2.0 * s.powi(5) - p.b.powi(3) * (2.0 * p.b * p.b + 5.0 * p.a * p.a))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| R2 * p.lambda * p.a * p.a * p.b,
                prefactor: |p| {
                    let s = sig(p);
                    2.0 * p.b * (p.a / (s + p.b)).powf(p.b / s)
                },
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * p.a * sig(p),
                prefactor: |p| {
                    let s = sig(p);
                    (2.0 * s * s / p.a) * ((s - p.b) / (s + p.b)).powf(s / p.b)
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 (f^2-a^2)^2 (f^2+b^2)^2, kink -a -> a
    CaseDef {
        id: "phi8.2dm.I",
        family: Family::Phi8,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.8, 1.0, 1.0),
        structural: None,
        window: Some(Window {
            description: "b sqrt(2 - sqrt(3)) > a",
            holds: |p| p.b * (2.0 - 3f64.sqrt()).sqrt() > p.a,
        }),
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * (u - p.a * p.a).powi(2) * (u + p.b * p.b).powi(2)
        },
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            (2.0 * p.a / p.b) * (f / p.b).atan() + ((p.a + f) / (p.a - f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b + p.a * p.a),
        energy: |p| {
            (4.0 * R2 / 15.0) * p.lambda * p.a.powi(3) * (p.a * p.a + 5.0 * p.b * p.b)
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b + p.a * p.a),
                prefactor: |p| 2.0 * p.a * ((2.0 * p.a / p.b) * (p.a / p.b).atan()).exp(),
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b + p.a * p.a),
                prefactor: |p| 2.0 * p.a * ((2.0 * p.a / p.b) * (p.a / p.b).atan()).exp(),
                suspect: false,
            },
        ],
        symmetric: true,
    },
    // V = l^2 (f^2-a^2)^4, kink -a -> a; both tails algebraic
    CaseDef {
        id: "phi8.2dm.II",
        family: Family::Phi8,
        relation: RelationForm::LogForm,
        uses_b: false,
        uses_c: false,
        defaults: || d(0.8, 1.0, 1.0),
        structural: None,
        window: None,
        v: |f, p| p.lambda * p.lambda * (f * f - p.a * p.a).powi(4),
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            2.0 * p.a * f / (p.a * p.a - f * f) + ((p.a + f) / (p.a - f)).ln()
        },
        mu: |p| 4.0 * R2 * p.lambda * p.a.powi(3),
        energy: |p| (16.0 * R2 / 15.0) * p.lambda * p.a.powi(5),
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| p.a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| p.a,
                suspect: false,
            },
        ],
        symmetric: true,
    },
];
