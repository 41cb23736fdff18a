//! Twelfth-degree cases: the six-minima triple, two five-minima pairs, three
//! four-minima pairs, five three-minima kinks, and three double wells.

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

fn need_c_gt_b_gt_a(p: &Params) -> Option<String> {
    (!(p.a < p.b && p.b < p.c))
        .then(|| format!("requires c > b > a, got a={}, b={}, c={}", p.a, p.b, p.c))
}

fn sig(p: &Params) -> f64 {
    (p.a * p.a + p.b * p.b).sqrt()
}

fn v6dm(f: f64, p: &Params) -> f64 {
    let u = f * f;
    p.lambda * p.lambda
        * (u - p.a * p.a).powi(2)
        * (u - p.b * p.b).powi(2)
        * (u - p.c * p.c).powi(2)
}

fn mu6dm(p: &Params) -> f64 {
    2.0 * R2 * p.lambda
        * (p.b * p.b - p.a * p.a)
        * (p.c * p.c - p.b * p.b)
        * (p.c * p.c - p.a * p.a)
}

fn k34_a(p: &Params) -> f64 {
    let (a, b, c) = (p.a, p.b, p.c);
    let base = ((b - a) / (b + a)).powf((c * c - a * a) / b)
        * ((c + a) / (c - a)).powf((b * b - a * a) / c);
    2.0 * a * base.powf(a / (c * c - b * b))
}

fn k34_b(p: &Params) -> f64 {
    let (a, b, c) = (p.a, p.b, p.c);
    let base = ((b - a) / (b + a)).powf((c * c - b * b) / a)
        * ((c - b) / (c + b)).powf((b * b - a * a) / c);
    2.0 * b * base.powf(b / (c * c - a * a))
}

fn k34_c(p: &Params) -> f64 {
    let (a, b, c) = (p.a, p.b, p.c);
    let base = ((c + a) / (c - a)).powf((c * c - b * b) / a)
        * ((c - b) / (c + b)).powf((c * c - a * a) / b);
    2.0 * c * base.powf(c / (b * b - a * a))
}

fn v5dm1(f: f64, p: &Params) -> f64 {
    let u = f * f;
    p.lambda * p.lambda
        * u
        * (u - p.a * p.a).powi(2)
        * (u - p.b * p.b).powi(2)
        * (u + p.c * p.c)
}

/// sqrt(c^2 + a^2) for the first five-minima pair.
fn ta(p: &Params) -> f64 {
    (p.c * p.c + p.a * p.a).sqrt()
}

/// sqrt(c^2 + b^2) for the first five-minima pair.
fn tb(p: &Params) -> f64 {
    (p.c * p.c + p.b * p.b).sqrt()
}

fn k38_0(p: &Params) -> f64 {
    let (a, b, c) = (p.a, p.b, p.c);
    let qa = b * b * c / (2.0 * (b * b - a * a) * ta(p));
    let qb = a * a * c / (2.0 * (b * b - a * a) * tb(p));
    2.0 * c
        * ((ta(p) + c).powi(2) / (a * a)).powf(-qa)
        * ((tb(p) - c).powi(2) / (b * b)).powf(-qb)
}

fn k38_a(p: &Params) -> f64 {
    let (a, b, c) = (p.a, p.b, p.c);
    (2.0 * (c * c + a * a) / a)
        * ((tb(p) - ta(p)) / (tb(p) + ta(p))).powf(a * a * ta(p) / (b * b * tb(p)))
        * ((ta(p) - c).powi(2) / (a * a)).powf((b * b - a * a) * ta(p) / (b * b * c))
}

fn k38d_b(p: &Params) -> f64 {
    let (a, b, c) = (p.a, p.b, p.c);
    (2.0 * (c * c + b * b) / b)
        * ((tb(p) - ta(p)) / (tb(p) + ta(p))).powf(b * b * tb(p) / (a * a * ta(p)))
        * ((tb(p) + c).powi(2) / (b * b)).powf((b * b - a * a) * tb(p) / (a * a * c))
}

fn v5dm2(f: f64, p: &Params) -> f64 {
    let u = f * f;
    p.lambda * p.lambda * u * u * (u - p.a * p.a).powi(2) * (u - p.b * p.b).powi(2)
}

fn v4dm1(f: f64, p: &Params) -> f64 {
    let u = f * f;
    p.lambda * p.lambda
        * (u - p.a * p.a).powi(2)
        * (u - p.b * p.b).powi(2)
        * (u + p.c * p.c).powi(2)
}

fn q310(p: &Params) -> f64 {
    p.a * (p.a * p.a + p.c * p.c) / (p.b * (p.c * p.c + p.b * p.b))
}

fn r310(p: &Params) -> f64 {
    2.0 * p.a * (p.b * p.b - p.a * p.a) / (p.c * (p.c * p.c + p.b * p.b))
}

fn k310_a(p: &Params) -> f64 {
    2.0 * p.a
        * ((p.b - p.a) / (p.b + p.a)).powf(q310(p))
        * (r310(p) * (p.a / p.c).atan()).exp()
}

fn v4dm2(f: f64, p: &Params) -> f64 {
    let u = f * f;
    p.lambda * p.lambda * (u - p.a * p.a).powi(4) * (u - p.b * p.b).powi(2)
}

fn v4dm3(f: f64, p: &Params) -> f64 {
    let u = f * f;
    p.lambda * p.lambda * (u - p.a * p.a).powi(2) * (u - p.b * p.b).powi(4)
}

fn k310g_a(p: &Params) -> f64 {
    let k = p.a / p.b;
    2.0 * p.a * ((p.b + p.a) / (p.b - p.a)).powf(k * (k * k - 3.0) / 2.0) * (-k * k).exp()
}

fn k320_a(p: &Params) -> f64 {
    let k = p.a / p.b;
    2.0 * p.a * (k * k + k * (k * k + 3.0) * k.atan()).exp()
}

pub(crate) static CASES: [CaseDef; 21] = [
    // V = l^2 (f^2-a^2)^2 (f^2-b^2)^2 (f^2-c^2)^2, kink -a -> a
    CaseDef {
        id: "phi12.6dm.inner",
        family: Family::Phi12,
        relation: RelationForm::ExpForm,
        uses_b: true,
        uses_c: true,
        defaults: || d(0.25, 2.0 / 3.0, 1.0),
        structural: Some(need_c_gt_b_gt_a),
        window: None,
        v: v6dm,
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b, c) = (p.a, p.b, p.c);
            ((c * c - b * b) / a) * ((a + f) / (a - f)).ln()
                + ((c * c - a * a) / b) * ((b - f) / (b + f)).ln()
                + ((b * b - a * a) / c) * ((c + f) / (c - f)).ln()
        },
        mu: mu6dm,
        energy: |p| {
            let (a, b, c) = (p.a, p.b, p.c);
            (4.0 * R2 / 105.0)
                * p.lambda
                * a.powi(3)
                * (3.0 * a.powi(4) - 7.0 * (b * b + c * c) * a * a + 35.0 * b * b * c * c)
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| mu6dm(p) * p.a / (p.c * p.c - p.b * p.b),
                prefactor: k34_a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| mu6dm(p) * p.a / (p.c * p.c - p.b * p.b),
                prefactor: k34_a,
                suspect: false,
            },
        ],
        symmetric: true,
    },
    // Same potential, kink a -> b
    CaseDef {
        id: "phi12.6dm.mid",
        family: Family::Phi12,
        relation: RelationForm::ExpForm,
        uses_b: true,
        uses_c: true,
        defaults: || d(0.25, 2.0 / 3.0, 1.0),
        structural: Some(need_c_gt_b_gt_a),
        window: None,
        v: v6dm,
        lo: |p| p.a,
        hi: |p| p.b,
        relation_value: |f, p| {
            let (a, b, c) = (p.a, p.b, p.c);
            ((c * c - b * b) / a) * ((f - a) / (f + a)).ln()
                + ((c * c - a * a) / b) * ((b + f) / (b - f)).ln()
                - ((b * b - a * a) / c) * ((c + f) / (c - f)).ln()
        },
        mu: mu6dm,
        energy: |p| {
            let (a, b, c) = (p.a, p.b, p.c);
            (2.0 * R2 / 105.0)
                * p.lambda
                * (b - a).powi(3)
                * (7.0 * c * c * (b * b + 3.0 * a * b + a * a)
                    - (3.0 * b.powi(4)
                        + 9.0 * b.powi(3) * a
                        + 11.0 * b * b * a * a
                        + 9.0 * b * a.powi(3)
                        + 3.0 * a.powi(4)))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| mu6dm(p) * p.a / (p.c * p.c - p.b * p.b),
                prefactor: k34_a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| mu6dm(p) * p.b / (p.c * p.c - p.a * p.a),
                prefactor: k34_b,
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // Same potential, kink b -> c
    CaseDef {
        id: "phi12.6dm.outer",
        family: Family::Phi12,
        relation: RelationForm::ExpForm,
        uses_b: true,
        uses_c: true,
        defaults: || d(0.25, 2.0 / 3.0, 1.0),
        structural: Some(need_c_gt_b_gt_a),
        window: None,
        v: v6dm,
        lo: |p| p.b,
        hi: |p| p.c,
        relation_value: |f, p| {
            let (a, b, c) = (p.a, p.b, p.c);
            ((c * c - b * b) / a) * ((f + a) / (f - a)).ln()
                + ((c * c - a * a) / b) * ((f - b) / (f + b)).ln()
                + ((b * b - a * a) / c) * ((c + f) / (c - f)).ln()
        },
        mu: mu6dm,
        energy: |p| {
            let (a, b, c) = (p.a, p.b, p.c);
            (2.0 * R2 / 105.0)
                * p.lambda
                * (c - b).powi(3)
                * (3.0 * c.powi(4)
                    + 9.0 * c.powi(3) * b
                    + 11.0 * c * c * b * b
                    + 9.0 * c * b.powi(3)
                    + 3.0 * b.powi(4)
                    - 7.0 * a * a * (c * c + 3.0 * b * c + b * b))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| mu6dm(p) * p.b / (p.c * p.c - p.a * p.a),
                prefactor: k34_b,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| mu6dm(p) * p.c / (p.b * p.b - p.a * p.a),
                prefactor: k34_c,
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^2 (f^2-a^2)^2 (f^2-b^2)^2 (f^2+c^2), kink 0 -> a
    CaseDef {
        id: "phi12.5dm.I.inner",
        family: Family::Phi12,
        relation: RelationForm::ExpForm,
        uses_b: true,
        uses_c: true,
        defaults: || d(0.5, 1.0, 2.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: v5dm1,
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b, c) = (p.a, p.b, p.c);
            let t = (c * c + f * f).sqrt();
            // All three differences of near-equal square roots in conjugate
            // form; the raw forms lose every digit near the endpoints.
            (f * f / ((t + c) * (t + c))).ln()
                + (a * a * c / ((b * b - a * a) * tb(p)))
                    * ((b - f) * (b + f) / ((tb(p) + t) * (tb(p) + t))).ln()
                + (b * b * c / ((b * b - a * a) * ta(p)))
                    * ((ta(p) + t) * (ta(p) + t) / ((a - f) * (a + f))).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * p.a * p.b * p.b * p.c,
        energy: |p| {
            let (a, b, c) = (p.a, p.b, p.c);
            (R2 / 105.0)
                * p.lambda
                * (2.0 * (c * c + a * a).powf(2.5) * (4.0 * c * c + 7.0 * b * b - 3.0 * a * a)
                    - c.powi(3)
                        * (35.0 * a * a * b * b
                            + 14.0 * a * a * c * c
                            + 14.0 * b * b * c * c
                            + 8.0 * c.powi(4)))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| R2 * p.lambda * p.a * p.a * p.b * p.b * p.c,
                prefactor: k38_0,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * p.a * (p.b * p.b - p.a * p.a) * ta(p),
                prefactor: k38_a,
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // Same potential, kink a -> b
    CaseDef {
        id: "phi12.5dm.I.outer",
        family: Family::Phi12,
        relation: RelationForm::ExpForm,
        uses_b: true,
        uses_c: true,
        defaults: || d(0.5, 1.0, 2.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: v5dm1,
        lo: |p| p.a,
        hi: |p| p.b,
        relation_value: |f, p| {
            let (a, b, c) = (p.a, p.b, p.c);
            let t = (c * c + f * f).sqrt();
            // Conjugate forms again; see the inner kink above.
            ((t + c) * (t + c) / (f * f)).ln()
                + (b * b * c / ((b * b - a * a) * ta(p)))
                    * ((f - a) * (f + a) / ((t + ta(p)) * (t + ta(p)))).ln()
                + (a * a * c / ((b * b - a * a) * tb(p)))
                    * ((t + tb(p)) * (t + tb(p)) / ((b - f) * (b + f))).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * p.a * p.b * p.b * p.c,
        energy: |p| {
            let (a, b, c) = (p.a, p.b, p.c);
            (2.0 * R2 / 105.0)
                * p.lambda
                * ((a * a + c * c).powf(2.5) * (4.0 * c * c + 7.0 * b * b - 3.0 * a * a)
                    - (b * b + c * c).powf(2.5) * (4.0 * c * c + 7.0 * a * a - 3.0 * b * b))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * p.a * (p.b * p.b - p.a * p.a) * ta(p),
                prefactor: k38_a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.b * p.b * (p.b * p.b - p.a * p.a) * tb(p),
                prefactor: k38d_b,
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^4 (f^2-a^2)^2 (f^2-b^2)^2, kink 0 -> a
    CaseDef {
        id: "phi12.5dm.II.inner",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.5, 1.0, 1.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: v5dm2,
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            -2.0 * a * (b * b - a * a) / (b * b * f)
                + ((a + f) / (a - f)).ln()
                + (a.powi(3) / b.powi(3)) * ((b - f) / (b + f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a.powi(3) * (p.b * p.b - p.a * p.a),
        energy: |p| {
            (2.0 * R2 / 105.0) * p.lambda * p.a.powi(5) * (7.0 * p.b * p.b - 3.0 * p.a * p.a)
        },
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| 2.0 * p.a * (p.b * p.b - p.a * p.a) / (p.b * p.b),
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a.powi(3) * (p.b * p.b - p.a * p.a),
                prefactor: |p| {
                    let r = p.a * p.a / (p.b * p.b);
                    2.0 * p.a
                        * ((p.b - p.a) / (p.b + p.a)).powf(p.a.powi(3) / p.b.powi(3))
                        * (2.0 * r - 2.0).exp()
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // Same potential, kink a -> b; upper prefactor display is inconsistent
    CaseDef {
        id: "phi12.5dm.II.outer",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.5, 1.0, 1.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: v5dm2,
        lo: |p| p.a,
        hi: |p| p.b,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            2.0 * a * (b * b - a * a) / (b * b * f)
                + ((f - a) / (f + a)).ln()
                + (a.powi(3) / b.powi(3)) * ((b + f) / (b - f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a.powi(3) * (p.b * p.b - p.a * p.a),
        energy: |p| {
            let (a, b) = (p.a, p.b);
            (2.0 * R2 / 105.0)
                * p.lambda
                * (b - a).powi(3)
                * (3.0 * b.powi(4)
                    + 9.0 * b.powi(3) * a
                    + 11.0 * b * b * a * a
                    + 9.0 * b * a.powi(3)
                    + 3.0 * a.powi(4))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a.powi(3) * (p.b * p.b - p.a * p.a),
                prefactor: |p| {
                    let r = p.a * p.a / (p.b * p.b);
                    2.0 * p.a
                        * ((p.b - p.a) / (p.b + p.a)).powf(p.a.powi(3) / p.b.powi(3))
                        * (2.0 * r - 2.0).exp()
                },
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.b.powi(3) * (p.b * p.b - p.a * p.a),
                prefactor: |p| {
                    2.0 * p.b
                        * ((p.b - p.a) / (p.b + p.a)).powf(p.b.powi(3) / p.a.powi(3))
                        * (2.0 * p.b * p.b / (p.a * p.a) - 2.0).exp()
                },
                suspect: true,
            },
        ],
        symmetric: false,
    },
    // V = l^2 (f^2-a^2)^2 (f^2-b^2)^2 (f^2+c^2)^2, kink -a -> a
    CaseDef {
        id: "phi12.4dm.I.inner",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: true,
        defaults: || d(0.5, 1.0, 0.75),
        structural: Some(need_b_gt_a),
        window: None,
        v: v4dm1,
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            r310(p) * (f / p.c).atan()
                + ((p.a + f) / (p.a - f)).ln()
                + q310(p) * ((p.b - f) / (p.b + f)).ln()
        },
        mu: |p| {
            2.0 * R2 * p.lambda * p.a * (p.c * p.c + p.a * p.a) * (p.b * p.b - p.a * p.a)
        },
        energy: |p| {
            let (a, b, c) = (p.a, p.b, p.c);
            (4.0 * R2 / 105.0)
                * p.lambda
                * a.powi(3)
                * (35.0 * b * b * c * c - 7.0 * a * a * c * c + 7.0 * a * a * b * b
                    - 3.0 * a.powi(4))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| {
                    2.0 * R2 * p.lambda * p.a * (p.c * p.c + p.a * p.a)
                        * (p.b * p.b - p.a * p.a)
                },
                prefactor: k310_a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| {
                    2.0 * R2 * p.lambda * p.a * (p.c * p.c + p.a * p.a)
                        * (p.b * p.b - p.a * p.a)
                },
                prefactor: k310_a,
                suspect: false,
            },
        ],
        symmetric: true,
    },
    // Same potential, kink a -> b
    CaseDef {
        id: "phi12.4dm.I.outer",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: true,
        defaults: || d(0.5, 1.0, 0.75),
        structural: Some(need_b_gt_a),
        window: None,
        v: v4dm1,
        lo: |p| p.a,
        hi: |p| p.b,
        relation_value: |f, p| {
            -r310(p) * (f / p.c).atan()
                + ((f - p.a) / (f + p.a)).ln()
                + q310(p) * ((p.b + f) / (p.b - f)).ln()
        },
        mu: |p| {
            2.0 * R2 * p.lambda * p.a * (p.c * p.c + p.a * p.a) * (p.b * p.b - p.a * p.a)
        },
        energy: |p| {
            let (a, b, c) = (p.a, p.b, p.c);
            (2.0 * R2 / 105.0)
                * p.lambda
                * (b - a).powi(3)
                * (3.0 * b.powi(4)
                    + 9.0 * b.powi(3) * a
                    + 11.0 * b * b * a * a
                    + 9.0 * b * a.powi(3)
                    + 3.0 * a.powi(4)
                    + 7.0 * c * c * (b * b + 3.0 * a * b + a * a))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| {
                    2.0 * R2 * p.lambda * p.a * (p.c * p.c + p.a * p.a)
                        * (p.b * p.b - p.a * p.a)
                },
                prefactor: k310_a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| {
                    2.0 * R2 * p.lambda * p.b * (p.c * p.c + p.b * p.b)
                        * (p.b * p.b - p.a * p.a)
                },
                prefactor: |p| {
                    let (a, b, c) = (p.a, p.b, p.c);
                    2.0 * b
                        * ((b - a) / (b + a))
                            .powf(b * (c * c + b * b) / (a * (a * a + c * c)))
                        * (-(2.0 * b * (b * b - a * a) / (c * (a * a + c * c)))
                            * (b / c).atan())
                        .exp()
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 (f^2-a^2)^4 (f^2-b^2)^2, kink -a -> a
    CaseDef {
        id: "phi12.4dm.II.inner",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.5, 1.0, 1.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: v4dm2,
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            b * f * (b * b - a * a) / (a * a * (a * a - f * f))
                + ((b + f) / (b - f)).ln()
                - (b * (3.0 * a * a - b * b) / (2.0 * a.powi(3))) * ((a + f) / (a - f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.b * (p.b * p.b - p.a * p.a).powi(2),
        energy: |p| {
            (16.0 * R2 / 105.0) * p.lambda * p.a.powi(5) * (7.0 * p.b * p.b - p.a * p.a)
        },
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| p.b * (p.b * p.b - p.a * p.a) / (2.0 * p.a * p.a),
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| p.b * (p.b * p.b - p.a * p.a) / (2.0 * p.a * p.a),
                suspect: false,
            },
        ],
        symmetric: true,
    },
    // Same potential, kink a -> b
    CaseDef {
        id: "phi12.4dm.II.outer",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.5, 1.0, 1.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: v4dm2,
        lo: |p| p.a,
        hi: |p| p.b,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            -b * f * (b * b - a * a) / (a * a * (f * f - a * a))
                + ((b + f) / (b - f)).ln()
                + (b * (3.0 * a * a - b * b) / (2.0 * a.powi(3))) * ((f - a) / (f + a)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.b * (p.b * p.b - p.a * p.a).powi(2),
        energy: |p| {
            let (a, b) = (p.a, p.b);
            (2.0 * R2 / 105.0)
                * p.lambda
                * (b - a).powi(4)
                * (3.0 * b.powi(3) + 12.0 * b * b * a + 16.0 * b * a * a + 4.0 * a.powi(3))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| p.b * (p.b * p.b - p.a * p.a) / (2.0 * p.a * p.a),
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.b * (p.b * p.b - p.a * p.a).powi(2),
                prefactor: |p| {
                    let (a, b) = (p.a, p.b);
                    2.0 * b
                        * ((b + a) / (b - a))
                            .powf(b * (b * b - 3.0 * a * a) / (2.0 * a.powi(3)))
                        * (-b * b / (a * a)).exp()
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 (f^2-a^2)^2 (f^2-b^2)^4, kink -a -> a
    CaseDef {
        id: "phi12.4dm.III.inner",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.5, 1.0, 1.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: v4dm3,
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            -a * f * (b * b - a * a) / (b * b * (b * b - f * f))
                + ((a + f) / (a - f)).ln()
                - (a * (3.0 * b * b - a * a) / (2.0 * b.powi(3))) * ((b + f) / (b - f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a).powi(2),
        energy: |p| {
            let (a, b) = (p.a, p.b);
            (4.0 * R2 / 105.0)
                * p.lambda
                * a.powi(3)
                * (35.0 * b.powi(4) - 14.0 * a * a * b * b + 3.0 * a.powi(4))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a).powi(2),
                prefactor: k310g_a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a).powi(2),
                prefactor: k310g_a,
                suspect: false,
            },
        ],
        symmetric: true,
    },
    // Same potential, kink a -> b; lower prefactor corrected from the display
    CaseDef {
        id: "phi12.4dm.III.outer",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.5, 1.0, 1.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: v4dm3,
        lo: |p| p.a,
        hi: |p| p.b,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            a * f * (b * b - a * a) / (b * b * (b * b - f * f))
                + ((f - a) / (f + a)).ln()
                + (a * (3.0 * b * b - a * a) / (2.0 * b.powi(3))) * ((b + f) / (b - f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a).powi(2),
        energy: |p| {
            let (a, b) = (p.a, p.b);
            (2.0 * R2 / 105.0)
                * p.lambda
                * (b - a).powi(4)
                * (4.0 * b.powi(3) + 16.0 * b * b * a + 12.0 * b * a * a + 3.0 * a.powi(3))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a).powi(2),
                prefactor: |p| {
                    let k = p.a / p.b;
                    2.0 * p.a
                        * ((p.b - p.a) / (p.b + p.a)).powf(k * (3.0 - k * k) / 2.0)
                        * (-k * k).exp()
                },
                suspect: true,
            },
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| p.a * (p.b * p.b - p.a * p.a) / (2.0 * p.b * p.b),
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^8 (f^2-a^2)^2, kink 0 -> a; cube-root tail at the origin
    CaseDef {
        id: "phi12.3dm.I",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: false,
        uses_c: false,
        defaults: || d(0.8, 1.0, 1.0),
        structural: None,
        window: None,
        v: |f, p| p.lambda * p.lambda * f.powi(8) * (f * f - p.a * p.a).powi(2),
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            -2.0 * p.a / f - 2.0 * p.a.powi(3) / (3.0 * f.powi(3))
                + ((p.a + f) / (p.a - f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a.powi(5),
        energy: |p| (2.0 * R2 / 35.0) * p.lambda * p.a.powi(7),
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0 / 3.0,
                prefactor: |p| p.a * (2f64 / 3.0).powf(1.0 / 3.0),
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a.powi(5),
                prefactor: |p| 2.0 * p.a * (-8f64 / 3.0).exp(),
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^4 (f^2-a^2)^4, kink 0 -> a; algebraic on both sides
    CaseDef {
        id: "phi12.3dm.II",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: false,
        uses_c: false,
        defaults: || d(0.8, 1.0, 1.0),
        structural: None,
        window: None,
        v: |f, p| p.lambda * p.lambda * f.powi(4) * (f * f - p.a * p.a).powi(4),
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let a = p.a;
            2.0 * a * (3.0 * f * f - 2.0 * a * a) / (3.0 * f * (a * a - f * f))
                + ((a + f) / (a - f)).ln()
        },
        mu: |p| (4.0 / 3.0) * R2 * p.lambda * p.a.powi(5),
        energy: |p| (8.0 * R2 / 105.0) * p.lambda * p.a.powi(7),
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| 4.0 * p.a / 3.0,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| p.a / 3.0,
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^4 (f^2-a^2)^2 (f^2+b^2)^2, kink 0 -> a
    CaseDef {
        id: "phi12.3dm.III",
        family: Family::Phi12,
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
            p.lambda * p.lambda * u * u * (u - p.a * p.a).powi(2) * (u + p.b * p.b).powi(2)
        },
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            -2.0 * a * (b * b + a * a) / (b * b * f) - (2.0 * a.powi(3) / b.powi(3)) * (f / b).atan()
                + ((a + f) / (a - f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a.powi(3) * (p.b * p.b + p.a * p.a),
        energy: |p| {
            (2.0 * R2 / 105.0) * p.lambda * p.a.powi(5) * (7.0 * p.b * p.b + 3.0 * p.a * p.a)
        },
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| 2.0 * p.a * (p.b * p.b + p.a * p.a) / (p.b * p.b),
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a.powi(3) * (p.b * p.b + p.a * p.a),
                prefactor: |p| {
                    let k = p.a / p.b;
                    2.0 * p.a * (-2.0 * (1.0 + k * k + k.powi(3) * k.atan())).exp()
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^2 (f^2-a^2)^2 (f^2+b^2)^3, kink 0 -> a
    CaseDef {
        id: "phi12.3dm.IV",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.8, 1.0, 1.0),
        structural: None,
        window: Some(Window {
            description: "a < b sqrt(3 - sqrt(6))",
            holds: |p| p.a < p.b * (3.0 - 6f64.sqrt()).sqrt(),
        }),
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * u * (u - p.a * p.a).powi(2) * (u + p.b * p.b).powi(3)
        },
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            let s = sig(p);
            let t = (b * b + f * f).sqrt();
            // Conjugate forms: s^2 - t^2 = a^2 - f^2 and t^2 - b^2 = f^2.
            2.0 * a * a * s / (b * b * t)
                + ((s + t) * (s + t) / ((a - f) * (a + f))).ln()
                + (s.powi(3) / b.powi(3)) * (f * f / ((t + b) * (t + b))).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * p.a * sig(p).powi(3),
        energy: |p| {
            let (a, b) = (p.a, p.b);
            (R2 / 35.0)
                * p.lambda
                * (2.0 * sig(p).powi(7) - b.powi(5) * (7.0 * a * a + 2.0 * b * b))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| R2 * p.lambda * p.a * p.a * p.b.powi(3),
                prefactor: |p| {
                    let s = sig(p);
                    2.0 * p.b
                        * ((s - p.b) / (s + p.b)).powf(p.b.powi(3) / (2.0 * s.powi(3)))
                        * (-p.a * p.a / (s * s)).exp()
                },
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * p.a * sig(p).powi(3),
                prefactor: |p| {
                    let s = sig(p);
                    (2.0 * s * s / p.a)
                        * ((s - p.b) / (s + p.b)).powf(s.powi(3) / p.b.powi(3))
                        * (2.0 * p.a * p.a / (p.b * p.b)).exp()
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^6 (f^2-a^2)^2 (f^2+b^2), kink 0 -> a
    CaseDef {
        id: "phi12.3dm.V",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.8, 1.0, 1.0),
        structural: None,
        window: Some(Window {
            description: "b > sqrt(2) a",
            holds: |p| p.b > R2 * p.a,
        }),
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * u.powi(3) * (u - p.a * p.a).powi(2) * (u + p.b * p.b)
        },
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            let s = sig(p);
            let t = (b * b + f * f).sqrt();
            // Conjugate forms: s^2 - t^2 = a^2 - f^2 and t^2 - b^2 = f^2.
            -a * a * s * t / (b * b * f * f)
                + ((s + t) * (s + t) / ((a - f) * (a + f))).ln()
                + ((2.0 * b * b - a * a) * s / (2.0 * b.powi(3)))
                    * (f * f / ((t + b) * (t + b))).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a.powi(4) * sig(p),
        energy: |p| {
            let (a, b) = (p.a, p.b);
            (2.0 * R2 / 105.0)
                * p.lambda
                * ((4.0 * b * b + 7.0 * a * a) * b.powi(5)
                    - (4.0 * b * b - 3.0 * a * a) * sig(p).powi(5))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 0.5,
                prefactor: |p| p.a * (sig(p) / p.b).sqrt(),
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a.powi(4) * sig(p),
                prefactor: |p| {
                    let s = sig(p);
                    (2.0 * s * s / p.a)
                        * ((s - p.b) / (s + p.b))
                            .powf((2.0 * p.b * p.b - p.a * p.a) * s / (2.0 * p.b.powi(3)))
                        * (-1.0 - p.a * p.a / (p.b * p.b)).exp()
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 (f^2-a^2)^2 (f^2+b^2)^4, kink -a -> a
    CaseDef {
        id: "phi12.2dm.I",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.9, 1.0, 1.0),
        structural: None,
        window: Some(Window {
            description: "2a/(sqrt(5)-1) > b > sqrt(2) a",
            holds: |p| 2.0 * p.a / (5f64.sqrt() - 1.0) > p.b && p.b > R2 * p.a,
        }),
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * (u - p.a * p.a).powi(2) * (u + p.b * p.b).powi(4)
        },
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            a * (b * b + a * a) * f / (b * b * (b * b + f * f))
                + (a * (a * a + 3.0 * b * b) / b.powi(3)) * (f / b).atan()
                + ((a + f) / (a - f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b + p.a * p.a).powi(2),
        energy: |p| {
            let (a, b) = (p.a, p.b);
            (4.0 * R2 / 105.0)
                * p.lambda
                * a.powi(3)
                * (35.0 * b.powi(4) + 14.0 * a * a * b * b + 3.0 * a.powi(4))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b + p.a * p.a).powi(2),
                prefactor: k320_a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b + p.a * p.a).powi(2),
                prefactor: k320_a,
                suspect: false,
            },
        ],
        symmetric: true,
    },
    // V = l^2 (f^2-a^2)^4 (f^2+b^2)^2, kink -a -> a
    CaseDef {
        id: "phi12.2dm.II",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.9, 1.0, 1.0),
        structural: None,
        window: Some(Window {
            description: "b sqrt(4 - sqrt(10)) > sqrt(6) a",
            holds: |p| p.b * (4.0 - 10f64.sqrt()).sqrt() > 6f64.sqrt() * p.a,
        }),
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * (u - p.a * p.a).powi(4) * (u + p.b * p.b).powi(2)
        },
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            let w = 3.0 * a * a + b * b;
            2.0 * a * (b * b + a * a) * f / (w * (a * a - f * f))
                + (4.0 * a.powi(3) / (b * w)) * (f / b).atan()
                + ((a + f) / (a - f)).ln()
        },
        mu: |p| {
            4.0 * R2 * p.lambda * p.a.powi(3) * (p.b * p.b + p.a * p.a).powi(2)
                / (3.0 * p.a * p.a + p.b * p.b)
        },
        energy: |p| {
            (16.0 * R2 / 105.0) * p.lambda * p.a.powi(5) * (7.0 * p.b * p.b + p.a * p.a)
        },
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| {
                    p.a * (p.b * p.b + p.a * p.a) / (3.0 * p.a * p.a + p.b * p.b)
                },
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| {
                    p.a * (p.b * p.b + p.a * p.a) / (3.0 * p.a * p.a + p.b * p.b)
                },
                suspect: false,
            },
        ],
        symmetric: true,
    },
    // V = l^2 (f^2-a^2)^6, kink -a -> a; half-power tails
    CaseDef {
        id: "phi12.2dm.III",
        family: Family::Phi12,
        relation: RelationForm::LogForm,
        uses_b: false,
        uses_c: false,
        defaults: || d(0.9, 1.0, 1.0),
        structural: None,
        window: None,
        v: |f, p| p.lambda * p.lambda * (f * f - p.a * p.a).powi(6),
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            let a = p.a;
            2.0 * a * f * (5.0 * a * a - 3.0 * f * f) / (3.0 * (a * a - f * f).powi(2))
                + ((a + f) / (a - f)).ln()
        },
        mu: |p| (16.0 / 3.0) * R2 * p.lambda * p.a.powi(5),
        energy: |p| (32.0 * R2 / 35.0) * p.lambda * p.a.powi(7),
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 0.5,
                prefactor: |p| p.a / 3f64.sqrt(),
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 0.5,
                prefactor: |p| p.a / 3f64.sqrt(),
                suspect: false,
            },
        ],
        symmetric: true,
    },
];
