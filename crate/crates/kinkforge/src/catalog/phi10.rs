//! Tenth-degree cases: five-minima pairs, the mixed-quartic three-minima
//! family, and the double wells whose tails first turn algebraic with
//! fractional exponents.

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

/// gamma = b^2 / a^2 for the five-minima pair.
fn gam(p: &Params) -> f64 {
    p.b * p.b / (p.a * p.a)
}

/// sqrt(a^2 + c^2) for the four-minima mixed case.
fn sa(p: &Params) -> f64 {
    (p.a * p.a + p.c * p.c).sqrt()
}

/// sqrt(b^2 + c^2) for the four-minima mixed case.
fn sb(p: &Params) -> f64 {
    (p.b * p.b + p.c * p.c).sqrt()
}

fn rho(p: &Params) -> f64 {
    p.a * sa(p) / (p.b * sb(p))
}

fn w15(p: &Params) -> f64 {
    (p.b * sa(p) - p.a * sb(p)) / (p.b * sa(p) + p.a * sb(p))
}

fn k15_a(p: &Params) -> f64 {
    (2.0 * p.a * sa(p) * sa(p) / (p.c * p.c)) * w15(p).powf(rho(p))
}

/// a^4 - b a^2 + c, the mixed-quartic factor at the outer minimum.
fn c1(p: &Params) -> f64 {
    p.a.powi(4) - p.b * p.a * p.a + p.c
}

pub(crate) static CASES: [CaseDef; 11] = [
    // V = l^2 f^2 (f^2-a^2)^2 (f^2-b^2)^2, kink 0 -> a
    CaseDef {
        id: "phi10.5dm.inner",
        family: Family::Phi10,
        relation: RelationForm::ExpForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.5, 1.0, 1.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * u * (u - p.a * p.a).powi(2) * (u - p.b * p.b).powi(2)
        },
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let g = gam(p);
            2.0 * (g - 1.0) * f.ln() + (p.b * p.b - f * f).ln() - g * (p.a * p.a - f * f).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.b * p.b * (p.b * p.b - p.a * p.a),
        energy: |p| (R2 / 12.0) * p.lambda * p.a.powi(4) * (3.0 * p.b * p.b - p.a * p.a),
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| R2 * p.lambda * p.a * p.a * p.b * p.b,
                prefactor: |p| {
                    let g = gam(p);
                    p.a.powf(g / (g - 1.0)) / p.b.powf(1.0 / (g - 1.0))
                },
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * p.a * (p.b * p.b - p.a * p.a),
                prefactor: |p| {
                    let g = gam(p);
                    p.a.powf(1.0 - 2.0 / g) * (p.b * p.b - p.a * p.a).powf(1.0 / g) / 2.0
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // Same potential, kink a -> b
    CaseDef {
        id: "phi10.5dm.outer",
        family: Family::Phi10,
        relation: RelationForm::ExpForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.5, 1.0, 1.0),
        structural: Some(need_b_gt_a),
        window: None,
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * u * (u - p.a * p.a).powi(2) * (u - p.b * p.b).powi(2)
        },
        lo: |p| p.a,
        hi: |p| p.b,
        relation_value: |f, p| {
            let g = gam(p);
            g * (f * f - p.a * p.a).ln() - 2.0 * (g - 1.0) * f.ln() - (p.b * p.b - f * f).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.b * p.b * (p.b * p.b - p.a * p.a),
        energy: |p| (R2 / 12.0) * p.lambda * (p.b * p.b - p.a * p.a).powi(3),
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * p.a * (p.b * p.b - p.a * p.a),
                prefactor: |p| {
                    let g = gam(p);
                    p.a.powf(1.0 - 2.0 / g) * (p.b * p.b - p.a * p.a).powf(1.0 / g) / 2.0
                },
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.b * p.b * (p.b * p.b - p.a * p.a),
                prefactor: |p| {
                    let g = gam(p);
                    (p.b * p.b - p.a * p.a).powf(g) / (2.0 * p.b.powf(2.0 * g - 1.0))
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 (f^2+c^2)(f^2-a^2)^2(f^2-b^2)^2, kink -a -> a
    CaseDef {
        id: "phi10.4dm.inner",
        family: Family::Phi10,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: true,
        defaults: || d(0.5, 1.0, 0.75),
        structural: Some(need_b_gt_a),
        window: None,
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda
                * (u + p.c * p.c)
                * (u - p.a * p.a).powi(2)
                * (u - p.b * p.b).powi(2)
        },
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            let t = (f * f + p.c * p.c).sqrt();
            2.0 * ((sa(p) * f / (p.a * t)).atanh() - rho(p) * (sb(p) * f / (p.b * t)).atanh())
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a) * sa(p),
        energy: |p| {
            let (a, b, c) = (p.a, p.b, p.c);
            (R2 / 24.0)
                * p.lambda
                * (a * sa(p)
                    * (12.0 * a * a * b * b
                        - 4.0 * a * a * c * c
                        - 6.0 * b * b * c * c
                        - 4.0 * a.powi(4)
                        - 3.0 * c.powi(4))
                    + 3.0 * c * c
                        * (8.0 * a * a * b * b + 2.0 * (b * b + a * a) * c * c + c.powi(4))
                        * (a / c).asinh())
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a) * sa(p),
                prefactor: k15_a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a) * sa(p),
                prefactor: k15_a,
                suspect: false,
            },
        ],
        symmetric: true,
    },
    // Same potential, kink a -> b; the upper prefactor display is inconsistent
    CaseDef {
        id: "phi10.4dm.outer",
        family: Family::Phi10,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: true,
        defaults: || d(0.5, 1.0, 0.75),
        structural: Some(need_b_gt_a),
        window: None,
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda
                * (u + p.c * p.c)
                * (u - p.a * p.a).powi(2)
                * (u - p.b * p.b).powi(2)
        },
        lo: |p| p.a,
        hi: |p| p.b,
        relation_value: |f, p| {
            let t = (f * f + p.c * p.c).sqrt();
            2.0 * (-(p.a * t / (sa(p) * f)).atanh() + rho(p) * (sb(p) * f / (p.b * t)).atanh())
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a) * sa(p),
        energy: |p| {
            let (a, b, c) = (p.a, p.b, p.c);
            (R2 / 48.0)
                * p.lambda
                * (a * sa(p)
                    * (12.0 * a * a * b * b
                        - 4.0 * a * a * c * c
                        - 6.0 * b * b * c * c
                        - 4.0 * a.powi(4)
                        - 3.0 * c.powi(4))
                    - b * sb(p)
                        * (12.0 * a * a * b * b
                            - 4.0 * b * b * c * c
                            - 6.0 * a * a * c * c
                            - 4.0 * b.powi(4)
                            - 3.0 * c.powi(4))
                    + 3.0 * c * c
                        * (8.0 * a * a * b * b + 2.0 * (b * b + a * a) * c * c + c.powi(4))
                        * ((a / c).asinh() - (b / c).asinh()))
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * (p.b * p.b - p.a * p.a) * sa(p),
                prefactor: k15_a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.b * (p.b * p.b - p.a * p.a) * sb(p),
                prefactor: |p| {
                    (2.0 * p.b * sb(p) * sb(p) / (p.c * p.c)) * w15(p).powf(1.0 / rho(p))
                },
                suspect: true,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^2 (f^2-a^2)^2 (f^4 - b f^2 + c), kink 0 -> a
    CaseDef {
        id: "phi10.3dm.I",
        family: Family::Phi10,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: true,
        defaults: || d(0.8, 1.0, 1.0),
        structural: Some(|p| {
            (!(p.b > 0.0 && p.b * p.b < 4.0 * p.c))
                .then(|| format!("requires 0 < b and b^2 < 4c, got b={}, c={}", p.b, p.c))
        }),
        window: None,
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * u * (u - p.a * p.a).powi(2) * (u * u - p.b * u + p.c)
        },
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b, c) = (p.a, p.b, p.c);
            let disc = (4.0 * c - b * b).sqrt();
            (c.sqrt() / c1(p).sqrt())
                * ((2.0 * c - b * a * a + (2.0 * a * a - b) * f * f)
                    / ((a * a - f * f) * disc))
                    .asinh()
                - ((2.0 * c - b * f * f) / (f * f * disc)).asinh()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * p.a * p.c.sqrt(),
        energy: |p| {
            let (a, b, c) = (p.a, p.b, p.c);
            let q = c1(p);
            (R2 / 96.0)
                * p.lambda
                * (2.0 * (3.0 * b * b + 4.0 * a.powi(4) - 4.0 * a * a * b - 8.0 * c) * q.sqrt()
                    + 16.0 * c.powf(1.5)
                    + 6.0 * b * (2.0 * a * a - b) * c.sqrt()
                    + 3.0 * (b * b - 4.0 * c)
                        * (2.0 * a * a - b)
                        * ((-b + 2.0 * c.sqrt()) / (2.0 * a * a - b + 2.0 * q.sqrt())).ln())
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| R2 * p.lambda * p.a * p.a * p.c.sqrt(),
                prefactor: |p| {
                    let (a, b, c) = (p.a, p.b, p.c);
                    (2.0 * c.sqrt() / (4.0 * c - b * b).powf(0.25))
                        * (-(c.sqrt() / (2.0 * c1(p).sqrt()))
                            * ((2.0 * c - b * a * a) / (a * a * (4.0 * c - b * b).sqrt()))
                                .asinh())
                        .exp()
                },
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * p.a * c1(p).sqrt(),
                prefactor: |p| {
                    let (a, b, c) = (p.a, p.b, p.c);
                    let q = c1(p);
                    (2.0 * q / (a * (4.0 * c - b * b).sqrt()))
                        * (-(q.sqrt() / c.sqrt())
                            * ((2.0 * c - b * a * a) / (a * a * (4.0 * c - b * b).sqrt()))
                                .asinh())
                        .exp()
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^2 (f^2-a^2)^2 (f^2+b^2)^2, kink 0 -> a
    CaseDef {
        id: "phi10.3dm.II",
        family: Family::Phi10,
        relation: RelationForm::ExpForm,
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
            p.lambda * p.lambda * u * (u - p.a * p.a).powi(2) * (u + p.b * p.b).powi(2)
        },
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let s2 = p.b * p.b + p.a * p.a;
            2.0 * f.ln()
                - (p.b * p.b / s2) * (p.a * p.a - f * f).ln()
                - (p.a * p.a / s2) * (p.b * p.b + f * f).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * p.a * p.b * p.b,
        energy: |p| (R2 / 12.0) * p.lambda * p.a.powi(4) * (p.a * p.a + 3.0 * p.b * p.b),
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| R2 * p.lambda * p.a * p.a * p.b * p.b,
                prefactor: |p| {
                    let s2 = p.b * p.b + p.a * p.a;
                    p.a.powf(p.b * p.b / s2) * p.b.powf(p.a * p.a / s2)
                },
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * p.a * (p.b * p.b + p.a * p.a),
                prefactor: |p| {
                    let r = p.a * p.a / (p.b * p.b);
                    p.a.powf(1.0 + 2.0 * r) / (2.0 * (p.a * p.a + p.b * p.b).powf(r))
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^6 (f^2-a^2)^2, kink 0 -> a; half-power tail at the origin
    CaseDef {
        id: "phi10.3dm.III",
        family: Family::Phi10,
        relation: RelationForm::LogForm,
        uses_b: false,
        uses_c: false,
        defaults: || d(0.8, 1.0, 1.0),
        structural: None,
        window: None,
        v: |f, p| p.lambda * p.lambda * f.powi(6) * (f * f - p.a * p.a).powi(2),
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            -p.a * p.a / (f * f) + (f * f / (p.a * p.a - f * f)).ln()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a.powi(4),
        energy: |p| (R2 / 12.0) * p.lambda * p.a.powi(6),
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 0.5,
                prefactor: |p| p.a,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a.powi(4),
                prefactor: |p| (p.a / 2.0) * (-1f64).exp(),
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 f^4 (f^2-a^2)^2 (f^2+b^2), kink 0 -> a
    CaseDef {
        id: "phi10.3dm.IV",
        family: Family::Phi10,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.8, 1.0, 1.0),
        structural: None,
        window: Some(Window {
            description: "a > sqrt(2) b",
            holds: |p| p.a > R2 * p.b,
        }),
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * u * u * (u - p.a * p.a).powi(2) * (u + p.b * p.b)
        },
        lo: |_| 0.0,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            -2.0 * a * sig(p) * (f * f + b * b).sqrt() / (b * b * f)
                + ((b * b + a * f) / (b * (a - f))).asinh()
                - ((b * b - a * f) / (b * (a + f))).asinh()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a.powi(3) * sig(p),
        energy: |p| {
            let (a, b) = (p.a, p.b);
            (R2 / 48.0)
                * p.lambda
                * (a * sig(p) * (4.0 * a.powi(4) + 4.0 * a * a * b * b + 3.0 * b.powi(4))
                    - 3.0 * b.powi(4) * (2.0 * a * a + b * b) * (a / b).asinh())
        },
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 1.0,
                prefactor: |p| 2.0 * p.a * sig(p) / p.b,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a.powi(3) * sig(p),
                prefactor: |p| {
                    let r = p.a * p.a / (p.b * p.b);
                    (2.0 * p.a * (p.b * p.b + p.a * p.a) / (p.b * p.b))
                        * (-2.0 - 2.0 * r).exp()
                },
                suspect: false,
            },
        ],
        symmetric: false,
    },
    // V = l^2 (f^2-a^2)^2 (f^2+b^2)^3, kink -a -> a
    CaseDef {
        id: "phi10.2dm.I",
        family: Family::Phi10,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.9, 1.0, 1.0),
        structural: None,
        window: Some(Window {
            description: "a < b sqrt(3 - sqrt(6))",
            holds: |p| p.a < p.b * (3.0 - 6f64.sqrt()).sqrt(),
        }),
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * (u - p.a * p.a).powi(2) * (u + p.b * p.b).powi(3)
        },
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            2.0 * a * f * sig(p) / (b * b * (b * b + f * f).sqrt())
                + ((b * b + a * f) / (b * (a - f))).asinh()
                - ((b * b - a * f) / (b * (a + f))).asinh()
        },
        mu: |p| 2.0 * R2 * p.lambda * p.a * sig(p).powi(3),
        energy: |p| {
            let (a, b) = (p.a, p.b);
            (R2 / 24.0)
                * p.lambda
                * (a * sig(p) * (4.0 * a.powi(4) + 16.0 * a * a * b * b - 3.0 * b.powi(4))
                    + 3.0 * b.powi(4) * (6.0 * a * a + b * b) * (a / b).asinh())
        },
        tails: [
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * sig(p).powi(3),
                prefactor: |p| {
                    let r = p.a * p.a / (p.b * p.b);
                    (2.0 * p.a * (p.b * p.b + p.a * p.a) / (p.b * p.b)) * (2.0 * r).exp()
                },
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Exp,
                scale: |p| 2.0 * R2 * p.lambda * p.a * sig(p).powi(3),
                prefactor: |p| {
                    let r = p.a * p.a / (p.b * p.b);
                    (2.0 * p.a * (p.b * p.b + p.a * p.a) / (p.b * p.b)) * (2.0 * r).exp()
                },
                suspect: false,
            },
        ],
        symmetric: true,
    },
    // V = l^2 (f^2-a^2)^4 (f^2+b^2), kink -a -> a
    CaseDef {
        id: "phi10.2dm.II",
        family: Family::Phi10,
        relation: RelationForm::LogForm,
        uses_b: true,
        uses_c: false,
        defaults: || d(0.9, 1.0, 1.0),
        structural: None,
        window: Some(Window {
            description: "a sqrt(6)/2 > b > a",
            holds: |p| p.a * 6f64.sqrt() / 2.0 > p.b && p.b > p.a,
        }),
        v: |f, p| {
            let u = f * f;
            p.lambda * p.lambda * (u - p.a * p.a).powi(4) * (u + p.b * p.b)
        },
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            let (a, b) = (p.a, p.b);
            let s = sig(p);
            2.0 * a * f * (b * b + f * f).sqrt() / ((a * a - f * f) * s)
                + ((2.0 * a * a + b * b) / (s * s))
                    * (((b * b + a * f) / (b * (a - f))).asinh()
                        - ((b * b - a * f) / (b * (a + f))).asinh())
        },
        mu: |p| 4.0 * R2 * p.lambda * p.a.powi(3) * sig(p),
        energy: |p| {
            let (a, b) = (p.a, p.b);
            (R2 / 24.0)
                * p.lambda
                * (a * sig(p) * (8.0 * a.powi(4) - 10.0 * a * a * b * b - 3.0 * b.powi(4))
                    + 3.0 * b * b
                        * (8.0 * a.powi(4) + 4.0 * a * a * b * b + b.powi(4))
                        * (a / b).asinh())
        },
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
    // V = l^2 |f^2-a^2|^5, kink -a -> a; pure rational relation
    CaseDef {
        id: "phi10.2dm.III",
        family: Family::Phi10,
        relation: RelationForm::LogForm,
        uses_b: false,
        uses_c: false,
        defaults: || d(0.9, 1.0, 1.0),
        structural: None,
        window: None,
        v: |f, p| p.lambda * p.lambda * (f * f - p.a * p.a).abs().powi(5),
        lo: |p| -p.a,
        hi: |p| p.a,
        relation_value: |f, p| {
            f * (3.0 * p.a * p.a - 2.0 * f * f) / (p.a * p.a - f * f).powf(1.5)
        },
        mu: |p| 3.0 * R2 * p.lambda * p.a.powi(4),
        energy: |p| (5.0 * R2 * std::f64::consts::PI / 16.0) * p.lambda * p.a.powi(6),
        tails: [
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 2.0 / 3.0,
                prefactor: |p| p.a / 2.0,
                suspect: false,
            },
            TailDef {
                kind: TailKindDef::Alg,
                scale: |_| 2.0 / 3.0,
                prefactor: |p| p.a / 2.0,
                suspect: false,
            },
        ],
        symmetric: true,
    },
];
