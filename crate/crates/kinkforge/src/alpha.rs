//! The alternating-sign coefficient convention for the three families,
//! plus the closed-form phase-transition checks tied to it: the
//! first-order relation and ratio window of the eighth-degree family and
//! the four-degenerate-minima constraint of the tenth-degree family.

use crate::poly::PolynomialPotential;
use crate::Error;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Phi8,
    Phi10,
    Phi12,
}

impl Family {
    /// Half-degree m: the potential's degree is 2m.
    pub fn half_degree(self) -> usize {
        match self {
            Family::Phi8 => 4,
            Family::Phi10 => 5,
            Family::Phi12 => 6,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Phi8 => "phi8",
            Family::Phi10 => "phi10",
            Family::Phi12 => "phi12",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "phi8" => Ok(Family::Phi8),
            "phi10" => Ok(Family::Phi10),
            "phi12" => Ok(Family::Phi12),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

/// `V = λ² [φ^2m − α_{2m−2} φ^{2m−2} + … + (−1)^m α₀]`: the leading
/// coefficient is +1 and lower terms alternate in sign.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaForm {
    pub family: Family,
    pub lambda: f64,
    /// α₀, α₂, …, α_{2m−2}; the φ^2m coefficient is fixed to +1.
    pub alphas: Vec<f64>,
}

impl AlphaForm {
    pub fn new(family: Family, lambda: f64, alphas: Vec<f64>) -> Result<Self, Error> {
        let m = family.half_degree();
        if alphas.len() != m {
            return Err(Error::InvalidParameter(format!(
                "{family} needs {m} alphas (α₀ … α_{}), got {}",
                2 * m - 2,
                alphas.len()
            )));
        }
        if !(lambda > 0.0) {
            return Err(Error::InvalidParameter(format!("lambda must be positive, got {lambda}")));
        }
        Ok(Self { family, lambda, alphas })
    }

    pub fn alpha(&self, index: usize) -> f64 {
        if index == self.family.half_degree() {
            1.0
        } else {
            self.alphas[index]
        }
    }

    pub fn to_potential(&self) -> PolynomialPotential {
        let mut full = self.alphas.clone();
        full.push(1.0);
        PolynomialPotential::from_alternating(self.lambda, &full)
            .expect("alpha template always yields a valid potential")
    }

    /// Inverse of `to_potential`; the degree and leading coefficient must
    /// match the family template.
    pub fn from_potential(family: Family, p: &PolynomialPotential) -> Result<Self, Error> {
        let m = family.half_degree();
        if p.degree() != 2 * m {
            return Err(Error::InvalidPotential(format!(
                "degree {} does not match {family}",
                p.degree()
            )));
        }
        let lead = p.coeffs[2 * m];
        if (lead - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidPotential(format!(
                "leading coefficient must be +1 in the alpha convention, got {lead}"
            )));
        }
        let mut alphas = Vec::with_capacity(m);
        for i in 0..m {
            let sign = if (m - i) % 2 == 0 { 1.0 } else { -1.0 };
            alphas.push(sign * p.coeffs[2 * i]);
        }
        Self::new(family, p.lambda, alphas)
    }
}

pub struct FirstOrderCheck {
    pub satisfied: bool,
    pub residual: f64,
}

/// First-order-transition relation of the eighth-degree family:
/// α₄ = α₆²/4 + 2α₂/α₆.
pub fn check_phi8_first_order(alpha6: f64, alpha4: f64, alpha2: f64) -> FirstOrderCheck {
    let residual = alpha4 - alpha6 * alpha6 / 4.0 - 2.0 * alpha2 / alpha6;
    let scale = alpha4
        .abs()
        .max(alpha6 * alpha6 / 4.0)
        .max((2.0 * alpha2 / alpha6).abs())
        .max(1.0);
    FirstOrderCheck { satisfied: residual.abs() <= 1e-9 * scale, residual }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioWindow {
    Below,
    LocalMinimaPersist,
    InflectionBoundary,
    MinimaVanishEarly,
    Above,
}

/// Classify α₄/α₆² against the local-minima window (1/4, 9/32) and the
/// upper threshold 3/8. All three thresholds are exactly representable,
/// so the boundary comparisons are exact.
pub fn phi8_ratio_window(alpha6: f64, alpha4: f64) -> RatioWindow {
    let r = alpha4 / (alpha6 * alpha6);
    if r < 0.25 {
        RatioWindow::Below
    } else if r < 9.0 / 32.0 {
        RatioWindow::LocalMinimaPersist
    } else if r == 9.0 / 32.0 {
        RatioWindow::InflectionBoundary
    } else if r < 0.375 {
        RatioWindow::MinimaVanishEarly
    } else {
        RatioWindow::Above
    }
}

/// Coefficients induced by the four-degenerate-minima factorization
/// `λ²(φ²+c²)(φ²−a²)²(φ²−b²)²`, in template order α₀ … α₈.
pub fn four_degenerate_map(a: f64, b: f64, c: f64, lambda: f64) -> Result<AlphaForm, Error> {
    if !(a > 0.0 && b > a && c > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "need 0 < a < b and c > 0, got a={a}, b={b}, c={c}"
        )));
    }
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let s = a2 + b2;
    let alpha8 = 2.0 * s - c2;
    let alpha6 = a2 * a2 + b2 * b2 + 4.0 * a2 * b2 - 2.0 * c2 * s;
    let alpha4 = 2.0 * a2 * b2 * s - c2 * (a2 * a2 + 4.0 * a2 * b2 + b2 * b2);
    let alpha2 = a2 * a2 * b2 * b2 - 2.0 * a2 * b2 * c2 * s;
    let alpha0 = -a2 * a2 * b2 * b2 * c2;
    AlphaForm::new(Family::Phi10, lambda, vec![alpha0, alpha2, alpha4, alpha6, alpha8])
}

/// The four constraint terms; the residual is t₁+t₂+t₃−t₄ and the natural
/// scale is Σ|tᵢ|. The constraint is cubic in α₂.
pub fn phi10_constraint_terms(alpha8: f64, alpha6: f64, alpha4: f64, alpha2: f64) -> [f64; 4] {
    let (a8, a6, a4, a2) = (alpha8, alpha6, alpha4, alpha2);
    let t1 = 8000.0 * a2.powi(3);
    let f1 = 27.0 * a4 * a4 + 4.0 * a6.powi(3) - 18.0 * a4 * a6 * a8 - a6 * a6 * a8 * a8
        + 4.0 * a4 * a8.powi(3);
    let f2 = 25.0 * a4 * a4 - 20.0 * a6.powi(3) - 70.0 * a4 * a6 * a8 + 37.0 * a6 * a6 * a8 * a8
        + 4.0 * a4 * a8.powi(3)
        - 8.0 * a6 * a8.powi(4);
    let t2 = f1 * f2;
    let t3 = 8.0
        * a2
        * (15.0 * a4 * a4 * (15.0 * a6 + 26.0 * a8 * a8)
            + 2.0 * a4 * (125.0 * a6 * a6 * a8 - 262.0 * a6 * a8.powi(3) + 56.0 * a8.powi(5))
            + (4.0 * a6 - a8 * a8)
                * (35.0 * a6.powi(3) - 66.0 * a6 * a6 * a8 * a8 + 48.0 * a6 * a8.powi(4)
                    - 8.0 * a8.powi(6)));
    let t4 = 16.0
        * a2
        * a2
        * (325.0 * a6 * a6 + 600.0 * a4 * a8 - 440.0 * a6 * a8 * a8 + 88.0 * a8.powi(4));
    [t1, t2, t3, t4]
}

/// Residual of the four-degenerate-minima constraint; vanishes exactly on
/// the image of `four_degenerate_map`.
pub fn phi10_four_degenerate_constraint(alpha8: f64, alpha6: f64, alpha4: f64, alpha2: f64) -> f64 {
    let [t1, t2, t3, t4] = phi10_constraint_terms(alpha8, alpha6, alpha4, alpha2);
    t1 + t2 + t3 - t4
}

/// Σ|tᵢ|: the comparison scale for the constraint residual.
pub fn phi10_constraint_scale(alpha8: f64, alpha6: f64, alpha4: f64, alpha2: f64) -> f64 {
    phi10_constraint_terms(alpha8, alpha6, alpha4, alpha2)
        .iter()
        .map(|t| t.abs())
        .sum()
}
