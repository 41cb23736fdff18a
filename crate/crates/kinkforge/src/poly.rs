//! Even polynomial potentials `V(φ) = λ² Σ cᵢ φⁱ` and the evaluation trait
//! shared by every potential representation in the crate.

use crate::roots::poly_eval;
use crate::Error;
use serde::{Deserialize, Serialize};

/// Anything that behaves like a field potential on the line.
pub trait Potential {
    fn value(&self, phi: f64) -> f64;

    /// First derivative; default is a fourth-order central difference.
    fn d1(&self, phi: f64) -> f64 {
        let h = fd_step(phi);
        (8.0 * (self.value(phi + h) - self.value(phi - h))
            - (self.value(phi + 2.0 * h) - self.value(phi - 2.0 * h)))
            / (12.0 * h)
    }

    /// Second derivative; default is a fourth-order central difference.
    fn d2(&self, phi: f64) -> f64 {
        let h = fd_step(phi).sqrt() * 1e-2;
        (-(self.value(phi + 2.0 * h) + self.value(phi - 2.0 * h))
            + 16.0 * (self.value(phi + h) + self.value(phi - h))
            - 30.0 * self.value(phi))
            / (12.0 * h * h)
    }
}

fn fd_step(phi: f64) -> f64 {
    1e-6 * (1.0 + phi.abs())
}

/// `V(φ) = λ² (c₀ + c₂ φ² + … + c₂ₘ φ²ᵐ)` with natural coefficient signs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialPotential {
    pub lambda: f64,
    /// c₀ … c₂ₘ; odd entries are exactly zero.
    pub coeffs: Vec<f64>,
}

impl PolynomialPotential {
    pub fn new(lambda: f64, coeffs: Vec<f64>) -> Result<Self, Error> {
        if !(lambda > 0.0) {
            return Err(Error::InvalidPotential(format!("lambda must be positive, got {lambda}")));
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidPotential("empty coefficient list".into()));
        }
        if let Some(i) = coeffs.iter().enumerate().position(|(i, &c)| i % 2 == 1 && c != 0.0) {
            return Err(Error::InvalidPotential(format!(
                "odd coefficient c{i} must be exactly zero for an even potential"
            )));
        }
        let lead = *coeffs.last().unwrap();
        if coeffs.len() > 1 && !(lead > 0.0) {
            return Err(Error::InvalidPotential(format!(
                "leading coefficient must be positive, got {lead}"
            )));
        }
        Ok(Self { lambda, coeffs })
    }

    /// Build from the alternating template `λ² Σ (−1)^(m−i) α₂ᵢ φ²ⁱ`,
    /// `alphas` listing α₀ … α₂ₘ inclusive of the leading coefficient.
    pub fn from_alternating(lambda: f64, alphas: &[f64]) -> Result<Self, Error> {
        let m = alphas.len() - 1;
        let mut coeffs = vec![0.0; 2 * m + 1];
        for (i, &al) in alphas.iter().enumerate() {
            let sign = if (m - i) % 2 == 0 { 1.0 } else { -1.0 };
            coeffs[2 * i] = sign * al;
        }
        Self::new(lambda, coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients of V′/λ².
    pub fn deriv_coeffs(&self) -> Vec<f64> {
        crate::roots::poly_deriv(&self.coeffs)
    }

    /// Same potential with the global minimum shifted to zero.
    pub fn min_shifted(&self) -> Result<Self, Error> {
        let crit = crate::critical::classify_critical_points(self, 1e-9)?;
        let vmin = crit
            .points
            .iter()
            .map(|p| p.value)
            .fold(f64::INFINITY, f64::min);
        let mut out = self.clone();
        out.coeffs[0] -= vmin / (self.lambda * self.lambda);
        Ok(out)
    }
}

impl Potential for PolynomialPotential {
    fn value(&self, phi: f64) -> f64 {
        self.lambda * self.lambda * poly_eval(&self.coeffs, phi)
    }

    fn d1(&self, phi: f64) -> f64 {
        let mut acc = 0.0;
        for (i, &c) in self.coeffs.iter().enumerate().skip(1).rev() {
            acc = acc * phi + i as f64 * c;
        }
        // Horner on the derivative, which lost its constant term above
        self.lambda * self.lambda * acc
    }

    fn d2(&self, phi: f64) -> f64 {
        let mut acc = 0.0;
        for (i, &c) in self.coeffs.iter().enumerate().skip(2).rev() {
            acc = acc * phi + (i * (i - 1)) as f64 * c;
        }
        self.lambda * self.lambda * acc
    }
}

impl<P: Potential + ?Sized> Potential for &P {
    fn value(&self, phi: f64) -> f64 {
        (**self).value(phi)
    }
    fn d1(&self, phi: f64) -> f64 {
        (**self).d1(phi)
    }
    fn d2(&self, phi: f64) -> f64 {
        (**self).d2(phi)
    }
}
