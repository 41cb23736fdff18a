//! Potentials kept as products of quadratic-in-φ² factors, e.g.
//! `λ²(φ²−a²)²(φ²+c²)`, with an optional absolute value applied to every
//! factor for the non-polynomial |φ²−a²|-power family.

use crate::poly::{PolynomialPotential, Potential};
use crate::Error;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorSign {
    /// (φ² − r)
    Minus,
    /// (φ² + r)
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Factor {
    pub shift: f64,
    pub sign: FactorSign,
    pub exponent: f64,
}

impl Factor {
    fn base(&self, phi: f64) -> f64 {
        match self.sign {
            FactorSign::Minus => phi * phi - self.shift,
            FactorSign::Plus => phi * phi + self.shift,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactoredPotential {
    pub lambda: f64,
    pub factors: Vec<Factor>,
    /// Evaluate every factor through |·| (the non-polynomial family).
    pub absolute: bool,
}

impl FactoredPotential {
    pub fn new(lambda: f64, factors: Vec<Factor>, absolute: bool) -> Result<Self, Error> {
        if !(lambda > 0.0) {
            return Err(Error::InvalidPotential(format!("lambda must be positive, got {lambda}")));
        }
        for f in &factors {
            if !(f.shift > 0.0) {
                return Err(Error::InvalidPotential(format!(
                    "factor shift must be positive, got {}",
                    f.shift
                )));
            }
            if !(f.exponent > 0.0) {
                return Err(Error::InvalidPotential(format!(
                    "factor exponent must be positive, got {}",
                    f.exponent
                )));
            }
        }
        Ok(Self { lambda, factors, absolute })
    }

    /// Parse a product like `(x2-1)^2(x2+0.25)` or `|x2-0.81|^2.5`.
    /// `x2` stands for φ²; exponents default to 1; `|…|` marks the
    /// absolute-value family and applies to the whole potential.
    pub fn parse(text: &str, lambda: f64) -> Result<Self, Error> {
        let bad = |why: &str| Error::InvalidParameter(format!("factored grammar: {why} in {text:?}"));
        let mut factors = Vec::new();
        let mut absolute = false;
        let s: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < s.len() {
            let ch = s[i];
            if ch.is_whitespace() || ch == '*' {
                i += 1;
                continue;
            }
            let close = match ch {
                '(' => ')',
                '|' => {
                    absolute = true;
                    '|'
                }
                _ => return Err(bad("expected '(' or '|'")),
            };
            let end = s[i + 1..]
                .iter()
                .position(|&c| c == close)
                .map(|p| p + i + 1)
                .ok_or_else(|| bad("unclosed factor"))?;
            let inner: String = s[i + 1..end].iter().collect();
            let inner = inner.trim();
            let rest = inner
                .strip_prefix("x2")
                .ok_or_else(|| bad("factor must start with x2"))?
                .trim();
            let (sign, shift_txt) = if let Some(t) = rest.strip_prefix('-') {
                (FactorSign::Minus, t)
            } else if let Some(t) = rest.strip_prefix('+') {
                (FactorSign::Plus, t)
            } else {
                return Err(bad("expected x2+r or x2-r"));
            };
            let shift: f64 = shift_txt
                .trim()
                .parse()
                .map_err(|_| bad("unreadable shift"))?;
            i = end + 1;
            let mut exponent = 1.0;
            if i < s.len() && s[i] == '^' {
                let start = i + 1;
                let mut j = start;
                while j < s.len() && (s[j].is_ascii_digit() || s[j] == '.') {
                    j += 1;
                }
                let etxt: String = s[start..j].iter().collect();
                exponent = etxt.parse().map_err(|_| bad("unreadable exponent"))?;
                i = j;
            }
            factors.push(Factor { shift, sign, exponent });
        }
        if factors.is_empty() {
            return Err(bad("no factors"));
        }
        Self::new(lambda, factors, absolute)
    }

    pub fn degree(&self) -> f64 {
        2.0 * self.factors.iter().map(|f| f.exponent).sum::<f64>()
    }
}

impl Potential for FactoredPotential {
    fn value(&self, phi: f64) -> f64 {
        let mut v = self.lambda * self.lambda;
        for f in &self.factors {
            let base = f.base(phi);
            let base = if self.absolute { base.abs() } else { base };
            v *= if f.exponent.fract() == 0.0 {
                base.powi(f.exponent as i32)
            } else {
                base.powf(f.exponent)
            };
        }
        v
    }
}

/// Exact polynomial expansion; refuses the absolute-value family and any
/// non-integer exponent.
pub fn expand_factored(f: &FactoredPotential) -> Result<PolynomialPotential, Error> {
    if f.absolute {
        return Err(Error::NonPolynomial("absolute-value factors do not expand".into()));
    }
    // work in u = φ², interleave zeros afterwards
    let mut u = vec![1.0];
    for fac in &f.factors {
        if fac.exponent.fract() != 0.0 {
            return Err(Error::NonPolynomial(format!(
                "non-integer exponent {}",
                fac.exponent
            )));
        }
        let base = match fac.sign {
            FactorSign::Minus => vec![-fac.shift, 1.0],
            FactorSign::Plus => vec![fac.shift, 1.0],
        };
        for _ in 0..fac.exponent as usize {
            u = convolve(&u, &base);
        }
    }
    let mut coeffs = vec![0.0; 2 * u.len() - 1];
    for (k, &c) in u.iter().enumerate() {
        coeffs[2 * k] = c;
    }
    PolynomialPotential::new(f.lambda, coeffs)
}

fn convolve(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}
