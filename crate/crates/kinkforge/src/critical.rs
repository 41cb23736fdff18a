//! Locating and classifying the critical points of an even polynomial
//! potential, and phase scans over one free coefficient of a template.

use crate::alpha::AlphaForm;
use crate::poly::{PolynomialPotential, Potential};
use crate::roots::real_roots;
use crate::Error;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriticalKind {
    Minimum,
    Maximum,
    Inflection,
}

impl std::fmt::Display for CriticalKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CriticalKind::Minimum => "minimum",
            CriticalKind::Maximum => "maximum",
            CriticalKind::Inflection => "inflection",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub location: f64,
    pub kind: CriticalKind,
    pub value: f64,
    /// V at this point equals the global minimum within tolerance.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalPointSet {
    pub points: Vec<CriticalPoint>,
}

impl CriticalPointSet {
    pub fn minima(&self) -> impl Iterator<Item = &CriticalPoint> {
        self.points.iter().filter(|p| p.kind == CriticalKind::Minimum)
    }

    pub fn degenerate_minima(&self) -> impl Iterator<Item = &CriticalPoint> {
        self.minima().filter(|p| p.degenerate)
    }

    pub fn count(&self, kind: CriticalKind) -> usize {
        self.points.iter().filter(|p| p.kind == kind).count()
    }

    /// CSV rows `phi_e,kind,value,degenerate` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("phi_e,kind,value,degenerate\n");
        for p in &self.points {
            out.push_str(&format!("{},{},{},{}\n", p.location, p.kind, p.value, p.degenerate));
        }
        out
    }
}

/// All real critical points of V, sorted, with kinds decided by the sign
/// of V′ on either side (robust at flat extrema where V″ vanishes) and
/// degenerate minima flagged relative to the global minimum.
pub fn classify_critical_points(
    p: &PolynomialPotential,
    tol: f64,
) -> Result<CriticalPointSet, Error> {
    if p.degree() < 4 {
        return Err(Error::InvalidPotential(format!(
            "classification needs degree >= 4, got {}",
            p.degree()
        )));
    }
    let dc = p.deriv_coeffs();
    let locs = real_roots(&dc)?;
    if locs.is_empty() {
        return Err(Error::RootFindingFailure);
    }
    // tolerance scale: |V| sup over the critical region, not the (much
    // wider) root bound, so degeneracy stays meaningful at high degree
    let edge = 1.0 + locs.iter().fold(0.0_f64, |m, &x| m.max(x.abs()));
    let mut points = Vec::with_capacity(locs.len());
    for (i, &x) in locs.iter().enumerate() {
        let left = if i == 0 { x - 1.0 } else { 0.5 * (locs[i - 1] + x) };
        let right = if i + 1 == locs.len() { x + 1.0 } else { 0.5 * (x + locs[i + 1]) };
        let sl = p.d1(left);
        let sr = p.d1(right);
        let kind = if sl < 0.0 && sr > 0.0 {
            CriticalKind::Minimum
        } else if sl > 0.0 && sr < 0.0 {
            CriticalKind::Maximum
        } else {
            CriticalKind::Inflection
        };
        points.push(CriticalPoint { location: x, kind, value: p.value(x), degenerate: false });
    }
    let vmin = points.iter().map(|q| q.value).fold(f64::INFINITY, f64::min);
    let vsup = points
        .iter()
        .map(|q| q.value.abs())
        .fold(p.value(edge).abs(), f64::max)
        .max(1.0);
    for q in &mut points {
        q.degenerate = q.kind == CriticalKind::Minimum && (q.value - vmin).abs() <= tol * vsup;
    }
    Ok(CriticalPointSet { points })
}

/// Classify the template potential at each grid value of the free alpha
/// (indexed as α_{2·free}: pass 1 to vary α₂).
pub fn scan_phase(
    template: &AlphaForm,
    free: usize,
    grid: &[f64],
    tol: f64,
) -> Result<Vec<CriticalPointSet>, Error> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("empty phase-scan grid".into()));
    }
    if free >= template.alphas.len() {
        return Err(Error::InvalidParameter(format!(
            "free index {free} out of range for {}",
            template.family
        )));
    }
    let mut out = Vec::with_capacity(grid.len());
    for &g in grid {
        let mut t = template.clone();
        t.alphas[free] = g;
        out.push(classify_critical_points(&t.to_potential(), tol)?);
    }
    Ok(out)
}
