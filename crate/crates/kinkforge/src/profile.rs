//! Numeric kink engines: inversion of the implicit relations, direct
//! integration of the first-order Bogomolny equation, quadrature energies,
//! tail fitting, and Lorentz boosts.
//!
//! Everything here works from the potential alone, so the results double as
//! independent cross-checks of the catalogued closed forms.

use crate::catalog::{KinkCase, Side, TailKind};
use crate::num::{integrate_adaptive, linear_fit, tanh_sinh, QuadResult};
use crate::poly::Potential;
use crate::Error;
use serde::{Deserialize, Serialize};

/// Where a profile pins x = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Anchor {
    /// phi(0) is the midpoint of the connected minima (symmetric kinks).
    MidpointZero,
    /// x = 0 where the implicit relation's left side vanishes.
    ImplicitX0,
}

/// How a profile was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Pointwise inversion of a catalogued implicit relation.
    Inverted,
    /// Adaptive integration of dphi/dx = sqrt(2V).
    Integrated,
}

/// A sampled kink: strictly increasing phi(x) between two adjacent minima.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KinkProfile {
    samples: Vec<(f64, f64)>,
    minima: (f64, f64),
    anchor: Anchor,
    provenance: Provenance,
}

impl KinkProfile {
    /// Builds a profile, enforcing the sampling invariants: x and phi both
    /// strictly increasing, phi strictly inside the open minima interval.
    pub fn new(
        samples: Vec<(f64, f64)>,
        minima: (f64, f64),
        anchor: Anchor,
        provenance: Provenance,
    ) -> Result<Self, Error> {
        if samples.len() < 2 {
            return Err(Error::InvalidParameter(
                "profile needs at least two samples".into(),
            ));
        }
        let (lo, hi) = minima;
        for pair in samples.windows(2) {
            if !(pair[0].0 < pair[1].0 && pair[0].1 < pair[1].1) {
                return Err(Error::InvalidParameter(format!(
                    "profile samples must increase strictly, got {:?} then {:?}",
                    pair[0], pair[1]
                )));
            }
        }
        if samples.iter().any(|&(_, phi)| !(phi > lo && phi < hi)) {
            return Err(Error::InvalidParameter(
                "profile phi values must lie strictly between the minima".into(),
            ));
        }
        Ok(KinkProfile {
            samples,
            minima,
            anchor,
            provenance,
        })
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn minima(&self) -> (f64, f64) {
        self.minima
    }

    pub fn anchor(&self) -> Anchor {
        self.anchor
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Covered x interval.
    pub fn x_range(&self) -> (f64, f64) {
        (self.samples[0].0, self.samples[self.samples.len() - 1].0)
    }

    /// Linear interpolation, clamped to the end samples outside the range.
    pub fn phi_at(&self, x: f64) -> f64 {
        let s = &self.samples;
        if x <= s[0].0 {
            return s[0].1;
        }
        if x >= s[s.len() - 1].0 {
            return s[s.len() - 1].1;
        }
        let i = s.partition_point(|&(sx, _)| sx <= x);
        let (x0, y0) = s[i - 1];
        let (x1, y1) = s[i];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Two-column export, one `x,phi` row per sample.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,phi\n");
        for &(x, phi) in &self.samples {
            out.push_str(&format!("{x},{phi}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("profile serializes")
    }
}

/// Result of inverting the implicit relation at one x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Inversion {
    pub phi: f64,
    /// True when |x| is so large that no representable phi strictly inside
    /// the well satisfies the relation; phi is then the nearer minimum.
    pub clamped: bool,
}

/// Solves F(phi) = mu x for phi at one x by bracketed root finding.
///
/// The bracket starts a relative distance 1e-13 inside each minimum and
/// expands toward whichever boundary hides the root; once the root is no
/// longer representable inside the well, the nearer minimum is returned
/// with the `clamped` flag set.
pub fn invert_implicit(case: &KinkCase, x: f64) -> Result<Inversion, Error> {
    let (lo, hi) = case.minima();
    let width = hi - lo;
    let target = case.mu() * x;
    let mut e_lo = 1e-13 * width;
    let mut e_hi = 1e-13 * width;

    for _ in 0..80 {
        let f_lo = case.relation_value(lo + e_lo) - target;
        let f_hi = case.relation_value(hi - e_hi) - target;
        if f_lo >= 0.0 {
            if f_lo == 0.0 {
                return Ok(Inversion {
                    phi: lo + e_lo,
                    clamped: false,
                });
            }
            let next = 0.5 * e_lo;
            if lo + next == lo || !(case.relation_value(lo + next)).is_finite() {
                return Ok(Inversion {
                    phi: lo,
                    clamped: true,
                });
            }
            e_lo = next;
            continue;
        }
        if f_hi <= 0.0 {
            if f_hi == 0.0 {
                return Ok(Inversion {
                    phi: hi - e_hi,
                    clamped: false,
                });
            }
            let next = 0.5 * e_hi;
            if hi - next == hi || !(case.relation_value(hi - next)).is_finite() {
                return Ok(Inversion {
                    phi: hi,
                    clamped: true,
                });
            }
            e_hi = next;
            continue;
        }
        let phi = crate::num::brent(
            |phi| case.relation_value(phi) - target,
            lo + e_lo,
            hi - e_hi,
            1e-15,
            200,
        )?;
        return Ok(Inversion {
            phi,
            clamped: false,
        });
    }
    // The bracket kept shrinking without becoming representable.
    Ok(Inversion {
        phi: if target < 0.0 { lo } else { hi },
        clamped: true,
    })
}

fn anchor_for(case: &KinkCase) -> Anchor {
    if case.symmetric() {
        Anchor::MidpointZero
    } else {
        Anchor::ImplicitX0
    }
}

/// Per-side x extents beyond which |phi - minimum| stays below `delta`,
/// derived from the catalogued tail asymptotics.
pub fn tail_extent(case: &KinkCase, delta: f64) -> (f64, f64) {
    let mu = case.mu();
    let side_extent = |side: Side| {
        let t = case.tail(side);
        match t.kind {
            TailKind::Exponential { rate } => (t.prefactor / delta).max(std::f64::consts::E).ln() / rate,
            TailKind::Algebraic { exponent } => {
                (t.prefactor / delta).max(1.0).powf(1.0 / exponent) / mu
            }
        }
    };
    (side_extent(Side::Lower), side_extent(Side::Upper))
}

/// Samples a catalogued kink by inverting its implicit relation on a
/// uniform x grid. Clamped points are dropped, as are tail points whose
/// phi is no longer distinguishable from its neighbour.
pub fn invert_profile(
    case: &KinkCase,
    x_lo: f64,
    x_hi: f64,
    n: usize,
) -> Result<KinkProfile, Error> {
    if n < 2 || !(x_lo < x_hi) {
        return Err(Error::InvalidParameter(format!(
            "invalid inversion grid [{x_lo}, {x_hi}] with {n} points"
        )));
    }
    let mut samples = Vec::with_capacity(n);
    let mut prev = f64::NEG_INFINITY;
    for i in 0..n {
        let x = x_lo + (x_hi - x_lo) * i as f64 / (n - 1) as f64;
        let inv = invert_implicit(case, x)?;
        if !inv.clamped && inv.phi > prev {
            samples.push((x, inv.phi));
            prev = inv.phi;
        }
    }
    KinkProfile::new(
        samples,
        case.minima(),
        anchor_for(case),
        Provenance::Inverted,
    )
}

/// Step-control knobs for the Bogomolny integration.
#[derive(Debug, Clone, Copy)]
pub struct BpsControls {
    pub rtol: f64,
    pub atol: f64,
    /// Cap on the accepted step size; infinity leaves steps purely adaptive.
    pub max_step: f64,
}

impl Default for BpsControls {
    fn default() -> Self {
        BpsControls {
            rtol: 1e-10,
            atol: 1e-12,
            max_step: f64::INFINITY,
        }
    }
}

/// Integrates dphi/dx = sqrt(2 V(phi)) from an interior start point outward
/// over `span`, stopping a relative distance 1e-12 short of either minimum.
///
/// The potential only enters through its values, so any `Potential` works;
/// `minima` names the pair of adjacent degenerate minima being connected.
pub fn integrate_bps<P: Potential>(
    potential: &P,
    minima: (f64, f64),
    start: (f64, f64),
    span: (f64, f64),
    controls: &BpsControls,
) -> Result<KinkProfile, Error> {
    let (lo, hi) = minima;
    let (x0, phi0) = start;
    if !(lo < phi0 && phi0 < hi) {
        return Err(Error::InvalidParameter(format!(
            "start phi {phi0} outside the well ({lo}, {hi})"
        )));
    }
    if !(span.0 <= x0 && x0 <= span.1) {
        return Err(Error::InvalidParameter(format!(
            "start x {x0} outside span [{}, {}]",
            span.0, span.1
        )));
    }
    if !(potential.value(phi0) > 0.0) {
        return Err(Error::NegativePotential);
    }
    // Noise floor for sign checks: expanded polynomial forms can round to
    // tiny negatives near their zeros.
    let mut vscale = 0.0f64;
    for k in 0..=64 {
        let phi = lo + (hi - lo) * k as f64 / 64.0;
        vscale = vscale.max(potential.value(phi).abs());
    }
    let rhs = move |_x: f64, phi: f64| -> Result<f64, Error> {
        let v = potential.value(phi);
        if v < -1e-12 * vscale {
            return Err(Error::NegativePotential);
        }
        Ok((2.0 * v.max(0.0)).sqrt())
    };
    let thr = 1e-12 * (hi - lo);
    let forward = integrate_adaptive(
        &rhs,
        x0,
        phi0,
        span.1,
        controls.rtol,
        controls.atol,
        controls.max_step,
        |_, phi| phi >= hi - thr,
    )?;
    let backward = integrate_adaptive(
        &rhs,
        x0,
        phi0,
        span.0,
        controls.rtol,
        controls.atol,
        controls.max_step,
        |_, phi| phi <= lo + thr,
    )?;

    let mut samples: Vec<(f64, f64)> = backward.iter().skip(1).rev().map(|p| (p.x, p.y)).collect();
    samples.extend(forward.iter().map(|p| (p.x, p.y)));
    samples.retain(|&(_, phi)| phi > lo && phi < hi);
    samples.dedup_by(|next, prev| next.0 <= prev.0 || next.1 <= prev.1);

    KinkProfile::new(samples, minima, Anchor::ImplicitX0, Provenance::Integrated)
}

/// Integrates a catalogued case outward from its anchor, spanning far enough
/// that both tails come within `delta` (relative to max(1, width)) of the
/// minima. Each side is stepped at most a 1/150 fraction of its own extent
/// so the tail windows stay densely sampled.
pub fn integrate_case(case: &KinkCase, delta: f64, controls: &BpsControls) -> Result<KinkProfile, Error> {
    let (lo, hi) = case.minima();
    let width = hi - lo;
    let phi0 = if case.symmetric() {
        0.5 * (lo + hi)
    } else {
        let inv = invert_implicit(case, 0.0)?;
        inv.phi
    };
    let (x_lo, x_hi) = tail_extent(case, delta * width.max(1.0));
    let side = |x_end: f64, extent: f64| {
        let c = BpsControls {
            max_step: controls.max_step.min(extent / 150.0),
            ..*controls
        };
        integrate_bps(case, (lo, hi), (0.0, phi0), (x_end.min(0.0), x_end.max(0.0)), &c)
    };
    let fwd = side(x_hi, x_hi)?;
    let bwd = side(-x_lo, x_lo)?;

    let mut samples: Vec<(f64, f64)> = bwd.samples().to_vec();
    samples.extend(fwd.samples().iter().skip(1).copied());
    samples.dedup_by(|next, prev| next.0 <= prev.0 || next.1 <= prev.1);
    KinkProfile::new(samples, (lo, hi), anchor_for(case), Provenance::Integrated)
}

/// Kink energy by endpoint-aware quadrature of sqrt(2 V) between two zeros
/// of the potential.
pub fn quadrature_energy<P: Potential>(
    potential: &P,
    phi_lo: f64,
    phi_hi: f64,
) -> Result<QuadResult, Error> {
    if phi_lo == phi_hi {
        return Ok(QuadResult {
            value: 0.0,
            abs_error: 0.0,
            evaluations: 0,
        });
    }
    if phi_lo > phi_hi {
        return Err(Error::InvalidParameter(format!(
            "inverted energy interval [{phi_lo}, {phi_hi}]"
        )));
    }
    let mut vscale = 0.0f64;
    for k in 0..=64 {
        let phi = phi_lo + (phi_hi - phi_lo) * k as f64 / 64.0;
        vscale = vscale.max(potential.value(phi).abs());
    }
    tanh_sinh(
        |phi| {
            let v = potential.value(phi);
            if v < -1e-12 * vscale {
                return Err(Error::NegativePotential);
            }
            Ok((2.0 * v.max(0.0)).sqrt())
        },
        phi_lo,
        phi_hi,
        1e-12,
    )
}

/// A fitted tail model for one side of a profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailFit {
    pub side: Side,
    /// Winning model. Exponential: |phi - endpoint| ~ prefactor e^(-rate |x|).
    /// Algebraic: |phi - endpoint| ~ prefactor |x|^(-exponent), in the
    /// profile's own x units.
    pub kind: TailKind,
    pub prefactor: f64,
    /// Coefficient of determination of the winning regression.
    pub r2: f64,
    /// Number of samples inside the fit window.
    pub samples: usize,
}

impl TailFit {
    /// Rescales an algebraic prefactor to the |mu x| convention used by the
    /// catalogued asymptotics; exponential prefactors are unaffected.
    pub fn prefactor_in_mu_units(&self, mu: f64) -> f64 {
        match self.kind {
            TailKind::Exponential { .. } => self.prefactor,
            TailKind::Algebraic { exponent } => self.prefactor * mu.powf(exponent),
        }
    }
}

/// Classifies one tail of a profile by regression over the window
/// |x| in [0.6 X, 0.9 X], where X is the profile's extent on that side.
///
/// A log-linear fit (exponential model) competes against a log-log fit
/// (algebraic model); the higher R-squared wins. Needs at least 20 samples
/// with phi still distinguishable from the endpoint.
pub fn fit_tail(profile: &KinkProfile, side: Side) -> Result<TailFit, Error> {
    let (lo, hi) = profile.minima();
    let (x_min, x_max) = profile.x_range();
    let (endpoint, extent) = match side {
        Side::Lower => (lo, -x_min),
        Side::Upper => (hi, x_max),
    };
    if !(extent > 0.0) {
        return Err(Error::InsufficientTail);
    }
    let (w_lo, w_hi) = (0.6 * extent, 0.9 * extent);
    let mut xs = Vec::new();
    let mut logs = Vec::new();
    let mut logx = Vec::new();
    for &(x, phi) in profile.samples() {
        let d = match side {
            Side::Lower => -x,
            Side::Upper => x,
        };
        let delta = (phi - endpoint).abs();
        if d >= w_lo && d <= w_hi && delta > 0.0 {
            xs.push(d);
            logs.push(delta.ln());
            logx.push(d.ln());
        }
    }
    if xs.len() < 20 {
        return Err(Error::InsufficientTail);
    }
    let exp_fit = linear_fit(&xs, &logs);
    let alg_fit = linear_fit(&logx, &logs);
    let fit = if exp_fit.r2 >= alg_fit.r2 {
        TailFit {
            side,
            kind: TailKind::Exponential {
                rate: -exp_fit.slope,
            },
            prefactor: exp_fit.intercept.exp(),
            r2: exp_fit.r2,
            samples: xs.len(),
        }
    } else {
        TailFit {
            side,
            kind: TailKind::Algebraic {
                exponent: -alg_fit.slope,
            },
            prefactor: alg_fit.intercept.exp(),
            r2: alg_fit.r2,
            samples: xs.len(),
        }
    };
    Ok(fit)
}

/// A kink moving at constant velocity, represented as a resampling rule
/// over an underlying static profile.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoostedProfile {
    pub base: KinkProfile,
    pub velocity: f64,
    pub x0: f64,
}

impl BoostedProfile {
    /// The boosted field at laboratory position x, time 0.
    pub fn phi_at(&self, x: f64) -> f64 {
        let gamma = 1.0 / (1.0 - self.velocity * self.velocity).sqrt();
        self.base.phi_at((x - self.x0) * gamma)
    }

    /// Resamples the boosted field on the base profile's x grid.
    pub fn samples(&self) -> Vec<(f64, f64)> {
        self.base
            .samples()
            .iter()
            .map(|&(x, _)| (x, self.phi_at(x)))
            .collect()
    }
}

/// Boosts a static profile to velocity `v`, centred at `x0`.
pub fn boost(profile: &KinkProfile, v: f64, x0: f64) -> Result<BoostedProfile, Error> {
    if !(v.abs() < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "boost velocity must satisfy |v| < 1, got {v}"
        )));
    }
    Ok(BoostedProfile {
        base: profile.clone(),
        velocity: v,
        x0,
    })
}

/// The mirrored kink: both coordinates negated, preserving orientation of
/// the sample order.
pub fn antikink(profile: &KinkProfile) -> KinkProfile {
    let (lo, hi) = profile.minima();
    let samples = profile
        .samples()
        .iter()
        .rev()
        .map(|&(x, phi)| (-x, -phi))
        .collect();
    KinkProfile {
        samples,
        minima: (-hi, -lo),
        anchor: profile.anchor(),
        provenance: profile.provenance(),
    }
}
