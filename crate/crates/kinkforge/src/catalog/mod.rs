//! Registry of the closed-form implicit kinks: thirty-eight cases across the
//! eighth-, tenth-, and twelfth-degree families, each carrying its potential,
//! connected minima, rate constant, implicit relation, closed-form energy,
//! and both tail asymptotics.

mod phi10;
mod phi12;
mod phi8;

use crate::alpha::Family;
use crate::poly::Potential;
use crate::Error;
use serde::{Deserialize, Serialize};

pub(crate) const R2: f64 = std::f64::consts::SQRT_2;

/// Named parameters of a case. Fields not used by a case stay at 1 and are
/// ignored by its formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub lambda: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            lambda: 1.0,
            a: 1.0,
            b: 1.0,
            c: 1.0,
        }
    }
}

impl Params {
    pub fn new(lambda: f64, a: f64, b: f64, c: f64) -> Self {
        Params { lambda, a, b, c }
    }
}

/// Which minimum a tail approaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// x -> -inf, phi -> lower minimum.
    Lower,
    /// x -> +inf, phi -> upper minimum.
    Upper,
}

/// Leading behaviour of |phi - endpoint| far from the core.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum TailKind {
    /// |phi - endpoint| ~ prefactor * exp(-rate * |x|).
    Exponential { rate: f64 },
    /// |phi - endpoint| ~ prefactor / |mu x|^exponent.
    Algebraic { exponent: f64 },
}

/// One side's asymptotic description.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailAsymptote {
    pub side: Side,
    pub kind: TailKind,
    pub prefactor: f64,
    /// The minimum being approached on this side.
    pub approach_value: f64,
    /// True where the source display is internally inconsistent; only kind
    /// and rate are guaranteed for such tails.
    pub prefactor_suspect: bool,
}

/// How the implicit solution was originally displayed. Both forms are
/// evaluated as log-residuals F(phi) - mu*x to avoid overflow at large |x|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationForm {
    /// F is a transcendental combination printed directly as F(phi) = mu x.
    LogForm,
    /// The display exponentiates to e^{mu x} = G(phi) with algebraic G.
    ExpForm,
}

pub(crate) enum TailKindDef {
    Exp,
    Alg,
}

pub(crate) struct TailDef {
    pub kind: TailKindDef,
    /// Exponential rate or algebraic exponent, as a function of parameters.
    pub scale: fn(&Params) -> f64,
    pub prefactor: fn(&Params) -> f64,
    pub suspect: bool,
}

pub(crate) struct Window {
    pub description: &'static str,
    pub holds: fn(&Params) -> bool,
}

pub(crate) struct CaseDef {
    pub id: &'static str,
    pub family: Family,
    pub relation: RelationForm,
    pub uses_b: bool,
    pub uses_c: bool,
    pub defaults: fn() -> Params,
    /// Hard validity constraints (ordering, positivity of inner factors).
    pub structural: Option<fn(&Params) -> Option<String>>,
    /// Phase-structure window within which the case's potential actually has
    /// the advertised number of degenerate minima. Queryable, not enforced:
    /// the canonical parameter sets sit outside several windows.
    pub window: Option<Window>,
    pub v: fn(f64, &Params) -> f64,
    pub lo: fn(&Params) -> f64,
    pub hi: fn(&Params) -> f64,
    pub relation_value: fn(f64, &Params) -> f64,
    pub mu: fn(&Params) -> f64,
    pub energy: fn(&Params) -> f64,
    pub tails: [TailDef; 2],
    pub symmetric: bool,
}

fn registry() -> &'static [&'static CaseDef] {
    static REG: std::sync::OnceLock<Vec<&'static CaseDef>> = std::sync::OnceLock::new();
    REG.get_or_init(|| {
        let mut all: Vec<&'static CaseDef> = Vec::new();
        all.extend(phi8::CASES.iter());
        all.extend(phi10::CASES.iter());
        all.extend(phi12::CASES.iter());
        all
    })
}

/// One catalogued kink: a case definition bound to a validated parameter set.
#[derive(Clone, Copy)]
pub struct KinkCase {
    def: &'static CaseDef,
    params: Params,
}

impl std::fmt::Debug for KinkCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KinkCase")
            .field("id", &self.def.id)
            .field("params", &self.params)
            .finish()
    }
}

impl KinkCase {
    pub fn id(&self) -> &'static str {
        self.def.id
    }

    pub fn family(&self) -> Family {
        self.def.family
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn relation_form(&self) -> RelationForm {
        self.def.relation
    }

    /// Connected minima (phi at x -> -inf, phi at x -> +inf).
    pub fn minima(&self) -> (f64, f64) {
        ((self.def.lo)(&self.params), (self.def.hi)(&self.params))
    }

    /// Rate constant of the implicit relation F(phi) = mu x.
    pub fn mu(&self) -> f64 {
        (self.def.mu)(&self.params)
    }

    /// Left-hand side F(phi) of the implicit relation.
    pub fn relation_value(&self, phi: f64) -> f64 {
        (self.def.relation_value)(phi, &self.params)
    }

    /// True when both tails share rate/exponent and prefactor magnitude.
    pub fn symmetric(&self) -> bool {
        self.def.symmetric
    }

    /// Phase-window predicate, if the case has one: description and whether
    /// the bound parameters satisfy it.
    pub fn window(&self) -> Option<(&'static str, bool)> {
        self.def
            .window
            .as_ref()
            .map(|w| (w.description, (w.holds)(&self.params)))
    }

    /// Rebinds the same case to different parameters, revalidating.
    pub fn with_params(&self, params: Params) -> Result<KinkCase, Error> {
        instantiate(self.def, params)
    }

    pub fn tail(&self, side: Side) -> TailAsymptote {
        let def = match side {
            Side::Lower => &self.def.tails[0],
            Side::Upper => &self.def.tails[1],
        };
        let (lo, hi) = self.minima();
        TailAsymptote {
            side,
            kind: match def.kind {
                TailKindDef::Exp => TailKind::Exponential {
                    rate: (def.scale)(&self.params),
                },
                TailKindDef::Alg => TailKind::Algebraic {
                    exponent: (def.scale)(&self.params),
                },
            },
            prefactor: (def.prefactor)(&self.params),
            approach_value: match side {
                Side::Lower => lo,
                Side::Upper => hi,
            },
            prefactor_suspect: def.suspect,
        }
    }

    pub fn tails(&self) -> [TailAsymptote; 2] {
        [self.tail(Side::Lower), self.tail(Side::Upper)]
    }

    /// Machine-readable descriptor of the case and its bound parameters.
    pub fn descriptor(&self) -> serde_json::Value {
        let (lo, hi) = self.minima();
        serde_json::json!({
            "id": self.def.id,
            "family": self.def.family.to_string(),
            "params": {
                "lambda": self.params.lambda,
                "a": self.params.a,
                "b": self.def.uses_b.then_some(self.params.b),
                "c": self.def.uses_c.then_some(self.params.c),
            },
            "minima": [lo, hi],
            "mu": self.mu(),
            "energy": closed_form_energy(self),
            "relation": match self.def.relation {
                RelationForm::LogForm => "log_form",
                RelationForm::ExpForm => "exp_form",
            },
            "window": self.window().map(|(d, ok)| serde_json::json!({
                "constraint": d,
                "satisfied": ok,
            })),
            "symmetric": self.def.symmetric,
            "tails": self.tails(),
        })
    }
}

impl Potential for KinkCase {
    fn value(&self, phi: f64) -> f64 {
        (self.def.v)(phi, &self.params)
    }
}

fn instantiate(def: &'static CaseDef, params: Params) -> Result<KinkCase, Error> {
    if !(params.lambda > 0.0) || !params.lambda.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "{}: lambda must be positive, got {}",
            def.id, params.lambda
        )));
    }
    let mut used = vec![("a", params.a)];
    if def.uses_b {
        used.push(("b", params.b));
    }
    if def.uses_c {
        used.push(("c", params.c));
    }
    for (name, value) in used {
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "{}: parameter {} must be positive, got {}",
                def.id, name, value
            )));
        }
    }
    if let Some(check) = def.structural {
        if let Some(msg) = check(&params) {
            return Err(Error::ConstraintViolation(format!("{}: {}", def.id, msg)));
        }
    }
    Ok(KinkCase { def, params })
}

/// All catalogued cases bound to their canonical parameter sets.
pub fn list_cases() -> Vec<KinkCase> {
    registry()
        .iter()
        .map(|def| instantiate(def, (def.defaults)()).expect("canonical parameters are valid"))
        .collect()
}

/// Looks up one case by id, bound to its canonical parameters.
pub fn case_by_id(id: &str) -> Result<KinkCase, Error> {
    registry()
        .iter()
        .find(|def| def.id == id)
        .map(|def| instantiate(def, (def.defaults)()).expect("canonical parameters are valid"))
        .ok_or_else(|| Error::InvalidParameter(format!("unknown case id: {id}")))
}

/// Residual of the implicit relation, F(phi) - mu x.
///
/// Zero exactly when (x, phi) lies on the kink. phi must be strictly inside
/// the open interval between the connected minima.
pub fn implicit_residual(case: &KinkCase, phi: f64, x: f64) -> Result<f64, Error> {
    let (lo, hi) = case.minima();
    if !(phi > lo && phi < hi) {
        return Err(Error::DomainError);
    }
    Ok(case.relation_value(phi) - case.mu() * x)
}

/// The case's closed-form kink energy at its bound parameters.
pub fn closed_form_energy(case: &KinkCase) -> f64 {
    (case.def.energy)(&case.params)
}

/// Tail asymptote for one side.
pub fn tail(case: &KinkCase, side: Side) -> TailAsymptote {
    case.tail(side)
}

/// Finds the ratio r = b/a at which two sibling kinks of the same family
/// have equal energy, by bisecting the energy difference over `bracket`.
///
/// Both cases must be bound to identical parameters; a and lambda (and c,
/// where used) are held fixed while b sweeps through r * a.
pub fn energy_crossover(
    case_a: &KinkCase,
    case_b: &KinkCase,
    bracket: (f64, f64),
) -> Result<f64, Error> {
    if case_a.params != case_b.params {
        return Err(Error::InvalidParameter(
            "crossover requires both cases bound to the same parameters".into(),
        ));
    }
    let base = case_a.params;
    let diff = |r: f64| -> Result<f64, Error> {
        let p = Params {
            b: r * base.a,
            ..base
        };
        let ca = case_a.with_params(p)?;
        let cb = case_b.with_params(p)?;
        Ok(closed_form_energy(&ca) - closed_form_energy(&cb))
    };
    let fa = diff(bracket.0)?;
    let fb = diff(bracket.1)?;
    if fa == 0.0 {
        return Ok(bracket.0);
    }
    if fb == 0.0 {
        return Ok(bracket.1);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange);
    }
    // Plain bisection: the difference is smooth and the target is a simple
    // zero, so the relative-width stop is reached long before the iteration cap.
    let (mut lo, mut hi) = bracket;
    let mut flo = fa;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-10 * (1.0 + mid.abs()) {
            return Ok(mid);
        }
        let fm = diff(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
