//! Higher-order scalar field theories in one spatial dimension: polynomial
//! potentials with controlled vacuum structure, the static kinks that
//! interpolate between neighbouring vacua, small oscillations about the
//! vacua, quasi-exactly-solvable sectors of the tenth-degree family, and
//! the trigonometric limits reached as the polynomial degree grows.

pub mod roots;

pub mod poly;

pub mod factored;

pub mod alpha;

pub mod critical;

pub mod num;

pub mod catalog;
pub mod profile;

pub use alpha::{AlphaForm, Family};
pub use catalog::{
    case_by_id, closed_form_energy, energy_crossover, implicit_residual, list_cases, tail,
    KinkCase, Params, RelationForm, Side, TailAsymptote, TailKind,
};
pub use profile::{
    antikink, boost, fit_tail, integrate_bps, integrate_case, invert_implicit, invert_profile,
    quadrature_energy, tail_extent, Anchor, BoostedProfile, BpsControls, Inversion, KinkProfile,
    Provenance, TailFit,
};
pub use critical::{classify_critical_points, scan_phase, CriticalKind, CriticalPoint, CriticalPointSet};
pub use factored::{expand_factored, Factor, FactorSign, FactoredPotential};
pub use poly::{PolynomialPotential, Potential};
pub use roots::RootError;

use thiserror::Error;

/// Unified error type; the CLI maps `InvalidParameter`-class errors to
/// exit code 2 and tolerance failures to exit code 1.
#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("invalid potential: {0}")]
    InvalidPotential(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("expansion target is not a polynomial: {0}")]
    NonPolynomial(String),
    #[error("real-root isolation failed to converge")]
    RootFindingFailure,
    #[error("field value outside the open interval between the connected minima")]
    DomainError,
    #[error("case constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("no sign change of the energy difference on the bracket")]
    NoSignChange,
    #[error("potential became negative during integration (non-admissible)")]
    NegativePotential,
    #[error("step size underflowed during integration")]
    StiffnessAbort,
    #[error("too few samples in the tail window")]
    InsufficientTail,
    #[error("not an equilibrium: |V'| exceeds tolerance")]
    NotEquilibrium,
    #[error("coefficient system has no real solution")]
    NoRealSolution,
    #[error("a sibling state with the same coefficient map has lower energy")]
    NotGroundState,
}

impl From<RootError> for Error {
    fn from(_: RootError) -> Self {
        Error::RootFindingFailure
    }
}
