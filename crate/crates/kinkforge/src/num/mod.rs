//! Shared numerical kernels: bracketed root finding, endpoint-tolerant
//! quadrature, adaptive and fixed-step ODE integration, and least-squares
//! line fits for tail diagnostics.

pub mod brent;
pub mod fit;
pub mod ode;
pub mod quad;

pub use brent::brent;
pub use fit::{linear_fit, LineFit};
pub use ode::{integrate_adaptive, rk4_fixed, OdePoint};
pub use quad::{tanh_sinh, QuadResult};
