//! Computational complex dynamics for a family of (2:2) holomorphic
//! correspondences and the parabolic quadratic family P_A(z) = z + 1/z + A:
//! escape-time loci, limit sets, cycles and multipliers, numerical Fatou
//! and Milnor coordinates, and an exact big-integer certificate of the
//! resultant identities underlying the lune geometry.
//!
//! The closed-formula layers (`corr`, `lune`) are generic over the scalar
//! type via `num_traits::Float`; the iteration engines and solvers are
//! `f64`-concrete. The aliases below fix the default scalar.

pub mod corr;
pub mod cycles;
pub mod error;
pub mod exact;
pub mod fatou;
pub mod lune;
pub mod minkowski;
pub mod render;

pub use error::{Error, Result};

/// Default complex scalar.
pub type C64 = num_complex::Complex<f64>;
/// Parameter record over the default scalar.
pub type Param = corr::ParamA<f64>;
/// Lune configuration over the default scalar.
pub type Lunes = lune::LuneConfig<f64>;

pub use minkowski::{minkowski_q, minkowski_q_rational};
