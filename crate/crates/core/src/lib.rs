//! Numerics for weighted polyanalytic Bergman spaces on the unit disc.
//!
//! The crate is organised bottom-up:
//!
//! * [`special_fn`] holds Pochhammer symbols, the Gauss hypergeometric series,
//!   Jacobi polynomials and Gauss–Jacobi quadrature.
//! * [`disc_poly`] evaluates the disc polynomials `R^γ_{m,n}(z, z̄)` in three
//!   independent representations, together with their norms, the `∂_z̄`
//!   lowering identity and the `γ = 0` reductions (Koshelev basis, Zernike
//!   radial polynomials).
//! * [`kernels`] evaluates the weighted Bergman kernel and the reproducing
//!   kernels of the true poly-Bergman spaces, both as a truncated basis series
//!   and in closed hypergeometric form.
//! * [`spaces`] integrates against `(1-|z|²)^γ dx dy`, expands functions in the
//!   disc-polynomial basis and projects onto (true) poly-Bergman spaces.
//! * [`ledger`] collects the formula corrections that were established by
//!   numerical oracles, with the evidence recomputed on demand.

pub mod disc_poly;
pub mod error;
pub mod kernels;
pub mod ledger;
pub mod spaces;
pub mod special_fn;

pub use disc_poly::{DiscPoint, Orders, Representation, WeightParam};
pub use error::{Error, Result};
pub use kernels::{KernelKind, KernelSpec, KernelValue};
pub use num_complex::Complex64;
pub use spaces::{CoeffTable, QuadRule, SampledFunction};
