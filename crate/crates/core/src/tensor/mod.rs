//! The quaternionic full Fock module `⊕ₙ ℋ^⊗n` and its symmetric part.
//!
//! `ℋ` is a two-sided quaternionic Hilbert space with a real orthonormal
//! basis `e_a`; vectors are `Σ e_a u_a` with quaternion coordinates and both
//! scalar actions act on the coordinates. Because real scalars commute
//! through tensor slots, `u₁⊗⋯⊗uₙ = Σ e_{a₁}⊗⋯⊗e_{aₙ} (u₁,a₁ ⋯ uₙ,aₙ)`, so
//! elements of the module are stored as maps from basis words to right
//! quaternion coefficients.

mod brownian;
mod fockvec;
mod hspace;
mod permanent;
mod symmetric;

pub use brownian::{brownian_cov, brownian_expectation};
pub use fockvec::{adjoint_residual, annihilate, create, expectation, nested_inner, FockVector, Op, TensorWord};
pub use hspace::{HVector, StepBasis, StepFunction};
pub use permanent::{permanent, MAX_PERMANENT_SIZE};
pub use symmetric::{
    permutations, sym_double_sum_enumerated, sym_inner, sym_inner_induced, symmetrize, DEFAULT_FACTORIAL_CAP,
};
