//! Slice-hyperholomorphic Fock spaces over the quaternions and over real
//! Clifford algebras.
//!
//! The crate models the same Hilbert module three ways and lets them be
//! checked against each other:
//!
//! * geometrically, as entire slice-regular functions square-integrable
//!   against `e^{-|p|^2}` on one slice plane ([`quad`]);
//! * analytically, as power series `Σ pⁿ aₙ` with `Σ n! |aₙ|² < ∞` ([`fock`]);
//! * tensorially, as the symmetric part of the full quaternionic Fock module
//!   over a Hilbert space ([`tensor`]).
//!
//! Scalars are either [`Quaternion`]s or [`Multivector`]s of a fixed
//! generator count; both implement [`Hypercomplex`] and every series-level
//! algorithm is generic over it.

pub mod error;
pub mod fock;
pub mod hypercomplex;
pub mod io;
pub mod quad;
pub mod sample;
pub mod slicefun;
pub mod tensor;

pub use error::{Error, Result};
pub use fock::{fock_inner, kernel, kernel_gram, membership, reproduce, FockElement, Tail, TailModel, Verdict};
pub use hypercomplex::{
    cl_mul, cl_paravector_norm, qmul, slice_decompose, Hypercomplex, ImaginaryUnit, Multivector, Paravector,
    Quaternion, ScalarKind, SlicePoint,
};
pub use quad::{build_grid, quad_inner, slice_independence_check, QuadratureGrid};
pub use slicefun::{representation_extend, star_exp, star_mul, SliceSeries, SliceValue};
