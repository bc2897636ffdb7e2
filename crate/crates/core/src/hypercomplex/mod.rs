//! Quaternions, real Clifford algebras and slice coordinates.
//!
//! Everything downstream works through the [`Hypercomplex`] trait so that a
//! single implementation of series evaluation, ⋆-products and inner products
//! serves both ℍ and ℝₙ.

mod clifford;
mod quaternion;
mod slice;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use clifford::{blade_sign, cl_mul, cl_paravector_norm, Multivector, Paravector, MAX_GENERATORS};
pub use quaternion::{qmul, Quaternion};
pub use slice::{slice_decompose, ImaginaryUnit, SlicePoint, UNIT_TOLERANCE};

/// Which algebra a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarKind {
    Quaternion,
    /// ℝₙ with the given number of generators.
    Clifford(usize),
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarKind::Quaternion => f.write_str("quaternion"),
            ScalarKind::Clifford(n) => write!(f, "clifford:{n}"),
        }
    }
}

impl FromStr for ScalarKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "quaternion" {
            return Ok(ScalarKind::Quaternion);
        }
        let n = s
            .strip_prefix("clifford:")
            .and_then(|n| n.parse::<usize>().ok())
            .ok_or_else(|| crate::Error::Parse(format!("unknown scalar kind `{s}`")))?;
        if n == 0 || n > MAX_GENERATORS {
            return Err(crate::Error::Parse(format!(
                "clifford generator count must be in 1..={MAX_GENERATORS}, got {n}"
            )));
        }
        Ok(ScalarKind::Clifford(n))
    }
}

/// A real associative algebra with conjugation and a Euclidean norm.
///
/// Methods take `&self` for constants (`zero_like`, `real_like`) because a
/// multivector's generator count is a runtime property. Binary operations
/// assume both operands have the same [`ScalarKind`]; callers validate that
/// once at construction time (see [`crate::SliceSeries::new`]).
pub trait Hypercomplex: Clone + fmt::Debug + PartialEq + Send + Sync {
    fn kind(&self) -> ScalarKind;
    fn real_like(&self, r: f64) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, s: f64) -> Self;
    /// Quaternion conjugate, or Clifford conjugation on ℝₙ. Both are
    /// anti-automorphisms.
    fn conj(&self) -> Self;
    /// Sum of squared components.
    fn norm_sqr(&self) -> f64;
    fn real_part(&self) -> f64;
    /// True for points a slice function may be evaluated at: any quaternion,
    /// or a paravector in ℝₙ.
    fn is_slice_variable(&self) -> bool;
    /// The part of a slice variable orthogonal to the reals.
    fn vector_part(&self) -> Self;
    /// `i` for ℍ, `e₁` for ℝₙ.
    fn default_unit(&self) -> Self;

    fn zero_like(&self) -> Self {
        self.real_like(0.0)
    }

    fn one_like(&self) -> Self {
        self.real_like(1.0)
    }

    fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    fn distance(&self, other: &Self) -> f64 {
        self.minus(other).norm()
    }

    fn neg(&self) -> Self {
        self.scaled(-1.0)
    }

    fn is_zero(&self) -> bool {
        self.norm_sqr() == 0.0
    }

    fn check_kind(&self, other: &Self) -> crate::Result<()> {
        if self.kind() == other.kind() {
            Ok(())
        } else {
            Err(crate::Error::KindMismatch { expected: self.kind(), found: other.kind() })
        }
    }
}
