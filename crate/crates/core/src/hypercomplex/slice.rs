use super::{Hypercomplex, Quaternion};
use crate::{Error, Result};

/// Tolerance on `Re I = 0` and `|I| = 1`.
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// An element of the sphere 𝕊 of imaginary units: purely imaginary, unit
/// modulus, hence squaring to -1. For ℝₙ these are unit 1-vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct ImaginaryUnit<S = Quaternion>(S);

impl<S: Hypercomplex> ImaginaryUnit<S> {
    pub fn new(unit: S) -> Result<Self> {
        if !unit.is_slice_variable() {
            return Err(Error::domain("imaginary unit must be a 1-vector"));
        }
        if unit.real_part().abs() > UNIT_TOLERANCE {
            return Err(Error::domain("imaginary unit must have zero real part"));
        }
        if (unit.norm() - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::domain(format!("imaginary unit must have modulus 1, got {}", unit.norm())));
        }
        Ok(ImaginaryUnit(unit))
    }

    /// Normalizes the vector part of `direction`.
    pub fn from_direction(direction: &S) -> Result<Self> {
        if !direction.is_slice_variable() {
            return Err(Error::domain("direction must be a slice variable"));
        }
        let v = direction.vector_part();
        let len = v.norm();
        if len == 0.0 {
            return Err(Error::domain("direction has no imaginary part"));
        }
        Ok(ImaginaryUnit(v.scaled(1.0 / len)))
    }

    /// `i` for ℍ, `e₁` for ℝₙ, in the algebra of `like`.
    pub fn default_for(like: &S) -> Self {
        ImaginaryUnit(like.default_unit())
    }

    pub fn as_scalar(&self) -> &S {
        &self.0
    }

    pub fn into_scalar(self) -> S {
        self.0
    }

    /// `x + I y` in the slice plane ℂ_I.
    pub fn point(&self, x: f64, y: f64) -> S {
        self.0.scaled(y).plus(&self.0.real_like(x))
    }
}

impl ImaginaryUnit<Quaternion> {
    pub fn i() -> Self {
        ImaginaryUnit(Quaternion::I)
    }

    pub fn j() -> Self {
        ImaginaryUnit(Quaternion::J)
    }

    pub fn k() -> Self {
        ImaginaryUnit(Quaternion::K)
    }
}

/// Slice coordinates `(x, y, I)` of a point `q = x + I y`, `y ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SlicePoint<S = Quaternion> {
    pub x: f64,
    pub y: f64,
    pub axis: ImaginaryUnit<S>,
    /// Set for real points, which lie on every slice; `axis` is then the
    /// caller's default.
    pub axis_arbitrary: bool,
}

impl<S: Hypercomplex> SlicePoint<S> {
    pub fn reconstruct(&self) -> S {
        self.axis.point(self.x, self.y)
    }
}

/// Splits `q` into `Re q + I |Im q|`.
///
/// Real points get `y = 0` and `default_axis`, flagged as arbitrary. Fails
/// only for Clifford elements that are not paravectors.
pub fn slice_decompose<S: Hypercomplex>(q: &S, default_axis: &ImaginaryUnit<S>) -> Result<SlicePoint<S>> {
    if !q.is_slice_variable() {
        return Err(Error::domain("only quaternions and paravectors have slice coordinates"));
    }
    q.check_kind(default_axis.as_scalar())?;
    let v = q.vector_part();
    let y = v.norm();
    if y == 0.0 {
        return Ok(SlicePoint { x: q.real_part(), y: 0.0, axis: default_axis.clone(), axis_arbitrary: true });
    }
    Ok(SlicePoint { x: q.real_part(), y, axis: ImaginaryUnit(v.scaled(1.0 / y)), axis_arbitrary: false })
}
