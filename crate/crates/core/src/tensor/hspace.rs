use std::ops::{Add, Sub};

use crate::hypercomplex::Quaternion;
use crate::{Error, Result};

/// A vector `Σ e_a u_a` of a `d`-dimensional quaternionic Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct HVector(Vec<Quaternion>);

impl HVector {
    pub fn new(coords: Vec<Quaternion>) -> Self {
        HVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        HVector(vec![Quaternion::ZERO; dim])
    }

    /// Basis vector `e_a`, 0-based.
    pub fn basis(dim: usize, a: usize) -> Self {
        let mut v = HVector::zero(dim);
        v.0[a] = Quaternion::ONE;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Quaternion] {
        &self.0
    }

    /// `⟨u, v⟩ = Σ_a conj(v_a) u_a`; right-linear in `u`.
    pub fn inner(&self, other: &HVector) -> Result<Quaternion> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.0.iter().zip(&other.0).map(|(u, v)| v.conj() * *u).sum())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(Quaternion::norm_sqr).sum()
    }

    /// `u α`.
    pub fn right_mul(&self, alpha: Quaternion) -> HVector {
        HVector(self.0.iter().map(|u| *u * alpha).collect())
    }

    /// `λ u`.
    pub fn left_mul(&self, lambda: Quaternion) -> HVector {
        HVector(self.0.iter().map(|u| lambda * *u).collect())
    }

    /// All coordinates real.
    pub fn is_real(&self) -> bool {
        self.0.iter().all(Quaternion::is_real)
    }
}

impl Add for &HVector {
    type Output = HVector;

    fn add(self, rhs: &HVector) -> HVector {
        assert_eq!(self.dim(), rhs.dim());
        HVector(self.0.iter().zip(&rhs.0).map(|(a, b)| *a + *b).collect())
    }
}

impl Sub for &HVector {
    type Output = HVector;

    fn sub(self, rhs: &HVector) -> HVector {
        assert_eq!(self.dim(), rhs.dim());
        HVector(self.0.iter().zip(&rhs.0).map(|(a, b)| *a - *b).collect())
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}

/// A quaternion-valued step function on `[0, ∞)`, an element of
/// `L²(ℝ⁺, dx)`: value `values[i]` on `[t_i, t_{i+1})`, zero past the last
/// breakpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction {
    breakpoints: Vec<f64>,
    values: Vec<Quaternion>,
}

impl StepFunction {
    /// `breakpoints` must start at 0 and increase strictly, with one value
    /// per interval.
    pub fn new(breakpoints: Vec<f64>, values: Vec<Quaternion>) -> Result<Self> {
        if breakpoints.first() != Some(&0.0) {
            return Err(Error::domain("step function breakpoints must start at 0"));
        }
        if breakpoints.windows(2).any(|w| !(w[1] > w[0]) || !w[1].is_finite()) {
            return Err(Error::domain("step function breakpoints must be finite and strictly increasing"));
        }
        if values.len() + 1 != breakpoints.len() {
            return Err(Error::Dimension { expected: breakpoints.len() - 1, found: values.len() });
        }
        Ok(StepFunction { breakpoints, values })
    }

    /// `1_[0,t]`; `t = 0` gives the zero function.
    pub fn indicator(t: f64) -> Result<Self> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::domain(format!("indicator length must be finite and non-negative, got {t}")));
        }
        if t == 0.0 {
            return StepFunction::new(vec![0.0], vec![]);
        }
        StepFunction::new(vec![0.0, t], vec![Quaternion::ONE])
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn value_at(&self, x: f64) -> Quaternion {
        match self.breakpoints.iter().rposition(|&b| b <= x) {
            Some(i) if i < self.values.len() => self.values[i],
            _ => Quaternion::ZERO,
        }
    }

    /// `∫ conj(g) f dx`.
    pub fn inner(&self, other: &StepFunction) -> Quaternion {
        let basis = StepBasis::refining(&[self, other]);
        basis
            .intervals()
            .map(|(a, b)| {
                let mid = 0.5 * (a + b);
                other.value_at(mid).conj() * self.value_at(mid) * (b - a)
            })
            .sum()
    }
}

/// The normalized indicators `1_[a,b) / √(b-a)` of a common refinement of
/// several step functions; an orthonormal set in `L²(ℝ⁺)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepBasis {
    breakpoints: Vec<f64>,
}

impl StepBasis {
    pub fn refining(functions: &[&StepFunction]) -> Self {
        let mut breakpoints: Vec<f64> = functions.iter().flat_map(|f| f.breakpoints.iter().copied()).collect();
        breakpoints.sort_by(f64::total_cmp);
        breakpoints.dedup();
        StepBasis { breakpoints }
    }

    pub fn dim(&self) -> usize {
        self.breakpoints.len() - 1
    }

    pub fn intervals(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.breakpoints.windows(2).map(|w| (w[0], w[1]))
    }

    /// Coordinates of `f` in this basis. `f` must be constant on each
    /// interval, which holds when `f` was among the refined functions.
    pub fn coordinates(&self, f: &StepFunction) -> HVector {
        HVector(
            self.intervals()
                .map(|(a, b)| f.value_at(0.5 * (a + b)) * (b - a).sqrt())
                .collect(),
        )
    }
}
