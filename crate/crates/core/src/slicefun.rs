//! Truncated slice-regular power series `f(p) = Σ_{m≤N} pᵐ aₘ` with
//! coefficients on the right.
//!
//! Evaluation always multiplies powers of the variable on the left of the
//! coefficient. Conjugate values are taken as `conj(f(p))`; conjugating the
//! coefficients would give `Σ āₘ p̄ᵐ`, which is not a left series.

use serde::Serialize;

use crate::hypercomplex::{slice_decompose, Hypercomplex, ImaginaryUnit, UNIT_TOLERANCE};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SliceSeries<S> {
    coeffs: Vec<S>,
}

/// A value tagged with the point it was computed at.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SliceValue<S> {
    pub point: S,
    pub value: S,
}

impl<S: Hypercomplex> SliceSeries<S> {
    /// Coefficients `a₀ … a_N`. At least one coefficient is required and all
    /// must share one scalar kind.
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        let first = coeffs.first().ok_or_else(|| Error::domain("a series needs at least one coefficient"))?;
        for c in &coeffs[1..] {
            first.check_kind(c)?;
        }
        Ok(SliceSeries { coeffs })
    }

    /// `pⁿ c`.
    pub fn monomial(n: usize, c: S) -> Self {
        let mut coeffs = vec![c.zero_like(); n + 1];
        coeffs[n] = c;
        SliceSeries { coeffs }
    }

    pub fn constant(c: S) -> Self {
        SliceSeries { coeffs: vec![c] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Option<&S> {
        self.coeffs.get(m)
    }

    pub fn kind(&self) -> crate::ScalarKind {
        self.coeffs[0].kind()
    }

    /// A zero of the same scalar kind.
    pub fn zero_scalar(&self) -> S {
        self.coeffs[0].zero_like()
    }

    /// Evaluates at `p`, which must be a quaternion or a paravector of the
    /// coefficients' algebra.
    pub fn eval(&self, p: &S) -> Result<S> {
        self.coeffs[0].check_kind(p)?;
        if !p.is_slice_variable() {
            return Err(Error::domain("series can only be evaluated at quaternions or paravectors"));
        }
        Ok(self.eval_unchecked(p))
    }

    /// Horner from the top: `a₀ + p(a₁ + p(a₂ + …))`.
    pub(crate) fn eval_unchecked(&self, p: &S) -> S {
        let mut acc = self.coeffs[self.degree()].clone();
        for c in self.coeffs[..self.degree()].iter().rev() {
            acc = p.times(&acc).plus(c);
        }
        acc
    }

    pub fn eval_tagged(&self, p: &S) -> Result<SliceValue<S>> {
        Ok(SliceValue { point: p.clone(), value: self.eval(p)? })
    }

    /// `f·α`: every coefficient multiplied by `α` on the right.
    pub fn right_mul(&self, alpha: &S) -> Self {
        SliceSeries { coeffs: self.coeffs.iter().map(|c| c.times(alpha)).collect() }
    }

    /// Coefficientwise sum, padded to the larger degree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.coeffs[0].check_kind(&other.coeffs[0])?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = self.zero_scalar();
        let coeffs = (0..len)
            .map(|m| {
                let a = self.coeffs.get(m).unwrap_or(&zero);
                let b = other.coeffs.get(m).unwrap_or(&zero);
                a.plus(b)
            })
            .collect();
        Ok(SliceSeries { coeffs })
    }

    /// Drops coefficients above degree `n`.
    pub fn truncated(&self, n: usize) -> Self {
        SliceSeries { coeffs: self.coeffs[..=n.min(self.degree())].to_vec() }
    }

    pub fn map_coeffs(&self, f: impl FnMut(&S) -> S) -> Self {
        SliceSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

/// The ⋆-product: `c_k = Σ_{n+m=k} aₙ bₘ`, truncated at degree `cap` when
/// given.
pub fn star_mul<S: Hypercomplex>(f: &SliceSeries<S>, g: &SliceSeries<S>, cap: Option<usize>) -> Result<SliceSeries<S>> {
    f.coeffs[0].check_kind(&g.coeffs[0])?;
    let full = f.degree() + g.degree();
    let top = cap.map_or(full, |c| c.min(full));
    let zero = f.zero_scalar();
    let coeffs = (0..=top)
        .map(|k| {
            let lo = k.saturating_sub(g.degree());
            let hi = k.min(f.degree());
            (lo..=hi).fold(zero.clone(), |acc, n| acc.plus(&f.coeffs[n].times(&g.coeffs[k - n])))
        })
        .collect();
    Ok(SliceSeries { coeffs })
}

/// Truncation of `e_⋆^{pq} = Σ pⁿ qⁿ / n!` at degree `n_max`.
pub fn star_exp<S: Hypercomplex>(q: &S, n_max: usize) -> SliceSeries<S> {
    let mut coeffs = Vec::with_capacity(n_max + 1);
    let mut term = q.one_like();
    coeffs.push(term.clone());
    for n in 1..=n_max {
        term = term.times(q).scaled(1.0 / n as f64);
        coeffs.push(term.clone());
    }
    SliceSeries { coeffs }
}

/// Representation Formula: extends a function known on the slice ℂ_J to
/// `target = x + I y`,
///
/// `f(x+Iy) = ½[f(x+Jy) + f(x−Jy)] + I·½[J(f(x−Jy) − f(x+Jy))]`.
///
/// Targets already on ℂ_J (including real ones) are passed to `f_J`
/// unchanged.
pub fn representation_extend<S, F>(f_on_slice: F, slice: &ImaginaryUnit<S>, target: &S) -> Result<S>
where
    S: Hypercomplex,
    F: Fn(&S) -> S,
{
    let sp = slice_decompose(target, slice)?;
    let j = slice.as_scalar();
    if sp.axis_arbitrary || sp.axis.as_scalar().minus(j).norm() <= UNIT_TOLERANCE || sp.axis.as_scalar().plus(j).norm() <= UNIT_TOLERANCE {
        return Ok(f_on_slice(target));
    }
    let plus = f_on_slice(&slice.point(sp.x, sp.y));
    let minus = f_on_slice(&slice.point(sp.x, -sp.y));
    let even = plus.plus(&minus).scaled(0.5);
    let odd = j.times(&minus.minus(&plus)).scaled(0.5);
    Ok(even.plus(&sp.axis.as_scalar().times(&odd)))
}

/// `|½(∂ₓ + I∂_y) f(x+Iy)|` by central differences; vanishes for left
/// slice-regular `f`.
pub fn left_cauchy_riemann_residual<S, F>(f: F, unit: &ImaginaryUnit<S>, x: f64, y: f64, h: f64) -> f64
where
    S: Hypercomplex,
    F: Fn(&S) -> S,
{
    let (dx, dy) = partials(&f, unit, x, y, h);
    dx.plus(&unit.as_scalar().times(&dy)).scaled(0.5).norm()
}

/// `|½(∂ₓ f + ∂_y f · I)|` by central differences; vanishes for right
/// slice-regular `f`.
pub fn right_cauchy_riemann_residual<S, F>(f: F, unit: &ImaginaryUnit<S>, x: f64, y: f64, h: f64) -> f64
where
    S: Hypercomplex,
    F: Fn(&S) -> S,
{
    let (dx, dy) = partials(&f, unit, x, y, h);
    dx.plus(&dy.times(unit.as_scalar())).scaled(0.5).norm()
}

fn partials<S, F>(f: &F, unit: &ImaginaryUnit<S>, x: f64, y: f64, h: f64) -> (S, S)
where
    S: Hypercomplex,
    F: Fn(&S) -> S,
{
    let scale = 0.5 / h;
    let dx = f(&unit.point(x + h, y)).minus(&f(&unit.point(x - h, y))).scaled(scale);
    let dy = f(&unit.point(x, y + h)).minus(&f(&unit.point(x, y - h))).scaled(scale);
    (dx, dy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomplex::{Multivector, Paravector, Quaternion};

    const I: Quaternion = Quaternion::I;
    const J: Quaternion = Quaternion::J;
    const K: Quaternion = Quaternion::K;

    fn q(c: [f64; 4]) -> Quaternion {
        Quaternion::from(c)
    }

    #[test]
    fn powers_sit_left_of_coefficients() {
        let f = SliceSeries::new(vec![Quaternion::ONE, J]).unwrap();
        assert_eq!(f.eval(&I).unwrap(), Quaternion::ONE + K);
    }

    #[test]
    fn cubic_at_a_real_point() {
        let f = SliceSeries::monomial(3, Quaternion::ONE);
        assert_eq!(f.eval(&Quaternion::real(2.0)).unwrap(), Quaternion::real(8.0));
    }

    #[test]
    fn truncated_kernel_matches_complex_exponential() {
        // k(p) = e_⋆^{p q̄}, q = 1 + i, at p = 1: e^{1 - i}
        let qb = q([1.0, 1.0, 0.0, 0.0]).conj();
        let f = star_exp(&qb, 30);
        let v = f.eval(&Quaternion::ONE).unwrap();
        let e = std::f64::consts::E;
        let expected = q([e * 1f64.cos(), -e * 1f64.sin(), 0.0, 0.0]);
        assert!(v.max_abs_diff(&expected) < 1e-10);
    }

    #[test]
    fn empty_series_rejected_and_kinds_checked() {
        assert!(SliceSeries::<Quaternion>::new(vec![]).is_err());
        let mixed = SliceSeries::new(vec![Multivector::scalar(2, 1.0), Multivector::scalar(3, 1.0)]);
        assert!(matches!(mixed, Err(Error::KindMismatch { .. })));
        let f = SliceSeries::constant(Multivector::scalar(3, 1.0));
        assert!(f.eval(&Multivector::scalar(2, 1.0)).is_err());
        assert!(matches!(f.eval(&Multivector::blade(3, 0b11)), Err(Error::Domain(_))));
    }

    #[test]
    fn star_product_of_linear_terms() {
        let f = SliceSeries::new(vec![Quaternion::ONE, I]).unwrap();
        let g = SliceSeries::new(vec![Quaternion::ONE, J]).unwrap();
        let h = star_mul(&f, &g, None).unwrap();
        assert_eq!(h.coeffs(), &[Quaternion::ONE, I + J, K]);
        let one = SliceSeries::constant(Quaternion::ONE);
        assert_eq!(star_mul(&f, &one, None).unwrap(), f);
        assert_eq!(star_mul(&f, &g, Some(1)).unwrap().degree(), 1);
    }

    #[test]
    fn star_exp_of_j() {
        let f = star_exp(&J, 4);
        let expected = [Quaternion::ONE, J, Quaternion::real(-0.5), J * (-1.0 / 6.0), Quaternion::real(1.0 / 24.0)];
        for (a, b) in f.coeffs().iter().zip(expected) {
            assert!(a.max_abs_diff(&b) < 1e-16);
        }
        assert_eq!(star_exp(&Quaternion::ZERO, 5).eval(&I).unwrap(), Quaternion::ONE);
    }

    #[test]
    fn star_exp_real_parameter_is_complex_exponential() {
        let s = 0.7;
        let p = q([0.3, 0.0, 1.1, 0.0]);
        let v = star_exp(&Quaternion::real(s), 40).eval(&p).unwrap();
        // e^{ps} in ℂ_j
        let expected = q([(0.3 * s).exp() * (1.1 * s).cos(), 0.0, (0.3 * s).exp() * (1.1 * s).sin(), 0.0]);
        assert!(v.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn extension_on_the_same_slice_is_the_identity() {
        let f = SliceSeries::new(vec![q([1.0, 2.0, 0.0, -1.0]), q([0.0, 1.0, 1.0, 0.5]), J]).unwrap();
        let unit = ImaginaryUnit::from_direction(&q([0.0, 1.0, 2.0, 2.0])).unwrap();
        let target = unit.point(0.4, 1.3);
        let ext = representation_extend(|p| f.eval_unchecked(p), &unit, &target).unwrap();
        assert!(ext.max_abs_diff(&f.eval(&target).unwrap()) < 1e-14);
    }

    #[test]
    fn extension_of_p_squared() {
        let f = SliceSeries::monomial(2, Quaternion::ONE);
        let target = q([1.0, 0.0, 1.0, 0.0]) * std::f64::consts::FRAC_1_SQRT_2;
        let ext = representation_extend(|p| f.eval_unchecked(p), &ImaginaryUnit::i(), &target).unwrap();
        assert!(ext.max_abs_diff(&(target * target)).abs() < 1e-15);
        let c = q([2.0, -1.0, 0.5, 3.0]);
        let constant = representation_extend(|_| c, &ImaginaryUnit::k(), &q([0.3, 1.0, -2.0, 0.1])).unwrap();
        assert!(constant.max_abs_diff(&c) < 1e-15);
    }

    #[test]
    fn clifford_series_evaluate_on_paravectors() {
        let n = 3;
        let mut a1 = Multivector::zero(n);
        a1.set(0b011, 1.0);
        let f = SliceSeries::new(vec![Multivector::scalar(n, 1.0), a1.clone()]).unwrap();
        let x = Paravector::new(0.0, &[0.0, 0.0, 1.0]).into_multivector();
        // 1 + e3 e12 = 1 + e12e3 = 1 + e123
        let v = f.eval(&x).unwrap();
        let mut expected = Multivector::scalar(n, 1.0);
        expected.set(0b111, 1.0);
        assert_eq!(v, expected);
    }

    #[test]
    fn series_are_left_slice_regular() {
        let f = SliceSeries::new(vec![q([0.2, 1.0, 0.0, 0.0]), q([1.0, 0.0, -1.0, 2.0]), q([0.0, 0.3, 0.3, 0.3])]).unwrap();
        let unit = ImaginaryUnit::from_direction(&q([0.0, -1.0, 0.5, 2.0])).unwrap();
        let r = left_cauchy_riemann_residual(|p| f.eval_unchecked(p), &unit, 0.3, -0.7, 1e-5);
        assert!(r < 1e-6, "residual {r}");
        // the pointwise product (p a)(p b) is not slice regular in general
        let g = |p: &Quaternion| (*p * J) * (*p * K);
        assert!(left_cauchy_riemann_residual(g, &unit, 0.3, -0.7, 1e-5) > 1e-3);
    }
}
