//! Numerical form of `⟨f, g⟩ = (1/π) ∫_{ℂ_I} e^{-|p|²} conj(g(p)) f(p) dx dy`.
//!
//! In polar coordinates `p = ρ e^{Iθ}` and with `t = ρ²` the measure splits
//! into `e^{-t} dt · dθ/2π`. The radial factor uses Gauss–Laguerre nodes
//! (exact for polynomials in `t` up to degree `2R-1`) and the angular factor
//! the uniform rule on `M` points (exact for `e^{Ikθ}` with `|k| < M`).
//! Products `pⁿ p̄ᵐ` are then integrated exactly whenever `n + m ≤ 2R-1`
//! and `|n - m| < M`.

use serde::Serialize;

use crate::hypercomplex::{Hypercomplex, ImaginaryUnit};
use crate::slicefun::SliceSeries;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    /// Gauss–Laguerre nodes in `t = ρ²`.
    nodes: Vec<f64>,
    weights: Vec<f64>,
    angular: usize,
    cos_sin: Vec<(f64, f64)>,
}

/// Builds the product rule with `radial` Gauss–Laguerre nodes and `angular`
/// uniformly spaced angles starting at θ = 0.
pub fn build_grid(radial: usize, angular: usize) -> Result<QuadratureGrid> {
    if radial == 0 || angular == 0 {
        return Err(Error::domain("quadrature grid needs at least one radial and one angular node"));
    }
    let (nodes, weights) = gauss_laguerre(radial)?;
    let cos_sin = (0..angular)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / angular as f64;
            (theta.cos(), theta.sin())
        })
        .collect();
    Ok(QuadratureGrid { nodes, weights, angular, cos_sin })
}

impl QuadratureGrid {
    pub fn radial(&self) -> usize {
        self.nodes.len()
    }

    pub fn angular(&self) -> usize {
        self.angular
    }

    pub fn radial_nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn radial_weights(&self) -> &[f64] {
        &self.weights
    }

    /// Highest polynomial degree in `t` integrated exactly.
    pub fn radial_exactness(&self) -> usize {
        2 * self.nodes.len() - 1
    }

    /// Whether every pairing `pⁿ` against `pᵐ` with `n ≤ deg_f`, `m ≤ deg_g`
    /// is integrated exactly.
    pub fn covers(&self, deg_f: usize, deg_g: usize) -> bool {
        deg_f + deg_g <= self.radial_exactness() && deg_f.max(deg_g) < self.angular
    }

    /// Applies the rule to `h(p)` on the slice ℂ_I, weights normalized so
    /// that constants integrate to themselves.
    pub fn integrate<S, F>(&self, unit: &ImaginaryUnit<S>, h: F) -> S
    where
        S: Hypercomplex,
        F: Fn(&S) -> S,
    {
        let mut total = unit.as_scalar().zero_like();
        let inv_m = 1.0 / self.angular as f64;
        for (&t, &w) in self.nodes.iter().zip(&self.weights) {
            let rho = t.sqrt();
            let mut ring = unit.as_scalar().zero_like();
            for &(c, s) in &self.cos_sin {
                ring = ring.plus(&h(&unit.point(rho * c, rho * s)));
            }
            total = total.plus(&ring.scaled(w * inv_m));
        }
        total
    }
}

/// Raised when a grid is too coarse to integrate a pairing exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactnessWarning {
    pub deg_f: usize,
    pub deg_g: usize,
    pub radial_exactness: usize,
    pub angular: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadValue<S> {
    pub value: S,
    pub warning: Option<ExactnessWarning>,
}

/// `Σ_r w_r (1/M) Σ_θ conj(g(p)) f(p)` over the grid placed on ℂ_I.
pub fn quad_inner<S: Hypercomplex>(
    f: &SliceSeries<S>,
    g: &SliceSeries<S>,
    unit: &ImaginaryUnit<S>,
    grid: &QuadratureGrid,
) -> Result<QuadValue<S>> {
    let probe = unit.as_scalar();
    probe.check_kind(&f.zero_scalar())?;
    probe.check_kind(&g.zero_scalar())?;
    let value = grid.integrate(unit, |p| g.eval_unchecked(p).conj().times(&f.eval_unchecked(p)));
    let warning = (!grid.covers(f.degree(), g.degree())).then_some(ExactnessWarning {
        deg_f: f.degree(),
        deg_g: g.degree(),
        radial_exactness: grid.radial_exactness(),
        angular: grid.angular(),
    });
    Ok(QuadValue { value, warning })
}

/// `∫ e^{-|p|²} |f(p)|² dσ` on ℂ_I.
pub fn quad_norm_sqr<S: Hypercomplex>(f: &SliceSeries<S>, unit: &ImaginaryUnit<S>, grid: &QuadratureGrid) -> Result<f64> {
    unit.as_scalar().check_kind(&f.zero_scalar())?;
    Ok(grid.integrate(unit, |p| unit.as_scalar().real_like(f.eval_unchecked(p).norm_sqr())).real_part())
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceReport<S> {
    pub value_i: S,
    pub value_j: S,
    pub difference: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub warning: Option<ExactnessWarning>,
}

/// Computes `⟨f, g⟩` on two slices; passes iff the values differ by at most
/// `tol · (1 + |⟨f, g⟩_I|)`.
pub fn slice_independence_check<S: Hypercomplex>(
    f: &SliceSeries<S>,
    g: &SliceSeries<S>,
    unit_i: &ImaginaryUnit<S>,
    unit_j: &ImaginaryUnit<S>,
    grid: &QuadratureGrid,
    tol: f64,
) -> Result<IndependenceReport<S>> {
    let a = quad_inner(f, g, unit_i, grid)?;
    let b = quad_inner(f, g, unit_j, grid)?;
    let difference = a.value.distance(&b.value);
    let pass = difference <= tol * (1.0 + a.value.norm());
    Ok(IndependenceReport { value_i: a.value, value_j: b.value, difference, tolerance: tol, pass, warning: a.warning })
}

/// Nodes and weights of the `n`-point Gauss rule for `∫₀^∞ e^{-t} h(t) dt`.
///
/// Newton iteration on the three-term Laguerre recurrence, started from the
/// usual asymptotic guesses.
pub fn gauss_laguerre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    const MAX_ITER: usize = 100;
    let nf = n as f64;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let mut z = 0.0f64;
    for i in 0..n {
        z = match i {
            0 => 3.0 / (1.0 + 2.4 * nf),
            1 => z + 15.0 / (1.0 + 2.5 * nf),
            _ => {
                let ai = (i - 1) as f64;
                z + (1.0 + 2.55 * ai) / (1.9 * ai) * (z - nodes[i - 2])
            }
        };
        let mut converged = false;
        let mut deriv = 0.0;
        let mut prev = 0.0;
        for _ in 0..MAX_ITER {
            let (p1, p2) = laguerre_pair(n, z);
            deriv = nf * (p1 - p2) / z;
            prev = p2;
            let z1 = z;
            z = z1 - p1 / deriv;
            if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::domain(format!("Gauss-Laguerre node {i} of {n} did not converge")));
        }
        let (p1, p2) = laguerre_pair(n, z);
        if p1 != 0.0 {
            deriv = nf * (p1 - p2) / z;
            prev = p2;
        }
        nodes[i] = z;
        weights[i] = -1.0 / (deriv * nf * prev);
    }
    Ok((nodes, weights))
}

/// `(L_n(z), L_{n-1}(z))`.
fn laguerre_pair(n: usize, z: f64) -> (f64, f64) {
    let mut p1 = 1.0;
    let mut p2 = 0.0;
    for j in 1..=n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = ((2.0 * jf - 1.0 - z) * p2 - (jf - 1.0) * p3) / jf;
    }
    (p1, p2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::factorial;
    use crate::hypercomplex::Quaternion;

    fn mono(n: usize) -> SliceSeries<Quaternion> {
        SliceSeries::monomial(n, Quaternion::ONE)
    }

    #[test]
    fn laguerre_moments() {
        for n in [1, 2, 5, 13, 45] {
            let (t, w) = gauss_laguerre(n).unwrap();
            for k in 0..2 * n {
                let m: f64 = t.iter().zip(&w).map(|(t, w)| w * t.powi(k as i32)).sum();
                let rel = (m - factorial(k)).abs() / factorial(k);
                assert!(rel < 1e-11, "n={n} k={k} rel={rel}");
            }
        }
    }

    #[test]
    fn weights_sum_to_one() {
        for n in [1, 8, 45, 80] {
            let (_, w) = gauss_laguerre(n).unwrap();
            assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-13);
            assert!(w.iter().all(|w| *w > 0.0));
        }
    }

    #[test]
    fn one_node_integrates_constants() {
        let grid = build_grid(1, 1).unwrap();
        let one = mono(0);
        let v = quad_inner(&one, &one, &ImaginaryUnit::i(), &grid).unwrap();
        assert!(v.value.max_abs_diff(&Quaternion::ONE) < 1e-15);
        assert!(v.warning.is_none());
        assert!(build_grid(0, 3).is_err());
        assert!(build_grid(3, 0).is_err());
    }

    #[test]
    fn monomial_norms_and_orthogonality() {
        let grid = build_grid(8, 17).unwrap();
        let unit = ImaginaryUnit::from_direction(&Quaternion::new(0.0, 1.0, -2.0, 0.5)).unwrap();
        let v = quad_inner(&mono(3), &mono(3), &unit, &grid).unwrap();
        assert!(v.value.max_abs_diff(&Quaternion::real(6.0)) < 1e-12);
        let w = quad_inner(&mono(2), &mono(5), &unit, &grid).unwrap();
        assert!(w.value.norm() < 1e-12);
    }

    #[test]
    fn coarse_grid_raises_the_warning() {
        let grid = build_grid(2, 4).unwrap();
        assert!(quad_inner(&mono(2), &mono(1), &ImaginaryUnit::i(), &grid).unwrap().warning.is_none());
        assert!(quad_inner(&mono(2), &mono(2), &ImaginaryUnit::i(), &grid).unwrap().warning.is_some());
        assert!(quad_inner(&mono(0), &mono(3), &ImaginaryUnit::i(), &grid).unwrap().warning.is_none());
        assert!(quad_inner(&mono(0), &mono(4), &ImaginaryUnit::i(), &grid).unwrap().warning.is_some());
    }

    #[test]
    fn linear_terms_match_the_coefficient_pairing() {
        let grid = build_grid(4, 5).unwrap();
        let f = SliceSeries::monomial(1, Quaternion::I);
        let g = SliceSeries::monomial(1, Quaternion::J);
        let v = quad_inner(&f, &g, &ImaginaryUnit::k(), &grid).unwrap();
        assert!(v.value.max_abs_diff(&Quaternion::K) < 1e-14);
    }

    #[test]
    fn p_squared_is_slice_independent() {
        let grid = build_grid(8, 17).unwrap();
        let unit_j = ImaginaryUnit::from_direction(&Quaternion::new(0.0, 1.0, 1.0, 0.0)).unwrap();
        let r = slice_independence_check(&mono(2), &mono(2), &ImaginaryUnit::i(), &unit_j, &grid, 1e-12).unwrap();
        assert!(r.pass, "{r:?}");
        let c = SliceSeries::constant(Quaternion::new(1.0, 2.0, 3.0, 4.0));
        let r = slice_independence_check(&c, &c, &ImaginaryUnit::j(), &unit_j, &grid, 1e-12).unwrap();
        assert_eq!(r.difference, 0.0);
    }
}
