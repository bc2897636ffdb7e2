//! Coefficient model of the Fock space: `f = Σ pⁿ aₙ` belongs to it iff
//! `Σ n! |aₙ|² < ∞`, and
//!
//! `⟨f, g⟩ = ∫_{ℂ_I} e^{-|p|²} conj(g(p)) f(p) dσ = Σ n! b̄ₙ aₙ`
//!
//! for `g = Σ pⁿ bₙ`. The pairing is right-linear in the first slot:
//! `⟨fα, gβ⟩ = β̄ ⟨f, g⟩ α`.
//!
//! The same formulas serve ℝₙ coefficients. There `⟨f, f⟩` may carry
//! non-scalar parts once zero divisors appear (n ≥ 3); the norm is the
//! scalar part `Σ n! |aₙ|²`.

use serde::{Deserialize, Serialize};

use crate::hypercomplex::Hypercomplex;
use crate::slicefun::{star_exp, SliceSeries};
use crate::Result;

/// `n!` as a float, exact for `n ≤ 22`.
pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FockElement<S> {
    series: SliceSeries<S>,
    norm_sqr: f64,
}

impl<S: Hypercomplex> FockElement<S> {
    pub fn new(series: SliceSeries<S>) -> Self {
        let norm_sqr = partial_norms(&series).last().copied().unwrap_or(0.0);
        FockElement { series, norm_sqr }
    }

    pub fn series(&self) -> &SliceSeries<S> {
        &self.series
    }

    pub fn into_series(self) -> SliceSeries<S> {
        self.series
    }

    /// `Σ n! |aₙ|²` over the stored coefficients.
    pub fn norm_sqr(&self) -> f64 {
        self.norm_sqr
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr.sqrt()
    }

    pub fn degree(&self) -> usize {
        self.series.degree()
    }

    pub fn eval(&self, p: &S) -> Result<S> {
        self.series.eval(p)
    }
}

impl<S: Hypercomplex> From<SliceSeries<S>> for FockElement<S> {
    fn from(series: SliceSeries<S>) -> Self {
        FockElement::new(series)
    }
}

/// Partial sums `Σ_{m≤M} m! |aₘ|²` for `M = 0..=N`.
pub fn partial_norms<S: Hypercomplex>(f: &SliceSeries<S>) -> Vec<f64> {
    let mut fact = 1.0;
    let mut acc = 0.0;
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(m, a)| {
            if m > 0 {
                fact *= m as f64;
            }
            acc += fact * a.norm_sqr();
            acc
        })
        .collect()
}

/// `⟨f, g⟩ = Σ n! b̄ₙ aₙ` over the common degrees.
pub fn fock_inner<S: Hypercomplex>(f: &FockElement<S>, g: &FockElement<S>) -> Result<S> {
    Ok(fock_inner_report(f, g)?.value)
}

/// Inner product together with what was left unpaired.
#[derive(Debug, Clone, PartialEq)]
pub struct Pairing<S> {
    pub value: S,
    /// Highest degree present in both arguments.
    pub paired_degree: usize,
    /// Fock norm of the coefficients of the longer argument above
    /// `paired_degree`. With it, Cauchy–Schwarz bounds the change of
    /// `value` if the shorter argument were extended by a tail of norm `t`
    /// by `unpaired_norm · t`.
    pub unpaired_norm: f64,
}

pub fn fock_inner_report<S: Hypercomplex>(f: &FockElement<S>, g: &FockElement<S>) -> Result<Pairing<S>> {
    let a = f.series.coeffs();
    let b = g.series.coeffs();
    a[0].check_kind(&b[0])?;
    let d = f.degree().min(g.degree());
    let mut fact = 1.0;
    let mut value = a[0].zero_like();
    for n in 0..=d {
        if n > 0 {
            fact *= n as f64;
        }
        value = value.plus(&b[n].conj().times(&a[n]).scaled(fact));
    }
    let longer = if f.degree() > d { f } else { g };
    let norms = partial_norms(&longer.series);
    let unpaired = (norms[norms.len() - 1] - norms[d]).max(0.0);
    Ok(Pairing { value, paired_degree: d, unpaired_norm: unpaired.sqrt() })
}

/// Reproducing kernel `k_q(p) = e_⋆^{p q̄}` truncated at degree `n_max`:
/// coefficients `q̄ⁿ / n!`.
pub fn kernel<S: Hypercomplex>(q: &S, n_max: usize) -> FockElement<S> {
    FockElement::new(star_exp(&q.conj(), n_max))
}

/// `(⟨f, k_q⟩, f(q))` with the kernel truncated at the degree of `f`. The
/// two agree term by term.
pub fn reproduce<S: Hypercomplex>(f: &FockElement<S>, q: &S) -> Result<(S, S)> {
    let direct = f.eval(q)?;
    let paired = fock_inner(f, &kernel(q, f.degree()))?;
    Ok((paired, direct))
}

/// `⟨k_q, k_s⟩ = e_⋆^{s q̄} = Σ_{n≤N} sⁿ q̄ⁿ / n!`.
pub fn kernel_gram<S: Hypercomplex>(q: &S, s: &S, n_max: usize) -> Result<S> {
    q.check_kind(s)?;
    let qb = q.conj();
    let mut s_pow = s.one_like();
    let mut q_term = s.one_like();
    let mut acc = s_pow.times(&q_term);
    for n in 1..=n_max {
        s_pow = s_pow.times(s);
        q_term = q_term.times(&qb).scaled(1.0 / n as f64);
        acc = acc.plus(&s_pow.times(&q_term));
    }
    Ok(acc)
}

/// Gram matrix `G[i][j] = ⟨k_{q_j}, k_{q_i}⟩`, arranged so that
/// `‖Σ_j k_{q_j} β_j‖² = Σ_{i,j} β̄_i G[i][j] β_j`.
pub fn kernel_gram_matrix<S: Hypercomplex>(points: &[S], n_max: usize) -> Result<Vec<Vec<S>>> {
    points
        .iter()
        .map(|qi| points.iter().map(|qj| kernel_gram(qj, qi, n_max)).collect())
        .collect()
}

/// `Σ_{i,j} β̄_i G[i][j] β_j`.
pub fn hermitian_form<S: Hypercomplex>(gram: &[Vec<S>], beta: &[S]) -> S {
    let zero = beta[0].zero_like();
    gram.iter().zip(beta).fold(zero, |acc, (row, bi)| {
        let bi_bar = bi.conj();
        row.iter().zip(beta).fold(acc, |acc, (g, bj)| acc.plus(&bi_bar.times(g).times(bj)))
    })
}

/// Magnitude model for the coefficients beyond the stored ones:
/// `|aₘ| = C rᵐ / (m!)^s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailModel {
    #[serde(rename = "C")]
    pub c: f64,
    pub r: f64,
    #[serde(default = "default_decay")]
    pub s: f64,
}

fn default_decay() -> f64 {
    1.0
}

impl TailModel {
    /// `|aₘ| = C rᵐ / m!`, e.g. a kernel with `r = |q|`.
    pub fn factorial(c: f64, r: f64) -> Self {
        TailModel { c, r, s: 1.0 }
    }
}

/// What is known about the coefficients past the truncation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tail {
    /// The series is exactly the stored polynomial.
    Exact,
    /// The series continues with no usable information.
    Unknown,
    Modeled(TailModel),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// `partial` is the stored `Σ m!|aₘ|²`, `bound` adds the modeled tail.
    FiniteNorm { partial: f64, bound: f64 },
    Divergent { partial: f64 },
    UndecidableFromTruncation { partial: f64 },
}

/// Decides `Σ m! |aₘ|² < ∞` from the stored coefficients plus a tail model.
pub fn membership<S: Hypercomplex>(f: &FockElement<S>, tail: Tail) -> Verdict {
    let partial = f.norm_sqr();
    let model = match tail {
        Tail::Exact => return Verdict::FiniteNorm { partial, bound: partial },
        Tail::Unknown => return Verdict::UndecidableFromTruncation { partial },
        Tail::Modeled(m) => m,
    };
    if !(model.c.is_finite() && model.r.is_finite() && model.s.is_finite()) || model.c < 0.0 || model.r < 0.0 {
        return Verdict::UndecidableFromTruncation { partial };
    }
    if model.c == 0.0 || model.r == 0.0 {
        return Verdict::FiniteNorm { partial, bound: partial };
    }
    // m! C² r^{2m} / (m!)^{2s} = C² r^{2m} (m!)^{1-2s}
    let converges = model.s > 0.5 || (model.s == 0.5 && model.r < 1.0);
    if !converges {
        return Verdict::Divergent { partial };
    }
    match tail_sum(model, f.degree() + 1) {
        Some(t) => Verdict::FiniteNorm { partial, bound: partial + t },
        None => Verdict::UndecidableFromTruncation { partial },
    }
}

/// Upper bound on `Σ_{m ≥ start} C² r^{2m} (m!)^{1-2s}` for a convergent
/// model: terms are summed until the term ratio stays below ½, then the
/// remainder is bounded by a geometric series.
fn tail_sum(model: TailModel, start: usize) -> Option<f64> {
    let r2 = model.r * model.r;
    let expo = 1.0 - 2.0 * model.s;
    let log_term = |m: usize| {
        let log_fact: f64 = (1..=m).map(|k| (k as f64).ln()).sum();
        2.0 * model.c.ln() + m as f64 * r2.ln() + expo * log_fact
    };
    let mut m = start;
    let mut term = log_term(m).exp();
    let mut sum = 0.0f64;
    for _ in 0..100_000 {
        // ratio of consecutive terms: r² (m+1)^{1-2s}
        let ratio = r2 * ((m + 1) as f64).powf(expo);
        if ratio < 0.5 && term <= f64::EPSILON * sum.max(f64::MIN_POSITIVE) {
            return Some(sum + term * ratio / (1.0 - ratio) + term);
        }
        sum += term;
        m += 1;
        term *= ratio;
        if !sum.is_finite() {
            return None;
        }
    }
    None
}
