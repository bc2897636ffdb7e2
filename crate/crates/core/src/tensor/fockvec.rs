use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::hspace::{check_dim, HVector};
use crate::hypercomplex::Quaternion;
use crate::{Error, Result};

/// `u₁ ⊗ ⋯ ⊗ uₙ`; the empty word is the vacuum `𝟏`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorWord {
    dim: usize,
    factors: Vec<HVector>,
}

impl TensorWord {
    pub fn new(factors: Vec<HVector>) -> Result<Self> {
        let dim = factors.first().map(HVector::dim).ok_or_else(|| {
            Error::domain("use TensorWord::vacuum for the empty word; its dimension cannot be inferred")
        })?;
        for f in &factors {
            check_dim(dim, f.dim())?;
        }
        Ok(TensorWord { dim, factors })
    }

    pub fn vacuum(dim: usize) -> Self {
        TensorWord { dim, factors: Vec::new() }
    }

    pub fn level(&self) -> usize {
        self.factors.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> &[HVector] {
        &self.factors
    }

    /// The same factors in the order `σ(0), …, σ(n-1)`.
    pub fn permuted(&self, sigma: &[usize]) -> TensorWord {
        TensorWord { dim: self.dim, factors: sigma.iter().map(|&i| self.factors[i].clone()).collect() }
    }

    /// Expansion over basis words: the coefficient of `e_{a₁}⊗⋯⊗e_{aₙ}` is
    /// `u₁,a₁ ⋯ uₙ,aₙ` in factor order.
    pub fn expand(&self) -> FockVector {
        let mut partial: Vec<(Vec<usize>, Quaternion)> = vec![(Vec::new(), Quaternion::ONE)];
        for factor in &self.factors {
            let mut next = Vec::with_capacity(partial.len() * self.dim);
            for (word, c) in &partial {
                for (a, ua) in factor.coords().iter().enumerate() {
                    if *ua == Quaternion::ZERO {
                        continue;
                    }
                    let mut w = word.clone();
                    w.push(a);
                    next.push((w, *c * *ua));
                }
            }
            partial = next;
        }
        let mut out = FockVector::zero(self.dim);
        for (w, c) in partial {
            out.add_term(w, c);
        }
        out
    }
}

/// A finitely supported element of `⊕ₙ ℋ^⊗n`, stored as right quaternion
/// coefficients on basis words. Words of different lengths sit in
/// different levels and are orthogonal.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    dim: usize,
    terms: BTreeMap<Vec<usize>, Quaternion>,
}

impl FockVector {
    pub fn zero(dim: usize) -> Self {
        FockVector { dim, terms: BTreeMap::new() }
    }

    pub fn vacuum(dim: usize) -> Self {
        let mut v = FockVector::zero(dim);
        v.terms.insert(Vec::new(), Quaternion::ONE);
        v
    }

    /// `e_{w₁}⊗⋯⊗e_{wₙ} c`.
    pub fn basis_word(dim: usize, word: Vec<usize>, c: Quaternion) -> Self {
        assert!(word.iter().all(|&a| a < dim), "basis index out of range");
        let mut v = FockVector::zero(dim);
        v.add_term(word, c);
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Quaternion)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn coeff(&self, word: &[usize]) -> Quaternion {
        self.terms.get(word).copied().unwrap_or(Quaternion::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Levels with at least one term.
    pub fn levels(&self) -> Vec<usize> {
        let mut levels: Vec<usize> = self.terms.keys().map(Vec::len).collect();
        levels.sort_unstable();
        levels.dedup();
        levels
    }

    pub fn level_part(&self, n: usize) -> FockVector {
        FockVector {
            dim: self.dim,
            terms: self.terms.iter().filter(|(w, _)| w.len() == n).map(|(w, c)| (w.clone(), *c)).collect(),
        }
    }

    fn add_term(&mut self, word: Vec<usize>, c: Quaternion) {
        match self.terms.entry(word) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if *slot.get() == Quaternion::ZERO {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                if c != Quaternion::ZERO {
                    slot.insert(c);
                }
            }
        }
    }

    pub fn add(&self, other: &FockVector) -> Result<FockVector> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &FockVector) -> Result<()> {
        check_dim(self.dim, other.dim)?;
        for (w, c) in &other.terms {
            self.add_term(w.clone(), *c);
        }
        Ok(())
    }

    /// `ξ α`.
    pub fn right_mul(&self, alpha: Quaternion) -> FockVector {
        let mut out = FockVector::zero(self.dim);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), *c * alpha);
        }
        out
    }

    /// `λ ξ`, acting on the leftmost tensor factor.
    pub fn left_mul(&self, lambda: Quaternion) -> FockVector {
        let mut out = FockVector::zero(self.dim);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), lambda * *c);
        }
        out
    }

    pub fn scale(&self, s: f64) -> FockVector {
        self.right_mul(Quaternion::real(s))
    }

    /// `⟨ξ, η⟩ = Σ_w conj(η_w) ξ_w`, the nested inner product extended to
    /// sums.
    pub fn inner(&self, other: &FockVector) -> Result<Quaternion> {
        check_dim(self.dim, other.dim)?;
        Ok(self
            .terms
            .iter()
            .filter_map(|(w, c)| other.terms.get(w).map(|d| d.conj() * *c))
            .sum())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.terms.values().map(Quaternion::norm_sqr).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Largest coefficient difference over the union of supports.
    pub fn max_abs_diff(&self, other: &FockVector) -> f64 {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .map(|w| self.coeff(w).max_abs_diff(&other.coeff(w)))
            .fold(0.0, f64::max)
    }
}

/// `⟨⟨⋯⟨⟨u₁,v₁⟩u₂,v₂⟩⋯⟩uₙ,vₙ⟩`, evaluated innermost first with the scalar
/// acting on the left of the next factor. Level-0 words pair to 1.
pub fn nested_inner(u: &TensorWord, v: &TensorWord) -> Result<Quaternion> {
    check_dim(u.dim, v.dim)?;
    if u.level() != v.level() {
        return Err(Error::domain(format!(
            "nested inner product needs equal levels, got {} and {}",
            u.level(),
            v.level()
        )));
    }
    u.factors.iter().zip(&v.factors).try_fold(Quaternion::ONE, |s, (uk, vk)| uk.left_mul(s).inner(vk))
}

/// Creation map `T_u`: prepends `u` to every word.
pub fn create(u: &HVector, xi: &FockVector) -> Result<FockVector> {
    check_dim(xi.dim, u.dim())?;
    let mut out = FockVector::zero(xi.dim);
    for (w, c) in &xi.terms {
        for (a, ua) in u.coords().iter().enumerate() {
            if *ua == Quaternion::ZERO {
                continue;
            }
            let mut word = Vec::with_capacity(w.len() + 1);
            word.push(a);
            word.extend_from_slice(w);
            out.add_term(word, *ua * *c);
        }
    }
    Ok(out)
}

/// Annihilation map `T_u*`: `u₀⊗u₁⊗⋯ ↦ conj(⟨u, u₀⟩) u₁⊗⋯`, and the vacuum
/// goes to 0.
pub fn annihilate(u: &HVector, xi: &FockVector) -> Result<FockVector> {
    check_dim(xi.dim, u.dim())?;
    let mut out = FockVector::zero(xi.dim);
    for (w, c) in &xi.terms {
        if let Some((&a, rest)) = w.split_first() {
            // conj(⟨u, e_a⟩) = ⟨e_a, u⟩ = conj(u_a)
            out.add_term(rest.to_vec(), u.coords()[a].conj() * *c);
        }
    }
    Ok(out)
}

/// `|⟨T_u* ξ, η⟩ − ⟨ξ, T_u η⟩|`.
pub fn adjoint_residual(u: &HVector, xi: &FockVector, eta: &FockVector) -> Result<f64> {
    let lhs = annihilate(u, xi)?.inner(eta)?;
    let rhs = xi.inner(&create(u, eta)?)?;
    Ok((lhs - rhs).norm())
}

/// A creation or annihilation operator.
#[derive(Debug, Clone, PartialEq)]
pub enum Op {
    Create(HVector),
    Annihilate(HVector),
}

impl Op {
    pub fn apply(&self, xi: &FockVector) -> Result<FockVector> {
        match self {
            Op::Create(u) => create(u, xi),
            Op::Annihilate(u) => annihilate(u, xi),
        }
    }
}

/// Vacuum expectation `E(T) = ⟨T𝟏, 𝟏⟩` of a sum of operator products.
/// Each product is listed left to right, so the last operator acts first.
pub fn expectation(dim: usize, products: &[Vec<Op>]) -> Result<Quaternion> {
    let vac = FockVector::vacuum(dim);
    let mut total = Quaternion::ZERO;
    for product in products {
        let mut state = vac.clone();
        for op in product.iter().rev() {
            state = op.apply(&state)?;
        }
        total += state.inner(&vac)?;
    }
    Ok(total)
}
