use super::fockvec::{nested_inner, FockVector, TensorWord};
use super::hspace::check_dim;
use crate::fock::factorial;
use crate::hypercomplex::Quaternion;
use crate::{Error, Result};

/// Largest symmetric power handled by default (8! = 40320 permutations).
pub const DEFAULT_FACTORIAL_CAP: usize = 8;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let pivot = i - 1;
        let j = (pivot + 1..n).rev().find(|&j| current[j] > current[pivot]).expect("successor exists");
        current.swap(pivot, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::Size { size: n, cap })
    } else {
        Ok(())
    }
}

/// `u₁∘⋯∘uₙ = (1/n!) Σ_σ u_σ(1)⊗⋯⊗u_σ(n)`.
pub fn symmetrize(word: &TensorWord, cap: usize) -> Result<FockVector> {
    let n = word.level();
    check_cap(n, cap)?;
    let mut acc = FockVector::zero(word.dim());
    for sigma in permutations(n) {
        acc.add_assign(&word.permuted(&sigma).expand())?;
    }
    Ok(acc.scale(1.0 / factorial(n)))
}

/// `Σ_{σ,τ ∈ Sₙ} ⟨⋯⟨u_σ(1), v_τ(1)⟩ ⋯ u_σ(n), v_τ(n)⟩`.
///
/// Each nesting step `s ↦ ⟨s u_i, v_j⟩` is real-linear in `s`, so sums over
/// orderings that have consumed the same index sets can be merged. The
/// value is accumulated over pairs of consumed subsets, which evaluates the
/// same finite sum in `O(C(2n,n) n² d)` operations.
fn double_permutation_sum(u: &TensorWord, v: &TensorWord) -> Result<Quaternion> {
    check_dim(u.dim(), v.dim())?;
    let n = u.level();
    if v.level() != n {
        return Err(Error::domain(format!("symmetric inner product needs equal levels, got {n} and {}", v.level())));
    }
    let size = 1usize << n;
    let mut table = vec![Quaternion::ZERO; size * size];
    table[0] = Quaternion::ONE;
    for a in 0..size {
        let k = a.count_ones();
        for b in 0..size {
            if b.count_ones() != k {
                continue;
            }
            let s = table[a * size + b];
            if s == Quaternion::ZERO {
                continue;
            }
            for i in (0..n).filter(|i| a & (1 << i) == 0) {
                let su = u.factors()[i].left_mul(s);
                for j in (0..n).filter(|j| b & (1 << j) == 0) {
                    let step = su.inner(&v.factors()[j])?;
                    table[(a | 1 << i) * size + (b | 1 << j)] += step;
                }
            }
        }
    }
    Ok(table[size * size - 1])
}

/// Induced inner product on `ℋ^∘n`:
/// `(1/n!²) Σ_{σ,τ} ⟨⋯⟨u_σ(1), v_τ(1)⟩ ⋯ u_σ(n), v_τ(n)⟩`.
pub fn sym_inner_induced(u: &TensorWord, v: &TensorWord, cap: usize) -> Result<Quaternion> {
    check_cap(u.level().max(v.level()), cap)?;
    let nf = factorial(u.level());
    Ok(double_permutation_sum(u, v)? / (nf * nf))
}

/// Symmetric inner product on `ℋ^∘n`: `n!` times the induced one. In the
/// commuting case it is the permanent of `[⟨u_i, v_j⟩]`.
pub fn sym_inner(u: &TensorWord, v: &TensorWord, cap: usize) -> Result<Quaternion> {
    check_cap(u.level().max(v.level()), cap)?;
    Ok(double_permutation_sum(u, v)? / factorial(u.level()))
}

/// The double permutation sum by literal enumeration of `Sₙ × Sₙ`.
pub fn sym_double_sum_enumerated(u: &TensorWord, v: &TensorWord, cap: usize) -> Result<Quaternion> {
    let n = u.level();
    check_cap(n.max(v.level()), cap)?;
    let perms = permutations(n);
    let mut total = Quaternion::ZERO;
    for sigma in &perms {
        let us = u.permuted(sigma);
        for tau in &perms {
            total += nested_inner(&us, &v.permuted(tau))?;
        }
    }
    Ok(total)
}
