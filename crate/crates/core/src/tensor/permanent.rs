use crate::hypercomplex::Quaternion;
use crate::{Error, Result};

/// Largest matrix accepted by [`permanent`].
pub const MAX_PERMANENT_SIZE: usize = 12;

/// `per(A) = Σ_σ Π_i A_{i,σ(i)}` for a square matrix of pairwise commuting
/// entries (reals, or complex numbers inside one slice ℂ_I).
///
/// Ryser's inclusion–exclusion formula with column subsets visited in Gray
/// code order, `O(2ⁿ n)` operations.
pub fn permanent(a: &[Vec<Quaternion>]) -> Result<Quaternion> {
    let n = a.len();
    if n > MAX_PERMANENT_SIZE {
        return Err(Error::Size { size: n, cap: MAX_PERMANENT_SIZE });
    }
    if let Some(row) = a.iter().find(|row| row.len() != n) {
        return Err(Error::Dimension { expected: n, found: row.len() });
    }
    check_commuting(a)?;
    if n == 0 {
        return Ok(Quaternion::ONE);
    }
    let mut row_sums = vec![Quaternion::ZERO; n];
    let mut total = Quaternion::ZERO;
    let mut gray = 0usize;
    for k in 1usize..1 << n {
        let col = k.trailing_zeros() as usize;
        gray ^= 1 << col;
        let adding = gray & (1 << col) != 0;
        for (sum, row) in row_sums.iter_mut().zip(a) {
            if adding {
                *sum += row[col];
            } else {
                *sum -= row[col];
            }
        }
        let prod = row_sums.iter().fold(Quaternion::ONE, |acc, s| acc * *s);
        if gray.count_ones().is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(if n.is_multiple_of(2) { total } else { -total })
}

fn check_commuting(a: &[Vec<Quaternion>]) -> Result<()> {
    // all entries commute iff their imaginary parts are parallel
    let Some(axis) = a.iter().flatten().map(Quaternion::im).max_by(|x, y| x.norm_sqr().total_cmp(&y.norm_sqr()))
    else {
        return Ok(());
    };
    for x in a.iter().flatten() {
        let commutator = *x * axis - axis * *x;
        if commutator.norm() > 1e-12 * (x.norm() * axis.norm()).max(f64::MIN_POSITIVE) {
            return Err(Error::domain("permanent needs pairwise commuting entries"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: &[&[f64]]) -> Vec<Vec<Quaternion>> {
        rows.iter().map(|r| r.iter().map(|&x| Quaternion::real(x)).collect()).collect()
    }

    #[test]
    fn identity_and_all_ones() {
        let id = real(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
        assert_eq!(permanent(&id).unwrap(), Quaternion::ONE);
        let ones = real(&[&[1.0; 3], &[1.0; 3], &[1.0; 3]]);
        assert_eq!(permanent(&ones).unwrap(), Quaternion::real(6.0));
        assert_eq!(permanent(&[]).unwrap(), Quaternion::ONE);
    }

    #[test]
    fn two_by_two() {
        let m = real(&[&[1.0, 2.0], &[3.0, 4.0]]);
        assert_eq!(permanent(&m).unwrap(), Quaternion::real(10.0));
    }

    #[test]
    fn rejects_noncommuting_and_bad_shapes() {
        let m = vec![vec![Quaternion::I, Quaternion::J], vec![Quaternion::ONE, Quaternion::ONE]];
        assert!(matches!(permanent(&m), Err(Error::Domain(_))));
        let ragged = vec![vec![Quaternion::ONE, Quaternion::ONE], vec![Quaternion::ONE]];
        assert!(matches!(permanent(&ragged), Err(Error::Dimension { .. })));
        let big = vec![vec![Quaternion::ONE; 13]; 13];
        assert!(matches!(permanent(&big), Err(Error::Size { .. })));
    }

    #[test]
    fn complex_entries_in_one_slice() {
        // per([[i, 1], [1, i]]) = i² + 1 = 0
        let m = vec![vec![Quaternion::J, Quaternion::ONE], vec![Quaternion::ONE, Quaternion::J]];
        assert!(permanent(&m).unwrap().norm() < 1e-15);
    }
}
