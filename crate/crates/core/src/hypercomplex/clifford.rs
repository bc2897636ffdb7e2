use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Hypercomplex, ScalarKind};
use crate::{Error, Result};

/// Largest supported generator count (2¹⁰ coefficients).
pub const MAX_GENERATORS: usize = 10;

/// Sign of `e_a e_b` for basis blades given as generator bitmasks, with
/// `e_i² = -1`. The product blade is `a ^ b`.
#[inline]
pub fn blade_sign(a: u32, b: u32) -> f64 {
    // transpositions needed to move every generator of `b` past the
    // higher-indexed generators of `a`
    let mut swaps = 0u32;
    let mut shifted = a >> 1;
    while shifted != 0 {
        swaps += (shifted & b).count_ones();
        shifted >>= 1;
    }
    let squares = (a & b).count_ones();
    if (swaps + squares).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// An element of the real Clifford algebra ℝₙ, stored densely with
/// coefficients indexed by generator bitmask (bit `i-1` set means `e_i`
/// is a factor).
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    n: usize,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators are supported");
        Multivector { n, coeffs: vec![0.0; 1 << n] }
    }

    pub fn scalar(n: usize, r: f64) -> Self {
        let mut m = Multivector::zero(n);
        m.coeffs[0] = r;
        m
    }

    /// The basis blade `e_A` for the bitmask `mask`.
    pub fn blade(n: usize, mask: usize) -> Self {
        let mut m = Multivector::zero(n);
        m.coeffs[mask] = 1.0;
        m
    }

    /// Generator `e_i`, 1-based.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator index {i} out of range 1..={n}");
        Multivector::blade(n, 1 << (i - 1))
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<f64>) -> Result<Self> {
        if n > MAX_GENERATORS {
            return Err(Error::Size { size: n, cap: MAX_GENERATORS });
        }
        if coeffs.len() != 1 << n {
            return Err(Error::Dimension { expected: 1 << n, found: coeffs.len() });
        }
        Ok(Multivector { n, coeffs })
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn get(&self, mask: usize) -> f64 {
        self.coeffs[mask]
    }

    pub fn set(&mut self, mask: usize, value: f64) {
        self.coeffs[mask] = value;
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Support lies in grades 0 and 1.
    pub fn is_paravector(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(mask, &c)| mask.count_ones() <= 1 || c == 0.0)
    }

    /// Clifford conjugation: `e_A ↦ (-1)^{k(k+1)/2} e_A` for a grade-`k`
    /// blade. On paravectors this is `x₀ - x̲`.
    pub fn conj(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(mask, &c)| {
                let k = mask.count_ones();
                if (k * (k + 1) / 2) % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        Multivector { n: self.n, coeffs }
    }

    pub fn try_mul(&self, other: &Multivector) -> Result<Multivector> {
        cl_mul(self, other)
    }

    fn check_same(&self, other: &Multivector) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.n, found: other.n })
        }
    }

    fn mul_unchecked(&self, other: &Multivector) -> Multivector {
        let mut out = vec![0.0; self.coeffs.len()];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                out[a ^ b] += blade_sign(a as u32, b as u32) * ca * cb;
            }
        }
        Multivector { n: self.n, coeffs: out }
    }

    fn zip(&self, other: &Multivector, op: impl Fn(f64, f64) -> f64) -> Multivector {
        assert_eq!(self.n, other.n, "multivector generator counts differ");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| op(a, b)).collect();
        Multivector { n: self.n, coeffs }
    }

    pub fn scale(&self, s: f64) -> Multivector {
        Multivector { n: self.n, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }
}

/// Clifford product in ℝₙ.
pub fn cl_mul(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_same(b)?;
    Ok(a.mul_unchecked(b))
}

/// `|x|` for a paravector `x = x₀ + Σ xⱼeⱼ`, cross-checked against the
/// scalar part of `x x̄`.
pub fn cl_paravector_norm(x: &Multivector) -> Result<f64> {
    if !x.is_paravector() {
        return Err(Error::domain("norm is defined here for paravectors only"));
    }
    let direct = x.norm_sqr();
    let via_conj = x.mul_unchecked(&x.conj()).scalar_part();
    debug_assert!((direct - via_conj).abs() <= 1e-12 * direct.max(1.0));
    Ok(direct.sqrt())
}

impl Mul for &Multivector {
    type Output = Multivector;

    /// Panics if the generator counts differ; use [`cl_mul`] for a checked
    /// product.
    fn mul(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.n, rhs.n, "multivector generator counts differ");
        self.mul_unchecked(rhs)
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    fn add(self, rhs: &Multivector) -> Multivector {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if mask != 0 {
                f.write_str("e")?;
                for i in 0..self.n {
                    if mask & (1 << i) != 0 {
                        write!(f, "{}", i + 1)?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a [f64]);

        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let nonzero = self.0.iter().filter(|c| **c != 0.0).count();
                let mut map = serializer.serialize_map(Some(nonzero))?;
                for (mask, c) in self.0.iter().enumerate().filter(|(_, c)| **c != 0.0) {
                    map.serialize_entry(&mask.to_string(), c)?;
                }
                map.end()
            }
        }

        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("coeffs", &Coeffs(&self.coeffs))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            n: usize,
            coeffs: BTreeMap<String, f64>,
        }

        let raw = Raw::deserialize(deserializer)?;
        if raw.n > MAX_GENERATORS {
            return Err(D::Error::custom(format!("at most {MAX_GENERATORS} generators are supported")));
        }
        let mut m = Multivector::zero(raw.n);
        for (key, value) in raw.coeffs {
            let mask: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("bitmask key `{key}` is not an integer")))?;
            if mask >= 1 << raw.n {
                return Err(D::Error::custom(format!("bitmask {mask} out of range for n = {}", raw.n)));
            }
            m.coeffs[mask] = value;
        }
        Ok(m)
    }
}

impl Hypercomplex for Multivector {
    fn kind(&self) -> ScalarKind {
        ScalarKind::Clifford(self.n)
    }

    fn real_like(&self, r: f64) -> Self {
        Multivector::scalar(self.n, r)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn scaled(&self, s: f64) -> Self {
        self.scale(s)
    }

    fn conj(&self) -> Self {
        Multivector::conj(self)
    }

    fn norm_sqr(&self) -> f64 {
        Multivector::norm_sqr(self)
    }

    fn real_part(&self) -> f64 {
        self.coeffs[0]
    }

    fn is_slice_variable(&self) -> bool {
        self.is_paravector()
    }

    fn vector_part(&self) -> Self {
        let mut m = self.clone();
        m.coeffs[0] = 0.0;
        m
    }

    fn default_unit(&self) -> Self {
        Multivector::generator(self.n, 1)
    }
}

/// A multivector supported on grades 0 and 1, identified with a point of
/// ℝⁿ⁺¹.
#[derive(Debug, Clone, PartialEq)]
pub struct Paravector(Multivector);

impl Paravector {
    /// `x₀ + Σ xⱼ eⱼ` with `n = vector.len()` generators.
    pub fn new(x0: f64, vector: &[f64]) -> Self {
        let mut m = Multivector::scalar(vector.len(), x0);
        for (j, &xj) in vector.iter().enumerate() {
            m.coeffs[1 << j] = xj;
        }
        Paravector(m)
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.0
    }

    pub fn into_multivector(self) -> Multivector {
        self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn conj(&self) -> Paravector {
        Paravector(self.0.conj())
    }
}

impl TryFrom<Multivector> for Paravector {
    type Error = Error;

    fn try_from(m: Multivector) -> Result<Self> {
        if m.is_paravector() {
            Ok(Paravector(m))
        } else {
            Err(Error::domain("multivector has support above grade 1"))
        }
    }
}
