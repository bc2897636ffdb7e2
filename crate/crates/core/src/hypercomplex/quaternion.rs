use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::{Hypercomplex, ScalarKind};

/// `x0 + x1 i + x2 j + x3 k`.
///
/// Serialized as the JSON array `[x0, x1, x2, x3]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Quaternion {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl From<[f64; 4]> for Quaternion {
    fn from(c: [f64; 4]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }
}

impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        [q.x0, q.x1, q.x2, q.x3]
    }
}

impl From<f64> for Quaternion {
    fn from(r: f64) -> Self {
        Quaternion::real(r)
    }
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { x0: 0.0, x1: 0.0, x2: 0.0, x3: 0.0 };
    pub const ONE: Quaternion = Quaternion { x0: 1.0, x1: 0.0, x2: 0.0, x3: 0.0 };
    pub const I: Quaternion = Quaternion { x0: 0.0, x1: 1.0, x2: 0.0, x3: 0.0 };
    pub const J: Quaternion = Quaternion { x0: 0.0, x1: 0.0, x2: 1.0, x3: 0.0 };
    pub const K: Quaternion = Quaternion { x0: 0.0, x1: 0.0, x2: 0.0, x3: 1.0 };

    #[inline]
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Quaternion { x0, x1, x2, x3 }
    }

    #[inline]
    pub const fn real(r: f64) -> Self {
        Quaternion::new(r, 0.0, 0.0, 0.0)
    }

    #[inline]
    pub fn re(&self) -> f64 {
        self.x0
    }

    /// Imaginary part as a quaternion with zero real part.
    #[inline]
    pub fn im(&self) -> Quaternion {
        Quaternion::new(0.0, self.x1, self.x2, self.x3)
    }

    #[inline]
    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.x0, -self.x1, -self.x2, -self.x3)
    }

    #[inline]
    pub fn norm_sqr(&self) -> f64 {
        self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn inverse(&self) -> Option<Quaternion> {
        let n2 = self.norm_sqr();
        (n2 > 0.0).then(|| self.conj() / n2)
    }

    pub fn powi(&self, n: u32) -> Quaternion {
        (0..n).fold(Quaternion::ONE, |acc, _| acc * *self)
    }

    pub fn is_real(&self) -> bool {
        self.x1 == 0.0 && self.x2 == 0.0 && self.x3 == 0.0
    }

    pub fn to_array(self) -> [f64; 4] {
        self.into()
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(&self, other: &Quaternion) -> f64 {
        let d = *self - *other;
        d.x0.abs().max(d.x1.abs()).max(d.x2.abs()).max(d.x3.abs())
    }
}

/// Hamilton product.
#[inline]
pub fn qmul(a: Quaternion, b: Quaternion) -> Quaternion {
    Quaternion::new(
        a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
        a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
        a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
        a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0,
    )
}

impl Mul for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn mul(self, rhs: Quaternion) -> Quaternion {
        qmul(self, rhs)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;

    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn div(self, s: f64) -> Quaternion {
        Quaternion::new(self.x0 / s, self.x1 / s, self.x2 / s, self.x3 / s)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.x0 + o.x0, self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, o: Quaternion) {
        *self = *self + o;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.x0 - o.x0, self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, o: Quaternion) {
        *self = *self - o;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

impl std::iter::Sum for Quaternion {
    fn sum<I: Iterator<Item = Quaternion>>(iter: I) -> Quaternion {
        iter.fold(Quaternion::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}i {:+}j {:+}k", self.x0, self.x1, self.x2, self.x3)
    }
}

impl Hypercomplex for Quaternion {
    fn kind(&self) -> ScalarKind {
        ScalarKind::Quaternion
    }

    fn real_like(&self, r: f64) -> Self {
        Quaternion::real(r)
    }

    fn plus(&self, other: &Self) -> Self {
        *self + *other
    }

    fn minus(&self, other: &Self) -> Self {
        *self - *other
    }

    fn times(&self, other: &Self) -> Self {
        qmul(*self, *other)
    }

    fn scaled(&self, s: f64) -> Self {
        *self * s
    }

    fn conj(&self) -> Self {
        Quaternion::conj(self)
    }

    fn norm_sqr(&self) -> f64 {
        Quaternion::norm_sqr(self)
    }

    fn real_part(&self) -> f64 {
        self.x0
    }

    fn is_slice_variable(&self) -> bool {
        true
    }

    fn vector_part(&self) -> Self {
        self.im()
    }

    fn default_unit(&self) -> Self {
        Quaternion::I
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const I: Quaternion = Quaternion::I;
    const J: Quaternion = Quaternion::J;
    const K: Quaternion = Quaternion::K;

    #[test]
    fn defining_relations() {
        let m1 = Quaternion::real(-1.0);
        assert_eq!(I * I, m1);
        assert_eq!(J * J, m1);
        assert_eq!(K * K, m1);
        assert_eq!(I * J, K);
        assert_eq!(J * K, I);
        assert_eq!(K * I, J);
        assert_eq!(J * I, -K);
    }

    #[test]
    fn one_plus_i_times_one_minus_i() {
        let a = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        assert_eq!(a * a.conj(), Quaternion::real(2.0));
    }

    #[test]
    fn bilinear_expansion() {
        // (i + j)(j + k) = ij + ik + jj + jk = k - j - 1 + i
        let a = I + J;
        let b = J + K;
        assert_eq!(a * b, Quaternion::new(-1.0, 1.0, -1.0, 1.0));
    }

    #[test]
    fn inverse_and_powers() {
        let q = Quaternion::new(1.0, 2.0, -1.0, 0.5);
        let inv = q.inverse().unwrap();
        assert!((q * inv).max_abs_diff(&Quaternion::ONE) < 1e-15);
        assert!(Quaternion::ZERO.inverse().is_none());
        assert_eq!(J.powi(4), Quaternion::ONE);
        assert_eq!(J.powi(3), -J);
    }

    #[test]
    fn json_is_a_flat_array() {
        let q = Quaternion::new(1.0, -2.0, 0.5, 3.0);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, "[1.0,-2.0,0.5,3.0]");
        let back: Quaternion = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }
}
