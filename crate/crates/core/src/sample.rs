//! Random draws used by the property sweeps and the verification suite.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::fock::factorial;
use crate::hypercomplex::{Hypercomplex, ImaginaryUnit, Multivector, Quaternion};
use crate::slicefun::SliceSeries;
use crate::tensor::{FockVector, HVector, TensorWord};

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

/// Scalars that can be drawn at random in the algebra of a template value.
pub trait RandomScalar: Hypercomplex {
    /// Every component standard normal.
    fn random_gaussian<R: Rng + ?Sized>(like: &Self, rng: &mut R) -> Self;

    /// A slice variable (quaternion or paravector) uniform in the ball of
    /// the given radius.
    fn random_point<R: Rng + ?Sized>(like: &Self, rng: &mut R, radius: f64) -> Self;

    /// A uniformly distributed imaginary unit.
    fn random_unit<R: Rng + ?Sized>(like: &Self, rng: &mut R) -> ImaginaryUnit<Self> {
        loop {
            let v = Self::random_point(like, rng, 1.0).vector_part();
            if v.norm() > 1e-3 {
                return ImaginaryUnit::from_direction(&v).expect("nonzero direction");
            }
        }
    }
}

fn ball_point<R: Rng + ?Sized>(rng: &mut R, dim: usize, radius: f64) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| normal(rng)).collect();
        let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if len > 1e-12 {
            let r = radius * rng.random::<f64>().powf(1.0 / dim as f64);
            return v.into_iter().map(|x| x * r / len).collect();
        }
    }
}

impl RandomScalar for Quaternion {
    fn random_gaussian<R: Rng + ?Sized>(_: &Self, rng: &mut R) -> Self {
        Quaternion::new(normal(rng), normal(rng), normal(rng), normal(rng))
    }

    fn random_point<R: Rng + ?Sized>(_: &Self, rng: &mut R, radius: f64) -> Self {
        let v = ball_point(rng, 4, radius);
        Quaternion::new(v[0], v[1], v[2], v[3])
    }
}

impl RandomScalar for Multivector {
    fn random_gaussian<R: Rng + ?Sized>(like: &Self, rng: &mut R) -> Self {
        let n = like.generators();
        Multivector::from_coeffs(n, (0..1usize << n).map(|_| normal(rng)).collect()).expect("valid size")
    }

    fn random_point<R: Rng + ?Sized>(like: &Self, rng: &mut R, radius: f64) -> Self {
        let n = like.generators();
        let v = ball_point(rng, n + 1, radius);
        let mut m = Multivector::scalar(n, v[0]);
        for j in 0..n {
            m.set(1 << j, v[j + 1]);
        }
        m
    }
}

/// Degree-`deg` series with standard normal coefficients.
pub fn random_series<S: RandomScalar, R: Rng + ?Sized>(like: &S, deg: usize, rng: &mut R) -> SliceSeries<S> {
    SliceSeries::new((0..=deg).map(|_| S::random_gaussian(like, rng)).collect()).expect("uniform kind")
}

/// Degree-`deg` series with `aₙ = gₙ / √(n!)`, so every monomial carries
/// comparable Fock norm.
pub fn random_fock_series<S: RandomScalar, R: Rng + ?Sized>(like: &S, deg: usize, rng: &mut R) -> SliceSeries<S> {
    SliceSeries::new((0..=deg).map(|n| S::random_gaussian(like, rng).scaled(1.0 / factorial(n).sqrt())).collect())
        .expect("uniform kind")
}

/// A vector of `ℍ^d` with standard normal coordinates.
pub fn random_hvector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HVector {
    HVector::new((0..dim).map(|_| Quaternion::random_gaussian(&Quaternion::ZERO, rng)).collect())
}

/// A vector of `ℝ^d ⊂ ℍ^d` with standard normal coordinates.
pub fn random_real_hvector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HVector {
    HVector::new((0..dim).map(|_| Quaternion::real(normal(rng))).collect())
}

/// A word of `level` random factors; level 0 is the vacuum.
pub fn random_word<R: Rng + ?Sized>(dim: usize, level: usize, rng: &mut R) -> TensorWord {
    if level == 0 {
        return TensorWord::vacuum(dim);
    }
    TensorWord::new((0..level).map(|_| random_hvector(dim, rng)).collect()).expect("nonempty word")
}

/// A sum of `terms` random words at levels up to `max_level`, each with a
/// random right coefficient.
pub fn random_fock_vector<R: Rng + ?Sized>(dim: usize, max_level: usize, terms: usize, rng: &mut R) -> FockVector {
    let mut xi = FockVector::zero(dim);
    for _ in 0..terms {
        let level = rng.random_range(0..=max_level);
        let alpha = Quaternion::random_gaussian(&Quaternion::ZERO, rng);
        xi.add_assign(&random_word(dim, level, rng).expand().right_mul(alpha)).expect("same dimension");
    }
    xi
}
