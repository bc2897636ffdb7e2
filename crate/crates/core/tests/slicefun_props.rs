use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slicefock::hypercomplex::{Hypercomplex, ImaginaryUnit, Multivector, Quaternion};
use slicefock::sample::{random_series, RandomScalar};
use slicefock::slicefun::{left_cauchy_riemann_residual, right_cauchy_riemann_residual};
use slicefock::{representation_extend, star_exp, star_mul, SliceSeries};

/// Naive evaluation: Σ (p·p·…·p) aₘ with powers built by repeated
/// multiplication, independent of the Horner path.
fn eval_by_powers<S: Hypercomplex>(f: &SliceSeries<S>, p: &S) -> S {
    let mut pow = p.one_like();
    let mut acc = p.zero_like();
    for a in f.coeffs() {
        acc = acc.plus(&pow.times(a));
        pow = pow.times(p);
    }
    acc
}

fn extension_sweep<S: RandomScalar>(like: S, seed: u64, targets: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..targets {
        let deg = rng.random_range(0..=10);
        let f = random_series(&like, deg, &mut rng);
        let slice = S::random_unit(&like, &mut rng);
        let target = S::random_point(&like, &mut rng, 1.5);
        let ext = representation_extend(|p| eval_by_powers(&f, p), &slice, &target).unwrap();
        let direct = f.eval(&target).unwrap();
        let rel = ext.distance(&direct) / direct.norm().max(1.0);
        worst = worst.max(rel);

        let (x, y) = (rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
        let on_slice = slice.point(x, y);
        let same = representation_extend(|p| f.eval(p).unwrap(), &slice, &on_slice).unwrap();
        assert_eq!(same, f.eval(&on_slice).unwrap());
    }
    assert!(worst <= 1e-10, "worst relative error {worst}");
}

#[test]
fn representation_formula_reproduces_polynomials() {
    extension_sweep(Quaternion::ZERO, 10, 1000);
    extension_sweep(Multivector::zero(2), 11, 300);
    extension_sweep(Multivector::zero(3), 12, 300);
}

#[test]
fn horner_agrees_with_power_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let f = random_series(&Quaternion::ZERO, 8, &mut rng);
        let p = Quaternion::random_point(&Quaternion::ZERO, &mut rng, 2.0);
        let a = f.eval(&p).unwrap();
        assert!(a.distance(&eval_by_powers(&f, &p)) <= 1e-12 * a.norm().max(1.0));
    }
}

fn int_series(rng: &mut ChaCha8Rng, deg: usize) -> SliceSeries<Quaternion> {
    let mut c = || f64::from(rng.random_range(-5i32..=5));
    SliceSeries::new((0..=deg).map(|_| Quaternion::new(c(), c(), c(), c())).collect()).unwrap()
}

#[test]
fn star_product_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let (df, dg, dh) = (rng.random_range(0..=5), rng.random_range(0..=5), rng.random_range(0..=5));
        let f = int_series(&mut rng, df);
        let g = int_series(&mut rng, dg);
        let h = int_series(&mut rng, dh);
        let left = star_mul(&star_mul(&f, &g, None).unwrap(), &h, None).unwrap();
        let right = star_mul(&f, &star_mul(&g, &h, None).unwrap(), None).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn star_product_is_pointwise_for_real_coefficients() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..500 {
        let f = random_series(&Quaternion::ZERO, 5, &mut rng).map_coeffs(|c| Quaternion::real(c.x0));
        let g = random_series(&Quaternion::ZERO, 4, &mut rng).map_coeffs(|c| Quaternion::real(c.x0));
        let p = Quaternion::random_point(&Quaternion::ZERO, &mut rng, 1.5);
        let lhs = star_mul(&f, &g, None).unwrap().eval(&p).unwrap();
        let rhs = f.eval(&p).unwrap() * g.eval(&p).unwrap();
        assert!(lhs.distance(&rhs) <= 1e-12 * rhs.norm().max(1.0));
    }
}

#[test]
fn star_exp_is_additive_for_commuting_parameters() {
    let n = 40;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let s = rng.random_range(-2.0..2.0);
        let t = rng.random_range(-2.0..2.0);
        let lhs = star_exp(&Quaternion::real(s + t), n);
        let rhs = star_mul(&star_exp(&Quaternion::real(s), n), &star_exp(&Quaternion::real(t), n), Some(n)).unwrap();
        for (a, b) in lhs.coeffs().iter().zip(rhs.coeffs()) {
            assert!(a.distance(b) <= 1e-14 * a.norm().max(1e-300).max(1.0));
        }
    }
}

#[test]
fn series_satisfy_the_left_cauchy_riemann_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..300 {
        let f = random_series(&Quaternion::ZERO, rng.random_range(0..=8), &mut rng);
        let unit = Quaternion::random_unit(&Quaternion::ZERO, &mut rng);
        let (x, y) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let r = left_cauchy_riemann_residual(|p| f.eval(p).unwrap(), &unit, x, y, 1e-5);
        assert!(r <= 1e-6, "residual {r}");
    }
    let like = Multivector::zero(3);
    for _ in 0..100 {
        let f = random_series(&like, 6, &mut rng);
        let unit = Multivector::random_unit(&like, &mut rng);
        let r = left_cauchy_riemann_residual(|p| f.eval(p).unwrap(), &unit, 0.4, -0.3, 1e-5);
        assert!(r <= 1e-6, "residual {r}");
    }
}

#[test]
fn star_exponential_is_right_regular_in_its_parameter() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let p = Quaternion::random_point(&Quaternion::ZERO, &mut rng, 1.0);
        let unit = Quaternion::random_unit(&Quaternion::ZERO, &mut rng);
        let g = |q: &Quaternion| star_exp(q, 40).eval(&p).unwrap();
        let (x, y) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let right = right_cauchy_riemann_residual(g, &unit, x, y, 1e-5);
        assert!(right <= 1e-6, "right residual {right}");
    }
}

#[test]
fn clifford_star_exponential_extends_the_complex_exponential() {
    // e^{zy} restricted to ℂ_J, extended by the Representation Formula,
    // equals e_⋆^{xy} evaluated directly
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for n in [2usize, 3] {
        let like = Multivector::zero(n);
        for _ in 0..100 {
            let y = Multivector::random_point(&like, &mut rng, 1.0);
            let series = star_exp(&y, 40);
            let slice: ImaginaryUnit<Multivector> = Multivector::random_unit(&like, &mut rng);
            let on_slice = |z: &Multivector| eval_by_powers(&series, z);
            let target = Multivector::random_point(&like, &mut rng, 1.0);
            let ext = representation_extend(on_slice, &slice, &target).unwrap();
            assert!(ext.distance(&series.eval(&target).unwrap()) < 1e-12);
        }
    }
}
