use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slicefock::fock::factorial;
use slicefock::hypercomplex::{Hypercomplex, Quaternion};
use slicefock::sample::{random_hvector, random_real_hvector, RandomScalar};
use slicefock::tensor::{
    adjoint_residual, annihilate, brownian_cov, brownian_expectation, create, nested_inner, permanent, permutations,
    sym_double_sum_enumerated, sym_inner, sym_inner_induced, symmetrize, FockVector, HVector, TensorWord,
    DEFAULT_FACTORIAL_CAP,
};

fn gauss(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::random_gaussian(&Quaternion::ZERO, rng)
}

fn random_word(dim: usize, level: usize, rng: &mut ChaCha8Rng) -> TensorWord {
    if level == 0 {
        return TensorWord::vacuum(dim);
    }
    TensorWord::new((0..level).map(|_| random_hvector(dim, rng)).collect()).unwrap()
}

fn random_fock(dim: usize, max_level: usize, rng: &mut ChaCha8Rng) -> FockVector {
    let mut xi = FockVector::zero(dim);
    for _ in 0..rng.random_range(1..4) {
        let level = rng.random_range(0..=max_level);
        let term = random_word(dim, level, rng).expand().right_mul(gauss(rng));
        xi = xi.add(&term).unwrap();
    }
    xi
}

/// Right scalar on the last factor, left scalar on the first.
fn with_scalars(w: &TensorWord, lambda: Quaternion, alpha: Quaternion) -> TensorWord {
    let mut fs = w.factors().to_vec();
    let last = fs.len() - 1;
    fs[last] = fs[last].right_mul(alpha);
    fs[0] = fs[0].left_mul(lambda);
    TensorWord::new(fs).unwrap()
}

fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
    a.distance(&b) <= tol * (1.0 + a.norm().max(b.norm()))
}

#[test]
fn nested_inner_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for _ in 0..1000 {
        let dim = rng.random_range(1..=3);
        let level = rng.random_range(1..=4);
        let u = random_word(dim, level, &mut rng);
        let v = random_word(dim, level, &mut rng);
        let (alpha, beta, lambda) = (gauss(&mut rng), gauss(&mut rng), gauss(&mut rng));
        let uv = nested_inner(&u, &v).unwrap();

        let lhs = nested_inner(&with_scalars(&u, Quaternion::ONE, alpha), &with_scalars(&v, Quaternion::ONE, beta)).unwrap();
        assert!(close(lhs, beta.conj() * uv * alpha, 1e-12));

        let left = nested_inner(&u, &with_scalars(&v, lambda, Quaternion::ONE)).unwrap();
        let right = nested_inner(&with_scalars(&u, lambda.conj(), Quaternion::ONE), &v).unwrap();
        assert!(close(left, right, 1e-12));

        assert!(close(nested_inner(&v, &u).unwrap().conj(), uv, 1e-12));

        // the nesting agrees with the expanded pairing
        assert!(close(u.expand().inner(&v.expand()).unwrap(), uv, 1e-12));
    }
}

#[test]
fn nested_inner_is_positive_on_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..200 {
        let xi = random_fock(3, 4, &mut rng);
        let v = xi.inner(&xi).unwrap();
        assert!(v.im().norm() <= 1e-14 * v.x0.max(1.0));
        assert!((v.x0 - xi.norm_sqr()).abs() <= 1e-12 * xi.norm_sqr().max(1.0));
    }
}

#[test]
fn creation_and_annihilation_are_adjoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let u = random_hvector(3, &mut rng);
        let xi = random_fock(3, 4, &mut rng);
        let eta = random_fock(3, 4, &mut rng);
        let scale = 1.0 + u.norm_sqr().sqrt() * xi.norm() * eta.norm();
        worst = worst.max(adjoint_residual(&u, &xi, &eta).unwrap() / scale);
    }
    assert!(worst <= 1e-12, "worst {worst}");
}

#[test]
fn creation_scales_norms() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..500 {
        let dim = rng.random_range(1..=3);
        let u = random_hvector(dim, &mut rng);
        let xi = random_fock(dim, 3, &mut rng);
        let got = create(&u, &xi).unwrap().norm();
        let want = u.norm_sqr().sqrt() * xi.norm();
        assert!((got - want).abs() <= 1e-12 * want.max(1.0));
        assert!(annihilate(&u, &FockVector::vacuum(dim)).unwrap().is_zero());
    }
}

#[test]
fn creation_is_additive_and_two_sided_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..500 {
        let u = random_hvector(3, &mut rng);
        let w = random_hvector(3, &mut rng);
        let xi = random_fock(3, 3, &mut rng);
        let eta = random_fock(3, 4, &mut rng);
        let (lambda, alpha) = (gauss(&mut rng), gauss(&mut rng));
        let pair = |a: &FockVector| a.inner(&eta).unwrap();

        let sum = create(&(&u + &w), &xi).unwrap();
        let parts = create(&u, &xi).unwrap().add(&create(&w, &xi).unwrap()).unwrap();
        assert!(close(pair(&sum), pair(&parts), 1e-12));

        // T_{λu} = λ T_u
        let left = create(&u.left_mul(lambda), &xi).unwrap();
        assert!(close(pair(&left), pair(&create(&u, &xi).unwrap().left_mul(lambda)), 1e-12));

        // T_{uα} ξ = T_u (α ξ)
        let right = create(&u.right_mul(alpha), &xi).unwrap();
        assert!(close(pair(&right), pair(&create(&u, &xi.left_mul(alpha)).unwrap()), 1e-12));

        // T_u (ξ α) = (T_u ξ) α
        let outer = create(&u, &xi.right_mul(alpha)).unwrap();
        assert!(close(pair(&outer), pair(&create(&u, &xi).unwrap().right_mul(alpha)), 1e-12));
    }
}

#[test]
fn subset_recursion_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for n in 1..=6 {
        for _ in 0..10 {
            let u = random_word(2, n, &mut rng);
            let v = random_word(2, n, &mut rng);
            let sum = sym_double_sum_enumerated(&u, &v, DEFAULT_FACTORIAL_CAP).unwrap();
            let fast = sym_inner(&u, &v, DEFAULT_FACTORIAL_CAP).unwrap() * Quaternion::real(factorial(n));
            assert!(close(fast, sum, 1e-12), "n={n}");
        }
    }
}

#[test]
fn symmetric_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    for n in 1..=6 {
        // symmetrizing expands dⁿ·n! terms; keep the expansion small at high level
        let dim = if n <= 4 { 3 } else { 2 };
        for _ in 0..20 {
            let u = random_word(dim, n, &mut rng);
            let v = random_word(dim, n, &mut rng);
            let induced = sym_inner_induced(&u, &v, DEFAULT_FACTORIAL_CAP).unwrap();
            let symmetric = sym_inner(&u, &v, DEFAULT_FACTORIAL_CAP).unwrap();
            assert!(close(symmetric, induced * Quaternion::real(factorial(n)), 1e-12));

            let su = symmetrize(&u, DEFAULT_FACTORIAL_CAP).unwrap();
            let sv = symmetrize(&v, DEFAULT_FACTORIAL_CAP).unwrap();
            assert!(close(su.inner(&sv).unwrap(), induced, 1e-12));

            let perms = permutations(n);
            let sigma = &perms[rng.random_range(0..perms.len())];
            let again = symmetrize(&u.permuted(sigma), DEFAULT_FACTORIAL_CAP).unwrap();
            assert!(again.max_abs_diff(&su) <= 1e-12 * (1.0 + su.norm()));
        }
    }
    let too_long = random_word(1, DEFAULT_FACTORIAL_CAP + 1, &mut rng);
    assert!(symmetrize(&too_long, DEFAULT_FACTORIAL_CAP).is_err());
}

#[test]
fn powers_of_a_unit_vector() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let e1 = HVector::basis(1, 0);
    for n in 1..=8 {
        let word = TensorWord::new(vec![e1.clone(); n]).unwrap();
        assert_eq!(sym_inner(&word, &word, DEFAULT_FACTORIAL_CAP).unwrap(), Quaternion::real(factorial(n)));
        let mut p = random_hvector(3, &mut rng);
        p = p.right_mul(Quaternion::real(1.0 / p.norm_sqr().sqrt()));
        let word = TensorWord::new(vec![p; n]).unwrap();
        let got = sym_inner(&word, &word, DEFAULT_FACTORIAL_CAP).unwrap();
        assert!(close(got, Quaternion::real(factorial(n)), 1e-12));
    }
}

fn naive_permanent(a: &[Vec<Quaternion>]) -> Quaternion {
    permutations(a.len())
        .iter()
        .map(|sigma| sigma.iter().enumerate().fold(Quaternion::ONE, |acc, (i, &j)| acc * a[i][j]))
        .sum()
}

#[test]
fn ryser_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(48);
    for n in 1..=6 {
        for _ in 0..10 {
            let a: Vec<Vec<Quaternion>> =
                (0..n).map(|_| (0..n).map(|_| Quaternion::real(rng.random_range(-5..=5) as f64)).collect()).collect();
            assert_eq!(permanent(&a).unwrap(), naive_permanent(&a));
            // complex entries inside one slice commute too
            let c: Vec<Vec<Quaternion>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Quaternion::new(rng.random_range(-3..=3) as f64, 0.0, rng.random_range(-3..=3) as f64, 0.0))
                        .collect()
                })
                .collect();
            assert_eq!(permanent(&c).unwrap(), naive_permanent(&c));
        }
    }
    let mixed = vec![vec![Quaternion::I, Quaternion::ONE], vec![Quaternion::ONE, Quaternion::J]];
    assert!(permanent(&mixed).is_err());
}

#[test]
fn commuting_symmetric_inner_is_a_permanent() {
    let mut rng = ChaCha8Rng::seed_from_u64(49);
    for n in 1..=6 {
        for _ in 0..10 {
            let us: Vec<HVector> = (0..n).map(|_| random_real_hvector(3, &mut rng)).collect();
            let vs: Vec<HVector> = (0..n).map(|_| random_real_hvector(3, &mut rng)).collect();
            let gram: Vec<Vec<Quaternion>> = us.iter().map(|u| vs.iter().map(|v| u.inner(v).unwrap()).collect()).collect();
            let u = TensorWord::new(us).unwrap();
            let v = TensorWord::new(vs).unwrap();
            let got = sym_inner(&u, &v, DEFAULT_FACTORIAL_CAP).unwrap();
            let per = permanent(&gram).unwrap();
            assert!(close(got, per, 1e-12), "n={n}: {got:?} vs {per:?}");
        }
    }
}

#[test]
fn brownian_covariance_is_the_minimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for _ in 0..1000 {
        let t = rng.random_range(0.0..=10.0);
        let s = rng.random_range(0.0..=10.0);
        let want = Quaternion::real(f64::min(t, s));
        assert!(brownian_cov(t, s).unwrap().distance(&want) <= 1e-12);
        assert!(brownian_expectation(s, t).unwrap().distance(&want) <= 1e-12);
    }
    assert!(brownian_cov(-1.0, 2.0).is_err());
}
