//! The cross-characterization suite behind `slicefock verify`.
//!
//! Each check draws from its own ChaCha stream, keyed by the run seed and a
//! fixed stream id, so rows do not depend on which other checks ran.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slicefock::fock::{factorial, hermitian_form, kernel_gram_matrix};
use slicefock::hypercomplex::{cl_paravector_norm, qmul, slice_decompose, Multivector, Paravector};
use slicefock::quad::quad_norm_sqr;
use slicefock::sample::{
    random_fock_series, random_fock_vector, random_hvector, random_real_hvector, random_series, random_word,
    RandomScalar,
};
use slicefock::tensor::{
    adjoint_residual, annihilate, brownian_cov, brownian_expectation, create, nested_inner, permanent, permutations,
    sym_inner, sym_inner_induced, symmetrize, HVector, TensorWord, DEFAULT_FACTORIAL_CAP,
};
use slicefock::{
    build_grid, cl_mul, fock_inner, kernel, kernel_gram, membership, quad_inner, representation_extend, reproduce,
    slice_independence_check, star_exp, star_mul, FockElement, Hypercomplex, Quaternion, QuadratureGrid, SliceSeries,
    Tail, TailModel, Verdict,
};

use crate::config::RunConfig;
use crate::error::Result;
use crate::report::{Report, Row};
use crate::tolerances;

/// The generator counts of the Clifford algebras covered alongside ℍ.
pub const CLIFFORD_GENERATORS: [usize; 2] = [2, 3];

pub fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

fn kind_of<S: Hypercomplex>(like: &S) -> String {
    like.kind().to_string()
}

fn grid_label(grid: &QuadratureGrid) -> String {
    format!("R={} M={}", grid.radial(), grid.angular())
}

/// `|x − y| / (1 + |y|)`.
fn rel<S: Hypercomplex>(x: &S, y: &S) -> f64 {
    x.distance(y) / (1.0 + y.norm())
}

/// `⟨pⁿ, pᵐ⟩ = δₙₘ n!` by quadrature on a random slice and by coefficients.
/// Off-diagonal quadrature values are compared against `‖pⁿ‖‖pᵐ‖`, the
/// size of the cancelling terms.
pub fn monomial_orthogonality<S: RandomScalar>(
    like: &S,
    grid: &QuadratureGrid,
    nmax: usize,
    tol: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Row>> {
    let unit = S::random_unit(like, rng);
    let monomials: Vec<FockElement<S>> =
        (0..=nmax).map(|n| SliceSeries::monomial(n, like.one_like()).into()).collect();
    let (mut quad_worst, mut coeff_worst, mut covered) = (0.0f64, 0.0f64, true);
    for (n, f) in monomials.iter().enumerate() {
        for (m, g) in monomials.iter().enumerate() {
            let want = like.real_like(if n == m { factorial(n) } else { 0.0 });
            let q = quad_inner(f.series(), g.series(), &unit, grid)?;
            covered &= q.warning.is_none();
            quad_worst = quad_worst.max(q.value.distance(&want) / (1.0 + (factorial(n) * factorial(m)).sqrt()));
            coeff_worst = coeff_worst.max(fock_inner(f, g)?.distance(&want));
        }
    }
    let params = format!("kind={} {} nmax={nmax}", kind_of(like), grid_label(grid));
    let note = if covered { "exact-grid" } else { "grid-too-coarse" };
    Ok(vec![
        Row::new(
            "monomial-orthogonality/quad",
            params.clone(),
            note.into(),
            if covered { quad_worst } else { f64::INFINITY },
            tol,
        )
        .ops(&["quad_inner", "eval"]),
        Row::new("monomial-orthogonality/coeff", params, String::new(), coeff_worst, tolerances::EXACT)
            .ops(&["fock_inner"]),
    ])
}

/// `⟨f, g⟩_I = ⟨f, g⟩_J` for random series and random pairs of slices.
pub fn slice_independence<S: RandomScalar>(
    like: &S,
    grid: &QuadratureGrid,
    pairs: usize,
    max_deg: usize,
    tol: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Row> {
    let (mut worst, mut covered) = (0.0f64, true);
    for _ in 0..pairs {
        let f = random_series(like, rng.random_range(0..=max_deg), rng);
        let g = random_series(like, rng.random_range(0..=max_deg), rng);
        let i = S::random_unit(like, rng);
        let j = S::random_unit(like, rng);
        let report = slice_independence_check(&f, &g, &i, &j, grid, tol)?;
        covered &= report.warning.is_none();
        worst = worst.max(report.difference / (1.0 + report.value_i.norm()));
    }
    Ok(Row::new(
        "slice-independence",
        format!("kind={} {} pairs={pairs} max_deg={max_deg}", kind_of(like), grid_label(grid)),
        if covered { "exact-grid" } else { "grid-too-coarse" }.into(),
        if covered { worst } else { f64::INFINITY },
        tol,
    )
    .ops(&["slice_independence_check", "quad_inner"]))
}

/// `⟨f, k_q⟩ = f(q)` through coefficients at equal truncation.
pub fn reproducing_coeff<S: RandomScalar>(like: &S, draws: usize, max_deg: usize, rng: &mut ChaCha8Rng) -> Result<Row> {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let f: FockElement<S> = random_fock_series(like, rng.random_range(0..=max_deg), rng).into();
        let q = S::random_point(like, rng, 2.0);
        let (paired, direct) = reproduce(&f, &q)?;
        worst = worst.max(paired.distance(&direct));
    }
    Ok(Row::new(
        "reproducing/coeff",
        format!("kind={} draws={draws} max_deg={max_deg} radius=2", kind_of(like)),
        String::new(),
        worst,
        tolerances::REPRODUCING_COEFF,
    )
    .ops(&["reproduce", "kernel", "fock_inner", "eval"]))
}

/// `⟨f, k_q⟩ = f(q)` with the pairing integrated on a random slice.
pub fn reproducing_quad<S: RandomScalar>(
    like: &S,
    trunc: usize,
    grid: &QuadratureGrid,
    draws: usize,
    max_deg: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Row> {
    let (mut worst, mut covered) = (0.0f64, true);
    for _ in 0..draws {
        let f = random_fock_series(like, rng.random_range(0..=max_deg), rng);
        let q = S::random_point(like, rng, 2.0);
        let unit = S::random_unit(like, rng);
        let k = kernel(&q, trunc);
        let paired = quad_inner(&f, k.series(), &unit, grid)?;
        covered &= paired.warning.is_none();
        worst = worst.max(rel(&paired.value, &f.eval(&q)?));
    }
    Ok(Row::new(
        "reproducing/quad",
        format!("kind={} N={trunc} {} draws={draws} max_deg={max_deg} radius=2", kind_of(like), grid_label(grid)),
        if covered { "exact-grid" } else { "grid-too-coarse" }.into(),
        if covered { worst } else { f64::INFINITY },
        tolerances::REPRODUCING_QUAD,
    )
    .ops(&["kernel", "quad_inner", "eval"]))
}

/// `⟨k_q, k_s⟩ = Σ sⁿ q̄ⁿ / n!` against the coefficient pairing.
pub fn kernel_gram_identity<S: RandomScalar>(like: &S, trunc: usize, pairs: usize, rng: &mut ChaCha8Rng) -> Result<Row> {
    let mut worst = 0.0f64;
    for _ in 0..pairs {
        let q = S::random_point(like, rng, 2.0);
        let s = S::random_point(like, rng, 2.0);
        let closed = kernel_gram(&q, &s, trunc)?;
        let paired = fock_inner(&kernel(&q, trunc), &kernel(&s, trunc))?;
        worst = worst.max(rel(&closed, &paired));
    }
    Ok(Row::new(
        "kernel-gram/coeff",
        format!("kind={} N={trunc} pairs={pairs} radius=2", kind_of(like)),
        String::new(),
        worst,
        tolerances::KERNEL_GRAM,
    )
    .ops(&["kernel_gram", "kernel", "fock_inner"]))
}

/// `⟨k_q, k_s⟩` by quadrature against the closed form.
pub fn kernel_gram_quad<S: RandomScalar>(
    like: &S,
    trunc: usize,
    grid: &QuadratureGrid,
    pairs: usize,
    tol: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Row> {
    let (mut worst, mut covered) = (0.0f64, true);
    for _ in 0..pairs {
        let q = S::random_point(like, rng, 2.0);
        let s = S::random_point(like, rng, 2.0);
        let unit = S::random_unit(like, rng);
        let v = quad_inner(kernel(&q, trunc).series(), kernel(&s, trunc).series(), &unit, grid)?;
        covered &= v.warning.is_none();
        worst = worst.max(rel(&v.value, &kernel_gram(&q, &s, trunc)?));
    }
    Ok(Row::new(
        "kernel-gram/quad",
        format!("kind={} N={trunc} {} pairs={pairs} radius=2", kind_of(like), grid_label(grid)),
        if covered { "exact-grid" } else { "grid-too-coarse" }.into(),
        if covered { worst } else { f64::INFINITY },
        tol,
    )
    .ops(&["kernel_gram", "quad_inner"]))
}

/// `Σ β̄ᵢ Gᵢⱼ βⱼ = ‖Σ k_{qⱼ} βⱼ‖² ≥ 0` for Gram matrices of random points.
pub fn kernel_positivity<S: RandomScalar>(
    like: &S,
    trunc: usize,
    sets: usize,
    points: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Row> {
    let mut worst = 0.0f64;
    let mut min_form = f64::INFINITY;
    for _ in 0..sets {
        let qs: Vec<S> = (0..points).map(|_| S::random_point(like, rng, 2.0)).collect();
        let gram = kernel_gram_matrix(&qs, trunc)?;
        for _ in 0..10 {
            let beta: Vec<S> = (0..points).map(|_| S::random_gaussian(like, rng)).collect();
            let form = hermitian_form(&gram, &beta).real_part();
            let mut combo = SliceSeries::constant(like.zero_like());
            for (q, b) in qs.iter().zip(&beta) {
                combo = combo.add(&kernel(q, trunc).series().right_mul(b))?;
            }
            let norm = FockElement::new(combo).norm_sqr();
            min_form = min_form.min(form);
            worst = worst.max((form - norm).abs() / (1.0 + norm));
            if form < 0.0 {
                worst = f64::INFINITY;
            }
        }
    }
    Ok(Row::new(
        "kernel-gram/positivity",
        format!("kind={} N={trunc} sets={sets} points={points}", kind_of(like)),
        format!("min_form={min_form:e}"),
        worst,
        tolerances::KERNEL_GRAM,
    )
    .ops(&["kernel_gram", "kernel"]))
}

/// Quadrature `‖f‖²` of random polynomials against `Σ m! |aₘ|²`.
pub fn series_characterization<S: RandomScalar>(
    like: &S,
    grid: &QuadratureGrid,
    draws: usize,
    max_deg: usize,
    tol: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Row> {
    let (mut worst, mut covered) = (0.0f64, true);
    for _ in 0..draws {
        let f: FockElement<S> = random_series(like, rng.random_range(0..=max_deg), rng).into();
        let unit = S::random_unit(like, rng);
        covered &= grid.covers(f.degree(), f.degree());
        let geometric = quad_norm_sqr(f.series(), &unit, grid)?;
        worst = worst.max((geometric - f.norm_sqr()).abs() / (1.0 + f.norm_sqr()));
    }
    Ok(Row::new(
        "series-characterization",
        format!("kind={} {} draws={draws} max_deg={max_deg}", kind_of(like), grid_label(grid)),
        if covered { "exact-grid" } else { "grid-too-coarse" }.into(),
        if covered { worst } else { f64::INFINITY },
        tol,
    )
    .ops(&["quad_inner", "eval"]))
}

/// Verdicts for a kernel with its factorial tail, the all-ones series and
/// the zero element.
pub fn membership_consistency<S: RandomScalar>(like: &S, trunc: usize, draws: usize, rng: &mut ChaCha8Rng) -> Result<Row> {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let q = S::random_point(like, rng, 2.0);
        let expected = q.norm_sqr().exp();
        worst = worst.max(match membership(&kernel(&q, trunc), Tail::Modeled(TailModel::factorial(1.0, q.norm()))) {
            Verdict::FiniteNorm { partial, bound } if partial <= bound => (bound - expected).abs() / expected,
            _ => f64::INFINITY,
        });
    }
    let ones: FockElement<S> = SliceSeries::new(vec![like.one_like(); trunc + 1])?.into();
    let ones_verdict = membership(&ones, Tail::Modeled(TailModel { c: 1.0, r: 1.0, s: 0.0 }));
    if !matches!(ones_verdict, Verdict::Divergent { .. }) {
        worst = f64::INFINITY;
    }
    let zero: FockElement<S> = SliceSeries::constant(like.zero_like()).into();
    if membership(&zero, Tail::Exact) != (Verdict::FiniteNorm { partial: 0.0, bound: 0.0 }) {
        worst = f64::INFINITY;
    }
    Ok(Row::new(
        "membership",
        format!("kind={} N={trunc} draws={draws}", kind_of(like)),
        "kernel=finite ones=divergent zero=finite".into(),
        worst,
        tolerances::ALGEBRA,
    )
    .ops(&["membership", "kernel"]))
}

/// Extension from one slice against direct evaluation, and the exact
/// collapse for targets already on the slice.
pub fn representation_formula<S: RandomScalar>(
    like: &S,
    targets: usize,
    max_deg: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Row>> {
    let (mut worst, mut same_worst) = (0.0f64, 0.0f64);
    for _ in 0..targets {
        let f = random_series(like, rng.random_range(0..=max_deg), rng);
        let slice = S::random_unit(like, rng);
        let target = S::random_point(like, rng, 1.5);
        let on_slice = |p: &S| f.eval(p).expect("slice points");
        let direct = f.eval(&target)?;
        let extended = representation_extend(on_slice, &slice, &target)?;
        worst = worst.max(extended.distance(&direct) / direct.norm().max(1.0));

        let (x, y) = (rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
        let p = slice.point(x, y);
        same_worst = same_worst.max(representation_extend(on_slice, &slice, &p)?.distance(&f.eval(&p)?));
    }
    let params = format!("kind={} targets={targets} max_deg={max_deg} radius=1.5", kind_of(like));
    Ok(vec![
        Row::new("representation-formula", params.clone(), String::new(), worst, tolerances::REPRESENTATION)
            .ops(&["representation_extend", "slice_decompose", "eval"]),
        Row::new("representation-formula/same-slice", params, String::new(), same_worst, tolerances::EXACT)
            .ops(&["representation_extend"]),
    ])
}

/// Right scalar on the last factor, left scalar on the first.
fn with_scalars(w: &TensorWord, lambda: Quaternion, alpha: Quaternion) -> TensorWord {
    let mut fs = w.factors().to_vec();
    let last = fs.len() - 1;
    fs[last] = fs[last].right_mul(alpha);
    fs[0] = fs[0].left_mul(lambda);
    TensorWord::new(fs).expect("nonempty word")
}

fn gaussian(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::random_gaussian(&Quaternion::ZERO, rng)
}

/// Homogeneity, the additional property and conjugate symmetry of the
/// nested inner product on random words.
pub fn nested_axioms(draws: usize, max_dim: usize, max_level: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Row>> {
    let mut worst = [0.0f64; 3];
    for _ in 0..draws {
        let dim = rng.random_range(1..=max_dim);
        let level = rng.random_range(1..=max_level);
        let u = random_word(dim, level, rng);
        let v = random_word(dim, level, rng);
        let (alpha, beta, lambda) = (gaussian(rng), gaussian(rng), gaussian(rng));
        let uv = nested_inner(&u, &v)?;
        let one = Quaternion::ONE;

        let homogeneous = nested_inner(&with_scalars(&u, one, alpha), &with_scalars(&v, one, beta))?;
        worst[0] = worst[0].max(rel(&homogeneous, &(beta.conj() * uv * alpha)));
        let left = nested_inner(&u, &with_scalars(&v, lambda, one))?;
        let right = nested_inner(&with_scalars(&u, lambda.conj(), one), &v)?;
        worst[1] = worst[1].max(rel(&left, &right));
        worst[2] = worst[2].max(rel(&nested_inner(&v, &u)?.conj(), &uv));
    }
    let params = format!("draws={draws} max_dim={max_dim} max_level={max_level}");
    Ok(["nested-inner/homogeneity", "nested-inner/additional-property", "nested-inner/conjugate-symmetry"]
        .iter()
        .zip(worst)
        .map(|(check, w)| Row::new(check, params.clone(), String::new(), w, tolerances::TENSOR).ops(&["nested_inner"]))
        .collect())
}

/// `⟨T*_u ξ, η⟩ = ⟨ξ, T_u η⟩` on random unit-norm sums of words.
pub fn adjointness(draws: usize, dim: usize, max_level: usize, rng: &mut ChaCha8Rng) -> Result<Row> {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        // unit inputs, so the absolute residual is on the scale of the pairing
        let u = random_hvector(dim, rng);
        let u = u.right_mul(Quaternion::real(1.0 / u.norm_sqr().sqrt()));
        let xi = random_fock_vector(dim, max_level, 3, rng);
        let xi = xi.scale(1.0 / xi.norm());
        let eta = random_fock_vector(dim, max_level, 3, rng);
        let eta = eta.scale(1.0 / eta.norm());
        worst = worst.max(adjoint_residual(&u, &xi, &eta)?);
    }
    // the vacuum is annihilated
    if !annihilate(&random_hvector(dim, rng), &slicefock::tensor::FockVector::vacuum(dim))?.is_zero() {
        worst = f64::INFINITY;
    }
    Ok(Row::new(
        "adjointness",
        format!("draws={draws} dim={dim} max_level={max_level}"),
        String::new(),
        worst,
        tolerances::TENSOR,
    )
    .ops(&["adjoint_residual", "create", "annihilate"]))
}

/// `‖T_u ξ‖ = ‖u‖ ‖ξ‖`.
pub fn creation_isometry(draws: usize, dim: usize, max_level: usize, rng: &mut ChaCha8Rng) -> Result<Row> {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let u = random_hvector(dim, rng);
        let xi = random_fock_vector(dim, max_level, 3, rng);
        let want = u.norm_sqr().sqrt() * xi.norm();
        worst = worst.max((create(&u, &xi)?.norm() - want).abs() / (1.0 + want));
    }
    Ok(Row::new(
        "creation-isometry",
        format!("draws={draws} dim={dim} max_level={max_level}"),
        String::new(),
        worst,
        tolerances::TENSOR,
    )
    .ops(&["create"]))
}

/// `sym_inner = n! sym_inner_induced`, the symmetrized pairing, and
/// `⟨p^∘n, p^∘n⟩ = n!`.
pub fn symmetric_identities(max_n: usize, draws: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Row>> {
    let cap = DEFAULT_FACTORIAL_CAP;
    let mut factor_worst = 0.0f64;
    let mut projection_worst = 0.0f64;
    for n in 1..=max_n {
        for _ in 0..draws {
            let u = random_word(3, n, rng);
            let v = random_word(3, n, rng);
            let induced = sym_inner_induced(&u, &v, cap)?;
            let symmetric = sym_inner(&u, &v, cap)?;
            factor_worst = factor_worst.max(rel(&symmetric, &(induced * Quaternion::real(factorial(n)))));
        }
    }
    // symmetrizing expands dⁿ n! terms, so the projection checks stay small
    for n in 1..=max_n.min(4) {
        for _ in 0..draws {
            let u = random_word(2, n, rng);
            let v = random_word(2, n, rng);
            let su = symmetrize(&u, cap)?;
            let induced = sym_inner_induced(&u, &v, cap)?;
            projection_worst = projection_worst.max(rel(&su.inner(&symmetrize(&v, cap)?)?, &induced));
            let perms = permutations(n);
            let again = symmetrize(&u.permuted(&perms[rng.random_range(0..perms.len())]), cap)?;
            projection_worst = projection_worst.max(again.max_abs_diff(&su) / (1.0 + su.norm()));
        }
    }
    let mut power_worst = 0.0f64;
    let e1 = HVector::basis(1, 0);
    for n in 1..=cap {
        let w = TensorWord::new(vec![e1.clone(); n])?;
        power_worst = power_worst.max(sym_inner(&w, &w, cap)?.distance(&Quaternion::real(factorial(n))));
    }
    Ok(vec![
        Row::new(
            "symmetric/factorial-ratio",
            format!("max_n={max_n} draws={draws} dim=3"),
            String::new(),
            factor_worst,
            tolerances::TENSOR,
        )
        .ops(&["sym_inner", "sym_inner_induced"]),
        Row::new(
            "symmetric/projection",
            format!("max_n={} draws={draws} dim=2", max_n.min(4)),
            String::new(),
            projection_worst,
            tolerances::TENSOR,
        )
        .ops(&["symmetrize", "sym_inner_induced"]),
        Row::new("symmetric/power", format!("max_n={cap}"), String::new(), power_worst, tolerances::EXACT)
            .ops(&["sym_inner"]),
    ])
}

fn naive_permanent(a: &[Vec<Quaternion>]) -> Quaternion {
    permutations(a.len())
        .iter()
        .map(|sigma| sigma.iter().enumerate().fold(Quaternion::ONE, |acc, (i, &j)| acc * a[i][j]))
        .sum()
}

/// Ryser against enumeration on integer matrices, and the commuting-case
/// identity `sym_inner = per [⟨uᵢ, vⱼ⟩]`.
pub fn permanent_checks(max_n: usize, draws: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Row>> {
    let mut ryser_worst = 0.0f64;
    let mut commuting_worst = 0.0f64;
    for n in 1..=max_n {
        for _ in 0..draws {
            let a: Vec<Vec<Quaternion>> = (0..n)
                .map(|_| (0..n).map(|_| Quaternion::real(rng.random_range(-5..=5) as f64)).collect())
                .collect();
            ryser_worst = ryser_worst.max(permanent(&a)?.distance(&naive_permanent(&a)));

            let us: Vec<HVector> = (0..n).map(|_| random_real_hvector(3, rng)).collect();
            let vs: Vec<HVector> = (0..n).map(|_| random_real_hvector(3, rng)).collect();
            let gram = us.iter().map(|u| vs.iter().map(|v| u.inner(v)).collect()).collect::<Result<Vec<Vec<_>>, _>>()?;
            let per = permanent(&gram)?;
            let sym = sym_inner(&TensorWord::new(us)?, &TensorWord::new(vs)?, DEFAULT_FACTORIAL_CAP)?;
            commuting_worst = commuting_worst.max(rel(&sym, &per));
        }
    }
    Ok(vec![
        Row::new("permanent/ryser", format!("max_n={max_n} draws={draws} entries=int[-5,5]"), String::new(), ryser_worst, tolerances::EXACT)
            .ops(&["permanent"]),
        Row::new(
            "permanent/symmetric-commuting",
            format!("max_n={max_n} draws={draws} dim=3"),
            String::new(),
            commuting_worst,
            tolerances::TENSOR,
        )
        .ops(&["permanent", "sym_inner"]),
    ])
}

/// Maximum of `|⟨X(t)𝟏, X(s)𝟏⟩ − min{t,s}|` and of the operator-product
/// expectation over random time pairs in `[0, tmax]²`.
pub fn brownian_sweep(pairs: usize, tmax: f64, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..pairs {
        let t = rng.random_range(0.0..=tmax);
        let s = rng.random_range(0.0..=tmax);
        let want = Quaternion::real(t.min(s));
        worst = worst.max(brownian_cov(t, s)?.distance(&want));
        worst = worst.max(brownian_expectation(s, t)?.distance(&want));
    }
    Ok(worst)
}

pub fn brownian_covariance(pairs: usize, tmax: f64, rng: &mut ChaCha8Rng) -> Result<Row> {
    let worst = brownian_sweep(pairs, tmax, rng)?;
    Ok(Row::new(
        "brownian-covariance",
        format!("pairs={pairs} tmax={tmax}"),
        String::new(),
        worst,
        tolerances::TENSOR,
    )
    .ops(&["brownian_cov", "create", "annihilate"]))
}

/// Defining relations, `|ab| = |a||b|` and associativity in ℍ.
pub fn quaternion_algebra(draws: usize, rng: &mut ChaCha8Rng) -> Row {
    let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
    let minus_one = Quaternion::real(-1.0);
    let mut worst: f64 = [qmul(i, i), qmul(j, j), qmul(k, k), qmul(qmul(i, j), k)]
        .iter()
        .map(|q| q.distance(&minus_one))
        .fold(0.0, f64::max);
    for _ in 0..draws {
        let (a, b, c) = (gaussian(rng), gaussian(rng), gaussian(rng));
        let ab = qmul(a, b);
        worst = worst.max((ab.norm() - a.norm() * b.norm()).abs() / (a.norm() * b.norm()));
        worst = worst.max(rel(&qmul(ab, c), &qmul(a, qmul(b, c))));
    }
    Row::new("algebra/quaternion", format!("draws={draws}"), String::new(), worst, tolerances::ALGEBRA)
}

/// `eᵢeⱼ + eⱼeᵢ = −2δᵢⱼ`, associativity, and `x x̄ = |x|²` for paravectors.
pub fn clifford_algebra(n: usize, draws: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Row>> {
    let mut relations = 0.0f64;
    for a in 1..=n {
        for b in 1..=n {
            let (ea, eb) = (Multivector::generator(n, a), Multivector::generator(n, b));
            let anti = cl_mul(&ea, &eb)?.plus(&cl_mul(&eb, &ea)?);
            let want = Multivector::scalar(n, if a == b { -2.0 } else { 0.0 });
            relations = relations.max(anti.distance(&want));
        }
    }
    let like = Multivector::zero(n);
    let mut assoc = 0.0f64;
    let mut para = 0.0f64;
    for _ in 0..draws {
        let (a, b, c) = (
            Multivector::random_gaussian(&like, rng),
            Multivector::random_gaussian(&like, rng),
            Multivector::random_gaussian(&like, rng),
        );
        assoc = assoc.max(rel(&cl_mul(&cl_mul(&a, &b)?, &c)?, &cl_mul(&a, &cl_mul(&b, &c)?)?));
        let x = Paravector::try_from(Multivector::random_point(&like, rng, 2.0))?;
        let norm = cl_paravector_norm(x.as_multivector())?;
        let xx = cl_mul(x.as_multivector(), &x.conj().into_multivector())?;
        para = para.max(xx.distance(&Multivector::scalar(n, norm * norm)) / (1.0 + norm * norm));
    }
    Ok(vec![
        Row::new("algebra/clifford-relations", format!("n={n}"), String::new(), relations, tolerances::EXACT)
            .ops(&["cl_mul"]),
        Row::new("algebra/clifford-associativity", format!("n={n} draws={draws}"), String::new(), assoc, tolerances::ALGEBRA)
            .ops(&["cl_mul"]),
        Row::new("algebra/paravector-norm", format!("n={n} draws={draws}"), String::new(), para, tolerances::ALGEBRA)
            .ops(&["cl_paravector_norm", "cl_mul"]),
    ])
}

/// `q = x + I y` from the computed slice coordinates.
pub fn slice_coordinates<S: RandomScalar>(like: &S, draws: usize, rng: &mut ChaCha8Rng) -> Result<Row> {
    let axis = S::random_unit(like, rng);
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let q = S::random_point(like, rng, 3.0);
        let sp = slice_decompose(&q, &axis)?;
        if sp.y < 0.0 {
            worst = f64::INFINITY;
        }
        worst = worst.max(sp.reconstruct().distance(&q) / (1.0 + q.norm()));
    }
    let real = like.real_like(1.5);
    if slice_decompose(&real, &axis)?.reconstruct() != real {
        worst = f64::INFINITY;
    }
    Ok(Row::new(
        "slice-coordinates",
        format!("kind={} draws={draws}", kind_of(like)),
        String::new(),
        worst,
        tolerances::SLICE_COORDS,
    )
    .ops(&["slice_decompose"]))
}

/// `e⋆^{pq} ⋆ e⋆^{pq'} = e⋆^{p(q+q')}` for `q, q'` on one slice, evaluated
/// at random points.
pub fn star_exponential<S: RandomScalar>(like: &S, trunc: usize, draws: usize, rng: &mut ChaCha8Rng) -> Result<Row> {
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let unit = S::random_unit(like, rng);
        let q = unit.point(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let r = unit.point(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let p = S::random_point(like, rng, 1.0);
        let product = star_mul(&star_exp(&q, trunc), &star_exp(&r, trunc), Some(trunc))?;
        let joint = star_exp(&q.plus(&r), trunc);
        worst = worst.max(rel(&product.eval(&p)?, &joint.eval(&p)?));
    }
    Ok(Row::new(
        "star-exponential",
        format!("kind={} N={trunc} draws={draws}", kind_of(like)),
        String::new(),
        worst,
        tolerances::ALGEBRA,
    )
    .ops(&["star_exp", "star_mul", "eval"]))
}

/// Runs the whole suite for `config`.
pub fn run(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let grid = build_grid(config.radial, config.angular)?;
    let (seed, tol, trunc) = (config.seed, config.tol, config.trunc);
    let q = Quaternion::ZERO;
    let cl: Vec<Multivector> = CLIFFORD_GENERATORS.iter().map(|&n| Multivector::zero(n)).collect();
    let mut rows = Vec::new();

    rows.extend(monomial_orthogonality(&q, &grid, 12, tol, &mut stream(seed, 1))?);
    for (k, like) in cl.iter().enumerate() {
        rows.extend(monomial_orthogonality(like, &grid, 12, tol, &mut stream(seed, 101 + k as u64))?);
    }

    rows.push(slice_independence(&q, &grid, 20, 8, tol, &mut stream(seed, 2))?);
    for (k, like) in cl.iter().enumerate() {
        rows.push(slice_independence(like, &grid, 20, 8, tol, &mut stream(seed, 102 + k as u64))?);
    }

    rows.push(reproducing_coeff(&q, 1000, 10, &mut stream(seed, 3))?);
    rows.push(reproducing_quad(&q, trunc, &grid, 1000, 10, &mut stream(seed, 4))?);
    for (k, like) in cl.iter().enumerate() {
        rows.push(reproducing_coeff(like, 1000, 10, &mut stream(seed, 103 + k as u64))?);
        rows.push(reproducing_quad(like, trunc, &grid, 100, 10, &mut stream(seed, 113 + k as u64))?);
    }

    rows.push(kernel_gram_identity(&q, trunc, 100, &mut stream(seed, 5))?);
    rows.push(kernel_gram_quad(&q, trunc, &grid, 20, tol, &mut stream(seed, 6))?);
    rows.push(kernel_positivity(&q, trunc, 10, 6, &mut stream(seed, 7))?);
    for (k, like) in cl.iter().enumerate() {
        rows.push(kernel_gram_identity(like, trunc, 100, &mut stream(seed, 105 + k as u64))?);
        rows.push(kernel_gram_quad(like, trunc, &grid, 20, tol, &mut stream(seed, 115 + k as u64))?);
        rows.push(kernel_positivity(like, trunc, 10, 6, &mut stream(seed, 125 + k as u64))?);
    }

    rows.push(series_characterization(&q, &grid, 100, 12, tol, &mut stream(seed, 8))?);
    rows.push(membership_consistency(&q, trunc, 100, &mut stream(seed, 9))?);
    for (k, like) in cl.iter().enumerate() {
        rows.push(series_characterization(like, &grid, 100, 12, tol, &mut stream(seed, 108 + k as u64))?);
        rows.push(membership_consistency(like, trunc, 100, &mut stream(seed, 118 + k as u64))?);
    }

    rows.extend(nested_axioms(1000, 3, 4, &mut stream(seed, 10))?);
    rows.push(adjointness(1000, 3, 4, &mut stream(seed, 11))?);
    rows.push(creation_isometry(1000, 3, 4, &mut stream(seed, 12))?);
    rows.extend(symmetric_identities(6, 10, &mut stream(seed, 13))?);
    rows.extend(permanent_checks(6, 10, &mut stream(seed, 14))?);
    rows.push(brownian_covariance(1000, 10.0, &mut stream(seed, 15))?);

    rows.extend(representation_formula(&q, 1000, 10, &mut stream(seed, 16))?);
    for (k, like) in cl.iter().enumerate() {
        rows.extend(representation_formula(like, 300, 10, &mut stream(seed, 116 + k as u64))?);
    }
    rows.push(quaternion_algebra(1000, &mut stream(seed, 17)));
    for (k, &n) in CLIFFORD_GENERATORS.iter().enumerate() {
        rows.extend(clifford_algebra(n, 300, &mut stream(seed, 117 + k as u64))?);
    }
    rows.push(slice_coordinates(&q, 1000, &mut stream(seed, 18))?);
    for (k, like) in cl.iter().enumerate() {
        rows.push(slice_coordinates(like, 300, &mut stream(seed, 128 + k as u64))?);
    }
    rows.push(star_exponential(&q, trunc, 100, &mut stream(seed, 19))?);
    for (k, like) in cl.iter().enumerate() {
        rows.push(star_exponential(like, trunc, 50, &mut stream(seed, 129 + k as u64))?);
    }

    Ok(Report::new(config.clone(), rows))
}

/// Tensor sweeps printed by `tensor-check`.
pub fn tensor_sweeps(dim: usize, max_level: usize, draws: usize, seed: u64) -> Result<Vec<crate::report::SweepSummary>> {
    let mut rows = nested_axioms(draws, dim, max_level, &mut stream(seed, 10))?;
    rows.push(adjointness(draws, dim, max_level, &mut stream(seed, 11))?);
    rows.push(creation_isometry(draws, dim, max_level, &mut stream(seed, 12))?);
    Ok(rows
        .into_iter()
        .map(|r| crate::report::SweepSummary { pass: r.passed(), check: r.check, draws, max_residual: r.residual })
        .collect())
}
