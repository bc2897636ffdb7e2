use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use slicefock::sample::{random_series, random_word, RandomScalar};
use slicefock::tensor::{permanent, sym_inner, DEFAULT_FACTORIAL_CAP};
use slicefock::{build_grid, cl_mul, qmul, quad_inner, Multivector, Quaternion};

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(1)
}

fn algebra(c: &mut Criterion) {
    let mut rng = rng();
    let a = Quaternion::random_gaussian(&Quaternion::ZERO, &mut rng);
    let b = Quaternion::random_gaussian(&Quaternion::ZERO, &mut rng);
    c.bench_function("qmul", |bench| bench.iter(|| qmul(black_box(a), black_box(b))));

    let mut group = c.benchmark_group("cl_mul");
    for n in [2usize, 3, 5] {
        let like = Multivector::zero(n);
        let x = Multivector::random_gaussian(&like, &mut rng);
        let y = Multivector::random_gaussian(&like, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| cl_mul(black_box(&x), black_box(&y)).unwrap())
        });
    }
    group.finish();
}

fn series(c: &mut Criterion) {
    let mut rng = rng();
    let mut group = c.benchmark_group("eval");
    for deg in [10usize, 40] {
        let f = random_series(&Quaternion::ZERO, deg, &mut rng);
        let p = Quaternion::random_point(&Quaternion::ZERO, &mut rng, 1.0);
        group.bench_with_input(BenchmarkId::from_parameter(deg), &deg, |bench, _| {
            bench.iter(|| f.eval(black_box(&p)).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("quad_inner");
    for (r, m) in [(13usize, 25usize), (45, 85)] {
        let grid = build_grid(r, m).unwrap();
        let f = random_series(&Quaternion::ZERO, 10, &mut rng);
        let g = random_series(&Quaternion::ZERO, 10, &mut rng);
        let unit = Quaternion::random_unit(&Quaternion::ZERO, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(format!("R{r}_M{m}")), &r, |bench, _| {
            bench.iter(|| quad_inner(&f, &g, &unit, black_box(&grid)).unwrap())
        });
    }
    group.finish();
}

fn tensor(c: &mut Criterion) {
    let mut rng = rng();
    let mut group = c.benchmark_group("sym_inner");
    for n in [3usize, 5, 7] {
        let u = random_word(3, n, &mut rng);
        let v = random_word(3, n, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| sym_inner(black_box(&u), black_box(&v), DEFAULT_FACTORIAL_CAP).unwrap())
        });
    }
    group.finish();

    // entries on the slice through i, so they commute
    let mut group = c.benchmark_group("permanent");
    for n in [4usize, 8, 12] {
        let a: Vec<Vec<Quaternion>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let z = Quaternion::random_gaussian(&Quaternion::ZERO, &mut rng);
                        Quaternion::new(z.x0, z.x1, 0.0, 0.0)
                    })
                    .collect()
            })
            .collect();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| permanent(black_box(&a)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, algebra, series, tensor);
criterion_main!(benches);
