use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use gradalg::bk::{bk_algebra, BkData};
use gradalg::bruteforce::{dimension_bruteforce_range, irreducible_bruteforce};
use gradalg::exec::Execution;
use gradalg::graded::{hilbert_dims, PresentedAlgebra};
use gradalg::{parse_poly, FieldSpec, Ring};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn hilbert(c: &mut Criterion) {
    let alg = bk_algebra(&BkData::new(FieldSpec::Rationals, 7, 5, vec![3, 2], &[1, 2])).unwrap();
    let mut g = c.benchmark_group("hilbert_dims B(7,5,3,2) upto 1500");
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| hilbert_dims(black_box(&alg), 1500, mode).unwrap())
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let r = Ring::new(FieldSpec::Rationals, ["x", "y", "z"]).unwrap();
    let alg = PresentedAlgebra::free(r, Some(vec![3, 4, 5].into())).unwrap();
    let mut g = c.benchmark_group("dimension_bruteforce k[x,y,z] (3,4,5) upto 120");
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| dimension_bruteforce_range(black_box(&alg), 120, mode).unwrap())
        });
    }
    g.finish();
}

fn irreducible(c: &mut Criterion) {
    let f = FieldSpec::prime(7).unwrap();
    let r = Ring::new(f, ["x", "y"]).unwrap();
    let alg = PresentedAlgebra::free(r.clone(), Some(vec![3, 4].into())).unwrap();
    let elem = parse_poly("x^4 + 3*y^3", &r).unwrap();
    let mut g = c.benchmark_group("irreducible_bruteforce F7 k[x,y] (3,4) degree 12");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| irreducible_bruteforce(black_box(&alg), &elem, 12, mode).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, hilbert, oracle, irreducible);
criterion_main!(benches);
