use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use symchar_core::characters::{murnaghan_littlewood, newell_littlewood, thibon_inner};
use symchar_core::inner::inner_mul;
use symchar_core::sym::{antipode, outer_mul, schur};
use symchar_core::{HashProduct, Partition};

fn outer(c: &mut Criterion) {
    let mut g = c.benchmark_group("outer_mul");
    for (a, b) in [(vec![2, 1], vec![2, 1]), (vec![3, 2, 1], vec![2, 2, 1])] {
        let (x, y) = (
            schur(Partition::from_unsorted(a.clone())),
            schur(Partition::from_unsorted(b.clone())),
        );
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("{a:?}x{b:?}")),
            &(),
            |bch, _| bch.iter(|| outer_mul(black_box(&x), black_box(&y))),
        );
    }
    g.finish();
}

fn kronecker(c: &mut Criterion) {
    let (x, y) = (schur([3, 2, 1]), schur([4, 2]));
    c.bench_function("inner_mul [3,2,1]*[4,2]", |b| {
        b.iter(|| inner_mul(black_box(&x), black_box(&y)))
    });
}

fn hashes(c: &mut Criterion) {
    let (x, y) = (schur([2, 1]), schur([2]));
    c.bench_function("newell_littlewood [2,1].[2]", |b| {
        b.iter(|| newell_littlewood(black_box(&x), black_box(&y)))
    });
    c.bench_function("thibon [2,1]*[2]", |b| {
        b.iter(|| thibon_inner(black_box(&x), black_box(&y)))
    });
    c.bench_function("murnaghan_littlewood [2,1]*[2]", |b| {
        b.iter(|| murnaghan_littlewood(black_box(&x), black_box(&y)))
    });
    let h = HashProduct::named("thibon").unwrap();
    c.bench_function("hash thibon [2,1]#[2]", |b| {
        b.iter(|| h.apply(black_box(&x), black_box(&y)))
    });
}

fn antipodes(c: &mut Criterion) {
    let x = schur([4, 3, 1]);
    c.bench_function("antipode [4,3,1]", |b| b.iter(|| antipode(black_box(&x))));
}

criterion_group!(benches, outer, kronecker, hashes, antipodes);
criterion_main!(benches);
