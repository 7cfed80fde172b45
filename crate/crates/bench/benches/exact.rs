use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use kumcert::exact::{discriminant, factor_mod_p, is_irreducible, isolate_real_roots};
use kumcert_bench::{poly, wide_quintic};

fn bench(c: &mut Criterion) {
    let f = wide_quintic();
    c.bench_function("discriminant/quintic", |b| b.iter(|| discriminant(black_box(&f))));
    c.bench_function("factor_mod_p/quintic_p10007", |b| b.iter(|| factor_mod_p(black_box(&f), 10007)));
    c.bench_function("is_irreducible/quintic", |b| b.iter(|| is_irreducible(black_box(&f))));
    let g = poly("x^8 - 10x^6 + 35x^4 - 50x^2 + 24");
    c.bench_function("isolate_real_roots/degree8", |b| b.iter(|| isolate_real_roots(black_box(&g))));
}

criterion_group!(benches, bench);
criterion_main!(benches);
