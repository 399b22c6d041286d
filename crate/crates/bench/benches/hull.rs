use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hullkit::fixtures::fixture28;
use hullkit::tables::{evaluate_row, RowKey, TableKind};
use hullkit::{
    eaqecc_from_code, grs_code, grscon1, hull, hull_of_derived, min_distance, Budget, DeriveMode, InnerProduct,
};
use std::hint::black_box;

fn hulls(c: &mut Criterion) {
    let mut g = c.benchmark_group("hull");
    for q in [3u32, 4, 5, 7] {
        let code = grs_code(&grscon1(q).unwrap()).unwrap();
        g.bench_with_input(BenchmarkId::new("grscon1", q), &code, |b, code| {
            b.iter(|| hull(black_box(code), InnerProduct::Hermitian).unwrap())
        });
    }
    let fixture = fixture28();
    g.bench_function("fixture28", |b| b.iter(|| hull(black_box(&fixture), InnerProduct::Hermitian).unwrap()));
    let s: Vec<usize> = (0..6).collect();
    g.bench_function("fixture28/shortened", |b| {
        b.iter(|| hull_of_derived(black_box(&fixture), &s, DeriveMode::Shorten, InnerProduct::Hermitian).unwrap())
    });
    g.finish();
}

fn distances(c: &mut Criterion) {
    let mut g = c.benchmark_group("min_distance");
    g.sample_size(20);
    let fixture = fixture28();
    g.bench_function("fixture28", |b| b.iter(|| min_distance(black_box(&fixture), Budget::default()).unwrap()));
    let code = grs_code(&grscon1(4).unwrap()).unwrap();
    g.bench_function("eaqecc/grscon1(4)", |b| {
        b.iter(|| eaqecc_from_code(black_box(&code), Budget::default()).unwrap())
    });
    g.finish();
}

fn table_rows(c: &mut Criterion) {
    let mut g = c.benchmark_group("table_row");
    g.sample_size(10);
    for (kind, name) in [(TableKind::Eaqecc, "eaqecc"), (TableKind::Subsystem, "subsystem")] {
        let key = RowKey { family: 1, q: 3, k: 3, m: None, s: 1 };
        g.bench_function(format!("{name}/q3/family1/s1"), |b| {
            b.iter(|| evaluate_row(kind, black_box(&key), Budget::default()).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, hulls, distances, table_rows);
criterion_main!(benches);
