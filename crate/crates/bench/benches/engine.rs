//! Benchmarks: the closed-form paths the CLI serves by default, the
//! brute-force oracles, and the two minimality routes.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use terncode::{
    brute_tables, cwe_closed, is_minimal_brute, is_minimal_spectral, krawtchouk, lloyd, sweep,
    walsh_spectrum_brute, weight_distribution_closed, Budget, LemmaTag,
};
use terncode_bench::{f_7_3, g_5_2, gbar_9_2};

fn closed_forms(c: &mut Criterion) {
    let gbar = gbar_9_2();
    c.bench_function("wdist_closed_gbar_9_2", |b| {
        b.iter(|| weight_distribution_closed(black_box(&gbar)).unwrap())
    });
    let f = f_7_3();
    c.bench_function("cwe_closed_f_7_3", |b| {
        b.iter(|| cwe_closed(black_box(&f)).unwrap())
    });
    c.bench_function("krawtchouk_full_row_m24", |b| {
        b.iter(|| {
            for t in 0..=24u32 {
                black_box(krawtchouk(t, 11, 24, 3));
            }
        })
    });
    c.bench_function("lloyd_12_6_24", |b| b.iter(|| lloyd(12, 6, 24, 3)));
}

fn brute_oracles(c: &mut Criterion) {
    let budget = Budget::default();
    let g = g_5_2();
    let table = g.to_table();
    let mut group = c.benchmark_group("brute");
    group.sample_size(20);
    group.bench_function("tables_g_5_2", |b| {
        b.iter(|| brute_tables(black_box(&table), &budget).unwrap())
    });
    group.bench_function("walsh_spectrum_g_5_2", |b| {
        b.iter(|| walsh_spectrum_brute(black_box(&table), &budget).unwrap())
    });
    group.finish();
}

fn minimality(c: &mut Criterion) {
    let budget = Budget::default();
    let gbar = gbar_9_2();
    c.bench_function("minimality_spectral_gbar_9_2", |b| {
        b.iter(|| is_minimal_spectral(black_box(&gbar)).unwrap())
    });
    let g = g_5_2();
    let mut group = c.benchmark_group("minimality_brute");
    group.sample_size(10);
    group.bench_function("g_5_2", |b| {
        b.iter(|| is_minimal_brute(black_box(&g), &budget).unwrap())
    });
    group.finish();
}

fn certificates(c: &mut Criterion) {
    c.bench_function("certificate_sweep_gap_50", |b| {
        b.iter(|| sweep(50, LemmaTag::GapPositive).unwrap())
    });
}

criterion_group!(benches, closed_forms, brute_oracles, minimality, certificates);
criterion_main!(benches);
