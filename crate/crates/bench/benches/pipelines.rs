use criterion::{black_box, criterion_group, criterion_main, Criterion};

use excursion_core::bounded::{f_polynomials, numerator_with_annihilator};
use excursion_core::oracle::count_excursions;
use excursion_core::platypus::{annihilator, plethysm_elementary};
use excursion_core::schur::{rect_schur_gf, NumericAlphabet};
use excursion_core::stepset::parse_stepset;
use excursion_core::Rational;

fn bench_annihilator(c: &mut Criterion) {
    let s32 = parse_stepset("3:1,-2:1").unwrap();
    c.bench_function("annihilator (3,2)", |b| {
        b.iter(|| annihilator(black_box(&s32)).unwrap())
    });
    let s43 = parse_stepset("4:1,-3:1").unwrap();
    c.bench_function("annihilator (4,3)", |b| {
        b.iter(|| annihilator(black_box(&s43)).unwrap())
    });
}

fn bench_numerator(c: &mut Criterion) {
    let s = parse_stepset("4:1,-3:1").unwrap();
    let d = annihilator(&s).unwrap();
    c.bench_function("numerator (4,3)", |b| {
        b.iter(|| numerator_with_annihilator(black_box(&s), black_box(&d)).unwrap())
    });
}

fn bench_transfer_determinants(c: &mut Criterion) {
    let s = parse_stepset("2:t,1:1,-1:1,-2:t").unwrap();
    c.bench_function("f_polynomials basketball k<=30", |b| {
        b.iter(|| f_polynomials(black_box(&s), 30))
    });
}

fn bench_oracle(c: &mut Criterion) {
    let s = parse_stepset("3:1,1:1,-2:1").unwrap();
    c.bench_function("count_excursions order 20", |b| {
        b.iter(|| count_excursions(black_box(&s), 20))
    });
}

fn bench_plethysm(c: &mut Criterion) {
    c.bench_function("plethysm e_k[e_2], n=4", |b| {
        b.iter(|| plethysm_elementary(2, 4, None).unwrap())
    });
}

fn bench_schur_gf(c: &mut Criterion) {
    let alphabet =
        NumericAlphabet::new([1, 2, 3, 5, 7, 11].map(Rational::from_int).to_vec()).unwrap();
    c.bench_function("rect_schur_gf n=6 a=3", |b| {
        b.iter(|| rect_schur_gf(black_box(&alphabet), 3).unwrap())
    });
}

criterion_group!(
    benches,
    bench_annihilator,
    bench_numerator,
    bench_transfer_determinants,
    bench_oracle,
    bench_plethysm,
    bench_schur_gf
);
criterion_main!(benches);
