use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use kreps_core::presentation::presentation_determinant;
use kreps_core::*;

fn snf(c: &mut Criterion) {
    let m = IntMatrix::from_rows(
        &[
            vec![2, -1, -1, 0, 0, 0],
            vec![-1, 2, 0, -1, 0, 0],
            vec![0, -1, 2, 0, -1, 0],
            vec![0, 0, -1, 2, 0, -1],
            vec![-1, 0, 0, -1, 2, 0],
            vec![0, 0, 0, 0, -1, 1],
        ],
        6,
    );
    c.bench_function("smith_normal_form 6x6", |b| b.iter(|| smith_normal_form(black_box(&m))));
}

fn alexander(c: &mut Criterion) {
    let a = parse_braid("1^3 -2 3^3 -2 1 2 -3", 4).unwrap();
    assert!(is_knot_closure(&a));
    c.bench_function("alexander matrix + polynomial", |b| {
        b.iter(|| elementary_ideal_data(&alexander_matrix(&closure_presentation(black_box(&a)))).unwrap())
    });
    c.bench_function("burau alexander", |b| b.iter(|| burau_alexander(black_box(&a)).unwrap()));
}

fn reps(c: &mut Criterion) {
    let (a, tw) = corollary_family(3, 5, &[1, 1], &[1, 2], 1).unwrap();
    let p = torus_covering_presentation(&a, &tw).unwrap();
    c.bench_function("surface determinant (3, 5, 1)", |b| b.iter(|| presentation_determinant(black_box(&p))));
    c.bench_function("rep classes (3, 5, 1)", |b| {
        b.iter(|| enumerate_rep_classes(black_box(&p), DEFAULT_ENUM_CAP).unwrap())
    });
}

criterion_group!(benches, snf, alexander, reps);
criterion_main!(benches);
