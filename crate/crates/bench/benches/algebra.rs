use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use gralg_core::azumaya::{find_separability_idempotent, psi_bijective};
use gralg_core::constructors::{
    field_algebra, group_ring, laurent, matrix_algebra, quaternion, symbol_algebra, QuaternionGrading,
};
use gralg_core::graded::{identity_component, is_graded_division, is_strongly_graded};
use gralg_core::group::symmetric_group_s3;
use gralg_core::ktheory::{k0_of_algebra, split_identity_component};
use gralg_core::matrix_ring::{canonical_shift, ShiftedMatrixAlgebra};
use gralg_core::snf::{int_matrix, smith_normal_form};
use gralg_core::trace::{reduced_char_poly, reduced_norm};
use gralg_core::{FieldSpec, GradeGroup, Scope, SearchConfig};

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn predicates(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let sym = symbol_algebra(gf(7), 3, &gf(7).from_i64(3), &gf(7).from_i64(5), &gf(7).from_i64(2)).unwrap();
    c.bench_function("graded_division/symbol_gf7_n3", |b| {
        b.iter(|| is_graded_division(black_box(&sym), &cfg))
    });
    c.bench_function("strongly_graded/symbol_gf7_n3", |b| {
        b.iter(|| is_strongly_graded(black_box(&sym), Scope::Group))
    });
    let s3 = group_ring(FieldSpec::Rationals, &symmetric_group_s3()).unwrap();
    c.bench_function("psi_bijective/q_s3", |b| {
        b.iter(|| psi_bijective(black_box(s3.algebra())).unwrap())
    });
    c.bench_function("separability_idempotent/q_s3", |b| {
        b.iter(|| find_separability_idempotent(black_box(s3.algebra())).unwrap())
    });
}

fn ktheory(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let m3 = matrix_algebra(gf(5), 3, &GradeGroup::trivial()).unwrap();
    let z = GradeGroup::integers();
    let shift = [0, 1, 1].iter().map(|&k| z.element(&[k]).unwrap()).collect();
    let shifted = ShiftedMatrixAlgebra::new(
        Arc::new(laurent(field_algebra(FieldSpec::Rationals), 2).unwrap()),
        shift,
    )
    .unwrap();
    let e = identity_component(&shifted).unwrap();
    c.bench_function("split_identity_component/shifted_laurent_m3_q", |b| {
        b.iter(|| split_identity_component(black_box(&e), &cfg).unwrap())
    });
    c.bench_function("k0/m3_gf5", |b| {
        b.iter(|| k0_of_algebra(black_box(m3.algebra()), &cfg).unwrap())
    });
    let s3 = group_ring(gf(5), &symmetric_group_s3()).unwrap();
    c.bench_function("k0/gf5_s3", |b| {
        b.iter(|| k0_of_algebra(black_box(s3.algebra()), &cfg).unwrap())
    });
}

fn shifts(c: &mut Criterion) {
    let d = laurent(field_algebra(FieldSpec::Rationals), 2).unwrap();
    let z = GradeGroup::integers();
    let shift: Vec<_> = (0..12).map(|k| z.element(&[(k * 7) % 13 - 6]).unwrap()).collect();
    c.bench_function("canonical_shift/n12", |b| {
        b.iter(|| canonical_shift(&d, black_box(&shift)).unwrap())
    });
}

fn arithmetic(c: &mut Criterion) {
    let rows: Vec<Vec<i64>> = (0..8)
        .map(|i| (0..8).map(|j| ((i * 31 + j * 17) % 23) as i64 - 11).collect())
        .collect();
    let m = int_matrix(&rows);
    c.bench_function("smith_normal_form/8x8", |b| {
        b.iter_batched(|| m.clone(), |m| smith_normal_form(&m), BatchSize::SmallInput)
    });
    let q = quaternion(
        FieldSpec::Rationals,
        &FieldSpec::Rationals.from_i64(-1),
        &FieldSpec::Rationals.from_i64(-1),
        QuaternionGrading::Z2xZ2,
    )
    .unwrap();
    let x: Vec<_> = [3, -2, 5, 7]
        .iter()
        .map(|&v| FieldSpec::Rationals.from_i64(v))
        .collect();
    c.bench_function("reduced_char_poly/hamilton", |b| {
        b.iter(|| reduced_char_poly(q.algebra(), black_box(&x)).unwrap())
    });
    let f = gf(7);
    let sym = symbol_algebra(f, 3, &f.from_i64(3), &f.from_i64(5), &f.from_i64(2)).unwrap();
    let y: Vec<_> = (0..9).map(|k| f.from_i64(k * 3 + 1)).collect();
    c.bench_function("reduced_norm/symbol_gf7_n3", |b| {
        b.iter(|| reduced_norm(sym.algebra(), black_box(&y)).unwrap())
    });
}

criterion_group!(benches, predicates, ktheory, shifts, arithmetic);
criterion_main!(benches);
