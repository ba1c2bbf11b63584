use catalan_core::{
    catalan_family, count_paths, det_exact, catalan_matrix, gamma_m, verify_identity, Constraint,
    FamilyKind, IdentityId, Point,
};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn family(c: &mut Criterion) {
    let mut group = c.benchmark_group("family");
    group.bench_function("closed_formula/n=200", |b| {
        b.iter(|| {
            for m in 0..=200 {
                black_box(catalan_family(FamilyKind::C, black_box(200), m).unwrap());
            }
        })
    });
    group.bench_function("dp_oracle/n=60,m=10", |b| {
        b.iter(|| {
            count_paths(
                black_box(Point::new(0, -20)),
                black_box(Point::new(50, 50)),
                Constraint::NoCross(0),
            )
        })
    });
    group.finish();
}

fn series(c: &mut Criterion) {
    c.bench_function("series/gamma_m(8, 64)", |b| b.iter(|| gamma_m(black_box(8), black_box(64))));
}

fn determinant(c: &mut Criterion) {
    let mat = catalan_matrix(24).unwrap();
    c.bench_function("det/bareiss/N=24", |b| b.iter(|| det_exact(black_box(&mat))));
}

fn identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("identities");
    group.sample_size(10);
    group.bench_function("lemma6_2/n_max=20", |b| {
        b.iter(|| verify_identity(IdentityId::Lemma6_2, black_box(20)))
    });
    group.finish();
}

criterion_group!(benches, family, series, determinant, identities);
criterion_main!(benches);
