use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use grpd_bench::{line_graph, octonions, pair_groupoid, rationals};
use grpd_core::algebra::StructureAlgebra;
use grpd_core::groupoid::FiniteGroupoid;
use grpd_core::leavitt::{phi_isomorphism_check, LeavittSkewRing};
use grpd_core::skewring::{build_groupoid_ring, build_partial_group_algebra};

fn radical(c: &mut Criterion) {
    let mut group = c.benchmark_group("radical");
    for n in [3, 4, 5] {
        let a = StructureAlgebra::upper_triangular(rationals(), n);
        group.bench_with_input(BenchmarkId::new("upper_triangular", n), &a, |b, a| {
            b.iter(|| a.jacobson_radical().unwrap())
        });
    }
    group.finish();
}

fn wedderburn(c: &mut Criterion) {
    let mut group = c.benchmark_group("wedderburn");
    for n in [2, 3] {
        let k = StructureAlgebra::base_field(rationals());
        let ring = build_groupoid_ring(&pair_groupoid(n), std::slice::from_ref(&k)).unwrap();
        group.bench_with_input(
            BenchmarkId::new("pair_groupoid_ring", n),
            &ring.algebra,
            |b, a| b.iter(|| a.wedderburn_blocks().unwrap()),
        );
    }
    group.finish();
}

fn leavitt(c: &mut Criterion) {
    let mut group = c.benchmark_group("leavitt");
    for n in [3, 4, 5] {
        let g = line_graph(n);
        group.bench_with_input(BenchmarkId::new("build", n), &g, |b, g| {
            b.iter(|| LeavittSkewRing::build(g, rationals()).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("phi_check", n), &g, |b, g| {
            b.iter(|| phi_isomorphism_check(g, rationals()).unwrap())
        });
    }
    group.finish();
}

fn misc(c: &mut Criterion) {
    let o = octonions();
    c.bench_function("octonion_alternative", |b| b.iter(|| o.is_alternative()));
    let z3 = FiniteGroupoid::cyclic(3).unwrap();
    c.bench_function("partial_group_algebra_z3", |b| {
        b.iter(|| build_partial_group_algebra(&z3, rationals()).unwrap())
    });
}

criterion_group!(benches, radical, wedderburn, leavitt, misc);
criterion_main!(benches);
