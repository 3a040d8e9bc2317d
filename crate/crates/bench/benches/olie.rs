use criterion::{black_box, criterion_group, criterion_main, Criterion};
use olie_core::catalog::{self, random_dim3};
use olie_core::derivations::al_derivation_space;
use olie_core::extensions::{h2_dimension, infinitesimal_deformations};
use olie_core::identities::builtin;
use olie_core::scan::{dim3_instance, structure_instance};
use olie_core::structure::classify;
use olie_core::{Field, Vector};
use olie_perf::chains;

const Q: Field = Field::Q;
const GF5: Field = Field::Gf(5);

fn basics(c: &mut Criterion) {
    let s4 = catalog::s4(Q);
    let sl2 = catalog::sl2(Q);
    let n3 = catalog::n3(Q);
    c.bench_function("validate s4", |b| {
        b.iter(|| black_box(&s4).validate().is_ok())
    });
    c.bench_function("derivations sl2", |b| {
        b.iter(|| al_derivation_space(black_box(&sl2), &Vector::zeros(Q, 3)).dim())
    });
    c.bench_function("h2 n3", |b| {
        b.iter(|| h2_dimension(black_box(&n3), &Vector::from_ints(Q, &[2, 0, 0])).unwrap())
    });
    c.bench_function("deformations sl2", |b| {
        b.iter(|| infinitesimal_deformations(black_box(&sl2)).unwrap().dim())
    });
    c.bench_function("simplicity s4", |b| b.iter(|| black_box(&s4).simplicity()));
}

fn identities(c: &mut Criterion) {
    let s4 = catalog::s4(Q);
    let a5 = chains(GF5, 5, 1).pop().unwrap();
    let deg5 = builtin("degree5").unwrap();
    let two = builtin("two-basic").unwrap();
    c.bench_function("degree5 gf5 dim5", |b| {
        b.iter(|| deg5.holds(black_box(&a5)).is_yes())
    });
    c.bench_function("two-basic s4", |b| {
        b.iter(|| two.holds(black_box(&s4)).is_yes())
    });
    c.bench_function("two-basic gf5 dim5", |b| {
        b.iter(|| two.holds(black_box(&a5)).is_yes())
    });
}

fn structure(c: &mut Criterion) {
    let a6 = chains(GF5, 6, 4);
    c.bench_function("classify gf5 dim6", |b| {
        b.iter(|| a6.iter().map(|a| classify(a).case).collect::<Vec<_>>())
    });
    let mut g = c.benchmark_group("ideal search");
    g.sample_size(10);
    g.bench_function("abelian gf5 dim6", |b| {
        b.iter(|| {
            a6.iter()
                .filter(|a| a.find_abelian_ideal().ideal().is_some())
                .count()
        })
    });
    g.finish();
}

fn scans(c: &mut Criterion) {
    c.bench_function("dim3 instance q", |b| {
        b.iter(|| dim3_instance(Q, black_box(7)).passed())
    });
    c.bench_function("random dim3 gf5", |b| {
        b.iter(|| random_dim3(GF5, black_box(7)))
    });
    let mut g = c.benchmark_group("structure instance");
    g.sample_size(10);
    g.bench_function("gf5 dim5", |b| {
        b.iter(|| structure_instance(GF5, 5, black_box(2)))
    });
    g.finish();
}

criterion_group!(benches, basics, identities, structure, scans);
criterion_main!(benches);
