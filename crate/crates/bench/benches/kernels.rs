use criterion::{criterion_group, criterion_main, Criterion};

use coxcat_core::characters;
use coxcat_core::cluster;
use coxcat_core::root_poset::RootPoset;
use coxcat_core::symfunc::{SeriesBundle, Twist};
use coxcat_core::RootSystem;

fn antichains(c: &mut Criterion) {
    let rs = RootSystem::build("E8").unwrap();
    let poset = RootPoset::new(&rs).unwrap();
    c.bench_function("antichains E8", |b| b.iter(|| poset.enumerate_antichains().total()));
}

fn cluster_faces(c: &mut Criterion) {
    let rs = RootSystem::build("F4").unwrap();
    c.bench_function("cluster faces F4", |b| {
        b.iter(|| cluster::cluster_faces(&rs, false).unwrap().total())
    });
}

fn os_character(c: &mut Criterion) {
    let rs = RootSystem::build("B3").unwrap();
    c.bench_function("OS character B3", |b| {
        b.iter(|| characters::character_table(&rs).unwrap().graded.len())
    });
}

fn gerst(c: &mut Criterion) {
    let mut group = c.benchmark_group("gerst");
    group.sample_size(10);
    group.bench_function("series to degree 9", |b| {
        b.iter(|| SeriesBundle::new(Twist::Omega, 9).unwrap().gerst.terms().count())
    });
    group.finish();
}

criterion_group!(kernels, antichains, cluster_faces, os_character, gerst);
criterion_main!(kernels);
