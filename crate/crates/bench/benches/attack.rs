use std::hint::black_box;

use ccsg_bench::{larger_instance, worked_instance, WORKED_INTERCEPT};
use ccsg_core::linearizer::{linearize_generator, synthesize_ca_pair};
use ccsg_core::{full_attack, run_attack, BitSeq, Gf2Poly};
use criterion::{criterion_group, criterion_main, Criterion};

fn attacks(c: &mut Criterion) {
    let public = worked_instance();
    let z = BitSeq::parse(WORKED_INTERCEPT).unwrap();
    c.bench_function("attack L1=4 L2=5", |b| b.iter(|| full_attack(black_box(&z), &public).unwrap()));
    for (l1, l2) in [(5, 7), (6, 7), (7, 9)] {
        let (public, z) = larger_instance(l1, l2);
        c.bench_function(&format!("attack L1={l1} L2={l2}"), |b| b.iter(|| run_attack(black_box(&z), &public).unwrap()));
    }
}

fn models(c: &mut Criterion) {
    let c2 = Gf2Poly::from_exponents([0, 1, 3, 4, 5]);
    c.bench_function("linearize L1=4 L2=5", |b| b.iter(|| linearize_generator(4, black_box(&c2), 0).unwrap()));
    let p = ccsg_core::algebra::primitive_polynomials(20).remove(0);
    c.bench_function("synthesize degree 20", |b| b.iter(|| synthesize_ca_pair(black_box(&p)).unwrap()));
}

fn keystreams(c: &mut Criterion) {
    let spec = worked_instance().with_seeds(vec![true, false, false, true], vec![true, false, true, false, true]).unwrap();
    c.bench_function("generate 10k bits", |b| b.iter(|| ccsg_core::generators::generate(black_box(&spec), 10_000)));
}

criterion_group!(benches, attacks, models, keystreams);
criterion_main!(benches);
