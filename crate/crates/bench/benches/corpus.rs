//! Benchmarks over the small-instance corpus: closure, coherence, duality
//! and the scenario verification suite.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use framekit_core::enumerate;
use framekit_core::fixtures;
use framekit_core::frame::coherence_report;
use framekit_core::topology::{AlexandrovSide, FiniteSpace};
use framekit_core::ttmodel::checks::verify_scenario;
use framekit_core::ttmodel::presets::{chain_scenario, diamond_scenario};
use framekit_core::{FiniteLattice, Poset};

fn bench_poset_closure(c: &mut Criterion) {
    let labels: Vec<String> = (0..16).map(|i| format!("e{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..16usize {
        for j in i + 1..16 {
            if (i * 7 + j * 11) % 5 == 0 {
                pairs.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    c.bench_function("poset_from_pairs_16", |b| {
        b.iter(|| Poset::from_pairs(black_box(&labels), black_box(&pairs)).unwrap())
    });
}

fn bench_coherence(c: &mut Criterion) {
    let boolean = fixtures::boolean_lattice(&["a", "b", "c", "d"]);
    c.bench_function("coherence_report_2^4", |b| {
        b.iter(|| coherence_report(black_box(&boolean)))
    });
}

fn bench_hochster(c: &mut Criterion) {
    let space = FiniteSpace::alexandrov(&fixtures::diamond_poset(), AlexandrovSide::Zariski);
    c.bench_function("hochster_dual_diamond", |b| {
        b.iter(|| black_box(&space).hochster_dual().unwrap())
    });
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_posets_6", |b| {
        b.iter(|| enumerate::posets(black_box(6)).unwrap().len())
    });
}

fn bench_stone_roundtrip(c: &mut Criterion) {
    let lattice = fixtures::boolean_lattice(&["a", "b", "c"]);
    c.bench_function("stone_roundtrip_2^3", |b| {
        b.iter(|| framekit_core::duality::stone_roundtrip_lattice(black_box(&lattice)).unwrap())
    });
}

fn bench_lattice_product_iso(c: &mut Criterion) {
    let two = fixtures::chain_lattice(2);
    let boolean = fixtures::boolean_lattice(&["a", "b", "c", "d"]);
    c.bench_function("product_iso_2^4", |b| {
        b.iter(|| {
            let product = FiniteLattice::product(&[&two, &two, &two, &two]);
            product.isomorphism(black_box(&boolean)).is_some()
        })
    });
}

fn bench_model_verify(c: &mut Criterion) {
    let chain = chain_scenario(3);
    c.bench_function("verify_scenario_chain3", |b| {
        b.iter(|| verify_scenario(black_box(&chain)))
    });
    let diamond = diamond_scenario();
    c.bench_function("verify_scenario_diamond", |b| {
        b.iter(|| verify_scenario(black_box(&diamond)))
    });
}

criterion_group!(
    benches,
    bench_poset_closure,
    bench_coherence,
    bench_hochster,
    bench_enumeration,
    bench_stone_roundtrip,
    bench_lattice_product_iso,
    bench_model_verify
);
criterion_main!(benches);
