use criterion::{black_box, criterion_group, criterion_main, Criterion};
use lollipop_core::canon::canonical_form;
use lollipop_core::constructions::{lollipop, realize, ConstructionSpec};
use lollipop_core::containment::{blowup_contains, subgraph_contains};
use lollipop_core::search::all_graphs;
use lollipop_core::{blowup, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn canon(c: &mut Criterion) {
    let sparse = random_graph(30, 0.2, 1);
    let h = realize(&ConstructionSpec::H { n: 40, p: 2, q: 3 }).unwrap();
    c.bench_function("canonical_form random(30, 0.2)", |b| b.iter(|| canonical_form(black_box(&sparse))));
    c.bench_function("canonical_form H(40,2,3)", |b| b.iter(|| canonical_form(black_box(&h))));
}

fn containment(c: &mut Criterion) {
    let host = random_graph(14, 0.5, 7);
    let pattern = blowup(&lollipop(3, 2).unwrap(), 2).unwrap().graph;
    c.bench_function("subgraph_contains random(14, 0.5)", |b| {
        b.iter(|| subgraph_contains(black_box(&host), black_box(&pattern)))
    });
    let h = realize(&ConstructionSpec::H { n: 40, p: 2, q: 3 }).unwrap();
    c.bench_function("blowup_contains H(40,2,3)", |b| b.iter(|| blowup_contains(black_box(&h), 3, 2, 2).unwrap()));
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("all_graphs(7)", |b| b.iter(|| all_graphs(black_box(7)).unwrap().len()));
    group.finish();
}

criterion_group!(benches, canon, containment, enumeration);
criterion_main!(benches);
