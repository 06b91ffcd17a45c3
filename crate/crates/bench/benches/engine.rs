use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use floodit::{contract, gen_colouring, gen_graph, ColouringSpec, FamilySpec, FloodState, Move};

fn random_graph(n: usize, c: usize) -> floodit::ColouredGraph {
    let shape = gen_graph(&FamilySpec::RandomConnected { n, edge_percent: 5, seed: 1 }).unwrap();
    gen_colouring(&shape, &ColouringSpec::RandomSurjective { c, seed: 2 }).unwrap()
}

fn contraction(cr: &mut Criterion) {
    let g = random_graph(400, 4);
    cr.bench_function("contract random n=400 c=4", |b| b.iter(|| contract(black_box(&g))));
    let shape = gen_graph(&FamilySpec::BlowupPath { sizes: vec![2; 2000] }).unwrap();
    let p = gen_colouring(&shape, &ColouringSpec::Rainbow { c: 3 }).unwrap();
    cr.bench_function("contract rainbow blow-up t=2000", |b| b.iter(|| FloodState::new(black_box(&p))));
}

fn moves(cr: &mut Criterion) {
    let g = random_graph(400, 4);
    let s = FloodState::new(&g);
    cr.bench_function("cycle colours at vertex 0, n=400", |b| {
        b.iter_batched(
            || s.clone(),
            |mut s| {
                let mut d = 0;
                while !s.is_flooded() {
                    d = (d + 1) % 4;
                    s.apply(Move::new(0, floodit::Colour::new(d)));
                }
                s
            },
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(benches, contraction, moves);
criterion_main!(benches);
