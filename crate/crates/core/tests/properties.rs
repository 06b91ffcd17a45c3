use std::sync::Arc;

use floodit::extremal::colour_bound;
use floodit::generators::{random_surjective, tcr_legs};
use floodit::io::{parse_certificate, parse_graph, write_certificate, write_graph};
use floodit::solvers::{greedy_upper_bound, PathTable};
use floodit::strategies::rainbow_blowup_strategy;
use floodit::{
    contract, gen_colouring, gen_graph, min_moves, min_moves_exact, play_certificate, Certificate, Colour,
    ColouredGraph, ColouringSpec, FamilySpec, FloodState, Move, SolveQuery,
};
use proptest::prelude::*;

fn coloured(n: usize, edge_percent: u32, seed: u64, col: &[u8], c: usize) -> ColouredGraph {
    let shape = gen_graph(&FamilySpec::RandomConnected { n, edge_percent, seed }).unwrap();
    let col = col.iter().take(n).map(|&d| Colour::new(d as usize % c)).collect();
    ColouredGraph::new(shape.graph, col, c).unwrap()
}

fn small_graph(n_max: usize) -> impl Strategy<Value = ColouredGraph> {
    (1..=n_max, 2usize..5, 10u32..80, any::<u64>(), proptest::collection::vec(any::<u8>(), n_max))
        .prop_map(|(n, c, p, seed, col)| coloured(n, p, seed, &col, c))
}

fn moves_for(g: &ColouredGraph, raw: &[(usize, usize)]) -> Vec<Move> {
    raw.iter().map(|&(v, d)| Move::new(v % g.n(), Colour::new(d % g.c()))).collect()
}

fn count(colouring: &[Colour], d: Colour) -> usize {
    colouring.iter().filter(|&&x| x == d).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn contraction_is_idempotent(g in small_graph(14)) {
        let once = contract(&g);
        let twice = contract(&once.graph);
        prop_assert_eq!(&twice.graph, &once.graph);
        prop_assert_eq!(twice.map, (0..once.graph.n()).collect::<Vec<_>>());
    }

    #[test]
    fn moves_keep_the_state_fully_contracted(
        g in small_graph(14),
        raw in proptest::collection::vec((any::<usize>(), any::<usize>()), 0..20),
    ) {
        let mut s = FloodState::new(&g);
        for m in moves_for(&g, &raw) {
            s.apply(m);
            prop_assert_eq!(s.check_invariants(), Ok(()));
        }
    }

    #[test]
    fn a_move_never_shrinks_its_colour(
        g in small_graph(14),
        raw in proptest::collection::vec((any::<usize>(), any::<usize>()), 1..20),
    ) {
        let mut s = FloodState::new(&g);
        for m in moves_for(&g, &raw) {
            let before = count(&s.colouring(), m.colour);
            s.apply(m);
            prop_assert!(count(&s.colouring(), m.colour) >= before);
        }
    }

    #[test]
    fn replay_agrees_with_the_contraction(
        g in small_graph(14),
        raw in proptest::collection::vec((any::<usize>(), any::<usize>()), 0..12),
        target in proptest::collection::vec(any::<usize>(), 0..4),
    ) {
        let k = contract(&g);
        let moves = moves_for(&g, &raw);
        let remapped: Vec<Move> = moves.iter().map(|m| Move::new(k.map[m.vertex], m.colour)).collect();
        let mut on_g = Certificate::new(moves);
        let mut on_k = Certificate::new(remapped);
        if !target.is_empty() {
            let t: Vec<usize> = target.iter().map(|&v| v % g.n()).collect();
            on_k.claimed_target = Some(t.iter().map(|&v| k.map[v]).collect());
            on_g.claimed_target = Some(t);
        }
        let a = play_certificate(&g, &on_g).unwrap();
        let b = play_certificate(&k.graph, &on_k).unwrap();
        prop_assert_eq!(a.flooded, b.flooded);
        prop_assert_eq!(a.target_met, b.target_met);
        prop_assert_eq!(a.final_colour, b.final_colour);
    }

    #[test]
    fn graph_and_certificate_text_round_trip(
        g in small_graph(14),
        raw in proptest::collection::vec((any::<usize>(), any::<usize>()), 0..10),
        fin in proptest::option::of(0usize..4),
    ) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g.clone());
        let mut cert = Certificate::new(moves_for(&g, &raw));
        cert.claimed_final_colour = fin.map(|d| Colour::new(d % g.c()));
        prop_assert_eq!(parse_certificate(&write_certificate(&cert)).unwrap(), cert);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn free_minimum_ignores_colour_names(g in small_graph(8), rot in 1usize..4) {
        let c = g.c();
        let relabelled: Vec<Colour> = g.colouring().iter().map(|d| Colour::new((d.index() + rot) % c)).collect();
        let h = g.recoloured(relabelled, c).unwrap();
        prop_assert_eq!(min_moves(&g).unwrap(), min_moves(&h).unwrap());
    }

    #[test]
    fn exact_minimum_respects_colour_lower_bounds(g in small_graph(8)) {
        let m = min_moves(&g).unwrap();
        let present = g.colours_present();
        prop_assert!(m + 1 >= present);
        let comps = FloodState::new(&g).components();
        let split = (0..g.c())
            .map(Colour::new)
            .filter(|&d| comps.iter().any(|k| k.colour == d))
            .all(|d| comps.iter().filter(|k| k.colour == d).count() >= 2);
        if split && present > 0 && comps.len() > 1 {
            prop_assert!(m >= present);
        }
    }

    #[test]
    fn exact_certificate_replays_and_greedy_is_no_better(g in small_graph(8), d in proptest::option::of(0usize..4)) {
        let mut q = SolveQuery::new(g.clone());
        q.target_colour = d.map(|d| Colour::new(d % g.c()));
        let res = min_moves_exact(&q).unwrap();
        let out = play_certificate(&g, &res.certificate).unwrap();
        prop_assert!(out.flooded && out.target_met);
        prop_assert_eq!(res.certificate.len(), res.moves);
        if d.is_none() {
            let greedy = greedy_upper_bound(&g);
            prop_assert!(play_certificate(&g, &greedy).unwrap().flooded);
            prop_assert!(greedy.len() >= res.moves);
        }
    }

    #[test]
    fn path_dp_matches_exact_on_longer_paths(
        (c, seq) in (2usize..5).prop_flat_map(|c| (Just(c), proptest::collection::vec(1usize..c.max(2), 1..13))),
        first in 0usize..4,
    ) {
        let mut col = vec![Colour::new(first % c)];
        for step in seq {
            let prev = col.last().unwrap().index();
            col.push(Colour::new((prev + step) % c));
        }
        let n = col.len();
        let g = ColouredGraph::new(Arc::new(floodit::generators::path_graph(n).unwrap()), col.clone(), c).unwrap();
        let table = PathTable::new(&col, c);
        prop_assert_eq!(table.value(None), min_moves(&g).unwrap());
        for d in 0..c {
            let d = Colour::new(d);
            let exact = min_moves_exact(&SolveQuery::new(g.clone()).colour(d)).unwrap().moves;
            prop_assert_eq!(table.value(Some(d)), exact);
        }
    }
}

proptest! {
    #[test]
    fn rainbow_families_match_their_formula(n in 1usize..60, c in 2usize..7, r in 0usize..80) {
        prop_assume!(c <= n);
        let shape = gen_graph(&FamilySpec::Path { n }).unwrap();
        for spec in [ColouringSpec::Rainbow { c }, ColouringSpec::ShiftedRainbow { c, r: r % n }] {
            let g = gen_colouring(&shape, &spec).unwrap();
            // one colour per residue class, distinct across residues
            let mut seen = vec![None; c];
            for (p, d) in g.colouring().iter().enumerate() {
                let slot = &mut seen[p % c];
                prop_assert!(slot.is_none_or(|x| x == *d));
                *slot = Some(*d);
            }
            let mut used: Vec<Colour> = seen.iter().flatten().copied().collect();
            used.sort();
            used.dedup();
            prop_assert_eq!(used.len(), c.min(n));
            let counts: Vec<usize> = (0..c).map(|d| g.colour_count(Colour::new(d))).collect();
            prop_assert!(counts.iter().max().unwrap() - counts.iter().min().unwrap() <= 1);
            prop_assert_eq!(*counts.iter().max().unwrap(), n.div_ceil(c));
        }
    }

    #[test]
    fn random_surjective_uses_every_colour(n in 1usize..80, c in 1usize..8, seed in any::<u64>()) {
        prop_assume!(c <= n);
        let col = random_surjective(n, c, seed);
        prop_assert_eq!(col.len(), n);
        for d in 0..c {
            prop_assert!(col.contains(&Colour::new(d)));
        }
    }

    #[test]
    fn blowups_have_independent_classes_and_full_joins(
        sizes in proptest::collection::vec(1usize..4, 1..12),
        cycle in any::<bool>(),
        f in proptest::collection::vec(1usize..3, 12),
    ) {
        prop_assume!(!cycle || sizes.len() >= 3);
        prop_assume!(sizes.len() > 1 || sizes[0] == 1);
        let t = sizes.len();
        let spec = if cycle { FamilySpec::BlowupCycle { sizes } } else { FamilySpec::BlowupPath { sizes } };
        let shape = gen_graph(&spec).unwrap();
        let b = shape.blowup().unwrap();
        prop_assert!(b.validate(&shape.graph).is_ok());
        for (i, ci) in b.classes.iter().enumerate() {
            for (j, cj) in b.classes.iter().enumerate() {
                let adjacent = (i + 1 == j || j + 1 == i) || (cycle && (i + j == t - 1) && i.abs_diff(j) == t - 1);
                for &u in ci {
                    for &v in cj {
                        if u != v {
                            prop_assert_eq!(shape.graph.has_edge(u, v), adjacent);
                        }
                    }
                }
            }
        }
        if !cycle && t <= 7 {
            // a transversal path is a subgraph; the whole blow-up costs at most c - 1 more
            let mut fc = vec![0u8];
            for k in 1..t {
                fc.push(((fc[k - 1] as usize + f[k]) % 3) as u8);
            }
            let seq: Vec<Colour> = fc.iter().map(|&d| Colour(d)).collect();
            let g = gen_colouring(&shape, &ColouringSpec::PathColouring { c: 3, f: fc }).unwrap();
            let m = min_moves(&g).unwrap();
            let path = PathTable::new(&seq, 3).value(None);
            prop_assert!(path <= m && m <= path + 2, "path {} blow-up {}", path, m);
        }
    }

    #[test]
    fn rainbow_certificates_are_upper_bounds(c in 2usize..4, extra in 0usize..3, sizes in proptest::collection::vec(1usize..3, 8)) {
        let t = c + 2 + extra;
        let shape = gen_graph(&FamilySpec::BlowupPath { sizes: sizes[..t].to_vec() }).unwrap();
        let g = gen_colouring(&shape, &ColouringSpec::Rainbow { c }).unwrap();
        let cert = rainbow_blowup_strategy(shape.blowup().unwrap(), &g).unwrap();
        prop_assert!(play_certificate(&g, &cert).unwrap().flooded);
        let m = min_moves(&g).unwrap();
        prop_assert!(cert.len() >= m);
        prop_assert!(cert.len() <= colour_bound(t, c));
    }
}

#[test]
fn tcr_radius_is_r() {
    for (c, r) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)] {
        let shape = gen_graph(&FamilySpec::TreeTcr { c, r }).unwrap();
        assert_eq!(shape.graph.radius(), r, "T_{{{c},{r}}}");
        assert_eq!(shape.graph.n(), 1 + tcr_legs(c, r) * r);
    }
}
