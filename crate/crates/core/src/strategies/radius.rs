//! Flooding from a centre, one distance layer at a time.

use crate::cert::Certificate;
use crate::engine::{FloodState, Move};
use crate::graph::{Colour, ColouredGraph};

/// Plays every move at a centre `v`. Once the component of `v` holds all
/// vertices at distance below `i`, it cycles through the colours still held
/// by layer `i` outside it, at most `c - 1` of them.
pub fn radius_strategy(g: &ColouredGraph) -> Certificate {
    let (v, ecc) = g.graph().centre();
    let dist = g.graph().bfs_distances(v);
    let mut layers = vec![Vec::new(); ecc + 1];
    for (u, d) in dist.iter().enumerate() {
        layers[d.expect("connected graph")].push(u);
    }
    let mut state = FloodState::new(g);
    let mut moves = Vec::new();
    for layer in &layers[1..] {
        for d in 0..g.c() {
            let d = Colour::new(d);
            if layer.iter().any(|&u| !state.same_component(u, v) && state.colour_of(u) == d) {
                let m = Move::new(v, d);
                if state.apply(m) {
                    moves.push(m);
                }
            }
        }
    }
    debug_assert!(state.is_flooded());
    Certificate::new(moves).with_final_colour(state.colour_of(v))
}
