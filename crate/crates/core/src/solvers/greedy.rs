use crate::cert::Certificate;
use crate::engine::{FloodState, Move};
use crate::graph::{Colour, ColouredGraph};

/// Floods with the most frequent colour (lowest id on ties) by repeatedly
/// recolouring the lowest-named component adjacent to the largest component
/// of that colour. Length is at most `n - max_d N_d`.
pub fn greedy_upper_bound(g: &ColouredGraph) -> Certificate {
    let d = (0..g.c())
        .map(Colour::new)
        .max_by_key(|&d| (g.colour_count(d), std::cmp::Reverse(d)))
        .expect("colour set is non-empty");
    greedy_upper_bound_to(g, d)
}

/// Greedy flood ending in colour `d`. If `d` is absent it floods with the
/// most frequent colour first and then recolours once.
pub fn greedy_upper_bound_to(g: &ColouredGraph, d: Colour) -> Certificate {
    if g.colour_count(d) == 0 {
        let mut cert = greedy_upper_bound(g);
        cert.moves.push(Move::new(0, d));
        return cert.with_final_colour(d);
    }
    let mut s = FloodState::new(g);
    let anchor = s
        .components()
        .into_iter()
        .filter(|comp| comp.colour == d)
        .max_by_key(|comp| (comp.vertices.len(), std::cmp::Reverse(comp.name)))
        .map(|comp| comp.name)
        .expect("colour d is present");
    let mut moves = Vec::new();
    while !s.is_flooded() {
        let next = s.neighbour_names(anchor)[0];
        let m = Move::new(next, d);
        s.apply(m);
        moves.push(m);
    }
    Certificate::new(moves).with_final_colour(d)
}
