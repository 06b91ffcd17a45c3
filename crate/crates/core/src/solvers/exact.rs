//! A* search over colourings of the contracted graph.
//!
//! A state is the colouring of the contracted graph packed into a `u128`;
//! the component partition is a function of the colouring, so the packing is
//! a canonical key. The heuristic counts distinct colours on the target
//! vertices, which drops by at most one per move.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use super::{greedy_upper_bound, greedy_upper_bound_to, SolveError, SolveQuery, SolveResult};
use crate::cert::{play_certificate, Certificate};
use crate::engine::{contract, Move};
use crate::graph::{Colour, ColouredGraph};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// `min_moves_exact_with_budget` with [`DEFAULT_BUDGET`].
pub fn min_moves_exact(q: &SolveQuery) -> Result<SolveResult, SolveError> {
    min_moves_exact_with_budget(q, DEFAULT_BUDGET)
}

/// Free minimum `m(G, ω)`.
pub fn min_moves(g: &ColouredGraph) -> Result<usize, SolveError> {
    Ok(min_moves_exact(&SolveQuery::new(g.clone()))?.moves)
}

struct Packed {
    bits: u32,
    mask: u128,
}

impl Packed {
    #[inline]
    fn get(&self, key: u128, v: usize) -> usize {
        ((key >> (v as u32 * self.bits)) & self.mask) as usize
    }

    #[inline]
    fn set(&self, key: u128, v: usize, d: usize) -> u128 {
        let shift = v as u32 * self.bits;
        (key & !(self.mask << shift)) | ((d as u128) << shift)
    }
}

struct Node {
    key: u128,
    parent: u32,
    vertex: u8,
    colour: u8,
}

struct Search {
    n: usize,
    c: usize,
    adj: Vec<u64>,
    pack: Packed,
    target: u64,
    target_colour: Option<usize>,
}

impl Search {
    fn colour_masks(&self, key: u128) -> Vec<u64> {
        let mut masks = vec![0u64; self.c];
        for v in 0..self.n {
            masks[self.pack.get(key, v)] |= 1 << v;
        }
        masks
    }

    fn component(&self, v: usize, same: u64) -> u64 {
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut nb = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                nb |= self.adj[u];
            }
            let new = nb & same & !comp;
            comp |= new;
            frontier = new;
        }
        comp
    }

    fn heuristic(&self, key: u128) -> u16 {
        let mut seen = 0u32;
        let mut t = self.target;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            t &= t - 1;
            seen |= 1 << self.pack.get(key, v);
        }
        match self.target_colour {
            Some(d) => (seen & !(1 << d)).count_ones() as u16,
            None => seen.count_ones().saturating_sub(1) as u16,
        }
    }

    fn is_goal(&self, key: u128, masks: &[u64]) -> bool {
        let first = self.target.trailing_zeros() as usize;
        let d = self.pack.get(key, first);
        if self.target_colour.is_some_and(|want| want != d) {
            return false;
        }
        let comp = self.component(first, masks[d]);
        comp & self.target == self.target
    }
}

/// Exact minimum for `q`, expanding at most `budget` states.
///
/// On exhaustion returns [`SolveError::BudgetExceeded`] carrying a greedy
/// certificate flagged inexact.
pub fn min_moves_exact_with_budget(q: &SolveQuery, budget: u64) -> Result<SolveResult, SolveError> {
    let g = &q.graph;
    if let Some(d) = q.target_colour {
        if d.index() >= g.c() {
            return Err(SolveError::InvalidColour(d));
        }
    }
    if let Some(a) = &q.target_set {
        if a.is_empty() || a.iter().any(|&v| v >= g.n()) {
            return Err(SolveError::InvalidTarget);
        }
    }
    let k = contract(g);
    let n = k.graph.n();
    let bits = usize::BITS - (g.c().max(2) - 1).leading_zeros();
    if n > 64 || n as u32 * bits > 128 || g.c() > 32 {
        return Err(SolveError::TooLarge { n, c: g.c() });
    }
    let pack = Packed { bits, mask: (1u128 << bits) - 1 };
    let mut adj = vec![0u64; n];
    for &(u, v) in k.graph.graph().edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let target = match &q.target_set {
        Some(a) => a.iter().fold(0u64, |m, &v| m | 1 << k.map[v]),
        None => {
            if n == 64 {
                u64::MAX
            } else {
                (1u64 << n) - 1
            }
        }
    };
    let search = Search { n, c: g.c(), adj, pack, target, target_colour: q.target_colour.map(Colour::index) };
    let start = k.graph.colouring().iter().enumerate().fold(0u128, |key, (v, d)| search.pack.set(key, v, d.index()));

    let mut nodes = vec![Node { key: start, parent: u32::MAX, vertex: 0, colour: 0 }];
    let mut best: FxHashMap<u128, (u16, u32)> = FxHashMap::default();
    best.insert(start, (0, 0));
    let mut open = BinaryHeap::new();
    open.push(Reverse((search.heuristic(start), Reverse(0u16), 0u32)));
    let mut expanded = 0u64;

    while let Some(Reverse((_, Reverse(gcost), idx))) = open.pop() {
        let key = nodes[idx as usize].key;
        if best[&key].1 != idx {
            continue;
        }
        let masks = search.colour_masks(key);
        if search.is_goal(key, &masks) {
            let mut moves = Vec::with_capacity(gcost as usize);
            let mut i = idx;
            while nodes[i as usize].parent != u32::MAX {
                let node = &nodes[i as usize];
                moves.push(Move::new(k.reps[node.vertex as usize], Colour(node.colour)));
                i = node.parent;
            }
            moves.reverse();
            let first = search.target.trailing_zeros() as usize;
            let mut cert = Certificate::new(moves).with_final_colour(Colour::new(search.pack.get(key, first)));
            cert.claimed_target = q.target_set.clone();
            debug_assert!(play_certificate(g, &cert).unwrap().target_met);
            return Ok(SolveResult {
                moves: gcost as usize,
                certificate: cert,
                explored_states: expanded,
                exact: true,
            });
        }
        expanded += 1;
        if nodes.len() as u64 > budget {
            return Err(SolveError::BudgetExceeded { explored: expanded, best: Box::new(fallback(q)) });
        }
        let mut remaining = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let cur = search.pack.get(key, v);
            let comp = search.component(v, masks[cur]);
            remaining &= !comp;
            for d in 0..search.c {
                if d == cur {
                    continue;
                }
                let mut next = key;
                let mut cm = comp;
                while cm != 0 {
                    let u = cm.trailing_zeros() as usize;
                    cm &= cm - 1;
                    next = search.pack.set(next, u, d);
                }
                let ng = gcost + 1;
                if let Some(&(bg, _)) = best.get(&next) {
                    if bg <= ng {
                        continue;
                    }
                }
                let ni = nodes.len() as u32;
                nodes.push(Node { key: next, parent: idx, vertex: v as u8, colour: d as u8 });
                best.insert(next, (ng, ni));
                open.push(Reverse((ng + search.heuristic(next), Reverse(ng), ni)));
            }
        }
    }
    unreachable!("a connected graph can always be flooded")
}

fn fallback(q: &SolveQuery) -> SolveResult {
    let mut cert = match q.target_colour {
        Some(d) => greedy_upper_bound_to(&q.graph, d),
        None => greedy_upper_bound(&q.graph),
    };
    cert.claimed_target = q.target_set.clone();
    SolveResult { moves: cert.len(), certificate: cert, explored_states: 0, exact: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_coloured_graph, colours};

    fn path(cols: &[u8]) -> ColouredGraph {
        let n = cols.len();
        build_coloured_graph(n, (1..n).map(|i| (i - 1, i)), colours(cols)).unwrap()
    }

    fn solve(q: SolveQuery) -> SolveResult {
        let r = min_moves_exact(&q).unwrap();
        let out = play_certificate(&q.graph, &r.certificate).unwrap();
        assert!(out.target_met);
        assert_eq!(r.certificate.len(), r.moves);
        r
    }

    #[test]
    fn monochromatic_zero() {
        let g = path(&[2, 2, 2]).recoloured(colours(&[2, 2, 2]), 3).unwrap();
        assert_eq!(solve(SolveQuery::new(g.clone()).colour(Colour(2))).moves, 0);
        assert_eq!(solve(SolveQuery::new(g).colour(Colour(0))).moves, 1);
    }

    #[test]
    fn rainbow_path_five_two_colours() {
        assert_eq!(solve(SolveQuery::new(path(&[0, 1, 0, 1, 0]))).moves, 2);
    }

    #[test]
    fn small_paths() {
        assert_eq!(solve(SolveQuery::new(path(&[0, 1, 2]))).moves, 2);
        assert_eq!(solve(SolveQuery::new(path(&[0, 1, 0])).colour(Colour(0))).moves, 1);
        assert_eq!(solve(SolveQuery::new(path(&[0, 1, 0])).colour(Colour(1))).moves, 2);
    }

    #[test]
    fn target_subset() {
        let g = path(&[0, 1, 0, 2, 1]);
        let r = solve(SolveQuery::new(g).target(vec![0, 2]));
        assert_eq!(r.moves, 1);
    }

    #[test]
    fn budget_exceeded_reports_upper_bound() {
        let g = path(&[0, 1, 2, 0, 1, 2, 0, 1, 2, 0]);
        match min_moves_exact_with_budget(&SolveQuery::new(g.clone()), 3) {
            Err(SolveError::BudgetExceeded { best, .. }) => {
                assert!(!best.exact);
                assert!(play_certificate(&g, &best.certificate).unwrap().flooded);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn invalid_queries() {
        let g = path(&[0, 1]);
        assert_eq!(min_moves_exact(&SolveQuery::new(g.clone()).target(vec![])).unwrap_err(), SolveError::InvalidTarget);
        assert_eq!(
            min_moves_exact(&SolveQuery::new(g).colour(Colour(5))).unwrap_err(),
            SolveError::InvalidColour(Colour(5))
        );
    }
}
