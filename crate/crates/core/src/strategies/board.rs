//! Live game position over a sequence of vertex classes.
//!
//! The transversal vertex of a class is its lowest vertex id unless a caller
//! supplies another pick. A *cell* is a maximal run of consecutive classes
//! whose transversal vertices share a component; cells behave like the
//! vertices of a path.

use crate::cert::Certificate;
use crate::engine::{FloodState, Move};
use crate::graph::{Colour, ColouredGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Cell {
    pub first: usize,
    pub last: usize,
    pub rep: usize,
    pub colour: Colour,
    root: usize,
}

pub(crate) struct Board<'a> {
    pub g: &'a ColouredGraph,
    pub classes: &'a [Vec<usize>],
    pub state: FloodState,
    pub moves: Vec<Move>,
    reps: Vec<usize>,
}

impl<'a> Board<'a> {
    pub fn new(g: &'a ColouredGraph, classes: &'a [Vec<usize>]) -> Self {
        let reps = classes.iter().map(|cl| *cl.iter().min().expect("classes are non-empty")).collect();
        Board { g, classes, state: FloodState::new(g), moves: Vec::new(), reps }
    }

    pub fn c(&self) -> usize {
        self.g.c()
    }

    pub fn t(&self) -> usize {
        self.classes.len()
    }

    pub fn rep(&self, class: usize) -> usize {
        self.reps[class]
    }

    /// Plays `(v, d)` unless it would be a no-op.
    pub fn play(&mut self, v: usize, d: Colour) {
        let m = Move::new(v, d);
        if self.state.apply(m) {
            self.moves.push(m);
        }
    }

    pub fn play_all(&mut self, plan: &[(usize, Colour)]) {
        for &(v, d) in plan {
            self.play(v, d);
        }
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.state.colour_of(v)
    }

    /// Colour of a class if all its vertices currently share one.
    pub fn class_colour(&self, k: usize) -> Option<Colour> {
        let cl = &self.classes[k];
        let d = self.colour(cl[0]);
        cl.iter().all(|&v| self.colour(v) == d).then_some(d)
    }

    pub fn non_constant_classes(&self) -> Vec<usize> {
        (0..self.t()).filter(|&k| self.class_colour(k).is_none()).collect()
    }

    /// Cells over classes `lo..=hi`, in order.
    pub fn cells(&self, lo: usize, hi: usize) -> Vec<Cell> {
        let mut out: Vec<Cell> = Vec::new();
        for k in lo..=hi {
            let rep = self.reps[k];
            let root = self.state.root(rep);
            match out.last_mut() {
                Some(cell) if cell.root == root => cell.last = k,
                _ => out.push(Cell { first: k, last: k, rep, colour: self.state.colour_of(rep), root }),
            }
        }
        out
    }

    /// Greedy flood of the transversal `pick(lo..=hi)` into colour `d`:
    /// recolours the component of the first non-`d` transversal vertex until
    /// none is left. Each move removes at least one non-`d` segment.
    pub fn flood_transversal(&mut self, lo: usize, hi: usize, d: Colour, pick: &dyn Fn(&Self, usize) -> usize) {
        for k in lo..=hi {
            let q = pick(self, k);
            if self.colour(q) != d {
                self.play(q, d);
            }
        }
    }

    /// Plays, at the component of class `lo`'s transversal vertex, each colour
    /// still held by a vertex of `lo..=hi` outside that component.
    pub fn cycle_remaining(&mut self, lo: usize, hi: usize) {
        let anchor = self.reps[lo];
        let outside = |b: &Self| {
            (lo..=hi).flat_map(|k| b.classes[k].iter()).filter(|&&v| !b.state.same_component(v, anchor)).count()
        };
        let mut left = outside(self);
        while left > 0 {
            for d in 0..self.c() {
                let d = Colour::new(d);
                let needed = (lo..=hi)
                    .flat_map(|k| self.classes[k].iter())
                    .any(|&v| !self.state.same_component(v, anchor) && self.colour(v) == d);
                if needed {
                    self.play(anchor, d);
                }
            }
            let now = outside(self);
            if now == left {
                return;
            }
            left = now;
        }
    }

    /// Most frequent colour over transversal segments (lowest id on ties).
    pub fn majority_colour(&self, lo: usize, hi: usize, pick: &dyn Fn(&Self, usize) -> usize) -> Colour {
        let mut count = vec![0usize; self.c()];
        let mut prev = None;
        for k in lo..=hi {
            let root = self.state.root(pick(self, k));
            if prev != Some(root) {
                count[self.colour(pick(self, k)).index()] += 1;
            }
            prev = Some(root);
        }
        let best = (0..self.c()).max_by_key(|&d| (count[d], std::cmp::Reverse(d))).unwrap();
        Colour::new(best)
    }

    /// Transversal greedy with the majority colour, then colour cycling.
    pub fn dominating_finish(&mut self, lo: usize, hi: usize) {
        let pick = |b: &Self, k: usize| b.rep(k);
        let d = self.majority_colour(lo, hi, &pick);
        self.flood_transversal(lo, hi, d, &pick);
        self.cycle_remaining(lo, hi);
    }

    pub fn into_certificate(self) -> Certificate {
        let flooded = self.state.is_flooded().then(|| self.state.colour_of(0));
        let cert = Certificate::new(self.moves);
        match flooded {
            Some(d) => cert.with_final_colour(d),
            None => cert,
        }
    }
}
