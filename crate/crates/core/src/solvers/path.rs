//! Interval dynamic program for paths, and cycles via their spanning paths.

use super::SolveError;
use crate::engine::contract;
use crate::graph::{Colour, ColouredGraph};

/// `f(i, j, d)`: minimum moves making the segment `i..=j` of an isolated
/// colour sequence monochromatic in `d`.
///
/// `f(i,i,d) = [col(i) != d]` and
/// `f(i,j,d) = min(min_{d' != d} f(i,j,d') + 1, min_k f(i,k,d) + f(k+1,j,d))`.
#[derive(Clone, Debug)]
pub struct PathTable {
    len: usize,
    c: usize,
    f: Vec<u16>,
}

impl PathTable {
    pub fn new(seq: &[Colour], c: usize) -> Self {
        let len = seq.len();
        let mut t = PathTable { len, c, f: vec![0; len * len * c] };
        // by_end[(j, i)] mirrors f[(i, j)] so both split operands scan rows
        let mut by_end = vec![0u16; len * len * c];
        let mut split = vec![0u16; c];
        for (i, s) in seq.iter().enumerate() {
            for d in 0..c {
                let v = u16::from(s.index() != d);
                let at = t.idx(i, i, d);
                t.f[at] = v;
                by_end[at] = v;
            }
        }
        for span in 1..len {
            for i in 0..len - span {
                let j = i + span;
                split.fill(u16::MAX);
                for k in i..j {
                    let left = &t.f[(i * len + k) * c..(i * len + k + 1) * c];
                    let right = &by_end[(j * len + k + 1) * c..(j * len + k + 2) * c];
                    for ((s, &a), &b) in split.iter_mut().zip(left).zip(right) {
                        *s = (*s).min(a + b);
                    }
                }
                let best = *split.iter().min().unwrap();
                for (d, &s) in split.iter().enumerate() {
                    let v = s.min(best + 1);
                    let at = t.idx(i, j, d);
                    t.f[at] = v;
                    by_end[(j * len + i) * c + d] = v;
                }
            }
        }
        t
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, d: usize) -> usize {
        (i * self.len + j) * self.c + d
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize, j: usize, d: Colour) -> usize {
        self.f[self.idx(i, j, d.index())] as usize
    }

    /// Minimum over colours for the whole sequence, with the lowest optimal
    /// colour.
    pub fn best(&self) -> (usize, Colour) {
        (0..self.c)
            .map(|d| (self.get(0, self.len - 1, Colour::new(d)), Colour::new(d)))
            .min()
            .expect("non-empty colour set")
    }

    /// Whole-sequence value for target `d`, or the free minimum.
    pub fn value(&self, d: Option<Colour>) -> usize {
        match d {
            Some(d) => self.get(0, self.len - 1, d),
            None => self.best().0,
        }
    }

    /// An optimal move sequence for the isolated path making `i..=j`
    /// monochromatic in `d`, as `(position, colour)` pairs. Replaying it on a
    /// path graph in order achieves exactly `f(i, j, d)` moves.
    pub fn plan(&self, i: usize, j: usize, d: Colour, out: &mut Vec<(usize, Colour)>) {
        let v = self.get(i, j, d);
        if i == j {
            if v == 1 {
                out.push((i, d));
            }
            return;
        }
        if let Some(k) = (i..j).find(|&k| self.get(i, k, d) + self.get(k + 1, j, d) == v) {
            self.plan(i, k, d, out);
            self.plan(k + 1, j, d, out);
            return;
        }
        let inner =
            (0..self.c).map(Colour::new).find(|&e| e != d && self.get(i, j, e) + 1 == v).expect("table is consistent");
        self.plan(i, j, inner, out);
        out.push((i, d));
    }
}

/// Minimum moves for a coloured path (after contraction).
pub fn path_min_moves(g: &ColouredGraph, d: Option<Colour>) -> Result<usize, SolveError> {
    let k = contract(g);
    let order = k.graph.graph().path_order().ok_or(SolveError::NotAPath)?;
    let seq: Vec<Colour> = order.iter().map(|&v| k.graph.colour(v)).collect();
    Ok(PathTable::new(&seq, g.c()).value(d))
}

/// Minimum moves for a coloured cycle: the best spanning path. Paths after
/// contraction are delegated.
pub fn cycle_min_moves(g: &ColouredGraph, d: Option<Colour>) -> Result<usize, SolveError> {
    let k = contract(g);
    if k.graph.graph().is_path() {
        return path_min_moves(&k.graph, d);
    }
    let order = k.graph.graph().cycle_order().ok_or(SolveError::NotACycle)?;
    let seq: Vec<Colour> = order.iter().map(|&v| k.graph.colour(v)).collect();
    let n = seq.len();
    Ok((0..n)
        .map(|start| {
            let rotated: Vec<Colour> = (0..n).map(|i| seq[(start + i) % n]).collect();
            PathTable::new(&rotated, g.c()).value(d)
        })
        .min()
        .expect("cycle is non-empty"))
}
