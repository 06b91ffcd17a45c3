//! Flooding blow-ups of paths and cycles under arbitrary colourings.
//!
//! Let `θ` be the number of classes that are not monochromatic. With
//! `θ = 0` the path-colouring procedure applies. With `θ >= c(c-1)` some
//! colour `j` occurs in at least `ceil(t/c) + c - 1` classes and a transversal
//! through colour-`j` vertices floods cheaply. Otherwise a non-monochromatic
//! class `U` with a long run of monochromatic classes on one side is absorbed:
//! the run is flooded block by block, and then either the next `c` cells
//! hold every colour of `U` missing from the first cell (absorb `U` with
//! `c - 1` moves) or they repeat a colour (flood them with at most `c - 2`
//! moves). Cycles are handled on their spanning path blow-up.

use super::board::Board;
use super::path_colouring::flood_path_range;
use super::StrategyError;
use crate::blowup::BlowupStructure;
use crate::cert::Certificate;
use crate::graph::{Colour, ColouredGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArbitraryOutcome {
    pub certificate: Certificate,
    /// Below `c >= 3, t >= 2c^10` the length bound is not guaranteed.
    pub best_effort: bool,
}

/// `2c^10`, the class count from which the bound is guaranteed.
pub fn arbitrary_threshold(c: usize) -> usize {
    2usize.saturating_mul(c.saturating_pow(10))
}

pub fn arbitrary_blowup_strategy(b: &BlowupStructure, g: &ColouredGraph) -> Result<ArbitraryOutcome, StrategyError> {
    b.validate(g.graph()).map_err(StrategyError::from)?;
    let c = g.c();
    let best_effort = c < 3 || b.t() < arbitrary_threshold(c);
    let mut board = Board::new(g, &b.classes);
    run(&mut board);
    Ok(ArbitraryOutcome { certificate: super::finish(board)?, best_effort })
}

fn run(board: &mut Board<'_>) {
    let c = board.c();
    let t = board.t();
    loop {
        let nc = board.non_constant_classes();
        if nc.is_empty() {
            flood_path_range(board, 0, t - 1);
            return;
        }
        if nc.len() >= c * (c - 1) {
            colour_transversal(board);
            return;
        }
        if !absorb_one(board, &nc) {
            board.dominating_finish(0, t - 1);
            return;
        }
    }
}

/// Transversal through a colour-`j` vertex of every class that has one, for
/// the colour `j` present in the most classes.
fn colour_transversal(board: &mut Board<'_>) {
    let t = board.t();
    let mut count = vec![0usize; board.c()];
    for k in 0..t {
        let mut seen = vec![false; board.c()];
        for &v in &board.classes[k] {
            seen[board.colour(v).index()] = true;
        }
        for (d, s) in seen.into_iter().enumerate() {
            count[d] += usize::from(s);
        }
    }
    let j = Colour::new((0..board.c()).max_by_key(|&d| (count[d], std::cmp::Reverse(d))).unwrap());
    let pick = move |b: &Board<'_>, k: usize| {
        b.classes[k].iter().copied().filter(|&v| b.colour(v) == j).min().unwrap_or(b.rep(k))
    };
    board.flood_transversal(0, t - 1, j, &pick);
    board.cycle_remaining(0, t - 1);
}

/// Absorbs one non-monochromatic class. Returns `false` when the caller
/// should finish with a dominating transversal instead.
fn absorb_one(board: &mut Board<'_>, nc: &[usize]) -> bool {
    let c = board.c();
    let t = board.t();
    let blocks = c * c * (c - 1) + 1;
    let width = 2 * c.pow(5) + 1;
    let need = blocks * width;

    let runs: Vec<(usize, usize, usize)> = nc
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let right = nc.get(i + 1).copied().unwrap_or(t) - p - 1;
            let left = p - if i == 0 { 0 } else { nc[i - 1] + 1 };
            (p, left, right)
        })
        .collect();
    let choice = runs
        .iter()
        .find(|r| r.2 >= need)
        .map(|r| (r.0, true, r.2))
        .or_else(|| runs.iter().find(|r| r.1 >= need).map(|r| (r.0, false, r.1)))
        .or_else(|| {
            runs.iter()
                .flat_map(|r| [(r.0, true, r.2), (r.0, false, r.1)])
                .max_by_key(|&(p, right, run)| (run, std::cmp::Reverse(p), right))
        });
    let Some((p, right, run)) = choice else { return false };
    let (nblocks, w) = if run >= need {
        (blocks, width)
    } else {
        let w = (run / blocks).max(c + 2);
        (run / w, w)
    };
    if nblocks == 0 {
        return false;
    }
    let span = nblocks * w;
    let class_range =
        |l: usize| if right { (p + 1 + l * w, p + (l + 1) * w) } else { (p - (l + 1) * w, p - 1 - l * w) };
    for l in 0..nblocks {
        let (lo, hi) = class_range(l);
        flood_path_range(board, lo, hi);
    }

    let (lo, hi) = if right { (p + 1, p + span) } else { (p - span, p - 1) };
    let mut floods = 0;
    loop {
        let mut cells = board.cells(lo, hi);
        if !right {
            cells.reverse();
        }
        if cells.len() < c {
            return false;
        }
        let anchor = cells[0].rep;
        let mut missing = vec![false; c];
        for &v in &board.classes[p] {
            if !board.state.same_component(v, anchor) {
                missing[board.colour(v).index()] = true;
            }
        }
        let mut avail = vec![false; c];
        for cell in &cells[1..c] {
            avail[cell.colour.index()] = true;
        }
        if (0..c).all(|d| !missing[d] || avail[d]) {
            for cell in &cells[1..c] {
                board.play(anchor, cell.colour);
            }
            return true;
        }
        let mut count = vec![0usize; c];
        for cell in &cells[..c] {
            count[cell.colour.index()] += 1;
        }
        let d = Colour::new((0..c).max_by_key(|&d| (count[d], std::cmp::Reverse(d))).unwrap());
        for cell in &cells[..c] {
            if board.colour(cell.rep) != d {
                board.play(cell.rep, d);
            }
        }
        floods += 1;
        if floods >= c * (c - 1) {
            return false;
        }
    }
}
