//! Flooding path-coloured blow-ups.
//!
//! The loop works on cells (see `board`). A rainbow sequence is finished by
//! the rainbow plan. With many greedy rainbow segments, short windows
//! `x_i..=s_{i+1}` at alternate boundaries are flooded first, each saving one
//! move, and a transversal greedy finishes. With few segments, a boundary is
//! repaired: at the witness `y` of a segment ending at `e`, playing
//! `f(y-1), .., f(y-c+1)` and then `f(y+2), .., f(e+1)` merges cells
//! `y-c..=e+1` two moves below their count.

use super::board::{Board, Cell};
use super::grd::{grd_sequence, path_colouring_sequence, GrdDecomposition};
use super::rainbow::rainbow_plan;
use super::StrategyError;
use crate::blowup::{Base, BlowupStructure};
use crate::cert::Certificate;
use crate::graph::{Colour, ColouredGraph};

/// Smallest `t` for which the length bound is guaranteed: `2c^2 (c-1)^3`.
pub fn path_colouring_threshold(c: usize) -> usize {
    2 * c * c * (c - 1).pow(3)
}

/// Floods classes `lo..=hi`, all of which must be monochromatic.
pub(crate) fn flood_path_range(board: &mut Board<'_>, lo: usize, hi: usize) {
    let c = board.c();
    let mut repairs = 0;
    loop {
        let cells = board.cells(lo, hi);
        if cells.len() == 1 {
            board.cycle_remaining(lo, hi);
            return;
        }
        let f: Vec<Colour> = cells.iter().map(|cell| cell.colour).collect();
        let grd = grd_sequence(&f, c);
        if grd.len() == 1 {
            if cells.len() >= c + 2 {
                let plan = rainbow_plan(&cells, c);
                board.play_all(&plan);
                continue;
            }
            board.dominating_finish(lo, hi);
            return;
        }
        if grd.len() > 2 * c * (c - 1) {
            many_segments(board, &cells, &grd);
            board.dominating_finish(lo, hi);
            return;
        }
        if repairs >= c * (c - 1) {
            board.dominating_finish(lo, hi);
            return;
        }
        match repair_plan(&cells, &f, &grd, c) {
            Some(plan) => {
                board.play_all(&plan);
                repairs += 1;
            }
            None => {
                board.dominating_finish(lo, hi);
                return;
            }
        }
    }
}

/// Floods disjoint windows `x_i..=s_{i+1}` (chosen greedily left to right)
/// with `len - 2` moves each, skipping any window whose cells changed.
fn many_segments(board: &mut Board<'_>, cells: &[Cell], grd: &GrdDecomposition) {
    let mut windows = Vec::new();
    let mut free_from = 0;
    for (i, &x) in grd.witnesses.iter().enumerate() {
        let s = grd.segments[i + 1].0;
        if x >= free_from && s - x >= 2 {
            windows.push((x, s));
            free_from = s + 1;
        }
    }
    for (x, s) in windows {
        let live = board.cells(cells[x].first, cells[s].last);
        if live.len() != s - x + 1 || live.iter().zip(&cells[x..=s]).any(|(a, b)| a.colour != b.colour) {
            continue;
        }
        let v = cells[x + 1].rep;
        for cell in &cells[x + 2..s] {
            board.play(v, cell.colour);
        }
        board.play(v, cells[x].colour);
    }
}

fn repair_at(
    cells: &[Cell],
    f: &[Colour],
    seg_start: usize,
    e: usize,
    y: usize,
    c: usize,
) -> Option<Vec<(usize, Colour)>> {
    if y < seg_start + c || y + 1 > e {
        return None;
    }
    let v = cells[y].rep;
    let mut plan: Vec<(usize, Colour)> = (y - c + 1..y).rev().map(|k| (v, f[k])).collect();
    plan.extend((y + 2..=e + 1).map(|k| (v, f[k])));
    Some(plan)
}

/// A boundary repair on the longest eligible segment, trying the mirrored
/// sequence when no forward boundary qualifies.
fn repair_plan(cells: &[Cell], f: &[Colour], grd: &GrdDecomposition, c: usize) -> Option<Vec<(usize, Colour)>> {
    let forward = (0..grd.witnesses.len())
        .filter_map(|i| {
            let (s, len) = grd.segments[i];
            repair_at(cells, f, s, s + len - 1, grd.witnesses[i], c).map(|plan| (len, i, plan))
        })
        .max_by_key(|&(len, i, _)| (len, std::cmp::Reverse(i)));
    if let Some((_, _, plan)) = forward {
        return Some(plan);
    }
    let rcells: Vec<Cell> = cells.iter().rev().copied().collect();
    let rf: Vec<Colour> = f.iter().rev().copied().collect();
    let rgrd = grd_sequence(&rf, c);
    (0..rgrd.witnesses.len())
        .filter_map(|i| {
            let (s, len) = rgrd.segments[i];
            repair_at(&rcells, &rf, s, s + len - 1, rgrd.witnesses[i], c).map(|plan| (len, i, plan))
        })
        .max_by_key(|&(len, i, _)| (len, std::cmp::Reverse(i)))
        .map(|(_, _, plan)| plan)
}

/// Floods a path-coloured path blow-up within `t - ceil(t/c)` moves for
/// `c >= 3` and `t >= 2c^2 (c-1)^3`.
pub fn path_colouring_strategy(b: &BlowupStructure, g: &ColouredGraph) -> Result<Certificate, StrategyError> {
    let c = g.c();
    if c < 3 {
        return Err(StrategyError::PreconditionViolated("path colouring strategy needs c >= 3".into()));
    }
    let need = path_colouring_threshold(c);
    if b.t() < need {
        return Err(StrategyError::PreconditionViolated(format!("t = {} is below 2c^2(c-1)^3 = {need}", b.t())));
    }
    path_colouring_best_effort(b, g)
}

/// The same procedure without the size precondition; the length bound is
/// then not guaranteed.
pub fn path_colouring_best_effort(b: &BlowupStructure, g: &ColouredGraph) -> Result<Certificate, StrategyError> {
    b.validate(g.graph()).map_err(StrategyError::from)?;
    if b.base != Base::Path {
        return Err(StrategyError::PreconditionViolated("expected a path blow-up".into()));
    }
    path_colouring_sequence(b, g)?;
    let mut board = Board::new(g, &b.classes);
    flood_path_range(&mut board, 0, b.t() - 1);
    super::finish(board)
}
