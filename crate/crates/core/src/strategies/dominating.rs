//! Flooding through a dominating transversal path.

use super::board::Board;
use super::StrategyError;
use crate::blowup::BlowupStructure;
use crate::cert::Certificate;
use crate::graph::{Colour, ColouredGraph};
use crate::solvers::{min_moves_exact_with_budget, PathTable, SolveQuery};

const TARGET_BUDGET: u64 = 1_000_000;

/// Floods `q` (one vertex per class, in class order) by replaying an optimal
/// plan for the path `q` in `G`, then cycles the resulting component through
/// the colours still outside it.
///
/// Components of `G` can join transversal vertices that are far apart on
/// `q`, so the lifted plan may overshoot. Then `q` is flooded as a target set
/// of `G` by exact search, which never needs more moves than `q` alone, and a
/// transversal greedy is the last resort past the search budget.
pub fn dominating_path_strategy(
    b: &BlowupStructure,
    g: &ColouredGraph,
    q: &[usize],
) -> Result<Certificate, StrategyError> {
    b.validate(g.graph()).map_err(StrategyError::from)?;
    let idx = b.class_index(g.n());
    if q.len() != b.t() || q.iter().enumerate().any(|(k, &v)| v >= g.n() || idx[v] != k) {
        return Err(StrategyError::NotATransversal);
    }
    let t = b.t();
    let seq: Vec<Colour> = q.iter().map(|&v| g.colour(v)).collect();
    let table = PathTable::new(&seq, g.c());
    let (m_q, d) = table.best();
    let mut plan = Vec::new();
    table.plan(0, t - 1, d, &mut plan);
    let mut board = Board::new(g, &b.classes);
    for (pos, e) in plan {
        board.play(q[pos], e);
    }
    let joined = |board: &Board<'_>| (1..t).all(|k| board.state.same_component(q[0], q[k]));
    if !joined(&board) || board.moves.len() > m_q {
        let query = SolveQuery::new(g.clone()).target(q.to_vec());
        if let Ok(res) = min_moves_exact_with_budget(&query, TARGET_BUDGET) {
            board = Board::new(g, &b.classes);
            for m in res.certificate.moves {
                board.play(m.vertex, m.colour);
            }
        }
    }
    if !joined(&board) {
        let pick = |_: &Board<'_>, k: usize| q[k];
        let d = board.majority_colour(0, t - 1, &pick);
        board.flood_transversal(0, t - 1, d, &pick);
    }
    let anchor = q[0];
    let outside = |b: &Board<'_>| (0..b.g.n()).any(|v| !b.state.same_component(v, anchor));
    while outside(&board) {
        let before = board.moves.len();
        for e in 0..g.c() {
            let e = Colour::new(e);
            if (0..g.n()).any(|v| !board.state.same_component(v, anchor) && board.colour(v) == e) {
                board.play(anchor, e);
            }
        }
        if board.moves.len() == before {
            break;
        }
    }
    super::finish(board)
}
