//! Flooding rainbow-coloured path blow-ups in `t - ceil(t/c)` moves.
//!
//! Cells are numbered `1..=t` below. While `t >= 3c + 2` one round plays at
//! cell `c+1` the colours of cells `c+2..=2c` and then `c-1` down to `1`,
//! which floods cells `1..=2c+1` with `2c - 2` moves; the flooded block acts
//! as cell 1 of a rainbow sequence that is `2c` cells shorter. Three base
//! cases finish `c+2 <= t <= 3c+1`.

use super::board::{Board, Cell};
use super::grd::path_colouring_sequence;
use super::StrategyError;
use crate::blowup::{Base, BlowupStructure};
use crate::cert::Certificate;
use crate::generators::is_rainbow;
use crate::graph::{Colour, ColouredGraph};

/// Full move plan for a rainbow cell sequence with at least `c + 2` cells.
pub(crate) fn rainbow_plan(cells: &[Cell], c: usize) -> Vec<(usize, Colour)> {
    let mut plan = Vec::new();
    let mut off = 0;
    loop {
        let t = cells.len() - off;
        let cell = |k: usize| cells[off + k - 1];
        let mut at = |v: usize, ks: &mut dyn Iterator<Item = usize>| {
            for k in ks {
                plan.push((v, cell(k).colour));
            }
        };
        if t >= 3 * c + 2 {
            let v = cell(c + 1).rep;
            at(v, &mut (c + 2..=2 * c));
            at(v, &mut (1..c).rev());
            off += 2 * c;
            continue;
        }
        if (c + 2..=2 * c).contains(&t) {
            at(cell(2).rep, &mut (3..=t));
        } else if (2 * c + 1..=3 * c).contains(&t) {
            let v = cell(c + 1).rep;
            at(v, &mut (c + 2..=2 * c));
            at(v, &mut (2..c).rev());
            at(v, &mut std::iter::once(1));
            at(v, &mut (2 * c + 2..=t));
        } else if t == 3 * c + 1 {
            let v = cell(c + 2).rep;
            at(v, &mut (c + 3..=2 * c + 1));
            at(v, &mut (2..=c).rev());
            at(v, &mut (2 * c + 3..=3 * c + 1));
        }
        return plan;
    }
}

/// Emits the explicit flooding sequence for a rainbow path colouring of a
/// path blow-up with `t >= c + 2` classes.
pub fn rainbow_blowup_strategy(b: &BlowupStructure, g: &ColouredGraph) -> Result<Certificate, StrategyError> {
    b.validate(g.graph()).map_err(StrategyError::from)?;
    if b.base != Base::Path {
        return Err(StrategyError::PreconditionViolated("rainbow strategy needs a path blow-up".into()));
    }
    let c = g.c();
    let t = b.t();
    if t < c + 2 {
        return Err(StrategyError::PreconditionViolated(format!("t = {t} is below c + 2 = {}", c + 2)));
    }
    let f = path_colouring_sequence(b, g)?;
    if !is_rainbow(&f, c) {
        return Err(StrategyError::PreconditionViolated("colouring is not rainbow".into()));
    }
    let mut board = Board::new(g, &b.classes);
    let cells = board.cells(0, t - 1);
    let plan = rainbow_plan(&cells, c);
    board.play_all(&plan);
    super::finish(board)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::play_certificate;
    use crate::generators::{gen_colouring, gen_graph, ColouringSpec, FamilySpec};
    use proptest::prelude::*;

    fn rainbow_blowup(c: usize, sizes: Vec<usize>) -> (BlowupStructure, ColouredGraph) {
        let shape = gen_graph(&FamilySpec::BlowupPath { sizes }).unwrap();
        let g = gen_colouring(&shape, &ColouringSpec::Rainbow { c }).unwrap();
        (shape.blowup().unwrap().clone(), g)
    }

    #[test]
    fn base_case_lengths() {
        for (t, len) in [(5, 3), (7, 4), (10, 6)] {
            let (b, g) = rainbow_blowup(3, vec![1; t]);
            let cert = rainbow_blowup_strategy(&b, &g).unwrap();
            assert_eq!(cert.len(), len, "t = {t}");
            assert!(play_certificate(&g, &cert).unwrap().flooded);
        }
    }

    #[test]
    fn induction_move_count() {
        // one induction round on t = 3c + 2 leaves t' = c + 2
        let c = 4;
        let (b, g) = rainbow_blowup(c, vec![2; 3 * c + 2]);
        let cert = rainbow_blowup_strategy(&b, &g).unwrap();
        assert_eq!(cert.len(), (2 * c - 2) + c);
        assert!(play_certificate(&g, &cert).unwrap().flooded);
    }

    #[test]
    fn rejects_short_or_non_rainbow() {
        let (b, g) = rainbow_blowup(3, vec![1; 4]);
        assert!(matches!(rainbow_blowup_strategy(&b, &g), Err(StrategyError::PreconditionViolated(_))));
        let shape = gen_graph(&FamilySpec::BlowupPath { sizes: vec![1; 6] }).unwrap();
        let g = gen_colouring(&shape, &ColouringSpec::PathColouring { c: 3, f: vec![0, 1, 0, 2, 0, 1] }).unwrap();
        assert!(rainbow_blowup_strategy(shape.blowup().unwrap(), &g).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn floods_within_bound(c in 2usize..5, extra in 0usize..40, seed_sizes in proptest::collection::vec(1usize..4, 60)) {
            let t = c + 2 + extra;
            let (b, g) = rainbow_blowup(c, seed_sizes[..t].to_vec());
            let cert = rainbow_blowup_strategy(&b, &g).unwrap();
            let out = play_certificate(&g, &cert).unwrap();
            prop_assert!(out.flooded);
            prop_assert!(cert.len() <= t - t.div_ceil(c));
        }
    }
}
