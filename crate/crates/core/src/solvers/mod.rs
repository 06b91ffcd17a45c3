//! Minimum-move solvers.
//!
//! [`min_moves_exact`] is an A* search over colourings of the contracted
//! graph. [`path_min_moves`] and [`cycle_min_moves`] are polynomial interval
//! dynamic programs; [`greedy_upper_bound`] is a fast certificate-producing
//! upper bound.

mod exact;
mod greedy;
mod path;

pub use exact::{min_moves, min_moves_exact, min_moves_exact_with_budget, DEFAULT_BUDGET};
pub use greedy::{greedy_upper_bound, greedy_upper_bound_to};
pub use path::{cycle_min_moves, path_min_moves, PathTable};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cert::Certificate;
use crate::graph::{Colour, ColouredGraph};

/// What to solve: flood `target_set` (default: every vertex) into a single
/// component, of `target_colour` if given. Moves may be played anywhere.
#[derive(Clone, Debug)]
pub struct SolveQuery {
    pub graph: ColouredGraph,
    pub target_set: Option<Vec<usize>>,
    pub target_colour: Option<Colour>,
}

impl SolveQuery {
    pub fn new(graph: ColouredGraph) -> Self {
        SolveQuery { graph, target_set: None, target_colour: None }
    }

    pub fn colour(mut self, d: Colour) -> Self {
        self.target_colour = Some(d);
        self
    }

    pub fn target(mut self, a: Vec<usize>) -> Self {
        self.target_set = Some(a);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub moves: usize,
    pub certificate: Certificate,
    pub explored_states: u64,
    /// `false` when the value is only an upper bound.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search budget exhausted after {explored} states; best known upper bound {}", best.moves)]
    BudgetExceeded { explored: u64, best: Box<SolveResult> },
    #[error("contracted graph has {n} vertices with {c} colours, beyond the exact solver's state encoding")]
    TooLarge { n: usize, c: usize },
    #[error("target set is empty or references a missing vertex")]
    InvalidTarget,
    #[error("target colour {0} is outside the colour set")]
    InvalidColour(Colour),
    #[error("graph is not a path after contraction")]
    NotAPath,
    #[error("graph is not a cycle or path after contraction")]
    NotACycle,
}
