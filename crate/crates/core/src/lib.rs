//! Free Flood-It on coloured graphs.
//!
//! The crate provides the game engine ([`FloodState`]), exact and specialised
//! minimum-move solvers, enumeration of the extremal value `M_c(G)`, family
//! generators, and certificate-emitting flooding strategies.

pub mod blowup;
pub mod cert;
pub mod engine;
pub mod error;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod io;
pub mod solvers;
pub mod strategies;

pub use blowup::{blowup_graph, theta, Base, BlowupError, BlowupStructure};
pub use cert::{play_certificate, Certificate, Outcome};
pub use engine::{apply_move, contract, initial_state, Component, Contraction, FloodState, Move};
pub use error::{GraphError, MoveError, ParseError};
pub use generators::{gen_colouring, gen_graph, ColouringSpec, FamilySpec, GenError, Shape};
pub use graph::{build_coloured_graph, colour_count, colours, radius, Colour, ColouredGraph, Graph};
pub use solvers::{
    cycle_min_moves, greedy_upper_bound, min_moves, min_moves_exact, path_min_moves, SolveError, SolveQuery,
    SolveResult,
};
pub use strategies::StrategyError;
