//! Certificate-emitting flooding strategies.
//!
//! Blow-up strategies run on the original graph and track classes through a
//! shared [`board::Board`]; every certificate is replayed before it is
//! returned.

mod arbitrary;
pub(crate) mod board;
mod dominating;
mod grd;
mod path_colouring;
mod radius;
mod rainbow;

use thiserror::Error;

use crate::blowup::BlowupError;
use crate::cert::{play_certificate, Certificate};
pub use arbitrary::{arbitrary_blowup_strategy, arbitrary_threshold, ArbitraryOutcome};
pub use dominating::dominating_path_strategy;
pub use grd::{grd_decompose, grd_sequence, path_colouring_sequence, GrdDecomposition};
pub use path_colouring::{path_colouring_best_effort, path_colouring_strategy, path_colouring_threshold};
pub use radius::radius_strategy;
pub use rainbow::rainbow_blowup_strategy;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not a path colouring: {0}")]
    NotAPathColouring(String),
    #[error("vertex set is not a transversal of the classes")]
    NotATransversal,
    #[error("invalid blow-up structure: {0}")]
    InvalidStructure(#[from] BlowupError),
    #[error("internal error: {0}")]
    Internal(String),
}

pub(crate) fn finish(board: board::Board<'_>) -> Result<Certificate, StrategyError> {
    let g = board.g;
    let cert = board.into_certificate();
    let out = play_certificate(g, &cert).map_err(|e| StrategyError::Internal(e.to_string()))?;
    if !out.flooded {
        return Err(StrategyError::Internal(format!("certificate of length {} does not flood", cert.len())));
    }
    Ok(cert)
}
