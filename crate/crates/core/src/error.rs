//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("edge endpoint {vertex} is not a vertex (n = {n})")]
    DanglingVertexRef { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("colour {colour} is outside the colour set 0..{c}")]
    NonDenseColours { colour: usize, c: usize },
    #[error("colouring has {got} entries, expected {expected}")]
    ColouringLength { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move {index} references vertex {vertex}, graph has {n}")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("move {index} uses colour {colour}, colour set has {c}")]
    ColourOutOfRange { index: usize, colour: usize, c: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ParseError {
    pub(crate) fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax { line, message: message.into() }
    }
}
