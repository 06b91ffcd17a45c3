//! Move certificates and replay.

use serde::{Deserialize, Serialize};

use crate::engine::{FloodState, Move};
use crate::error::MoveError;
use crate::graph::{Colour, ColouredGraph};

/// A move sequence with optional claims about its effect.
///
/// With no `claimed_target` the target is the whole vertex set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub moves: Vec<Move>,
    pub claimed_target: Option<Vec<usize>>,
    pub claimed_final_colour: Option<Colour>,
}

impl Certificate {
    pub fn new(moves: Vec<Move>) -> Self {
        Certificate { moves, claimed_target: None, claimed_final_colour: None }
    }

    pub fn with_final_colour(mut self, d: Colour) -> Self {
        self.claimed_final_colour = Some(d);
        self
    }

    pub fn with_target(mut self, target: Vec<usize>) -> Self {
        self.claimed_target = Some(target);
        self
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// Result of replaying a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    /// The whole graph ended as one component.
    pub flooded: bool,
    /// The target lies in one component, of the claimed colour if any.
    pub target_met: bool,
    /// Colour of the component holding the target, if it is a single one.
    pub final_colour: Option<Colour>,
    /// Number of moves, counting no-ops.
    pub length: usize,
}

/// Replays `cert` on `g`. Fails only if a move names a vertex or colour that
/// does not exist.
pub fn play_certificate(g: &ColouredGraph, cert: &Certificate) -> Result<Outcome, MoveError> {
    let mut s = FloodState::new(g);
    for (i, &m) in cert.moves.iter().enumerate() {
        s.validate(i, m)?;
        s.apply(m);
    }
    if let Some(t) = &cert.claimed_target {
        if let Some(&v) = t.iter().find(|&&v| v >= g.n()) {
            return Err(MoveError::VertexOutOfRange { index: cert.moves.len(), vertex: v, n: g.n() });
        }
    }
    Ok(outcome_of(&s, cert))
}

pub(crate) fn outcome_of(s: &FloodState, cert: &Certificate) -> Outcome {
    let linked = match &cert.claimed_target {
        Some(t) if !t.is_empty() => t.iter().all(|&v| s.same_component(v, t[0])).then(|| t[0]),
        Some(_) => None,
        None => s.is_flooded().then_some(0),
    };
    let final_colour = linked.map(|v| s.colour_of(v));
    let target_met = match (final_colour, cert.claimed_final_colour) {
        (Some(got), Some(want)) => got == want,
        (Some(_), None) => true,
        (None, _) => cert.claimed_target.as_ref().is_some_and(|t| t.is_empty()),
    };
    Outcome { flooded: s.is_flooded(), target_met, final_colour, length: cert.moves.len() }
}
