//! Greedy rainbow decomposition of a class colour sequence.

use serde::{Deserialize, Serialize};

use super::StrategyError;
use crate::blowup::BlowupStructure;
use crate::graph::{Colour, ColouredGraph};

/// Maximal rainbow segments scanned left to right (0-based class indices).
///
/// For each segment `i` except the last, `witnesses[i]` is the unique index
/// `x` in the segment's final `c - 1` positions with `f(x) = f(s_{i+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrdDecomposition {
    /// `(start, length)` per segment.
    pub segments: Vec<(usize, usize)>,
    pub witnesses: Vec<usize>,
}

impl GrdDecomposition {
    pub fn lengths(&self) -> Vec<usize> {
        self.segments.iter().map(|&(_, len)| len).collect()
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }
}

/// Decomposes a proper colour sequence. Panics on equal neighbours.
pub fn grd_sequence(f: &[Colour], c: usize) -> GrdDecomposition {
    let t = f.len();
    let mut segments = Vec::new();
    let mut witnesses = Vec::new();
    let mut s = 0;
    while s < t {
        let mut e = s;
        loop {
            let next = e + 1;
            if next >= t {
                break;
            }
            assert_ne!(f[next], f[e], "sequence must be proper");
            let fits = if next - s < c { !f[s..next].contains(&f[next]) } else { f[next] == f[next - c] };
            if !fits {
                break;
            }
            e = next;
        }
        segments.push((s, e - s + 1));
        if e + 1 < t {
            let lo = s.max((e + 2).saturating_sub(c));
            let x = (lo..=e).find(|&x| f[x] == f[e + 1]).expect("a maximal segment has a witness");
            witnesses.push(x);
        }
        s = e + 1;
    }
    GrdDecomposition { segments, witnesses }
}

/// Class colours of a path colouring, or `NotAPathColouring`.
pub fn path_colouring_sequence(b: &BlowupStructure, g: &ColouredGraph) -> Result<Vec<Colour>, StrategyError> {
    let f: Option<Vec<Colour>> = b.class_colours(g).into_iter().collect();
    let f = f.ok_or(StrategyError::NotAPathColouring("a class is not monochromatic".into()))?;
    if f.windows(2).any(|w| w[0] == w[1]) {
        return Err(StrategyError::NotAPathColouring("two consecutive classes share a colour".into()));
    }
    Ok(f)
}

/// Greedy rainbow decomposition of a path-coloured blow-up.
pub fn grd_decompose(b: &BlowupStructure, g: &ColouredGraph) -> Result<GrdDecomposition, StrategyError> {
    Ok(grd_sequence(&path_colouring_sequence(b, g)?, g.c()))
}
