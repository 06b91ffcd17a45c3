//! The extremal value `M_c(G)`: the largest minimum move count over all
//! surjective `c`-colourings of `G`.
//!
//! Colourings are enumerated up to colour permutation as restricted growth
//! strings (colours appear in first-occurrence order), which is enough since
//! the free minimum is invariant under relabelling colours.

mod campaign;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Colour, ColouredGraph, Graph};
use crate::solvers::{min_moves_exact_with_budget, SolveError, SolveQuery, DEFAULT_BUDGET};

pub use campaign::{
    check_shifted_rainbow, verify_theorem, CampaignConfig, Failure, Params, Report, CLAIMS, REPORT_SCHEMA,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("{c} colours cannot be surjective on {n} vertices")]
    TooManyColours { c: usize, n: usize },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
}

/// Surjective colourings of `0..n` with `c` colours, one per orbit under
/// colour permutations, in lexicographic order.
#[derive(Clone, Debug)]
pub struct SurjectiveColourings {
    c: usize,
    cur: Vec<u8>,
    started: bool,
    done: bool,
}

pub fn enumerate_surjective_colourings(n: usize, c: usize) -> Result<SurjectiveColourings, ExtremalError> {
    if c > n || c == 0 || c > 256 {
        return Err(ExtremalError::TooManyColours { c, n });
    }
    let mut cur = vec![0u8; n];
    fill_min(&mut cur, 0, 0, c);
    Ok(SurjectiveColourings { c, cur, started: false, done: false })
}

/// Smallest completion of `cur[from..]` given the prefix maximum `max`.
fn fill_min(cur: &mut [u8], from: usize, max: usize, c: usize) {
    let n = cur.len();
    let ramp = c - 1 - max;
    for (i, slot) in cur.iter_mut().enumerate().skip(from) {
        let k = n - i;
        *slot = if k <= ramp { (c - k) as u8 } else { 0 };
    }
}

impl Iterator for SurjectiveColourings {
    type Item = Vec<Colour>;

    fn next(&mut self) -> Option<Vec<Colour>> {
        if self.done {
            return None;
        }
        if self.started {
            let n = self.cur.len();
            let mut prefix_max = vec![0usize; n];
            for i in 1..n {
                prefix_max[i] = prefix_max[i - 1].max(self.cur[i] as usize);
            }
            let step = (1..n).rev().find_map(|i| {
                let m = prefix_max[i - 1];
                let next = self.cur[i] as usize + 1;
                let new_max = m.max(next);
                (next <= (m + 1).min(self.c - 1) && self.c - 1 - new_max <= n - 1 - i).then_some((i, next, new_max))
            });
            match step {
                Some((i, next, new_max)) => {
                    self.cur[i] = next as u8;
                    fill_min(&mut self.cur, i + 1, new_max, self.c);
                }
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        Some(self.cur.iter().map(|&d| Colour(d)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub value: usize,
    /// Lexicographically smallest canonical colouring attaining `value`.
    pub witness_colouring: Vec<Colour>,
    pub colourings_evaluated: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalOptions {
    pub budget: u64,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for ExtremalOptions {
    fn default() -> Self {
        ExtremalOptions { budget: DEFAULT_BUDGET, workers: None }
    }
}

pub fn max_moves(g: &Arc<Graph>, c: usize) -> Result<ExtremalResult, ExtremalError> {
    max_moves_with(g, c, ExtremalOptions::default())
}

pub fn max_moves_with(g: &Arc<Graph>, c: usize, opts: ExtremalOptions) -> Result<ExtremalResult, ExtremalError> {
    let all: Vec<Vec<Colour>> = enumerate_surjective_colourings(g.n(), c)?.collect();
    let solve = || -> Vec<Result<usize, SolveError>> {
        all.par_iter()
            .map(|col| {
                let cg = ColouredGraph::new(Arc::clone(g), col.clone(), c).expect("valid colouring");
                min_moves_exact_with_budget(&SolveQuery::new(cg), opts.budget).map(|r| r.moves)
            })
            .collect()
    };
    let values = match opts.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| ExtremalError::InvalidParams(e.to_string()))?
            .install(solve),
        None => solve(),
    };
    let mut best: Option<(usize, usize)> = None;
    for (i, v) in values.into_iter().enumerate() {
        let v = v?;
        if best.is_none_or(|(b, _)| v > b) {
            best = Some((v, i));
        }
    }
    let (value, i) = best.expect("at least one colouring");
    Ok(ExtremalResult { value, witness_colouring: all[i].clone(), colourings_evaluated: all.len() as u64 })
}

/// Closed-form families and bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum PredictQuery {
    Path { n: usize, c: usize },
    Cycle { n: usize, c: usize },
    BlowupPath { t: usize, c: usize },
    BlowupCycle { t: usize, c: usize },
    TreeTcr { c: usize, r: usize },
    ColourBound { n: usize, c: usize },
    RadiusBound { r: usize, c: usize },
    GridBounds { k: usize, n: usize, c: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Prediction {
    Exact { value: usize },
    UpperBound { value: usize },
    Interval { lower: usize, upper: usize, conjectured_exact: Option<usize> },
}

/// `n - ceil(n/c)`.
pub fn colour_bound(n: usize, c: usize) -> usize {
    n - n.div_ceil(c)
}

pub fn predicted_value(q: &PredictQuery) -> Result<Prediction, ExtremalError> {
    let bad = |m: &str| Err(ExtremalError::InvalidParams(m.into()));
    let colour_ok = |c: usize| c >= 1;
    use Prediction::*;
    match *q {
        PredictQuery::Path { n, c } => {
            if n == 0 || !colour_ok(c) || c > n {
                return bad("path needs 1 <= c <= n");
            }
            Ok(Exact { value: colour_bound(n, c) })
        }
        PredictQuery::Cycle { n, c } => {
            if n < 3 || !colour_ok(c) || c > n {
                return bad("cycle needs n >= 3 and 1 <= c <= n");
            }
            Ok(Exact { value: colour_bound(n, c) })
        }
        PredictQuery::BlowupPath { t, c } | PredictQuery::BlowupCycle { t, c } => {
            let cyc = matches!(q, PredictQuery::BlowupCycle { .. });
            if t == 0 || (cyc && t < 3) || !colour_ok(c) {
                return bad("blow-up needs t >= 1 (t >= 3 for cycles) and c >= 1");
            }
            let lower = colour_bound(t, c);
            let threshold = 2usize.saturating_mul(c.saturating_pow(10));
            if t >= threshold {
                Ok(Exact { value: lower })
            } else {
                Ok(Interval { lower, upper: lower + c - 1, conjectured_exact: Some(lower) })
            }
        }
        PredictQuery::TreeTcr { c, r } => {
            if c < 2 || r < 1 {
                return bad("T_{c,r} needs c >= 2 and r >= 1");
            }
            Ok(Exact { value: (c - 1) * r })
        }
        PredictQuery::ColourBound { n, c } => {
            if n == 0 || !colour_ok(c) {
                return bad("colour bound needs n >= 1 and c >= 1");
            }
            Ok(UpperBound { value: colour_bound(n, c) })
        }
        PredictQuery::RadiusBound { r, c } => {
            if !colour_ok(c) {
                return bad("radius bound needs c >= 1");
            }
            Ok(UpperBound { value: (c - 1) * r })
        }
        PredictQuery::GridBounds { k, n, c } => {
            if k == 0 || n == 0 || !colour_ok(c) {
                return bad("grid needs k, n, c >= 1");
            }
            let lower = colour_bound(n, c);
            Ok(Interval { lower, upper: lower + (c - 1) * (k - 1).div_ceil(2), conjectured_exact: None })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_graph, path_graph};
    use crate::solvers::min_moves_exact;
    use proptest::prelude::*;

    fn stirling2(n: usize, k: usize) -> u64 {
        let mut s = vec![vec![0u64; k + 1]; n + 1];
        s[0][0] = 1;
        for i in 1..=n {
            for j in 1..=k.min(i) {
                s[i][j] = j as u64 * s[i - 1][j] + s[i - 1][j - 1];
            }
        }
        s[n][k]
    }

    #[test]
    fn enumeration_examples() {
        let two: Vec<_> = enumerate_surjective_colourings(2, 2).unwrap().collect();
        assert_eq!(two, vec![crate::colours(&[0, 1])]);
        let three: Vec<Vec<u8>> =
            enumerate_surjective_colourings(3, 2).unwrap().map(|v| v.iter().map(|d| d.0).collect()).collect();
        assert_eq!(three, vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]);
        assert!(matches!(enumerate_surjective_colourings(3, 4), Err(ExtremalError::TooManyColours { .. })));
        assert_eq!(enumerate_surjective_colourings(1, 1).unwrap().count(), 1);
    }

    #[test]
    fn enumeration_counts_match_orbits() {
        // every orbit of surjective maps has exactly c! members
        for n in 1..=6 {
            for c in 1..=n {
                let reps = enumerate_surjective_colourings(n, c).unwrap().count() as u64;
                let fact: u64 = (1..=c as u64).product();
                let mut direct = 0u64;
                for code in 0..(c as u64).pow(n as u32) {
                    let mut used = vec![false; c];
                    let mut x = code;
                    for _ in 0..n {
                        used[(x % c as u64) as usize] = true;
                        x /= c as u64;
                    }
                    direct += u64::from(used.iter().all(|&u| u));
                }
                assert_eq!(reps * fact, direct, "n={n} c={c}");
                assert_eq!(reps, stirling2(n, c));
            }
        }
    }

    #[test]
    fn small_extremal_values() {
        let p3 = Arc::new(path_graph(3).unwrap());
        assert_eq!(max_moves(&p3, 2).unwrap().value, 1);
        let c4 = Arc::new(cycle_graph(4).unwrap());
        assert_eq!(max_moves(&c4, 2).unwrap().value, 2);
        let p5 = Arc::new(path_graph(5).unwrap());
        let res = max_moves(&p5, 3).unwrap();
        assert_eq!(res.value, 3);
        assert_eq!(res.colourings_evaluated, 25);
        let g = ColouredGraph::new(Arc::clone(&p5), res.witness_colouring.clone(), 3).unwrap();
        assert_eq!(min_moves_exact(&SolveQuery::new(g)).unwrap().moves, 3);
    }

    #[test]
    fn workers_do_not_change_result() {
        let g = Arc::new(cycle_graph(6).unwrap());
        let a = max_moves_with(&g, 3, ExtremalOptions { workers: Some(1), ..Default::default() }).unwrap();
        let b = max_moves_with(&g, 3, ExtremalOptions { workers: Some(4), ..Default::default() }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn predictions() {
        assert_eq!(predicted_value(&PredictQuery::Path { n: 8, c: 3 }).unwrap(), Prediction::Exact { value: 5 });
        assert_eq!(predicted_value(&PredictQuery::TreeTcr { c: 2, r: 2 }).unwrap(), Prediction::Exact { value: 2 });
        assert_eq!(
            predicted_value(&PredictQuery::GridBounds { k: 2, n: 10, c: 3 }).unwrap(),
            Prediction::Interval { lower: 6, upper: 8, conjectured_exact: None }
        );
        assert_eq!(
            predicted_value(&PredictQuery::BlowupPath { t: 2 * 3usize.pow(10), c: 3 }).unwrap(),
            Prediction::Exact { value: 118098 - 39366 }
        );
        assert!(matches!(
            predicted_value(&PredictQuery::BlowupCycle { t: 10, c: 3 }).unwrap(),
            Prediction::Interval { lower: 6, upper: 8, conjectured_exact: Some(6) }
        ));
        assert!(predicted_value(&PredictQuery::Cycle { n: 2, c: 2 }).is_err());
        assert!(predicted_value(&PredictQuery::Path { n: 2, c: 3 }).is_err());
    }

    proptest! {
        #[test]
        fn enumeration_is_canonical_and_sorted(n in 1usize..8, c in 1usize..5) {
            prop_assume!(c <= n);
            let all: Vec<Vec<Colour>> = enumerate_surjective_colourings(n, c).unwrap().collect();
            for w in all.windows(2) {
                prop_assert!(w[0] < w[1]);
            }
            for col in &all {
                let mut max = -1i32;
                for d in col {
                    prop_assert!(d.0 as i32 <= max + 1);
                    max = max.max(d.0 as i32);
                }
                prop_assert_eq!(max as usize, c - 1);
            }
        }
    }
}
