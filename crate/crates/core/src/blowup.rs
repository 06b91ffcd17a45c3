//! Blow-ups of paths and cycles.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Colour, ColouredGraph, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    Path,
    Cycle,
}

/// Ordered vertex classes `V_1..V_t` of a blow-up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupStructure {
    pub base: Base,
    pub classes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error("vertex classes do not partition the vertex set")]
    NotAPartition,
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("edge ({0},{1}) does not join consecutive classes")]
    StrayEdge(usize, usize),
    #[error("classes {0} and {1} are not completely joined")]
    MissingEdges(usize, usize),
    #[error("a cycle blow-up needs at least 3 classes")]
    ShortCycle,
    #[error("a single class of {0} vertices is disconnected")]
    Disconnected(usize),
}

impl BlowupStructure {
    pub fn new(base: Base, classes: Vec<Vec<usize>>) -> Self {
        BlowupStructure { base, classes }
    }

    pub fn t(&self) -> usize {
        self.classes.len()
    }

    /// `class_of[v]` for every vertex.
    pub fn class_index(&self, n: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                idx[v] = i;
            }
        }
        idx
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        let t = self.t();
        i.abs_diff(j) == 1 || (self.base == Base::Cycle && i.abs_diff(j) == t - 1)
    }

    /// Checks the partition, independence and complete-join conditions.
    pub fn validate(&self, g: &Graph) -> Result<(), BlowupError> {
        let n = g.n();
        let mut seen = vec![false; n];
        for (i, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(BlowupError::EmptyClass(i));
            }
            for &v in class {
                if v >= n || seen[v] {
                    return Err(BlowupError::NotAPartition);
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(BlowupError::NotAPartition);
        }
        if self.base == Base::Cycle && self.t() < 3 {
            return Err(BlowupError::ShortCycle);
        }
        let idx = self.class_index(n);
        for &(u, v) in g.edges() {
            if !self.adjacent(idx[u], idx[v]) {
                return Err(BlowupError::StrayEdge(u, v));
            }
        }
        let t = self.t();
        let pairs = if self.base == Base::Cycle { t } else { t - 1 };
        for i in 0..pairs {
            let j = (i + 1) % t;
            let expected = self.classes[i].len() * self.classes[j].len();
            let found = self.classes[i]
                .iter()
                .map(|&u| g.neighbours(u).iter().filter(|&&w| idx[w] == j).count())
                .sum::<usize>();
            if found != expected {
                return Err(BlowupError::MissingEdges(i, j));
            }
        }
        Ok(())
    }

    /// The colour of each class, if the colouring is constant on it.
    pub fn class_colours(&self, g: &ColouredGraph) -> Vec<Option<Colour>> {
        self.classes
            .iter()
            .map(|class| {
                let d = g.colour(class[0]);
                class.iter().all(|&v| g.colour(v) == d).then_some(d)
            })
            .collect()
    }

    /// Number of classes on which the colouring is not constant.
    pub fn theta(&self, g: &ColouredGraph) -> usize {
        self.class_colours(g).iter().filter(|d| d.is_none()).count()
    }

    /// The spanning path blow-up obtained by dropping the edges between the
    /// last and first classes.
    pub fn as_path(&self) -> BlowupStructure {
        BlowupStructure { base: Base::Path, classes: self.classes.clone() }
    }
}

/// Free-function form of [`BlowupStructure::theta`].
pub fn theta(b: &BlowupStructure, g: &ColouredGraph) -> usize {
    b.theta(g)
}

/// Builds the blow-up graph with the given class sizes; classes get
/// consecutive vertex ids.
pub fn blowup_graph(base: Base, sizes: &[usize]) -> Result<(Graph, BlowupStructure), BlowupError> {
    let t = sizes.len();
    if t == 0 {
        return Err(BlowupError::NotAPartition);
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(BlowupError::EmptyClass(i));
    }
    if base == Base::Cycle && t < 3 {
        return Err(BlowupError::ShortCycle);
    }
    if t == 1 && sizes[0] > 1 {
        return Err(BlowupError::Disconnected(sizes[0]));
    }
    let mut classes = Vec::with_capacity(t);
    let mut next = 0;
    for &s in sizes {
        classes.push((next..next + s).collect::<Vec<_>>());
        next += s;
    }
    let pairs = if base == Base::Cycle { t } else { t - 1 };
    let mut edges = Vec::new();
    for i in 0..pairs {
        let j = (i + 1) % t;
        for &u in &classes[i] {
            for &v in &classes[j] {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(next, edges).expect("t >= 2 or a single vertex");
    Ok((g, BlowupStructure { base, classes }))
}
