//! Graph shapes and coloured graphs.
//!
//! A [`Graph`] is an immutable, connected, simple undirected graph. A
//! [`ColouredGraph`] pairs a shared shape with a vertex colouring drawn from a
//! dense colour set `{0, .., c-1}`.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A colour id in `[0, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Colour(pub u8);

impl Colour {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Panics if `i` does not fit in a colour id.
    #[inline]
    pub fn new(i: usize) -> Self {
        Colour(u8::try_from(i).expect("colour id out of range"))
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u8> for Colour {
    fn from(value: u8) -> Self {
        Colour(value)
    }
}

/// Convenience for building colourings from literals.
pub fn colours(ids: &[u8]) -> Vec<Colour> {
    ids.iter().copied().map(Colour).collect()
}

/// An undirected, connected, simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalising each edge to `(min, max)` and dropping
    /// duplicates. Rejects self-loops, dangling endpoints and disconnected
    /// inputs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let g = Self::new_unchecked_connectivity(n, edges)?;
        if !g.is_connected() {
            return Err(GraphError::DisconnectedGraph);
        }
        Ok(g)
    }

    /// Like [`Graph::new`] but accepts disconnected graphs. Used internally
    /// for subgraph manipulation; the public game model always requires
    /// connectivity.
    pub(crate) fn new_unchecked_connectivity(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::DanglingVertexRef { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::DanglingVertexRef { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted, deduplicated edge list with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Hop distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Maximum distance from `v` to any vertex.
    pub fn eccentricity(&self, v: usize) -> usize {
        self.bfs_distances(v).into_iter().map(|d| d.expect("graph is connected")).max().unwrap_or(0)
    }

    /// `min_u max_v d(u, v)`, computed with a BFS from every vertex.
    pub fn radius(&self) -> usize {
        self.centre().1
    }

    /// Lowest-index vertex of minimum eccentricity, with that eccentricity.
    pub fn centre(&self) -> (usize, usize) {
        (0..self.n).map(|v| (v, self.eccentricity(v))).min_by_key(|&(v, e)| (e, v)).expect("graph is non-empty")
    }

    /// Whether the graph is a simple path (a single vertex counts).
    pub fn is_path(&self) -> bool {
        self.path_order().is_some()
    }

    /// Vertices in path order starting from the lower-index endpoint, if the
    /// graph is a path.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if self.n == 1 {
            return Some(vec![0]);
        }
        if self.edges.len() != self.n - 1 || self.adj.iter().any(|a| a.len() > 2) {
            return None;
        }
        let start = (0..self.n).find(|&v| self.adj[v].len() == 1)?;
        Some(self.walk_from(start))
    }

    /// Vertices in cyclic order starting at vertex 0 towards its lower-index
    /// neighbour, if the graph is a cycle.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        if self.n < 3 || self.edges.len() != self.n || self.adj.iter().any(|a| a.len() != 2) {
            return None;
        }
        let order = self.walk_from(0);
        (order.len() == self.n).then_some(order)
    }

    fn walk_from(&self, start: usize) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n);
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            order.push(cur);
            let next = self.adj[cur].iter().copied().find(|&w| w != prev && !(order.len() > 1 && w == start));
            match next {
                Some(w) if order.len() < self.n => {
                    prev = cur;
                    cur = w;
                }
                _ => break,
            }
        }
        order
    }

    /// Induced subgraph on `vertices` (in the given order), together with the
    /// map from new ids to old ids. May be disconnected.
    pub(crate) fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let g = Graph::new_unchecked_connectivity(vertices.len(), edges).expect("induced edges are valid");
        (g, vertices.to_vec())
    }
}

/// A connected graph together with a colouring from a dense colour set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredGraph {
    graph: Arc<Graph>,
    colouring: Vec<Colour>,
    c: usize,
}

impl ColouredGraph {
    /// Builds and validates a coloured graph; the colour-set size is taken to
    /// be `max colour + 1`.
    pub fn build(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        colouring: Vec<Colour>,
    ) -> Result<Self, GraphError> {
        let graph = Arc::new(Graph::new(n, edges)?);
        let c = colouring.iter().map(|d| d.index() + 1).max().unwrap_or(1);
        Self::new(graph, colouring, c)
    }

    /// Attaches a colouring with an explicit colour-set size `c`.
    pub fn new(graph: Arc<Graph>, colouring: Vec<Colour>, c: usize) -> Result<Self, GraphError> {
        if colouring.len() != graph.n() {
            return Err(GraphError::ColouringLength { expected: graph.n(), got: colouring.len() });
        }
        if c == 0 || c > 256 {
            return Err(GraphError::NonDenseColours { colour: 0, c });
        }
        if let Some(bad) = colouring.iter().find(|d| d.index() >= c) {
            return Err(GraphError::NonDenseColours { colour: bad.index(), c });
        }
        Ok(ColouredGraph { graph, colouring, c })
    }

    pub fn shape(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Colour-set size.
    #[inline]
    pub fn c(&self) -> usize {
        self.c
    }

    pub fn colouring(&self) -> &[Colour] {
        &self.colouring
    }

    #[inline]
    pub fn colour(&self, v: usize) -> Colour {
        self.colouring[v]
    }

    /// Whether every colour in `0..c` is used.
    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.c];
        for d in &self.colouring {
            seen[d.index()] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Number of vertices with colour `d`.
    pub fn colour_count(&self, d: Colour) -> usize {
        self.colouring.iter().filter(|&&x| x == d).count()
    }

    /// Number of distinct colours actually present.
    pub fn colours_present(&self) -> usize {
        let mut seen = vec![false; self.c];
        for d in &self.colouring {
            seen[d.index()] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }

    pub fn radius(&self) -> usize {
        self.graph.radius()
    }

    /// Same shape, new colouring.
    pub fn recoloured(&self, colouring: Vec<Colour>, c: usize) -> Result<Self, GraphError> {
        Self::new(Arc::clone(&self.graph), colouring, c)
    }

    /// Induced coloured subgraph on `vertices` (must be connected), with the
    /// new-to-old vertex map.
    pub fn induced(&self, vertices: &[usize]) -> Result<(ColouredGraph, Vec<usize>), GraphError> {
        let (g, map) = self.graph.induced(vertices);
        if !g.is_connected() {
            return Err(GraphError::DisconnectedGraph);
        }
        let col = map.iter().map(|&v| self.colouring[v]).collect();
        Ok((ColouredGraph::new(Arc::new(g), col, self.c)?, map))
    }
}

/// Free-function form of [`ColouredGraph::build`].
pub fn build_coloured_graph(
    n: usize,
    edges: impl IntoIterator<Item = (usize, usize)>,
    colouring: Vec<Colour>,
) -> Result<ColouredGraph, GraphError> {
    ColouredGraph::build(n, edges, colouring)
}

/// Free-function form of [`ColouredGraph::colour_count`].
pub fn colour_count(g: &ColouredGraph, d: Colour) -> usize {
    g.colour_count(d)
}

/// Free-function form of [`ColouredGraph::radius`].
pub fn radius(g: &ColouredGraph) -> usize {
    g.radius()
}
