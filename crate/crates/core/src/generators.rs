//! Graph families, colouring families and small-graph enumeration.
//!
//! Vertex numbering conventions: paths and cycles are numbered along the
//! path; blow-up classes use consecutive ids; in `T_{c,r}` the centre is `0`
//! and leg `l` holds `1 + l*r ..= (l+1)*r` ordered away from the centre;
//! grids are row-major.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blowup::{blowup_graph, Base, BlowupStructure};
use crate::graph::{Colour, ColouredGraph, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("colouring does not fit this shape: {0}")]
    IncompatibleSpec(String),
}

fn invalid(msg: impl Into<String>) -> GenError {
    GenError::InvalidParams(msg.into())
}

fn incompatible(msg: impl Into<String>) -> GenError {
    GenError::IncompatibleSpec(msg.into())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    BlowupPath {
        sizes: Vec<usize>,
    },
    BlowupCycle {
        sizes: Vec<usize>,
    },
    TreeTcr {
        c: usize,
        r: usize,
    },
    Grid {
        k: usize,
        n: usize,
    },
    /// Random spanning tree plus each remaining pair with probability
    /// `edge_percent / 100`.
    RandomConnected {
        n: usize,
        edge_percent: u32,
        seed: u64,
    },
}

/// Extra structure a colouring family may need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Layout {
    Path,
    Cycle,
    Star,
    Blowup(BlowupStructure),
    Tree { c: usize, r: usize },
    Grid { k: usize, n: usize },
    Other,
}

/// An uncoloured family member.
#[derive(Clone, Debug)]
pub struct Shape {
    pub graph: Arc<Graph>,
    pub layout: Layout,
}

impl Shape {
    pub fn blowup(&self) -> Option<&BlowupStructure> {
        match &self.layout {
            Layout::Blowup(b) => Some(b),
            _ => None,
        }
    }

    /// Positions along the base path or cycle: one vertex set per position.
    fn positions(&self) -> Option<(Vec<Vec<usize>>, bool)> {
        match &self.layout {
            Layout::Path => Some(((0..self.graph.n()).map(|v| vec![v]).collect(), false)),
            Layout::Cycle => Some(((0..self.graph.n()).map(|v| vec![v]).collect(), true)),
            Layout::Blowup(b) => Some((b.classes.clone(), b.base == Base::Cycle)),
            _ => None,
        }
    }
}

pub fn path_graph(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is valid"))
}

pub fn cycle_graph(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is valid"))
}

pub fn gen_graph(spec: &FamilySpec) -> Result<Shape, GenError> {
    let (graph, layout) = match spec {
        FamilySpec::Path { n } => (path_graph(*n)?, Layout::Path),
        FamilySpec::Cycle { n } => (cycle_graph(*n)?, Layout::Cycle),
        FamilySpec::Star { leaves } => {
            let g = Graph::new(leaves + 1, (1..=*leaves).map(|v| (0, v))).expect("star is valid");
            (g, Layout::Star)
        }
        FamilySpec::BlowupPath { sizes } | FamilySpec::BlowupCycle { sizes } => {
            let base = if matches!(spec, FamilySpec::BlowupPath { .. }) { Base::Path } else { Base::Cycle };
            let (g, b) = blowup_graph(base, sizes).map_err(|e| invalid(e.to_string()))?;
            (g, Layout::Blowup(b))
        }
        FamilySpec::TreeTcr { c, r } => (tree_tcr(*c, *r)?, Layout::Tree { c: *c, r: *r }),
        FamilySpec::Grid { k, n } => {
            if *k == 0 || *n == 0 {
                return Err(invalid("grid needs k, n >= 1"));
            }
            let mut edges = Vec::new();
            for i in 0..*k {
                for j in 0..*n {
                    let v = i * n + j;
                    if j + 1 < *n {
                        edges.push((v, v + 1));
                    }
                    if i + 1 < *k {
                        edges.push((v, v + n));
                    }
                }
            }
            (Graph::new(k * n, edges).expect("grid is valid"), Layout::Grid { k: *k, n: *n })
        }
        FamilySpec::RandomConnected { n, edge_percent, seed } => {
            (random_connected(*n, *edge_percent, *seed)?, Layout::Other)
        }
    };
    Ok(Shape { graph: Arc::new(graph), layout })
}

/// Number of legs of `T_{c,r}`: `r (c-1)^(r+1)`.
pub fn tcr_legs(c: usize, r: usize) -> usize {
    r * (c - 1).pow(r as u32 + 1)
}

fn tree_tcr(c: usize, r: usize) -> Result<Graph, GenError> {
    if c < 2 || r < 1 {
        return Err(invalid("T_{c,r} needs c >= 2 and r >= 1"));
    }
    let legs = tcr_legs(c, r);
    if legs.saturating_mul(r) > 5_000_000 {
        return Err(invalid("T_{c,r} too large"));
    }
    let mut edges = Vec::with_capacity(legs * r);
    for l in 0..legs {
        let first = 1 + l * r;
        edges.push((0, first));
        for k in 1..r {
            edges.push((first + k - 1, first + k));
        }
    }
    Ok(Graph::new(1 + legs * r, edges).expect("tree is valid"))
}

fn random_connected(n: usize, edge_percent: u32, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(invalid("random graph needs n >= 1"));
    }
    if edge_percent > 100 {
        return Err(invalid("edge_percent must be at most 100"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = FxHashSet::default();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (order[i], order[j]);
        edges.insert((u.min(v), u.max(v)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_range(0..100) < edge_percent {
                edges.insert((u, v));
            }
        }
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort_unstable();
    Ok(Graph::new(n, edges).expect("spanning tree keeps it connected"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ColouringSpec {
    /// Position `i` along the base gets colour `i mod c`.
    Rainbow {
        c: usize,
    },
    /// Position `i` gets colour `(i - r) mod c`. Up to relabelling colours this
    /// is the plain rainbow.
    ShiftedRainbow {
        c: usize,
        r: usize,
    },
    /// A rainbow read cyclically from position `r`: the sequence
    /// `r, r+1, .., t-1, 0, .., r-1` is rainbow. These are the spanning
    /// paths of rainbow-coloured cycles.
    WrappedRainbow {
        c: usize,
        r: usize,
    },
    /// A shifted rainbow on a cycle (or cycle blow-up) that is proper on the
    /// closing edge as well.
    CycleRainbow {
        c: usize,
        r: usize,
    },
    /// Explicit colour per base position.
    PathColouring {
        c: usize,
        f: Vec<u8>,
    },
    /// The adversarial leg colouring of `T_{c,r}`.
    ScrTree,
    /// Class `i` (1-based) alternates colours `(2i-1) mod c` and `2i mod c`.
    RemarkBichromatic {
        c: usize,
    },
    RandomSurjective {
        c: usize,
        seed: u64,
    },
}

/// All sequences of `S_{c,r}` over colour names `1..=c`, in lexicographic
/// order: first entry not 1, no two consecutive entries equal.
pub fn scr_sequences(c: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(c: usize, r: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in 1..=c {
            if x != prev {
                cur.push(x);
                rec(c, r, x, cur, out);
                cur.pop();
            }
        }
    }
    rec(c, r, 1, &mut cur, &mut out);
    out
}

fn rainbow_positions(t: usize, c: usize, r: usize) -> Vec<usize> {
    (0..t).map(|p| ((p + t - r % t.max(1)) % t) % c).collect()
}

fn check_c(c: usize) -> Result<(), GenError> {
    if c == 0 || c > 256 {
        return Err(invalid("colour count must be in 1..=256"));
    }
    Ok(())
}

pub fn gen_colouring(shape: &Shape, spec: &ColouringSpec) -> Result<ColouredGraph, GenError> {
    let n = shape.graph.n();
    let (colouring, c): (Vec<Colour>, usize) = match spec {
        ColouringSpec::Rainbow { c }
        | ColouringSpec::ShiftedRainbow { c, .. }
        | ColouringSpec::WrappedRainbow { c, .. }
        | ColouringSpec::CycleRainbow { c, .. } => {
            check_c(*c)?;
            let (positions, is_cycle) = shape.positions().ok_or_else(|| incompatible("rainbow needs a path order"))?;
            let r = match spec {
                ColouringSpec::ShiftedRainbow { r, .. }
                | ColouringSpec::WrappedRainbow { r, .. }
                | ColouringSpec::CycleRainbow { r, .. } => *r,
                _ => 0,
            };
            let t = positions.len();
            if r >= t {
                return Err(invalid("shift must be below the number of positions"));
            }
            let is_cycle_spec = matches!(spec, ColouringSpec::CycleRainbow { .. });
            if is_cycle_spec && !is_cycle {
                return Err(incompatible("cycle rainbow needs a cycle"));
            }
            let f = if matches!(spec, ColouringSpec::ShiftedRainbow { .. }) {
                (0..t).map(|p| (p + *c - r % *c) % *c).collect()
            } else {
                rainbow_positions(t, *c, r)
            };
            if !is_proper_sequence(&f, is_cycle_spec) {
                return Err(incompatible(format!(
                    "no proper rainbow colouring with {t} positions, {c} colours and shift {r}"
                )));
            }
            (spread(n, &positions, &f), *c)
        }
        ColouringSpec::PathColouring { c, f } => {
            check_c(*c)?;
            let (positions, _) = shape.positions().ok_or_else(|| incompatible("path colouring needs a path order"))?;
            if f.len() != positions.len() || f.iter().any(|&d| d as usize >= *c) {
                return Err(invalid("path colouring needs one colour below c per position"));
            }
            let f: Vec<usize> = f.iter().map(|&d| d as usize).collect();
            (spread(n, &positions, &f), *c)
        }
        ColouringSpec::ScrTree => {
            let Layout::Tree { c, r } = shape.layout else {
                return Err(incompatible("S_{c,r} colouring needs T_{c,r}"));
            };
            let seqs = scr_sequences(c, r);
            let per = (c - 1) * r;
            let mut col = vec![Colour(0); n];
            for l in 0..tcr_legs(c, r) {
                let sigma = &seqs[l / per];
                for (k, &name) in sigma.iter().enumerate() {
                    col[1 + l * r + k] = Colour::new(name - 1);
                }
            }
            (col, c)
        }
        ColouringSpec::RemarkBichromatic { c } => {
            check_c(*c)?;
            let b = shape.blowup().ok_or_else(|| incompatible("bichromatic colouring needs a blow-up"))?;
            let mut col = vec![Colour(0); n];
            for (i, class) in b.classes.iter().enumerate() {
                if class.len() < 2 {
                    return Err(incompatible("every class needs at least two vertices"));
                }
                let i1 = i + 1;
                let pair = [(2 * i1 - 1) % c, (2 * i1) % c];
                for (k, &v) in class.iter().enumerate() {
                    col[v] = Colour::new(pair[k % 2]);
                }
            }
            (col, *c)
        }
        ColouringSpec::RandomSurjective { c, seed } => {
            check_c(*c)?;
            if *c > n {
                return Err(incompatible("more colours than vertices"));
            }
            (random_surjective(n, *c, *seed), *c)
        }
    };
    let g = ColouredGraph::new(Arc::clone(&shape.graph), colouring, c).map_err(|e| incompatible(e.to_string()))?;
    if matches!(spec, ColouringSpec::RandomSurjective { .. } | ColouringSpec::ScrTree) && !g.is_surjective() {
        return Err(incompatible("colouring is not surjective"));
    }
    Ok(g)
}

fn spread(n: usize, positions: &[Vec<usize>], f: &[usize]) -> Vec<Colour> {
    let mut col = vec![Colour(0); n];
    for (vs, &d) in positions.iter().zip(f) {
        for &v in vs {
            col[v] = Colour::new(d);
        }
    }
    col
}

fn is_proper_sequence(f: &[usize], cyclic: bool) -> bool {
    let adjacent_ok = f.windows(2).all(|w| w[0] != w[1]);
    adjacent_ok && (!cyclic || f.len() < 2 || f[0] != f[f.len() - 1])
}

/// Uniform random surjective colouring: a random map, repaired by assigning
/// each missing colour to a distinct random vertex.
pub fn random_surjective(n: usize, c: usize, seed: u64) -> Vec<Colour> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut col: Vec<usize> = (0..n).map(|_| rng.gen_range(0..c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut count = vec![0usize; c];
    for &d in &col {
        count[d] += 1;
    }
    let mut donors = order.into_iter();
    for d in 0..c {
        while count[d] == 0 {
            let v = donors.next().expect("c <= n");
            if count[col[v]] > 1 {
                count[col[v]] -= 1;
                col[v] = d;
                count[d] += 1;
            }
        }
    }
    col.into_iter().map(Colour::new).collect()
}

/// Whether `f` is rainbow: some permutation `π` has `f(i) = π(i mod c)`.
pub fn is_rainbow(f: &[Colour], c: usize) -> bool {
    let head = f.len().min(c);
    let mut seen = FxHashSet::default();
    f[..head].iter().all(|d| seen.insert(*d)) && (c..f.len()).all(|i| f[i] == f[i - c])
}

/// Every connected graph with at most `n_max` vertices, one per isomorphism
/// class, ordered by vertex count.
pub fn enumerate_small_graphs(n_max: usize) -> Vec<Graph> {
    assert!(n_max <= 7, "enumeration is limited to 7 vertices");
    let mut all = Vec::new();
    if n_max == 0 {
        return all;
    }
    let mut layer: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    all.push(Graph::new(1, []).unwrap());
    for n in 2..=n_max {
        let mut seen = FxHashSet::default();
        let mut next = Vec::new();
        for edges in &layer {
            for subset in 1u32..(1 << (n - 1)) {
                let mut e = edges.clone();
                e.extend((0..n - 1).filter(|&u| subset >> u & 1 == 1).map(|u| (u, n - 1)));
                if seen.insert(canonical_code(n, &e)) {
                    next.push(e);
                }
            }
        }
        for e in &next {
            all.push(Graph::new(n, e.iter().copied()).unwrap());
        }
        layer = next;
    }
    all
}

/// Minimum adjacency code over relabellings that list vertices by
/// non-increasing degree.
fn canonical_code(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut adj = vec![0u32; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match groups.last_mut() {
            Some(g) if adj[g[0]].count_ones() == adj[v].count_ones() => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    fn rec(groups: &mut [Vec<usize>], gi: usize, perm: &mut Vec<usize>, adj: &[u32], best: &mut u64) {
        if gi == groups.len() {
            let n = perm.len();
            let mut code = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    code = code << 1 | u64::from(adj[perm[i]] >> perm[j] & 1);
                }
            }
            *best = (*best).min(code);
            return;
        }
        permute(groups, gi, 0, perm, adj, best);
    }
    fn permute(groups: &mut [Vec<usize>], gi: usize, k: usize, perm: &mut Vec<usize>, adj: &[u32], best: &mut u64) {
        let len = groups[gi].len();
        if k == len {
            let start = perm.len();
            perm.extend(groups[gi].iter().copied());
            rec(groups, gi + 1, perm, adj, best);
            perm.truncate(start);
            return;
        }
        for i in k..len {
            groups[gi].swap(k, i);
            permute(groups, gi, k + 1, perm, adj, best);
            groups[gi].swap(k, i);
        }
    }
    rec(&mut groups, 0, &mut perm, &adj, &mut best);
    best
}

/// Every spanning tree of a small graph, as edge lists.
pub fn spanning_trees(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let edges = g.edges();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        r
    }
    fn rec(
        edges: &[(usize, usize)],
        i: usize,
        need: usize,
        n: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if chosen.len() == need {
            let mut parent: Vec<usize> = (0..n).collect();
            for &(u, v) in chosen.iter() {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    return;
                }
                parent[a] = b;
            }
            out.push(chosen.clone());
            return;
        }
        if edges.len() - i < need - chosen.len() {
            return;
        }
        chosen.push(edges[i]);
        rec(edges, i + 1, need, n, chosen, out);
        chosen.pop();
        rec(edges, i + 1, need, n, chosen, out);
    }
    rec(edges, 0, n - 1, n, &mut chosen, &mut out);
    out
}
