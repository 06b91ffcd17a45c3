//! Game state, moves and contraction.
//!
//! [`FloodState`] keeps the fully contracted quotient of the current colouring
//! as a disjoint-set forest over the original vertices. Each root stores the
//! component colour, its lowest vertex id and a lazily cleaned neighbour list.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::MoveError;
use crate::graph::{Colour, ColouredGraph, Graph};

/// Recolour the monochromatic component containing `vertex` to `colour`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub vertex: usize,
    pub colour: Colour,
}

impl Move {
    pub fn new(vertex: usize, colour: Colour) -> Self {
        Move { vertex, colour }
    }
}

/// One monochromatic component, named by its lowest vertex id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub name: usize,
    pub colour: Colour,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FloodState {
    graph: Arc<Graph>,
    c: usize,
    parent: Vec<u32>,
    size: Vec<u32>,
    colour: Vec<Colour>,
    name: Vec<u32>,
    adj: Vec<Vec<u32>>,
    mark: Vec<u64>,
    epoch: u64,
    components: usize,
}

impl FloodState {
    /// Contracts the initial colouring of `g`.
    pub fn new(g: &ColouredGraph) -> Self {
        let n = g.n();
        let mut st = FloodState {
            graph: Arc::clone(g.shape()),
            c: g.c(),
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            colour: g.colouring().to_vec(),
            name: (0..n as u32).collect(),
            adj: vec![Vec::new(); n],
            mark: vec![0; n],
            epoch: 0,
            components: n,
        };
        for &(u, v) in g.graph().edges() {
            if g.colour(u) == g.colour(v) {
                let (a, b) = (st.find(u as u32), st.find(v as u32));
                if a != b {
                    st.union(a, b);
                    st.components -= 1;
                }
            }
        }
        for &(u, v) in g.graph().edges() {
            if g.colour(u) != g.colour(v) {
                let (a, b) = (st.find(u as u32), st.find(v as u32));
                st.adj[a as usize].push(b);
                st.adj[b as usize].push(a);
            }
        }
        for r in 0..n as u32 {
            if st.parent[r as usize] == r {
                st.clean_adj(r);
            }
        }
        st
    }

    fn find(&mut self, v: u32) -> u32 {
        let mut r = v;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = v;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    fn find_ro(&self, v: u32) -> u32 {
        let mut r = v;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        r
    }

    /// Unions two distinct roots and returns the new root. Colour and
    /// adjacency of the result are left to the caller.
    fn union(&mut self, a: u32, b: u32) -> u32 {
        let (big, small) = if self.size[a as usize] >= self.size[b as usize] { (a, b) } else { (b, a) };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        let nm = self.name[a as usize].min(self.name[b as usize]);
        self.name[big as usize] = nm;
        big
    }

    fn next_epoch(&mut self) -> u64 {
        self.epoch += 1;
        self.epoch
    }

    fn clean_adj(&mut self, r: u32) {
        let list = std::mem::take(&mut self.adj[r as usize]);
        let e = self.next_epoch();
        self.mark[r as usize] = e;
        let mut out = Vec::with_capacity(list.len());
        for x in list {
            let rx = self.find(x);
            if self.mark[rx as usize] != e {
                self.mark[rx as usize] = e;
                out.push(rx);
            }
        }
        self.adj[r as usize] = out;
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn c(&self) -> usize {
        self.c
    }

    /// Checks that a move refers to an existing vertex and colour.
    pub fn validate(&self, index: usize, m: Move) -> Result<(), MoveError> {
        if m.vertex >= self.n() {
            return Err(MoveError::VertexOutOfRange { index, vertex: m.vertex, n: self.n() });
        }
        if m.colour.index() >= self.c {
            return Err(MoveError::ColourOutOfRange { index, colour: m.colour.index(), c: self.c });
        }
        Ok(())
    }

    /// Plays a move in place. Returns `false` for a no-op (the component
    /// already has that colour). The move must be valid.
    pub fn apply(&mut self, m: Move) -> bool {
        let d = m.colour;
        let r = self.find(m.vertex as u32);
        if self.colour[r as usize] == d {
            return false;
        }
        let list = std::mem::take(&mut self.adj[r as usize]);
        let e = self.next_epoch();
        self.mark[r as usize] = e;
        let mut keep = Vec::with_capacity(list.len());
        let mut merge = Vec::new();
        for x in list {
            let rx = self.find(x);
            if self.mark[rx as usize] == e {
                continue;
            }
            self.mark[rx as usize] = e;
            if self.colour[rx as usize] == d {
                merge.push(rx);
            } else {
                keep.push(rx);
            }
        }
        let mut root = r;
        let mut acc = keep;
        for mr in merge {
            let mut other = std::mem::take(&mut self.adj[mr as usize]);
            root = self.union(root, mr);
            if acc.len() < other.len() {
                std::mem::swap(&mut acc, &mut other);
            }
            acc.extend(other);
            self.components -= 1;
        }
        self.colour[root as usize] = d;
        self.adj[root as usize] = acc;
        true
    }

    /// Functional form of [`FloodState::apply`].
    pub fn applied(&self, m: Move) -> FloodState {
        let mut s = self.clone();
        s.apply(m);
        s
    }

    pub fn colour_of(&self, v: usize) -> Colour {
        self.colour[self.find_ro(v as u32) as usize]
    }

    /// Name (lowest vertex id) of the component containing `v`.
    pub fn component_name(&self, v: usize) -> usize {
        self.name[self.find_ro(v as u32) as usize] as usize
    }

    /// Internal root id of the component containing `v`; stable only until
    /// the next move.
    pub fn root(&self, v: usize) -> usize {
        self.find_ro(v as u32) as usize
    }

    pub fn same_component(&self, u: usize, v: usize) -> bool {
        self.find_ro(u as u32) == self.find_ro(v as u32)
    }

    pub fn component_size(&self, v: usize) -> usize {
        self.size[self.find_ro(v as u32) as usize] as usize
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_flooded(&self) -> bool {
        self.components == 1
    }

    /// Names of the components adjacent to the component of `v`.
    pub fn neighbour_names(&self, v: usize) -> Vec<usize> {
        let r = self.find_ro(v as u32);
        let mut out: Vec<usize> = self.adj[r as usize]
            .iter()
            .map(|&x| self.name[self.find_ro(x) as usize] as usize)
            .filter(|&x| x != self.name[r as usize] as usize)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Current colour of every vertex.
    pub fn colouring(&self) -> Vec<Colour> {
        (0..self.n()).map(|v| self.colour_of(v)).collect()
    }

    /// Current colouring as a coloured graph on the same shape.
    pub fn to_coloured_graph(&self) -> ColouredGraph {
        ColouredGraph::new(Arc::clone(&self.graph), self.colouring(), self.c).expect("state colours are valid")
    }

    /// All components, sorted by name, each with sorted vertices.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            by_root[self.find_ro(v as u32) as usize].push(v);
        }
        let mut out: Vec<Component> = by_root
            .into_iter()
            .enumerate()
            .filter(|(_, vs)| !vs.is_empty())
            .map(|(r, vertices)| Component { name: self.name[r] as usize, colour: self.colour[r], vertices })
            .collect();
        out.sort();
        out
    }

    /// Canonical description of the quotient: for each component (by name)
    /// its colour and the sorted names of its neighbours.
    pub fn canonical_key(&self) -> Vec<(usize, Colour, Vec<usize>)> {
        self.components()
            .into_iter()
            .map(|comp| {
                let nb = self.neighbour_names(comp.name);
                (comp.name, comp.colour, nb)
            })
            .collect()
    }

    /// Recomputes the quotient from scratch and compares. Intended for tests.
    pub fn check_invariants(&self) -> Result<(), String> {
        let fresh = FloodState::new(&self.to_coloured_graph());
        if fresh.component_count() != self.component_count() {
            return Err(format!(
                "component count {} but a fresh contraction has {}",
                self.component_count(),
                fresh.component_count()
            ));
        }
        for &(u, v) in self.graph.edges() {
            let same = self.same_component(u, v);
            let same_colour = self.colour_of(u) == self.colour_of(v);
            if same != same_colour {
                return Err(format!("edge ({u},{v}): same component {same}, same colour {same_colour}"));
            }
        }
        if fresh.canonical_key() != self.canonical_key() {
            return Err("quotient adjacency differs from a fresh contraction".into());
        }
        Ok(())
    }
}

/// Free-function form of [`FloodState::new`].
pub fn initial_state(g: &ColouredGraph) -> FloodState {
    FloodState::new(g)
}

/// Functional move application.
pub fn apply_move(s: &FloodState, m: Move) -> FloodState {
    s.applied(m)
}

/// The fully contracted quotient of a coloured graph.
#[derive(Clone, Debug)]
pub struct Contraction {
    /// Quotient graph; vertex `i` is the component named `reps[i]`.
    pub graph: ColouredGraph,
    /// Original vertex -> quotient vertex.
    pub map: Vec<usize>,
    /// Quotient vertex -> lowest original vertex of that component.
    pub reps: Vec<usize>,
}

/// Contracts every monochromatic component to a single vertex. Quotient
/// vertices are numbered by increasing component name.
pub fn contract(g: &ColouredGraph) -> Contraction {
    let st = FloodState::new(g);
    let comps = st.components();
    let mut map = vec![0; g.n()];
    let mut reps = Vec::with_capacity(comps.len());
    let mut colouring = Vec::with_capacity(comps.len());
    for (i, comp) in comps.iter().enumerate() {
        reps.push(comp.name);
        colouring.push(comp.colour);
        for &v in &comp.vertices {
            map[v] = i;
        }
    }
    let edges: Vec<(usize, usize)> =
        g.graph().edges().iter().filter(|&&(u, v)| map[u] != map[v]).map(|&(u, v)| (map[u], map[v])).collect();
    let shape = Graph::new(reps.len(), edges).expect("quotient of a connected graph is connected");
    let graph = ColouredGraph::new(Arc::new(shape), colouring, g.c()).expect("colours unchanged");
    Contraction { graph, map, reps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_coloured_graph, colours};

    fn path(cols: &[u8]) -> ColouredGraph {
        let n = cols.len();
        build_coloured_graph(n, (1..n).map(|i| (i - 1, i)), colours(cols)).unwrap()
    }

    #[test]
    fn contraction_merges_runs() {
        let g = path(&[0, 0, 1, 1, 0]);
        let s = initial_state(&g);
        assert_eq!(s.component_count(), 3);
        let k = contract(&g);
        assert_eq!(k.reps, vec![0, 2, 4]);
        assert_eq!(k.map, vec![0, 0, 1, 1, 2]);
        assert!(k.graph.graph().is_path());
    }

    #[test]
    fn move_merges_neighbours() {
        let g = path(&[0, 1, 0]);
        let s = apply_move(&initial_state(&g), Move::new(1, Colour(0)));
        assert!(s.is_flooded());
        assert_eq!(s.colour_of(2), Colour(0));
        s.check_invariants().unwrap();
    }

    #[test]
    fn no_op_move_leaves_state() {
        let g = path(&[0, 1, 0]);
        let mut s = initial_state(&g);
        assert!(!s.apply(Move::new(0, Colour(0))));
        assert_eq!(s.component_count(), 3);
    }

    #[test]
    fn move_order_matters_on_small_path() {
        let g = path(&[0, 1, 2, 1, 0]);
        let mut s = initial_state(&g);
        s.apply(Move::new(2, Colour(1)));
        assert_eq!(s.component_count(), 3);
        s.apply(Move::new(2, Colour(0)));
        assert!(s.is_flooded());
        s.check_invariants().unwrap();
    }

    #[test]
    fn validate_rejects_out_of_range() {
        let g = path(&[0, 1]);
        let s = initial_state(&g);
        assert!(s.validate(0, Move::new(2, Colour(0))).is_err());
        assert!(s.validate(0, Move::new(0, Colour(2))).is_err());
        assert!(s.validate(0, Move::new(1, Colour(0))).is_ok());
    }

    #[test]
    fn star_centre_move() {
        let g = build_coloured_graph(4, [(0, 1), (0, 2), (0, 3)], colours(&[0, 1, 1, 2])).unwrap();
        let mut s = initial_state(&g);
        s.apply(Move::new(0, Colour(1)));
        assert_eq!(s.component_count(), 2);
        assert_eq!(s.component_name(2), 0);
        assert_eq!(s.neighbour_names(0), vec![3]);
        s.check_invariants().unwrap();
    }
}
