//! Named claim campaigns. Each claim is checked over a parameter grid or a
//! seeded batch of random instances, against exact solver values.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{colour_bound, enumerate_surjective_colourings, max_moves_with, ExtremalError, ExtremalOptions};
use crate::blowup::Base;
use crate::cert::play_certificate;
use crate::engine::FloodState;
use crate::generators::{
    cycle_graph, enumerate_small_graphs, gen_colouring, gen_graph, is_rainbow, path_graph, spanning_trees,
    ColouringSpec, FamilySpec, GenError,
};
use crate::graph::{Colour, ColouredGraph, Graph};
use crate::io::write_graph;
use crate::solvers::{
    cycle_min_moves, min_moves_exact_with_budget, path_min_moves, PathTable, SolveError, SolveQuery, DEFAULT_BUDGET,
};
use crate::strategies::{dominating_path_strategy, grd_sequence, radius_strategy};

pub const CLAIMS: [&str; 18] = [
    "path-result",
    "cycle-result",
    "colour-bound",
    "radius-bound",
    "tree-tight",
    "blowup-lb",
    "rainbow-target",
    "path-lb",
    "cycle-lb",
    "c-col",
    "colour-dif",
    "spanning-trees",
    "subgraph",
    "basic-monotonicity",
    "change-colouring",
    "dominating-path",
    "path-section",
    "not-rainbow-col",
];

pub const REPORT_SCHEMA: &str = "floodit-report v1";

/// Parameter grid for a campaign. Unset fields take per-claim defaults.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CampaignConfig {
    pub version: u32,
    /// Largest vertex (or class) count.
    pub n_max: Option<usize>,
    pub colours: Option<Vec<usize>>,
    /// Size of random batches.
    pub instances: usize,
    pub seed: u64,
    pub budget: u64,
    /// `(c, r)` pairs for `tree-tight`.
    pub trees: Vec<(usize, usize)>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            version: 1,
            n_max: None,
            colours: None,
            instances: 1000,
            seed: 0x5eed,
            budget: DEFAULT_BUDGET,
            trees: vec![(2, 1), (2, 2), (3, 1)],
        }
    }
}

/// One offending input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// The coloured graph in floodgraph format.
    pub graph: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n_max: usize,
    pub colours: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub random_instances: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trees: Option<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub claim: String,
    pub params: Params,
    pub instances: u64,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

#[derive(Default)]
struct Tally {
    instances: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn record(&mut self, ok: bool, g: &ColouredGraph, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(Failure { graph: write_graph(g), detail: detail() });
        }
    }

    fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.failures.extend(other.failures);
    }
}

type Check<T> = Result<T, SolveError>;

/// Runs `f` on every item (in parallel) and merges tallies in item order.
fn run_all<T: Sync>(items: &[T], f: impl Fn(&T) -> Check<Tally> + Sync + Send) -> Result<Tally, ExtremalError> {
    let parts: Vec<Check<Tally>> = items.par_iter().map(f).collect();
    let mut out = Tally::default();
    for p in parts {
        out.merge(p?);
    }
    Ok(out)
}

fn rng_for(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

fn exact(g: &ColouredGraph, d: Option<Colour>, target: Option<Vec<usize>>, budget: u64) -> Check<usize> {
    let q = SolveQuery { graph: g.clone(), target_set: target, target_colour: d };
    Ok(min_moves_exact_with_budget(&q, budget)?.moves)
}

fn random_colouring(rng: &mut ChaCha8Rng, n: usize, c: usize) -> Vec<Colour> {
    (0..n).map(|_| Colour::new(rng.gen_range(0..c))).collect()
}

fn random_graph(rng: &mut ChaCha8Rng, n_lo: usize, n_hi: usize) -> Arc<Graph> {
    let n = rng.gen_range(n_lo..=n_hi.max(n_lo));
    let spec = FamilySpec::RandomConnected { n, edge_percent: rng.gen_range(10..=70), seed: rng.gen() };
    gen_graph(&spec).expect("valid random graph").graph
}

fn random_coloured(rng: &mut ChaCha8Rng, n_lo: usize, n_hi: usize, colours: &[usize]) -> ColouredGraph {
    let g = random_graph(rng, n_lo, n_hi);
    let c = *colours.choose(rng).expect("non-empty colour list");
    let col = random_colouring(rng, g.n(), c);
    ColouredGraph::new(g, col, c).expect("valid colouring")
}

/// Coloured subgraph on `vertices` keeping only `edges` (old ids).
fn sub_coloured(g: &ColouredGraph, vertices: &[usize], edges: &[(usize, usize)]) -> ColouredGraph {
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let h = Graph::new(vertices.len(), edges.iter().map(|&(u, v)| (index[u], index[v]))).expect("connected subgraph");
    let col = vertices.iter().map(|&v| g.colour(v)).collect();
    ColouredGraph::new(Arc::new(h), col, g.c()).expect("valid colouring")
}

fn path_coloured(col: Vec<Colour>, c: usize) -> ColouredGraph {
    let n = col.len();
    ColouredGraph::new(Arc::new(path_graph(n).expect("n >= 1")), col, c).expect("valid colouring")
}

/// Runs the campaign for `claim`.
pub fn verify_theorem(claim: &str, cfg: &CampaignConfig) -> Result<Report, ExtremalError> {
    let (n_default, colours_default): (usize, Vec<usize>) = match claim {
        "path-result" | "cycle-result" => (8, vec![2, 3]),
        "colour-bound" | "radius-bound" => (6, vec![2, 3]),
        "tree-tight" => (0, vec![]),
        "blowup-lb" => (7, vec![2, 3]),
        "rainbow-target" | "path-lb" | "colour-dif" => (60, vec![2, 3, 4, 5, 6]),
        "cycle-lb" => (30, vec![2, 3, 4]),
        "c-col" | "subgraph" => (7, vec![2, 3, 4]),
        "spanning-trees" | "change-colouring" => (6, vec![2, 3, 4]),
        "basic-monotonicity" => (10, vec![2, 3, 4]),
        "dominating-path" => (6, vec![2, 3]),
        "path-section" => (14, vec![2, 3, 4]),
        "not-rainbow-col" => (30, vec![2, 3, 4, 5, 6]),
        other => return Err(ExtremalError::UnknownClaim(other.to_string())),
    };
    let n_max = cfg.n_max.unwrap_or(n_default);
    let colours = cfg.colours.clone().unwrap_or(colours_default);
    if claim != "tree-tight" && (colours.is_empty() || colours.iter().any(|&c| c == 0 || c > 64)) {
        return Err(ExtremalError::InvalidParams("colour counts must be in 1..=64".into()));
    }
    let random = matches!(
        claim,
        "c-col"
            | "spanning-trees"
            | "subgraph"
            | "basic-monotonicity"
            | "change-colouring"
            | "dominating-path"
            | "path-section"
            | "not-rainbow-col"
    );
    let ctx = Ctx { n_max, colours: colours.clone(), cfg: cfg.clone() };
    let tally = match claim {
        "path-result" => extremal_family(&ctx, false)?,
        "cycle-result" => extremal_family(&ctx, true)?,
        "colour-bound" => small_graph_bounds(&ctx, false)?,
        "radius-bound" => small_graph_bounds(&ctx, true)?,
        "tree-tight" => tree_tight(&ctx)?,
        "blowup-lb" => blowup_lb(&ctx)?,
        "rainbow-target" | "path-lb" | "colour-dif" => shifted_rainbows(&ctx, claim)?,
        "cycle-lb" => cycle_lb(&ctx)?,
        "c-col" => c_col(&ctx)?,
        "spanning-trees" => spanning_tree_law(&ctx)?,
        "subgraph" => subgraph_law(&ctx)?,
        "basic-monotonicity" => monotonicity(&ctx)?,
        "change-colouring" => change_colouring(&ctx)?,
        "dominating-path" => dominating_path(&ctx)?,
        "path-section" => path_section(&ctx)?,
        "not-rainbow-col" => not_rainbow(&ctx)?,
        _ => unreachable!(),
    };
    let params = Params {
        n_max: if claim == "tree-tight" { 0 } else { n_max },
        colours: if claim == "tree-tight" { vec![] } else { colours },
        random_instances: random.then_some(cfg.instances),
        seed: random.then_some(cfg.seed),
        trees: (claim == "tree-tight").then(|| cfg.trees.clone()),
    };
    let passed = tally.failures.is_empty();
    Ok(Report {
        schema: REPORT_SCHEMA.to_string(),
        claim: claim.to_string(),
        params,
        instances: tally.instances,
        failures: tally.failures,
        passed,
    })
}

struct Ctx {
    n_max: usize,
    colours: Vec<usize>,
    cfg: CampaignConfig,
}

impl Ctx {
    fn budget(&self) -> u64 {
        self.cfg.budget
    }

    fn batch(&self) -> Vec<usize> {
        (0..self.cfg.instances).collect()
    }

    fn rng(&self, i: usize) -> ChaCha8Rng {
        rng_for(self.cfg.seed, i)
    }
}

/// `M_c` of paths (or cycles) equals `n - ceil(n/c)`; the witness replays.
fn extremal_family(ctx: &Ctx, cycle: bool) -> Result<Tally, ExtremalError> {
    let lo = if cycle { 3 } else { 2 };
    let mut tally = Tally::default();
    let opts = ExtremalOptions { budget: ctx.budget(), workers: None };
    for n in lo..=ctx.n_max {
        let g = Arc::new(if cycle { cycle_graph(n) } else { path_graph(n) }.map_err(gen_err)?);
        for &c in ctx.colours.iter().filter(|&&c| c <= n) {
            let res = max_moves_with(&g, c, opts)?;
            let w = ColouredGraph::new(Arc::clone(&g), res.witness_colouring.clone(), c).expect("canonical colouring");
            let again = exact(&w, None, None, ctx.budget())?;
            let want = colour_bound(n, c);
            tally.record(res.value == want && again == want, &w, || {
                format!("n={n} c={c}: M_c={} (witness replays to {again}), expected {want}", res.value)
            });
        }
    }
    Ok(tally)
}

/// Every surjective colouring of every small connected graph obeys the
/// colour bound (or the radius bound, also met by the radius strategy).
fn small_graph_bounds(ctx: &Ctx, radius: bool) -> Result<Tally, ExtremalError> {
    if ctx.n_max > 7 {
        return Err(ExtremalError::InvalidParams("small graph enumeration stops at 7 vertices".into()));
    }
    let mut items = Vec::new();
    for g in enumerate_small_graphs(ctx.n_max) {
        let g = Arc::new(g);
        for &c in ctx.colours.iter().filter(|&&c| c <= g.n()) {
            for col in enumerate_surjective_colourings(g.n(), c)? {
                items.push((Arc::clone(&g), c, col));
            }
        }
    }
    run_all(&items, |(g, c, col)| {
        let (g, c) = (ColouredGraph::new(Arc::clone(g), col.clone(), *c).expect("valid"), *c);
        let m = exact(&g, None, None, ctx.budget())?;
        let mut t = Tally::default();
        if radius {
            let bound = (c - 1) * g.radius();
            t.record(m <= bound, &g, || format!("m={m} exceeds (c-1)r={bound}"));
            let cert = radius_strategy(&g);
            let ok = play_certificate(&g, &cert).map(|o| o.flooded).unwrap_or(false) && cert.len() <= bound;
            t.record(ok, &g, || format!("radius strategy used {} moves, bound {bound}", cert.len()));
        } else {
            let bound = colour_bound(g.n(), c);
            t.record(m <= bound, &g, || format!("m={m} exceeds n-ceil(n/c)={bound}"));
        }
        Ok(t)
    })
}

fn tree_tight(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    let mut tally = Tally::default();
    for &(c, r) in &ctx.cfg.trees {
        let shape = gen_graph(&FamilySpec::TreeTcr { c, r }).map_err(gen_err)?;
        let g = gen_colouring(&shape, &ColouringSpec::ScrTree).map_err(gen_err)?;
        let want = (c - 1) * r;
        let m = exact(&g, None, None, ctx.budget())?;
        tally.record(m == want && g.radius() == r, &g, || format!("c={c} r={r}: m={m}, expected {want}"));
        let cert = radius_strategy(&g);
        let flooded = play_certificate(&g, &cert).map(|o| o.flooded).unwrap_or(false);
        tally.record(flooded && cert.len() == want, &g, || {
            format!("c={c} r={r}: radius strategy used {} moves, expected {want}", cert.len())
        });
    }
    Ok(tally)
}

/// The class-rainbow colouring of every blow-up with classes of size 1 or 2
/// needs at least `t - ceil(t/c)` moves.
fn blowup_lb(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    let mut items = Vec::new();
    for base in [Base::Path, Base::Cycle] {
        let lo = if base == Base::Cycle { 3 } else { 2 };
        for t in lo..=ctx.n_max {
            for mask in 0u32..(1 << t) {
                let sizes: Vec<usize> = (0..t).map(|i| 1 + ((mask >> i) & 1) as usize).collect();
                for &c in &ctx.colours {
                    items.push((base, sizes.clone(), c));
                }
            }
        }
    }
    run_all(&items, |(base, sizes, c)| {
        let spec = match base {
            Base::Path => FamilySpec::BlowupPath { sizes: sizes.clone() },
            Base::Cycle => FamilySpec::BlowupCycle { sizes: sizes.clone() },
        };
        let shape = gen_graph(&spec).expect("valid blow-up");
        let t = sizes.len();
        let f = (1..=t).map(|i| (i % c) as u8).collect();
        let g = gen_colouring(&shape, &ColouringSpec::PathColouring { c: *c, f }).expect("valid colouring");
        let m = exact(&g, None, None, ctx.budget())?;
        let want = colour_bound(t, *c);
        let mut tally = Tally::default();
        tally.record(m >= want, &g, || format!("m={m} below t-ceil(t/c)={want}"));
        Ok(tally)
    })
}

/// Shifted rainbow paths: per-colour lower bounds, the overall value, and
/// the balance of colour classes. The overall value and the balance are also
/// checked on wrapped rainbows; the per-colour bound fails there (for the
/// path `0 1 0 1 2`, colour 2 needs 3 moves, not 4).
fn shifted_rainbows(ctx: &Ctx, claim: &str) -> Result<Tally, ExtremalError> {
    let wrapped: &[bool] = if claim == "rainbow-target" { &[false] } else { &[false, true] };
    let mut items = Vec::new();
    for n in 1..=ctx.n_max {
        for &c in ctx.colours.iter().filter(|&&c| c <= n) {
            for r in 0..n {
                for &w in wrapped {
                    items.push((n, c, r, w));
                }
            }
        }
    }
    run_all(&items, |&(n, c, r, w)| {
        let mut tally = Tally::default();
        if let Some((k, failures)) = check_shifted_rainbow(n, c, r, w, claim) {
            tally.instances = k;
            tally.failures = failures;
        }
        Ok(tally)
    })
}

fn shifted_rainbow_checks(g: &ColouredGraph, c: usize, claim: &str, tally: &mut Tally) {
    let n = g.n();
    let counts: Vec<usize> = (0..c).map(|d| g.colour_count(Colour::new(d))).collect();
    match claim {
        "colour-dif" => {
            let (lo, hi) = (*counts.iter().min().unwrap(), *counts.iter().max().unwrap());
            tally.record(hi - lo <= 1 && hi == n.div_ceil(c), g, || format!("colour class sizes {counts:?}"));
        }
        "rainbow-target" => {
            let table = PathTable::new(g.colouring(), c);
            for (d, &nd) in counts.iter().enumerate() {
                let m = table.value(Some(Colour::new(d)));
                tally.record(m >= n - nd, g, || format!("m(d={d})={m} below n-N_d={}", n - nd));
            }
        }
        _ => {
            let m = PathTable::new(g.colouring(), c).value(None);
            let want = colour_bound(n, c);
            tally.record(m == want, g, || format!("m={m}, expected n-ceil(n/c)={want}"));
        }
    }
}

/// Checks `claim` (`rainbow-target`, `path-lb` or `colour-dif`) on the
/// shifted (or wrapped) rainbow path with `n` vertices and shift `r`. `None`
/// if that colouring does not exist.
pub fn check_shifted_rainbow(n: usize, c: usize, r: usize, wrapped: bool, claim: &str) -> Option<(u64, Vec<Failure>)> {
    let shape = gen_graph(&FamilySpec::Path { n }).ok()?;
    let spec = if wrapped { ColouringSpec::WrappedRainbow { c, r } } else { ColouringSpec::ShiftedRainbow { c, r } };
    let g = gen_colouring(&shape, &spec).ok()?;
    let mut tally = Tally::default();
    shifted_rainbow_checks(&g, c, claim, &mut tally);
    Some((tally.instances, tally.failures))
}

fn cycle_lb(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    let mut items = Vec::new();
    for n in 3..=ctx.n_max {
        for &c in ctx.colours.iter().filter(|&&c| c <= n) {
            for r in 0..n {
                items.push((n, c, r));
            }
        }
    }
    run_all(&items, |&(n, c, r)| {
        let mut tally = Tally::default();
        let shape = gen_graph(&FamilySpec::Cycle { n }).expect("valid cycle");
        let Ok(g) = gen_colouring(&shape, &ColouringSpec::CycleRainbow { c, r }) else {
            return Ok(tally);
        };
        let want = colour_bound(n, c);
        let m = cycle_min_moves(&g, None)?;
        tally.record(m >= want, &g, || format!("cycle DP m={m} below {want}"));
        if n <= 9 {
            let e = exact(&g, None, None, ctx.budget())?;
            tally.record(e >= want && e == m, &g, || format!("exact m={e}, DP {m}, bound {want}"));
        }
        Ok(tally)
    })
}

fn c_col(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    run_all(&ctx.batch(), |&i| {
        let mut rng = ctx.rng(i);
        let g = random_coloured(&mut rng, 1, ctx.n_max, &ctx.colours);
        let m = exact(&g, None, None, ctx.budget())?;
        let present = g.colours_present();
        let mut comps = vec![0usize; g.c()];
        for comp in FloodState::new(&g).components() {
            comps[comp.colour.index()] += 1;
        }
        let mut tally = Tally::default();
        tally.record(m + 1 >= present, &g, || format!("m={m} below {present} - 1"));
        if comps.iter().all(|&k| k == 0 || k >= 2) {
            tally.record(m >= present, &g, || format!("m={m} below {present} with every colour split"));
        }
        Ok(tally)
    })
}

fn spanning_tree_law(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    run_all(&ctx.batch(), |&i| {
        let mut rng = ctx.rng(i);
        let g = random_coloured(&mut rng, 2, ctx.n_max, &ctx.colours);
        let d = Colour::new(rng.gen_range(0..g.c()));
        let mut best_d = usize::MAX;
        let mut best = usize::MAX;
        for edges in spanning_trees(g.graph()) {
            let all: Vec<usize> = (0..g.n()).collect();
            let t = sub_coloured(&g, &all, &edges);
            best_d = best_d.min(exact(&t, Some(d), None, ctx.budget())?);
            best = best.min(exact(&t, None, None, ctx.budget())?);
        }
        let m_d = exact(&g, Some(d), None, ctx.budget())?;
        let m = exact(&g, None, None, ctx.budget())?;
        let mut tally = Tally::default();
        tally.record(m_d == best_d && m == best, &g, || {
            format!("d={d}: graph {m_d}/{m}, best spanning tree {best_d}/{best}")
        });
        Ok(tally)
    })
}

/// A random connected vertex set grown from a random vertex, and a random
/// connected edge set on it.
fn random_connected_part(rng: &mut ChaCha8Rng, g: &Graph) -> (Vec<usize>, Vec<(usize, usize)>) {
    let size = rng.gen_range(1..=g.n());
    let mut inside = vec![false; g.n()];
    let start = rng.gen_range(0..g.n());
    inside[start] = true;
    let mut verts = vec![start];
    let mut tree = Vec::new();
    while verts.len() < size {
        let frontier: Vec<(usize, usize)> = verts
            .iter()
            .flat_map(|&u| g.neighbours(u).iter().map(move |&v| (u, v)))
            .filter(|&(_, v)| !inside[v])
            .collect();
        let &(u, v) = frontier.choose(rng).expect("connected graph");
        inside[v] = true;
        verts.push(v);
        tree.push((u.min(v), u.max(v)));
    }
    let mut edges = tree.clone();
    for &(u, v) in g.edges() {
        if inside[u] && inside[v] && !tree.contains(&(u, v)) && rng.gen_bool(0.5) {
            edges.push((u, v));
        }
    }
    verts.sort_unstable();
    (verts, edges)
}

fn subgraph_law(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    run_all(&ctx.batch(), |&i| {
        let mut rng = ctx.rng(i);
        let g = random_coloured(&mut rng, 1, ctx.n_max, &ctx.colours);
        let (verts, edges) = random_connected_part(&mut rng, g.graph());
        let h = sub_coloured(&g, &verts, &edges);
        let d = Colour::new(rng.gen_range(0..g.c()));
        let in_g = exact(&g, Some(d), Some(verts.clone()), ctx.budget())?;
        let in_h = exact(&h, Some(d), None, ctx.budget())?;
        let free_g = exact(&g, None, Some(verts.clone()), ctx.budget())?;
        let free_h = exact(&h, None, None, ctx.budget())?;
        let mut tally = Tally::default();
        tally.record(in_g <= in_h && free_g <= free_h, &g, || {
            format!("H on {verts:?} edges {edges:?}, d={d}: in G {in_g}/{free_g}, alone {in_h}/{free_h}")
        });
        Ok(tally)
    })
}

fn monotonicity(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    run_all(&ctx.batch(), |&i| {
        let mut rng = ctx.rng(i);
        let n = rng.gen_range(3..=ctx.n_max.max(3));
        let c = *ctx.colours.choose(&mut rng).expect("colours");
        let col = random_colouring(&mut rng, n, c);
        let cut = rng.gen_range(1..n - 1);
        let mut shorter = col.clone();
        shorter.remove(cut);
        let p = path_coloured(col, c);
        let q = path_coloured(shorter, c);
        let mut tally = Tally::default();
        for d in (0..c).map(|d| Some(Colour::new(d))).chain([None]) {
            let (a, b) = (path_min_moves(&p, d)?, path_min_moves(&q, d)?);
            tally.record(b <= a, &p, || format!("deleting vertex {cut}: {a} -> {b} for target {d:?}"));
        }
        Ok(tally)
    })
}

fn change_colouring(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    run_all(&ctx.batch(), |&i| {
        let mut rng = ctx.rng(i);
        let g = random_coloured(&mut rng, 1, ctx.n_max, &ctx.colours);
        let other = g.recoloured(random_colouring(&mut rng, g.n(), g.c()), g.c()).expect("valid");
        let mut repair = 0;
        for comp in FloodState::new(&other).components() {
            let edges: Vec<(usize, usize)> = g
                .graph()
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| comp.vertices.binary_search(&u).is_ok() && comp.vertices.binary_search(&v).is_ok())
                .collect();
            let a = sub_coloured(&g, &comp.vertices, &edges);
            repair += exact(&a, Some(comp.colour), None, ctx.budget())?;
        }
        let mut tally = Tally::default();
        for d in (0..g.c()).map(Colour::new) {
            let lhs = exact(&g, Some(d), None, ctx.budget())?;
            let base = exact(&other, Some(d), None, ctx.budget())?;
            tally.record(lhs <= base + repair, &g, || {
                format!("d={d}: {lhs} > {base} + {repair} against colouring {:?}", other.colouring())
            });
        }
        Ok(tally)
    })
}

fn dominating_path(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    run_all(&ctx.batch(), |&i| {
        let mut rng = ctx.rng(i);
        let t = rng.gen_range(2..=ctx.n_max.max(2));
        let sizes: Vec<usize> = (0..t).map(|_| rng.gen_range(1..=2)).collect();
        let shape = gen_graph(&FamilySpec::BlowupPath { sizes }).expect("valid blow-up");
        let c = *ctx.colours.choose(&mut rng).expect("colours");
        let col = random_colouring(&mut rng, shape.graph.n(), c);
        let g = ColouredGraph::new(Arc::clone(&shape.graph), col, c).expect("valid");
        let b = shape.blowup().expect("blow-up layout");
        let q: Vec<usize> = b.classes.iter().map(|cl| *cl.choose(&mut rng).expect("non-empty")).collect();
        let (qg, _) = g.induced(&q).expect("transversals of path blow-ups are paths");
        let m_q = path_min_moves(&qg, None)?;
        let mut tally = Tally::default();
        match dominating_path_strategy(b, &g, &q) {
            Ok(cert) => {
                let flooded = play_certificate(&g, &cert).map(|o| o.flooded).unwrap_or(false);
                tally.record(flooded && cert.len() < m_q + c, &g, || {
                    format!("Q={q:?}: {} moves, m(Q)={m_q}", cert.len())
                });
            }
            Err(e) => tally.record(false, &g, || format!("Q={q:?}: strategy failed: {e}")),
        }
        let m = exact(&g, None, None, ctx.budget())?;
        let bound = colour_bound(t, c) + c - 1;
        tally.record(m <= bound, &g, || format!("m={m} above t-ceil(t/c)+c-1={bound}"));
        Ok(tally)
    })
}

fn path_section(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    run_all(&ctx.batch(), |&i| {
        let mut rng = ctx.rng(i);
        let n = rng.gen_range(2..=ctx.n_max.max(2));
        let c = *ctx.colours.choose(&mut rng).expect("colours");
        let col = random_colouring(&mut rng, n, c);
        let p = path_coloured(col.clone(), c);
        let mut cuts: Vec<usize> = (0..=n).collect::<Vec<_>>().choose_multiple(&mut rng, 6).copied().collect();
        cuts.sort_unstable();
        cuts.dedup();
        let mut removed = 0;
        let mut sub_total = 0;
        let mut sections = Vec::new();
        for w in cuts.chunks(2) {
            if let [a, b] = *w {
                if b > a {
                    let q = path_coloured(col[a..b].to_vec(), c);
                    sub_total += path_min_moves(&q, None)?;
                    removed += b - a - 1;
                    sections.push((a, b - 1));
                }
            }
        }
        let m = path_min_moves(&p, None)?;
        let short = n - removed;
        let bound = short - short.div_ceil(c) + sub_total;
        let mut tally = Tally::default();
        tally.record(m <= bound, &p, || format!("sections {sections:?}: m={m} above {bound}"));
        Ok(tally)
    })
}

fn not_rainbow(ctx: &Ctx) -> Result<Tally, ExtremalError> {
    run_all(&ctx.batch(), |&i| {
        let mut rng = ctx.rng(i);
        let n = rng.gen_range(1..=ctx.n_max.max(1));
        let c = *ctx.colours.choose(&mut rng).expect("colours");
        let mut f: Vec<Colour> = (0..n).map(|k| Colour::new(k % c)).collect();
        for _ in 0..rng.gen_range(0..3) {
            let k = rng.gen_range(0..n);
            f[k] = Colour::new(rng.gen_range(0..c));
        }
        let p = path_coloured(f.clone(), c);
        let mut tally = Tally::default();
        if !is_rainbow(&f, c) {
            let found = (0..n).any(|a| (a + 1..n.min(a + c)).any(|b| f[a] == f[b]));
            tally.record(found, &p, || "no close repeated colour".into());
            if f.windows(2).all(|w| w[0] != w[1]) {
                let grd = grd_sequence(&f, c);
                tally.record(grd.len() >= 2, &p, || "proper non-rainbow sequence gave one segment".into());
            }
        } else {
            tally.record(grd_ok(&f, c), &p, || "rainbow sequence split".into());
        }
        Ok(tally)
    })
}

fn grd_ok(f: &[Colour], c: usize) -> bool {
    f.windows(2).any(|w| w[0] == w[1]) || grd_sequence(f, c).len() == 1
}

fn gen_err(e: GenError) -> ExtremalError {
    ExtremalError::InvalidParams(e.to_string())
}
