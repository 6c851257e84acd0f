//! Exhaustive completion of a sharp seed ball into every connected quartic
//! graph that is curvature sharp at all vertices.
//!
//! The seed is laid out around `v0 = 0` with `S1 = 1..=4` and `S2` after it.
//! The search repeatedly takes the lowest-indexed vertex of degree below 4
//! and branches over every way of completing its neighbourhood: a set of
//! existing open vertices plus as many fresh vertices as are still missing.
//! Each vertex therefore becomes saturated in exactly one step, and every
//! completion of the seed is reached (fresh vertices are interchangeable).
//!
//! Branches are cut by:
//!
//! * the edge-triangle constant `c1` of the seed group: no edge may lie on
//!   more than `c1` triangles, an edge between saturated vertices must lie on
//!   exactly `c1`, and an edge with one saturated end must still be able to
//!   reach `c1`;
//! * admissible balls: once a vertex and its neighbours are saturated its
//!   incomplete 2-ball is final and must be a sharp ball of the seed group;
//! * the diameter bound `2*4/K`: distances from `v0` that can no longer
//!   shrink may not exceed it. At `K = 2` a final distance equal to the bound
//!   forces the hypercube (optional shortcut);
//! * the `S2`/`S3` edge budget around `v0` for triangle-free seeds;
//! * the vertex cap, which records the branch as truncated.
//!
//! Candidate sets are reduced by vertex twins: open vertices with identical
//! neighbourhoods are interchangeable, so only prefixes of each twin class
//! are tried.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::ball::{sharp_catalog, BallTypeId, IncompleteTwoBall};
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named::{hypercube, NamedGraph};

pub const DEFAULT_MAX_VERTICES: usize = 40;
/// Smaller caps could cut off the 16-vertex hypercube.
pub const MIN_MAX_VERTICES: usize = 17;
/// Partial graphs store adjacency as 64-bit rows.
pub const MAX_VERTICES_LIMIT: usize = 64;

const DEGREE: usize = 4;
/// Subtrees above this depth are explored in parallel.
const PARALLEL_DEPTH: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_vertices: usize,
    /// Use the hypercube shortcut when a distance reaches the diameter bound.
    pub rigidity_prune: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// The triangle-constant, diameter and edge-budget cuts can each be
    /// switched off to confirm that they only remove dead branches; the
    /// admissible-ball test alone already decides every completed graph.
    pub triangle_prune: bool,
    pub diameter_prune: bool,
    pub budget_prune: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_vertices: DEFAULT_MAX_VERTICES,
            rigidity_prune: true,
            jobs: None,
            triangle_prune: true,
            diameter_prune: true,
            budget_prune: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexStatus {
    /// Degree below 4.
    Open,
    /// Degree 4, ball not yet final.
    Saturated,
    /// Degree 4 and its final ball is admissible.
    Verified,
}

/// A graph under construction, at most 64 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialGraph {
    adj: Vec<u64>,
    verified: u64,
    /// Verified vertices whose ball is of type 4.5.
    type45: u64,
}

fn bit(v: usize) -> u64 {
    1 << v
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

impl PartialGraph {
    /// The seed ball around vertex 0, numbered as in
    /// [`IncompleteTwoBall::to_graph`]. Nothing is verified yet.
    pub fn from_seed(seed: &IncompleteTwoBall) -> Result<Self> {
        let g = seed.to_graph();
        if g.n() > MAX_VERTICES_LIMIT {
            return Err(Error::input("seed ball too large"));
        }
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).fold(0, |m, w| m | bit(w)))
            .collect();
        Ok(PartialGraph {
            adj,
            verified: 0,
            type45: 0,
        })
    }

    /// A finished graph viewed as a partial graph, with every vertex whose
    /// ball is a sharp quartic ball marked verified.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        if g.n() > MAX_VERTICES_LIMIT {
            return Err(Error::input(format!(
                "partial graphs hold at most {MAX_VERTICES_LIMIT} vertices"
            )));
        }
        let mut pg = PartialGraph {
            adj: (0..g.n()).map(|v| g.neighbors(v).fold(0, |m, w| m | bit(w))).collect(),
            verified: 0,
            type45: 0,
        };
        let saturated = pg.saturated_mask();
        for x in 0..g.n() {
            if !pg.ball_is_final(x, saturated) {
                continue;
            }
            if let Some(id) = BallTypeId::lookup(&pg.ball_at(x).canonical_form()) {
                pg.verified |= bit(x);
                if id == BallTypeId::new(4, 5) {
                    pg.type45 |= bit(x);
                }
            }
        }
        Ok(pg)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn status(&self, v: usize) -> VertexStatus {
        if self.verified & bit(v) != 0 {
            VertexStatus::Verified
        } else if self.degree(v) == DEGREE {
            VertexStatus::Saturated
        } else {
            VertexStatus::Open
        }
    }

    /// Vertices that are not yet verified, ascending.
    pub fn frontier(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.verified & bit(v) == 0).collect()
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<_> = (0..self.n())
            .flat_map(|u| bits(self.adj[u]).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(self.n(), &edges).expect("edges in range")
    }

    fn saturated_mask(&self) -> u64 {
        (0..self.n())
            .filter(|&v| self.degree(v) == DEGREE)
            .fold(0, |m, v| m | bit(v))
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    fn add_vertex(&mut self) -> usize {
        self.adj.push(0);
        self.adj.len() - 1
    }

    fn triangles(&self, u: usize, v: usize) -> usize {
        (self.adj[u] & self.adj[v]).count_ones() as usize
    }

    /// A vertex's ball is final once it and all its neighbours are saturated.
    fn ball_is_final(&self, x: usize, saturated: u64) -> bool {
        saturated & bit(x) != 0 && self.adj[x] & !saturated == 0
    }

    /// Incomplete 2-ball at `x` with `S1` and `S2` in ascending id order.
    pub fn ball_at(&self, x: usize) -> IncompleteTwoBall {
        let s1: Vec<usize> = bits(self.adj[x]).collect();
        let b1 = self.adj[x] | bit(x);
        let s2 = s1.iter().fold(0, |m, &y| m | self.adj[y]) & !b1;
        let d = s1.len();
        let mut s1_adj = Vec::with_capacity(d * (d.max(1) - 1) / 2);
        for i in 0..d {
            for j in i + 1..d {
                s1_adj.push(self.has_edge(s1[i], s1[j]));
            }
        }
        let patterns = bits(s2)
            .map(|z| {
                s1.iter()
                    .enumerate()
                    .filter(|&(_, &y)| self.has_edge(y, z))
                    .fold(0u32, |m, (i, _)| m | 1 << i)
            })
            .collect();
        IncompleteTwoBall::from_parts(d, s1_adj, patterns)
    }

    /// Breadth-first distances from vertex 0 (the graph is connected).
    fn distances(&self) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut seen = bit(0);
        let mut layer = bit(0);
        let mut k = 0;
        while layer != 0 {
            let mut next = 0;
            for v in bits(layer) {
                dist[v] = k;
                next |= self.adj[v];
            }
            layer = next & !seen;
            seen |= layer;
            k += 1;
        }
        dist
    }
}

/// Edge budget between `S2(root)` and `S3(root)` for triangle-free roots.
///
/// In a quartic graph every edge leaving `S2` lands in `S3`, so
/// `Σ_{z∈S2} d⁺(z) = Σ_{w∈S3} d⁻(w)`. The left side is at most the current
/// free capacity of `S2`; every vertex already known to lie in `S3`
/// contributes at least its current in-degree and at least a proven lower
/// bound (3 when the root and all of `S1(root)` have type 4.5, else 1).
/// Returns `false` when the budget is already exceeded. Roots whose ball is
/// not yet final or that lie on triangles are not constrained.
pub fn s3_budget_check(pg: &PartialGraph, root: usize) -> bool {
    let saturated = pg.saturated_mask();
    if !pg.ball_is_final(root, saturated) {
        return true;
    }
    let s1 = pg.adj[root];
    if bits(s1).any(|y| pg.adj[y] & s1 != 0) {
        return true;
    }
    let b1 = s1 | bit(root);
    let s2 = bits(s1).fold(0, |m, y| m | pg.adj[y]) & !b1;
    let b2 = b1 | s2;
    let s3 = bits(s2).fold(0, |m, z| m | pg.adj[z]) & !b2;
    let capacity: usize = bits(s2)
        .map(|z| DEGREE - ((pg.adj[z] & (s1 | s2)).count_ones() as usize))
        .sum();
    let all45 = b1 & !pg.type45 == 0;
    let floor = if all45 { 3 } else { 1 };
    let demand: usize = bits(s3)
        .map(|w| ((pg.adj[w] & s2).count_ones() as usize).max(floor))
        .sum();
    demand <= capacity
}

/// Counts of branches cut by each rule.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PruneCounters {
    /// An edge exceeded the triangle constant.
    pub triangle_cap: u64,
    /// A finished edge missed the triangle constant, or can no longer reach it.
    pub triangle_exact: u64,
    /// A final ball was not an admissible sharp ball.
    pub ball: u64,
    /// A final distance from the seed exceeded the diameter bound.
    pub bonnet_myers: u64,
    /// A final distance met the bound at curvature 2 (hypercube shortcut).
    pub rigidity: u64,
    /// The `S2`/`S3` edge budget was exceeded.
    pub s3_budget: u64,
}

impl PruneCounters {
    fn merge(&mut self, o: &PruneCounters) {
        self.triangle_cap += o.triangle_cap;
        self.triangle_exact += o.triangle_exact;
        self.ball += o.ball;
        self.bonnet_myers += o.bonnet_myers;
        self.rigidity += o.rigidity;
        self.s3_budget += o.s3_budget;
    }
}

/// Result of a search from one seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub seed: BallTypeId,
    /// Completed graphs up to isomorphism, in canonical-form order.
    pub completed_graphs: Vec<Graph>,
    pub canonical_forms: Vec<CanonicalForm>,
    pub nodes_explored: u64,
    pub pruned_by: PruneCounters,
    /// Branches abandoned because they needed more than `max_vertices`.
    pub truncated: u64,
    /// Branches closed by the hypercube shortcut while the hypercube
    /// contains the seed.
    pub rigidity_completions: u64,
}

impl SearchOutcome {
    /// Names of the completed graphs that are among the eight classified
    /// graphs, `None` for anything else.
    pub fn identify(&self) -> Vec<Option<NamedGraph>> {
        let named: Vec<(CanonicalForm, NamedGraph)> = NamedGraph::ALL
            .iter()
            .map(|&g| (canonical_form(&g.build()), g))
            .collect();
        self.canonical_forms
            .iter()
            .map(|f| named.iter().find(|(nf, _)| nf == f).map(|&(_, g)| g))
            .collect()
    }

    pub fn summary(&self) -> SearchSummary {
        SearchSummary {
            seed: self.seed,
            graph_count: self.completed_graphs.len(),
            graphs: self
                .completed_graphs
                .iter()
                .zip(self.identify())
                .map(|(g, name)| GraphSummary {
                    name: name.map(|n| n.name().to_string()),
                    vertices: g.n(),
                    edges: g.num_edges(),
                })
                .collect(),
            nodes_explored: self.nodes_explored,
            truncated: self.truncated,
            rigidity_completions: self.rigidity_completions,
            pruned_by: self.pruned_by.clone(),
        }
    }
}

/// JSON-friendly view of a [`SearchOutcome`].
#[derive(Clone, Debug, Serialize)]
pub struct SearchSummary {
    pub seed: BallTypeId,
    pub graph_count: usize,
    pub graphs: Vec<GraphSummary>,
    pub nodes_explored: u64,
    pub truncated: u64,
    pub rigidity_completions: u64,
    pub pruned_by: PruneCounters,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub name: Option<String>,
    pub vertices: usize,
    pub edges: usize,
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .identify()
            .iter()
            .zip(&self.completed_graphs)
            .map(|(n, g)| n.map_or_else(|| format!("unnamed({} vertices)", g.n()), |n| n.to_string()))
            .collect();
        write!(
            f,
            "seed {}: {{{}}} after {} nodes",
            self.seed,
            names.join(", "),
            self.nodes_explored
        )
    }
}

struct Context {
    c1: usize,
    triangle_prune: bool,
    diameter_prune: bool,
    max_vertices: usize,
    max_distance: usize,
    /// Admissible canonical balls with their types.
    admissible: HashMap<IncompleteTwoBall, BallTypeId>,
    /// Canonical hypercube when the shortcut is on and curvature is 2.
    rigidity: Option<Rigidity>,
    triangle_free: bool,
}

struct Rigidity {
    /// Whether the hypercube's ball is the seed.
    hosts_seed: bool,
    form: CanonicalForm,
}

#[derive(Default)]
struct Local {
    nodes: u64,
    pruned: PruneCounters,
    truncated: u64,
    rigidity_completions: u64,
    forms: BTreeSet<CanonicalForm>,
}

impl Local {
    fn merge(mut self, o: Local) -> Local {
        self.nodes += o.nodes;
        self.pruned.merge(&o.pruned);
        self.truncated += o.truncated;
        self.rigidity_completions += o.rigidity_completions;
        self.forms.extend(o.forms);
        self
    }
}

enum Verdict {
    Keep,
    Cut,
}

impl Context {
    /// Triangle counts on edges at `u` stay within `c1`.
    fn caps_ok_at(&self, pg: &PartialGraph, u: usize) -> bool {
        !self.triangle_prune || bits(pg.adj[u]).all(|w| pg.triangles(u, w) <= self.c1)
    }

    /// Full consistency check after a move; marks newly final balls verified.
    fn validate(&self, pg: &mut PartialGraph, local: &mut Local) -> Verdict {
        let n = pg.n();
        let saturated = pg.saturated_mask();
        let open = !saturated & ((1u128 << n) - 1) as u64;
        // exact triangle constant on finished edges, reachability otherwise
        let checked = if self.triangle_prune { saturated } else { 0 };
        for a in bits(checked) {
            for b in bits(pg.adj[a]) {
                let t = pg.triangles(a, b);
                if saturated & bit(b) != 0 {
                    if b > a && t != self.c1 {
                        local.pruned.triangle_exact += 1;
                        return Verdict::Cut;
                    }
                } else if t < self.c1 {
                    // common neighbours can only come from open neighbours of a
                    let reachable = (pg.adj[a] & open & !pg.adj[b] & !bit(b)).count_ones() as usize;
                    let room = DEGREE - pg.degree(b);
                    if t + reachable.min(room) < self.c1 {
                        local.pruned.triangle_exact += 1;
                        return Verdict::Cut;
                    }
                }
            }
        }
        // admissible final balls
        for x in bits(saturated & !pg.verified) {
            if pg.ball_is_final(x, saturated) {
                match self.admissible.get(&pg.ball_at(x).canonical_form()) {
                    Some(id) => {
                        pg.verified |= bit(x);
                        if *id == BallTypeId::new(4, 5) {
                            pg.type45 |= bit(x);
                        }
                    }
                    None => {
                        local.pruned.ball += 1;
                        return Verdict::Cut;
                    }
                }
            }
        }
        if !self.diameter_prune {
            return self.budget(pg, local);
        }
        // distances within one step of the nearest open vertex are final
        let dist = pg.distances();
        let horizon = bits(open).map(|v| dist[v] + 1).min().unwrap_or(usize::MAX);
        let far = dist.iter().copied().filter(|&d| d <= horizon).max().unwrap_or(0);
        if far > self.max_distance {
            local.pruned.bonnet_myers += 1;
            return Verdict::Cut;
        }
        if let Some(r) = &self.rigidity {
            if far == self.max_distance {
                local.pruned.rigidity += 1;
                if r.hosts_seed {
                    local.rigidity_completions += 1;
                    local.forms.insert(r.form.clone());
                }
                return Verdict::Cut;
            }
        }
        self.budget(pg, local)
    }

    fn budget(&self, pg: &PartialGraph, local: &mut Local) -> Verdict {
        if self.triangle_free && !s3_budget_check(pg, 0) {
            local.pruned.s3_budget += 1;
            return Verdict::Cut;
        }
        Verdict::Keep
    }

    /// All admissible ways to saturate vertex `v`.
    fn children(&self, pg: &PartialGraph, v: usize, local: &mut Local) -> Vec<PartialGraph> {
        let need = DEGREE - pg.degree(v);
        let candidates: Vec<usize> = (v + 1..pg.n())
            .filter(|&u| pg.degree(u) < DEGREE && !pg.has_edge(v, u))
            .collect();
        // twin classes by identical neighbourhoods
        let class: Vec<usize> = candidates
            .iter()
            .map(|&u| {
                candidates
                    .iter()
                    .position(|&w| pg.adj[w] == pg.adj[u])
                    .expect("u is its own twin")
            })
            .collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.choose(pg.clone(), v, need, &candidates, &class, 0, 0, &mut chosen, &mut out, local);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &self,
        pg: PartialGraph,
        v: usize,
        need: usize,
        candidates: &[usize],
        class: &[usize],
        from: usize,
        skipped_classes: u64,
        chosen: &mut Vec<usize>,
        out: &mut Vec<PartialGraph>,
        local: &mut Local,
    ) {
        // existing targets first, in ascending order, then fresh vertices
        if chosen.len() < need {
            for i in from..candidates.len() {
                let skipped_before = (from..i).fold(skipped_classes, |m, j| m | bit(class[j]));
                if skipped_before & bit(class[i]) != 0 {
                    continue;
                }
                let u = candidates[i];
                let mut next = pg.clone();
                next.add_edge(v, u);
                if !self.caps_ok_at(&next, v) || !self.caps_ok_at(&next, u) {
                    local.pruned.triangle_cap += 1;
                    continue;
                }
                // common neighbours' other edges gained a triangle too
                if bits(next.adj[v] & next.adj[u]).any(|x| !self.caps_ok_at(&next, x)) {
                    local.pruned.triangle_cap += 1;
                    continue;
                }
                chosen.push(u);
                self.choose(next, v, need, candidates, class, i + 1, skipped_before, chosen, out, local);
                chosen.pop();
            }
        }
        let fresh = need - chosen.len();
        if pg.n() + fresh > self.max_vertices {
            local.truncated += 1;
            return;
        }
        let mut done = pg;
        for _ in 0..fresh {
            let f = done.add_vertex();
            done.add_edge(v, f);
        }
        if let Verdict::Keep = self.validate(&mut done, local) {
            out.push(done);
        }
    }

    fn explore(&self, pg: PartialGraph, depth: usize) -> Local {
        let mut local = Local {
            nodes: 1,
            ..Local::default()
        };
        let Some(v) = (0..pg.n()).find(|&v| pg.degree(v) < DEGREE) else {
            debug_assert_eq!(pg.verified.count_ones() as usize, pg.n());
            local.forms.insert(canonical_form(&pg.to_graph()));
            return local;
        };
        let kids = self.children(&pg, v, &mut local);
        if depth < PARALLEL_DEPTH {
            kids.into_par_iter()
                .map(|k| self.explore(k, depth + 1))
                .reduce(Local::default, Local::merge)
                .merge(local)
        } else {
            kids.into_iter()
                .fold(local, |acc, k| acc.merge(self.explore(k, depth + 1)))
        }
    }
}

fn context(seed: BallTypeId, config: &SearchConfig) -> Context {
    let c1 = seed.edge_triangles();
    let k = seed.curvature();
    let max_distance = (2.0 * DEGREE as f64 / k + 1e-9).floor() as usize;
    let admissible = sharp_catalog()
        .iter()
        .filter(|s| s.id.edge_triangles() == c1)
        .map(|s| (s.ball.clone(), s.id))
        .collect();
    let bound_is_tight = (2.0 * DEGREE as f64 / k - max_distance as f64).abs() < 1e-9;
    let rigidity = (config.rigidity_prune && config.diameter_prune && bound_is_tight && max_distance == DEGREE).then(|| {
        let q = hypercube(DEGREE);
        Rigidity {
            hosts_seed: IncompleteTwoBall::extract(&q, 0)
                .expect("hypercube ball")
                .canonical_form()
                == *seed.ball(),
            form: canonical_form(&q),
        }
    });
    Context {
        c1,
        max_vertices: config.max_vertices,
        max_distance,
        admissible,
        rigidity,
        triangle_free: config.budget_prune && c1 == 0,
        triangle_prune: config.triangle_prune,
        diameter_prune: config.diameter_prune,
    }
}

/// Every connected quartic graph, sharp at all vertices, that contains the
/// seed type as the ball of some vertex.
pub fn search_from_seed(seed: BallTypeId, config: &SearchConfig) -> Result<SearchOutcome> {
    if config.max_vertices < MIN_MAX_VERTICES {
        return Err(Error::input(format!(
            "max_vertices must be at least {MIN_MAX_VERTICES}, got {}",
            config.max_vertices
        )));
    }
    if config.max_vertices > MAX_VERTICES_LIMIT {
        return Err(Error::input(format!(
            "max_vertices must be at most {MAX_VERTICES_LIMIT}, got {}",
            config.max_vertices
        )));
    }
    if config.jobs == Some(0) {
        return Err(Error::input("jobs must be positive"));
    }
    let ctx = context(seed, config);
    let run = || -> Result<Local> {
        let mut root = PartialGraph::from_seed(seed.ball())?;
        let mut local = Local::default();
        // some seeds already violate the triangle constant on their own
        match ctx.validate(&mut root, &mut local) {
            Verdict::Cut => {
                local.nodes += 1;
                Ok(local)
            }
            Verdict::Keep => Ok(ctx.explore(root, 0).merge(local)),
        }
    };
    let local = match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Inconsistent(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let canonical_forms: Vec<CanonicalForm> = local.forms.into_iter().collect();
    Ok(SearchOutcome {
        seed,
        completed_graphs: canonical_forms.iter().map(CanonicalForm::to_graph).collect(),
        canonical_forms,
        nodes_explored: local.nodes,
        pruned_by: local.pruned,
        truncated: local.truncated,
        rigidity_completions: local.rigidity_completions,
    })
}

/// Searches from every sharp seed type, in table order.
pub fn search_all(config: &SearchConfig) -> Result<Vec<SearchOutcome>> {
    BallTypeId::all().map(|id| search_from_seed(id, config)).collect()
}
