//! Undirected simple graphs on dense vertex ids `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex, so neighbourhood
//! intersections (triangle counts, common neighbours) are word-wise ANDs.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Undirected simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Degrees of a vertex `y` relative to a root `x`: neighbours one step
/// closer to `x`, level with `y`, and one step farther away.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootedDegrees {
    pub in_deg: usize,
    pub sph_deg: usize,
    pub out_deg: usize,
}

impl RootedDegrees {
    pub fn total(&self) -> usize {
        self.in_deg + self.sph_deg + self.out_deg
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            g.set(u, v);
            g.set(v, u);
        }
        Ok(g)
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    fn row(&self, v: usize) -> &[u64] {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `Some(D)` when every vertex has degree `D`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Applies the vertex map `perm` (old id to new id).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
            g.set(perm[v], perm[u]);
        }
        g
    }

    /// Breadth-first distances from `x`; `None` for unreachable vertices.
    pub fn distances_from(&self, x: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[x] = Some(0);
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, x: usize, y: usize) -> Option<usize> {
        assert!(y < self.n, "vertex {y} out of range");
        self.distances_from(x)[y]
    }

    /// Vertices at distance exactly `k` from `x`, ascending.
    pub fn sphere(&self, x: usize, k: usize) -> Vec<usize> {
        self.distances_from(x)
            .into_iter()
            .enumerate()
            .filter_map(|(v, d)| (d == Some(k)).then_some(v))
            .collect()
    }

    /// Vertices at distance at most `k` from `x`, ascending.
    pub fn ball(&self, x: usize, k: usize) -> Vec<usize> {
        self.distances_from(x)
            .into_iter()
            .enumerate()
            .filter_map(|(v, d)| d.is_some_and(|d| d <= k).then_some(v))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Largest pairwise distance. Fails on disconnected graphs.
    pub fn diameter(&self) -> Result<usize> {
        let mut diam = 0;
        for x in 0..self.n {
            for d in self.distances_from(x) {
                diam = diam.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(diam)
    }

    /// In/spherical/out degree of `y` with respect to `root`.
    ///
    /// Neighbours of `y` in another component than `root` cannot occur, so
    /// for unreachable `y` everything is reported as spherical.
    pub fn rooted_degrees(&self, root: usize, y: usize) -> RootedDegrees {
        let dist = self.distances_from(root);
        rooted_degrees_with(self, &dist, y)
    }

    /// Number of triangles through `x`, i.e. edges among its neighbours.
    pub fn triangles_at_vertex(&self, x: usize) -> usize {
        let nbrs: Vec<usize> = self.neighbors(x).collect();
        nbrs.iter()
            .enumerate()
            .map(|(i, &a)| nbrs[i + 1..].iter().filter(|&&b| self.has_edge(a, b)).count())
            .sum()
    }

    /// Number of triangles containing the edge `{u, v}`.
    pub fn triangles_at_edge(&self, u: usize, v: usize) -> Result<usize> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(Error::input(format!("({u},{v}) is not an edge")));
        }
        Ok(self.common_neighbor_count(u, v))
    }

    /// True iff all neighbours of `x` share one out-degree with respect to `x`.
    pub fn is_s1_out_regular(&self, x: usize) -> bool {
        let dist = self.distances_from(x);
        let mut outs = self.neighbors(x).map(|y| rooted_degrees_with(self, &dist, y).out_deg);
        match outs.next() {
            None => true,
            Some(first) => outs.all(|d| d == first),
        }
    }

    /// Non-normalised Laplacian `sum_{y ~ x} (f(y) - f(x))`.
    pub fn laplacian_at(&self, f: &[f64], x: usize) -> f64 {
        self.neighbors(x).map(|y| f[y] - f[x]).sum()
    }

    /// Parses the edge-list text format: a header line `n <count>`, then one
    /// `u v` pair per line. Blank lines and lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::input("edge list is empty"))?;
        let mut parts = header.split_whitespace();
        let n = match (parts.next(), parts.next(), parts.next()) {
            (Some("n"), Some(count), None) => count
                .parse::<usize>()
                .map_err(|_| Error::input(format!("line {hline}: bad vertex count {count:?}")))?,
            _ => {
                return Err(Error::input(format!(
                    "line {hline}: expected header `n <count>`, found {header:?}"
                )))
            }
        };
        let mut edges = Vec::new();
        for (lno, line) in lines {
            let nums: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::input(format!("line {lno}: bad vertex {s:?}")))
            };
            match nums.as_slice() {
                [u, v] => edges.push((parse(u)?, parse(v)?)),
                _ => {
                    return Err(Error::input(format!(
                        "line {lno}: expected `u v`, found {line:?}"
                    )))
                }
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Writes the edge-list text format with sorted `u < v` pairs.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

pub(crate) fn rooted_degrees_with(g: &Graph, dist: &[Option<usize>], y: usize) -> RootedDegrees {
    let mut rd = RootedDegrees {
        in_deg: 0,
        sph_deg: 0,
        out_deg: 0,
    };
    let Some(dy) = dist[y] else {
        rd.sph_deg = g.degree(y);
        return rd;
    };
    for z in g.neighbors(y) {
        // adjacent vertices differ in distance by at most one
        match dist[z] {
            Some(dz) if dz + 1 == dy => rd.in_deg += 1,
            Some(dz) if dz == dy + 1 => rd.out_deg += 1,
            _ => rd.sph_deg += 1,
        }
    }
    rd
}
