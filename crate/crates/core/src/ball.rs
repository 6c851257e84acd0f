//! Incomplete 2-balls: the local structure around a vertex that fully
//! determines its curvature.
//!
//! A ball around a centre of degree `d` is stored as the adjacency among the
//! sphere `S1 = {v1..vd}` (upper-triangle order `a12, a13, .., a(d-1)d`) and,
//! for every vertex of `S2`, the set of its `S1` neighbours. Edges inside
//! `S2` are never stored.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest centre degree a ball can have (patterns are `u32` masks).
pub const MAX_BALL_DEGREE: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BallJson", into = "BallJson")]
pub struct IncompleteTwoBall {
    degree: usize,
    s1_adj: Vec<bool>,
    /// Bit `i` set means the `S2` vertex is adjacent to `v(i+1)`.
    s1s2: Vec<u32>,
}

/// Wire form: `{"s1":[0,1,0,0,1,0],"s1s2":[[1,3],[1,3],[2,4],[2],[4]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BallJson {
    pub s1: Vec<u8>,
    pub s1s2: Vec<Vec<usize>>,
}

impl TryFrom<BallJson> for IncompleteTwoBall {
    type Error = Error;

    fn try_from(j: BallJson) -> Result<Self> {
        let subsets: Vec<&[usize]> = j.s1s2.iter().map(Vec::as_slice).collect();
        IncompleteTwoBall::from_lists(&j.s1, &subsets)
    }
}

impl From<IncompleteTwoBall> for BallJson {
    fn from(b: IncompleteTwoBall) -> Self {
        BallJson {
            s1: b.s1_adj.iter().map(|&a| a as u8).collect(),
            s1s2: b.s1s2.iter().map(|&m| mask_to_list(m)).collect(),
        }
    }
}

fn pair_count(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `i < j`, 0-based, in upper-triangle order.
fn pair_index(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < d);
    i * (2 * d - i - 1) / 2 + (j - i - 1)
}

pub(crate) fn mask_to_list(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Lexicographic order of subsets written as ascending element lists.
pub(crate) fn subset_lex_cmp(mut a: u32, mut b: u32) -> Ordering {
    while a != 0 && b != 0 {
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x.cmp(&y);
        }
        a &= a - 1;
        b &= b - 1;
    }
    (a != 0).cmp(&(b != 0))
}

fn permute_mask(mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= 1 << perm[b];
    }
    out
}

impl IncompleteTwoBall {
    /// Builds a ball from the list encoding. The centre degree is inferred
    /// from the length of `s1` (`d(d-1)/2`; an empty list means degree 1).
    pub fn from_lists(s1: &[u8], s1s2: &[&[usize]]) -> Result<Self> {
        let degree = (1..=MAX_BALL_DEGREE)
            .find(|&d| pair_count(d) == s1.len())
            .ok_or_else(|| {
                Error::input(format!(
                    "s1 has length {}, which is not d(d-1)/2 for any degree d <= {MAX_BALL_DEGREE}",
                    s1.len()
                ))
            })?;
        let s1_adj = s1
            .iter()
            .map(|&a| match a {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(Error::input(format!("s1 entries must be 0 or 1, found {a}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut masks = Vec::with_capacity(s1s2.len());
        for subset in s1s2 {
            if subset.is_empty() {
                return Err(Error::input("S2 patterns must be nonempty"));
            }
            let mut mask = 0u32;
            let mut prev = 0;
            for &i in subset.iter() {
                if i == 0 || i > degree {
                    return Err(Error::input(format!(
                        "pattern element {i} outside 1..{degree}"
                    )));
                }
                if i <= prev {
                    return Err(Error::input(format!(
                        "pattern {subset:?} is not strictly ascending"
                    )));
                }
                prev = i;
                mask |= 1 << (i - 1);
            }
            masks.push(mask);
        }
        Ok(IncompleteTwoBall {
            degree,
            s1_adj,
            s1s2: masks,
        })
    }

    pub(crate) fn from_parts(degree: usize, s1_adj: Vec<bool>, s1s2: Vec<u32>) -> Self {
        debug_assert_eq!(s1_adj.len(), pair_count(degree));
        IncompleteTwoBall {
            degree,
            s1_adj,
            s1s2,
        }
    }

    /// Quartic ball from `[a12,a13,a14,a23,a24,a34]` and patterns over `1..=4`.
    pub fn quartic(s1: [u8; 6], s1s2: &[&[usize]]) -> Result<Self> {
        let b = Self::from_lists(&s1, s1s2)?;
        b.ensure_quartic()?;
        Ok(b)
    }

    /// Degree of the centre, `|S1|`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn s1_adjacency(&self) -> &[bool] {
        &self.s1_adj
    }

    /// `S2` patterns as bit masks over `S1` (bit `i` is `v(i+1)`).
    pub fn s2_patterns(&self) -> &[u32] {
        &self.s1s2
    }

    pub fn s2_len(&self) -> usize {
        self.s1s2.len()
    }

    /// Adjacency of `v(i+1)` and `v(j+1)`, 0-based.
    pub fn s1_adjacent(&self, i: usize, j: usize) -> bool {
        match i.cmp(&j) {
            Ordering::Less => self.s1_adj[pair_index(self.degree, i, j)],
            Ordering::Greater => self.s1_adj[pair_index(self.degree, j, i)],
            Ordering::Equal => false,
        }
    }

    /// Spherical degree of `v(i+1)`: its neighbours inside `S1`.
    pub fn spherical_degree(&self, i: usize) -> usize {
        (0..self.degree).filter(|&j| self.s1_adjacent(i, j)).count()
    }

    /// Out-degree of `v(i+1)`: its neighbours in `S2`.
    pub fn out_degree(&self, i: usize) -> usize {
        self.s1s2.iter().filter(|&&m| m >> i & 1 == 1).count()
    }

    /// Total degree of `v(i+1)`, counting the centre.
    pub fn s1_vertex_degree(&self, i: usize) -> usize {
        1 + self.spherical_degree(i) + self.out_degree(i)
    }

    /// Triangles through the centre, which equals the number of `S1` edges.
    pub fn triangles_at_center(&self) -> usize {
        self.s1_adj.iter().filter(|&&a| a).count()
    }

    /// True when every `S1` vertex has the centre's degree and no `S2`
    /// vertex sees more than that many `S1` vertices.
    pub fn is_regular_compatible(&self) -> bool {
        let d = self.degree;
        (0..d).all(|i| self.s1_vertex_degree(i) == d)
            && self.s1s2.iter().all(|m| m.count_ones() as usize <= d)
    }

    pub fn is_quartic(&self) -> bool {
        self.degree == 4 && self.is_regular_compatible()
    }

    pub fn ensure_quartic(&self) -> Result<()> {
        if self.degree != 4 {
            return Err(Error::domain(format!(
                "ball centre has degree {}, expected 4",
                self.degree
            )));
        }
        if let Some(i) = (0..4).find(|&i| self.s1_vertex_degree(i) != 4) {
            return Err(Error::domain(format!(
                "v{} has degree {}, expected 4",
                i + 1,
                self.s1_vertex_degree(i)
            )));
        }
        Ok(())
    }

    /// Every `S1` vertex has the same spherical degree. For quartic balls
    /// this is the same as `S1`-out regularity.
    pub fn is_constant_spherical(&self) -> bool {
        (1..self.degree).all(|i| self.spherical_degree(i) == self.spherical_degree(0))
    }

    /// All `S1` vertices share one out-degree.
    pub fn is_s1_out_regular(&self) -> bool {
        (1..self.degree).all(|i| self.out_degree(i) == self.out_degree(0))
    }

    /// Incomplete 2-ball of `g` around `x`. `S1` and `S2` are numbered in
    /// ascending vertex-id order.
    pub fn extract(g: &Graph, x: usize) -> Result<Self> {
        let s1: Vec<usize> = g.neighbors(x).collect();
        let d = s1.len();
        if d > MAX_BALL_DEGREE {
            return Err(Error::domain(format!(
                "centre degree {d} exceeds {MAX_BALL_DEGREE}"
            )));
        }
        let mut s1_adj = vec![false; pair_count(d)];
        for i in 0..d {
            for j in i + 1..d {
                s1_adj[pair_index(d, i, j)] = g.has_edge(s1[i], s1[j]);
            }
        }
        let s2 = g.sphere(x, 2);
        let s1s2 = s2
            .iter()
            .map(|&z| {
                s1.iter()
                    .enumerate()
                    .filter(|&(_, &y)| g.has_edge(y, z))
                    .fold(0u32, |m, (i, _)| m | 1 << i)
            })
            .collect();
        Ok(IncompleteTwoBall {
            degree: d,
            s1_adj,
            s1s2,
        })
    }

    /// Like [`extract`](Self::extract) but rejects non-quartic balls.
    pub fn extract_quartic(g: &Graph, x: usize) -> Result<Self> {
        let b = Self::extract(g, x)?;
        b.ensure_quartic()?;
        Ok(b)
    }

    /// The ball as a graph: `0` is the centre, `1..=d` is `S1`, and the
    /// `S2` vertices follow in pattern order.
    pub fn to_graph(&self) -> Graph {
        let d = self.degree;
        let mut edges: Vec<(usize, usize)> = (1..=d).map(|i| (0, i)).collect();
        for i in 0..d {
            for j in i + 1..d {
                if self.s1_adjacent(i, j) {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        for (z, &m) in self.s1s2.iter().enumerate() {
            edges.extend(mask_to_list(m).into_iter().map(|i| (i, d + 1 + z)));
        }
        Graph::from_edge_list(1 + d + self.s1s2.len(), &edges).unwrap()
    }

    /// Applies `perm` (0-based, `v(i+1) -> v(perm[i]+1)`) to `S1`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let d = self.degree;
        assert_eq!(perm.len(), d);
        let mut s1_adj = vec![false; pair_count(d)];
        for i in 0..d {
            for j in i + 1..d {
                if self.s1_adjacent(i, j) {
                    let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                    s1_adj[pair_index(d, a, b)] = true;
                }
            }
        }
        let s1s2 = self.s1s2.iter().map(|&m| permute_mask(m, perm)).collect();
        IncompleteTwoBall {
            degree: d,
            s1_adj,
            s1s2,
        }
    }

    /// Representative of the centre-fixing isomorphism class.
    ///
    /// Over all relabelings of `S1`, keep those whose `S1` adjacency list is
    /// lexicographically greatest (this lands on the standard structures of
    /// the published table), sort each candidate's `S2` patterns
    /// lexicographically, and take the least pattern list.
    pub fn canonical_form(&self) -> Self {
        let d = self.degree;
        let mut perm: Vec<usize> = (0..d).collect();
        let mut best: Option<(Vec<bool>, Vec<u32>)> = None;
        let mut visit = |perm: &[usize]| {
            let cand = self.permuted(perm);
            if let Some((s1, _)) = &best {
                match cand.s1_adj.cmp(s1) {
                    Ordering::Less => return,
                    Ordering::Greater => best = None,
                    Ordering::Equal => {}
                }
            }
            let mut pats = cand.s1s2;
            pats.sort_by(|&a, &b| subset_lex_cmp(a, b));
            match &best {
                Some((_, bp)) if cmp_patterns(&pats, bp) != Ordering::Less => {}
                _ => best = Some((cand.s1_adj, pats)),
            }
        };
        for_each_permutation(&mut perm, &mut visit);
        let (s1_adj, s1s2) = best.expect("at least one permutation");
        IncompleteTwoBall {
            degree: d,
            s1_adj,
            s1s2,
        }
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.s1s2.len() == other.s1s2.len()
            && self.canonical_form() == other.canonical_form()
    }

    /// 1-based row of the standard `S1` structure, for canonical quartic balls.
    pub fn structure_index(&self) -> Option<usize> {
        if self.degree != 4 {
            return None;
        }
        S1_STRUCTURES
            .iter()
            .position(|s| s.iter().zip(&self.s1_adj).all(|(&a, &b)| (a == 1) == b))
            .map(|i| i + 1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ball serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

fn cmp_patterns(a: &[u32], b: &[u32]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        match subset_lex_cmp(x, y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Heap's algorithm.
fn for_each_permutation(perm: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    let n = perm.len();
    let mut c = vec![0usize; n];
    visit(perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

impl fmt::Display for IncompleteTwoBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s1: Vec<String> = self.s1_adj.iter().map(|&a| (a as u8).to_string()).collect();
        let s2: Vec<String> = self
            .s1s2
            .iter()
            .map(|&m| mask_to_list(m).iter().map(|i| i.to_string()).collect::<String>())
            .collect();
        write!(f, "[{}], [{}]", s1.join(","), s2.join(" "))
    }
}

/// The eleven standard `S1` structures, in table order.
pub const S1_STRUCTURES: [[u8; 6]; 11] = [
    [0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 1],
    [1, 1, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0],
    [1, 1, 0, 1, 0, 0],
    [1, 1, 0, 0, 1, 0],
    [1, 1, 0, 0, 1, 1],
    [1, 1, 1, 1, 0, 0],
    [1, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 1],
];

/// Every quartic incomplete 2-ball up to isomorphism, canonical, sorted by
/// structure index and then by canonical form.
pub fn enumerate_quartic() -> Vec<IncompleteTwoBall> {
    S1_STRUCTURES
        .par_iter()
        .map(|s1| balls_with_structure(*s1).into_iter().collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Canonical quartic balls whose `S1` adjacency is `s1`.
pub fn balls_with_structure(s1: [u8; 6]) -> BTreeSet<IncompleteTwoBall> {
    let base = IncompleteTwoBall::from_lists(&s1, &[]).expect("six entries");
    let need: Vec<usize> = (0..4).map(|i| 3 - base.spherical_degree(i)).collect();
    let mut out = BTreeSet::new();
    let mut current = Vec::new();
    extend_patterns(&base, 15, need, &mut current, &mut out);
    out
}

/// Chooses patterns in nonincreasing mask order until every `S1` vertex has
/// exactly `need[i]` further neighbours.
fn extend_patterns(
    base: &IncompleteTwoBall,
    max_mask: u32,
    need: Vec<usize>,
    current: &mut Vec<u32>,
    out: &mut BTreeSet<IncompleteTwoBall>,
) {
    if need.iter().all(|&k| k == 0) {
        let ball = IncompleteTwoBall {
            s1s2: current.clone(),
            ..base.clone()
        };
        out.insert(ball.canonical_form());
        return;
    }
    for mask in (1..=max_mask).rev() {
        if mask_to_list(mask).iter().all(|&i| need[i - 1] > 0) {
            let mut rest = need.clone();
            for i in mask_to_list(mask) {
                rest[i - 1] -= 1;
            }
            current.push(mask);
            extend_patterns(base, mask, rest, current, out);
            current.pop();
        }
    }
}

/// Identifier of one of the 22 sharp quartic balls, written `group.index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BallTypeId {
    pub group: u8,
    pub index: u8,
}

impl BallTypeId {
    pub const fn new(group: u8, index: u8) -> Self {
        BallTypeId { group, index }
    }

    /// Triangles on every edge at a centre of this type.
    pub fn edge_triangles(self) -> usize {
        4 - self.group as usize
    }

    /// The curvature all balls of this group share, `2 + #triangles/4`.
    pub fn curvature(self) -> f64 {
        2.0 + (2 * self.edge_triangles()) as f64 / 4.0
    }

    pub fn all() -> impl Iterator<Item = BallTypeId> {
        SHARP_TABLE.iter().map(|row| row.0)
    }
}

impl fmt::Display for BallTypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.group, self.index)
    }
}

impl FromStr for BallTypeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::input(format!("unknown ball type {s:?}"));
        let (g, i) = s.split_once('.').ok_or_else(bad)?;
        let id = BallTypeId::new(g.parse().map_err(|_| bad())?, i.parse().map_err(|_| bad())?);
        BallTypeId::all().any(|t| t == id).then_some(id).ok_or_else(bad)
    }
}

impl TryFrom<String> for BallTypeId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BallTypeId> for String {
    fn from(id: BallTypeId) -> String {
        id.to_string()
    }
}

type SharpRow = (BallTypeId, [u8; 6], &'static [&'static [usize]]);

/// The published list of sharp quartic balls.
pub const SHARP_TABLE: [SharpRow; 22] = [
    (BallTypeId::new(1, 1), [1, 1, 1, 1, 1, 1], &[]),
    (BallTypeId::new(2, 1), [1, 1, 0, 0, 1, 1], &[&[1, 2, 3, 4]]),
    (BallTypeId::new(2, 2), [1, 1, 0, 0, 1, 1], &[&[1, 2, 3], &[4]]),
    (BallTypeId::new(2, 3), [1, 1, 0, 0, 1, 1], &[&[1, 2], &[3], &[4]]),
    (BallTypeId::new(2, 4), [1, 1, 0, 0, 1, 1], &[&[1, 4], &[2], &[3]]),
    (BallTypeId::new(2, 5), [1, 1, 0, 0, 1, 1], &[&[1], &[2], &[3], &[4]]),
    (BallTypeId::new(2, 6), [1, 1, 0, 0, 1, 1], &[&[1, 2], &[3, 4]]),
    (BallTypeId::new(2, 7), [1, 1, 0, 0, 1, 1], &[&[1, 4], &[2, 3]]),
    (BallTypeId::new(3, 1), [1, 0, 0, 0, 0, 1], &[&[1, 2, 3, 4], &[1, 3], &[2, 4]]),
    (BallTypeId::new(3, 2), [1, 0, 0, 0, 0, 1], &[&[1, 3], &[1, 3], &[2, 4], &[2, 4]]),
    (BallTypeId::new(3, 3), [1, 0, 0, 0, 0, 1], &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]),
    (BallTypeId::new(3, 4), [1, 0, 0, 0, 0, 1], &[&[1, 2, 3, 4], &[1, 2, 3, 4]]),
    (
        BallTypeId::new(4, 1),
        [0; 6],
        &[&[1, 2, 3, 4], &[1, 2, 3, 4], &[1], &[2], &[3], &[4]],
    ),
    (BallTypeId::new(4, 2), [0; 6], &[&[1, 2, 3, 4], &[1, 2, 3, 4], &[1, 2], &[3], &[4]]),
    (BallTypeId::new(4, 3), [0; 6], &[&[1, 2, 3, 4], &[1, 2, 3, 4], &[1, 2, 3], &[4]]),
    (BallTypeId::new(4, 4), [0; 6], &[&[1, 2, 3, 4], &[1, 2], &[1, 3], &[2, 4], &[3, 4]]),
    (
        BallTypeId::new(4, 5),
        [0; 6],
        &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]],
    ),
    (BallTypeId::new(4, 6), [0; 6], &[&[1, 2, 3], &[1, 2, 3], &[1, 4], &[2, 4], &[3, 4]]),
    (BallTypeId::new(4, 7), [0; 6], &[&[1, 2, 3, 4], &[1, 2, 3, 4], &[1, 2], &[3, 4]]),
    (BallTypeId::new(4, 8), [0; 6], &[&[1, 2, 3, 4], &[1, 2, 3], &[1, 2, 4], &[3, 4]]),
    (BallTypeId::new(4, 9), [0; 6], &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]),
    (BallTypeId::new(4, 10), [0; 6], &[&[1, 2, 3, 4], &[1, 2, 3, 4], &[1, 2, 3, 4]]),
];

/// A sharp ball type with its canonical representative.
#[derive(Clone, Debug)]
pub struct SharpBall {
    pub id: BallTypeId,
    pub ball: IncompleteTwoBall,
}

/// Canonical forms of the published sharp balls, in table order.
pub fn sharp_catalog() -> &'static [SharpBall] {
    static CATALOG: OnceLock<Vec<SharpBall>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        SHARP_TABLE
            .iter()
            .map(|&(id, s1, s1s2)| SharpBall {
                id,
                ball: IncompleteTwoBall::quartic(s1, s1s2)
                    .expect("published sharp ball is quartic")
                    .canonical_form(),
            })
            .collect()
    })
}

impl BallTypeId {
    /// Canonical ball of this type.
    pub fn ball(self) -> &'static IncompleteTwoBall {
        &sharp_catalog()
            .iter()
            .find(|s| s.id == self)
            .expect("id comes from the table")
            .ball
    }

    /// Type of a canonical ball, if it is one of the published sharp balls.
    pub fn lookup(canonical: &IncompleteTwoBall) -> Option<BallTypeId> {
        sharp_catalog()
            .iter()
            .find(|s| &s.ball == canonical)
            .map(|s| s.id)
    }
}

/// Table identifier of `b` when its centre is curvature sharp.
pub fn classify_sharp(b: &IncompleteTwoBall) -> Option<BallTypeId> {
    if !b.is_quartic() {
        return None;
    }
    let sharp = crate::curvature::is_curvature_sharp(b, crate::curvature::SHARP_TOL).ok()?;
    if !sharp {
        return None;
    }
    BallTypeId::lookup(&b.canonical_form())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::named::{complete, complete_bipartite};

    pub(crate) fn worked_example_graph() -> Graph {
        // v0..v9 as in the worked example
        Graph::from_edge_list(
            10,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (2, 4),
                (1, 3),
                (1, 5),
                (3, 5),
                (1, 6),
                (3, 6),
                (2, 7),
                (4, 7),
                (2, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn pair_indexing() {
        let order: Vec<_> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| pair_index(4, i, j)))
            .collect();
        assert_eq!(order, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn extract_worked_example() {
        let b = IncompleteTwoBall::extract(&worked_example_graph(), 0).unwrap();
        assert_eq!(b.to_json(), r#"{"s1":[0,1,0,0,1,0],"s1s2":[[1,3],[1,3],[2,4],[2],[4]]}"#);
        // v1..v4 have degree 4, the ball is quartic
        assert!(b.is_quartic());
    }

    #[test]
    fn extract_k5_and_k44() {
        let b = IncompleteTwoBall::extract_quartic(&complete(5), 2).unwrap();
        assert_eq!(b.to_json(), r#"{"s1":[1,1,1,1,1,1],"s1s2":[]}"#);
        let b = IncompleteTwoBall::extract_quartic(&complete_bipartite(4, 4), 0).unwrap();
        assert_eq!(
            b.to_json(),
            r#"{"s1":[0,0,0,0,0,0],"s1s2":[[1,2,3,4],[1,2,3,4],[1,2,3,4]]}"#
        );
    }

    #[test]
    fn extract_quartic_rejects_other_degrees() {
        let g = complete(4);
        assert!(IncompleteTwoBall::extract(&g, 0).is_ok());
        assert!(matches!(
            IncompleteTwoBall::extract_quartic(&g, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn json_validation() {
        assert!(IncompleteTwoBall::from_json(r#"{"s1":[0,1,0],"s1s2":[[1,3]]}"#).is_ok());
        assert!(IncompleteTwoBall::from_json(r#"{"s1":[0,1],"s1s2":[]}"#).is_err());
        assert!(IncompleteTwoBall::from_json(r#"{"s1":[0,2,0],"s1s2":[]}"#).is_err());
        assert!(IncompleteTwoBall::from_json(r#"{"s1":[0,0,0],"s1s2":[[]]}"#).is_err());
        assert!(IncompleteTwoBall::from_json(r#"{"s1":[0,0,0],"s1s2":[[3,1]]}"#).is_err());
        assert!(IncompleteTwoBall::from_json(r#"{"s1":[0,0,0],"s1s2":[[4]]}"#).is_err());
    }

    #[test]
    fn subset_order_is_lexicographic_on_lists() {
        // [1,2,3,4] < [1,3] < [2] < [2,4]
        let l = |v: &[usize]| v.iter().fold(0u32, |m, &i| m | 1 << (i - 1));
        assert_eq!(subset_lex_cmp(l(&[1, 2, 3, 4]), l(&[1, 3])), Ordering::Less);
        assert_eq!(subset_lex_cmp(l(&[1, 3]), l(&[2])), Ordering::Less);
        assert_eq!(subset_lex_cmp(l(&[2]), l(&[2, 4])), Ordering::Less);
        assert_eq!(subset_lex_cmp(l(&[2, 4]), l(&[2, 4])), Ordering::Equal);
    }

    #[test]
    fn canonical_form_is_idempotent_and_relabeling_invariant() {
        let b = IncompleteTwoBall::extract(&worked_example_graph(), 0).unwrap();
        let c = b.canonical_form();
        assert_eq!(c.canonical_form(), c);
        let swapped = b.permuted(&[1, 0, 2, 3]);
        assert_eq!(swapped.canonical_form(), c);
        let mut perm = vec![0, 1, 2, 3];
        let mut all = Vec::new();
        for_each_permutation(&mut perm, &mut |p| all.push(p.to_vec()));
        assert_eq!(all.len(), 24);
        for p in all {
            assert_eq!(b.permuted(&p).canonical_form(), c);
        }
        // two disjoint S1 edges
        assert_eq!(c.structure_index(), Some(3));
    }

    #[test]
    fn canonical_form_of_table_structures_is_standard() {
        for s in S1_STRUCTURES {
            let b = IncompleteTwoBall::from_lists(&s, &[]).unwrap();
            let c = b.canonical_form();
            assert_eq!(c.s1_adjacency(), b.s1_adjacency(), "{s:?}");
        }
    }

    #[test]
    fn enumeration_counts_per_structure() {
        let counts: Vec<usize> = S1_STRUCTURES
            .iter()
            .map(|&s| balls_with_structure(s).len())
            .collect();
        assert_eq!(counts, vec![93, 120, 40, 55, 8, 10, 24, 7, 5, 2, 1]);
        let all = enumerate_quartic();
        assert_eq!(all.len(), 365);
        for b in &all {
            assert!(b.is_quartic());
            assert_eq!(&b.canonical_form(), b);
            for i in 0..4 {
                assert_eq!(b.out_degree(i), 3 - b.spherical_degree(i));
            }
        }
    }

    #[test]
    fn out_regular_structures() {
        let regular: Vec<usize> = S1_STRUCTURES
            .iter()
            .enumerate()
            .filter(|(_, s)| IncompleteTwoBall::from_lists(&s[..], &[]).unwrap().is_constant_spherical())
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(regular, vec![1, 3, 8, 11]);
    }

    #[test]
    fn sharp_table_is_distinct_and_quartic() {
        let cat = sharp_catalog();
        assert_eq!(cat.len(), 22);
        let distinct: BTreeSet<_> = cat.iter().map(|s| s.ball.clone()).collect();
        assert_eq!(distinct.len(), 22);
        assert_eq!("4.10".parse::<BallTypeId>().unwrap(), BallTypeId::new(4, 10));
        assert!("4.11".parse::<BallTypeId>().is_err());
        assert!("x".parse::<BallTypeId>().is_err());
    }

    #[test]
    fn classify_table_examples() {
        let b = IncompleteTwoBall::quartic([1, 1, 0, 0, 1, 1], &[&[1, 2, 3, 4]]).unwrap();
        assert_eq!(classify_sharp(&b), Some(BallTypeId::new(2, 1)));
        let b = IncompleteTwoBall::quartic(
            [0; 6],
            &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]],
        )
        .unwrap();
        assert_eq!(classify_sharp(&b), Some(BallTypeId::new(4, 5)));
        let example = IncompleteTwoBall::extract(&worked_example_graph(), 0).unwrap();
        assert_eq!(classify_sharp(&example.canonical_form()), None);
    }
}
