//! Reproduction of the ball tables and end-to-end verification of the eight
//! quartic graphs that are curvature sharp at every vertex.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::ball::{balls_with_structure, classify_sharp, sharp_catalog, BallTypeId, IncompleteTwoBall, S1_STRUCTURES};
use crate::curvature::{k_infinity, DEFAULT_TOL, SHARP_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named::NamedGraph;

/// Balls with curvature at least `-NONNEG_TOL` count as nonnegatively curved.
pub const NONNEG_TOL: f64 = 1e-7;

/// Published per-structure ball counts, in [`S1_STRUCTURES`] order.
pub const PUBLISHED_BALL_COUNTS: [usize; 11] = [93, 120, 40, 55, 8, 10, 24, 7, 5, 2, 1];
/// Published per-structure counts of nonnegatively curved balls.
pub const PUBLISHED_NONNEG_COUNTS: [usize; 11] = [46, 55, 24, 31, 8, 4, 21, 7, 5, 2, 1];

/// One row of the ball census.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureRow {
    /// 1-based structure index.
    pub index: usize,
    pub s1: [u8; 6],
    pub balls: usize,
    pub nonnegative: usize,
}

/// Census of quartic incomplete 2-balls by `S1` structure, computed from
/// scratch (enumeration plus a curvature solve per ball).
pub fn structure_table() -> Result<Vec<StructureRow>> {
    S1_STRUCTURES
        .par_iter()
        .enumerate()
        .map(|(i, &s1)| {
            let balls = balls_with_structure(s1);
            let mut nonnegative = 0;
            for b in &balls {
                if k_infinity(b, DEFAULT_TOL)?.k_infinity >= -NONNEG_TOL {
                    nonnegative += 1;
                }
            }
            Ok(StructureRow {
                index: i + 1,
                s1,
                balls: balls.len(),
                nonnegative,
            })
        })
        .collect()
}

/// One sharp ball with its computed curvature.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SharpRow {
    pub id: BallTypeId,
    pub ball: IncompleteTwoBall,
    pub k_infinity: f64,
    pub edge_triangles: usize,
}

/// The sharp balls in table order, each with a freshly computed curvature.
pub fn sharp_table() -> Result<Vec<SharpRow>> {
    sharp_catalog()
        .iter()
        .map(|s| {
            Ok(SharpRow {
                id: s.id,
                ball: s.ball.clone(),
                k_infinity: k_infinity(&s.ball, DEFAULT_TOL)?.k_infinity,
                edge_triangles: s.id.edge_triangles(),
            })
        })
        .collect()
}

/// Published facts about one of the eight graphs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PublishedGraph {
    pub graph: NamedGraph,
    pub vertex_count: usize,
    pub curvature: f64,
    pub diameter: usize,
    pub ball_type: BallTypeId,
}

/// The classification as published: every connected quartic graph that is
/// curvature sharp at all vertices.
pub const CLASSIFICATION: [PublishedGraph; 8] = [
    published(NamedGraph::K5, 5, 3.5, 1, BallTypeId::new(1, 1)),
    published(NamedGraph::Octahedron, 6, 3.0, 2, BallTypeId::new(2, 1)),
    published(NamedGraph::K3xK3, 9, 2.5, 2, BallTypeId::new(3, 3)),
    published(NamedGraph::K44, 8, 2.0, 2, BallTypeId::new(4, 10)),
    published(NamedGraph::Crown10, 10, 2.0, 3, BallTypeId::new(4, 9)),
    published(NamedGraph::Dihedral12, 12, 2.0, 3, BallTypeId::new(4, 6)),
    published(NamedGraph::Dihedral14, 14, 2.0, 3, BallTypeId::new(4, 5)),
    published(NamedGraph::Q4, 16, 2.0, 4, BallTypeId::new(4, 5)),
];

const fn published(
    graph: NamedGraph,
    vertex_count: usize,
    curvature: f64,
    diameter: usize,
    ball_type: BallTypeId,
) -> PublishedGraph {
    PublishedGraph {
        graph,
        vertex_count,
        curvature,
        diameter,
        ball_type,
    }
}

impl PublishedGraph {
    pub fn of(graph: NamedGraph) -> &'static PublishedGraph {
        CLASSIFICATION
            .iter()
            .find(|p| p.graph == graph)
            .expect("every named graph is classified")
    }
}

/// The graphs each sharp seed type extends to. Types not listed yield none.
pub fn published_extensions(seed: BallTypeId) -> Vec<NamedGraph> {
    CLASSIFICATION
        .iter()
        .filter(|p| p.ball_type == seed)
        .map(|p| p.graph)
        .collect()
}

/// Measured facts about a graph checked against the classification.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationRecord {
    pub graph_name: String,
    pub vertex_count: usize,
    pub curvature: f64,
    pub diam: usize,
    pub sharp_everywhere: bool,
    pub ball_types: BTreeSet<BallTypeId>,
    /// All vertices have the same canonical incomplete 2-ball.
    pub uniform_ball: bool,
}

/// Measures a connected quartic graph vertex by vertex.
pub fn classify_graph(name: &str, g: &Graph) -> Result<ClassificationRecord> {
    let mismatch = |field: &str, expected: String, actual: String| Error::Verification {
        graph: name.to_string(),
        field: field.to_string(),
        expected,
        actual,
    };
    if !g.is_connected() {
        return Err(mismatch("connected", "true".into(), "false".into()));
    }
    if g.regular_degree() != Some(4) {
        return Err(mismatch("regular_degree", "4".into(), format!("{:?}", g.regular_degree())));
    }
    let mut curvatures = Vec::with_capacity(g.n());
    let mut sharp_everywhere = true;
    let mut ball_types = BTreeSet::new();
    let mut canon = BTreeSet::new();
    for x in 0..g.n() {
        let ball = IncompleteTwoBall::extract_quartic(g, x)?;
        let report = k_infinity(&ball, DEFAULT_TOL)?;
        curvatures.push(report.k_infinity);
        sharp_everywhere &= report.sharp;
        if let Some(id) = classify_sharp(&ball) {
            ball_types.insert(id);
        }
        canon.insert(ball.canonical_form());
    }
    let curvature = curvatures[0];
    if let Some(&k) = curvatures.iter().find(|&&k| (k - curvature).abs() > SHARP_TOL) {
        if sharp_everywhere {
            return Err(Error::Inconsistent(format!(
                "{name}: sharp at every vertex but curvature varies ({curvature} vs {k})"
            )));
        }
    }
    Ok(ClassificationRecord {
        graph_name: name.to_string(),
        vertex_count: g.n(),
        curvature,
        diam: g.diameter()?,
        sharp_everywhere,
        ball_types,
        uniform_ball: canon.len() == 1,
    })
}

/// Builds a named graph and checks it against its published entry.
pub fn verify_named(graph: NamedGraph) -> Result<ClassificationRecord> {
    let want = PublishedGraph::of(graph);
    let rec = classify_graph(graph.name(), &graph.build())?;
    let mismatch = |field: &str, expected: String, actual: String| {
        Err(Error::Verification {
            graph: graph.name().to_string(),
            field: field.to_string(),
            expected,
            actual,
        })
    };
    if rec.vertex_count != want.vertex_count {
        return mismatch("vertex_count", want.vertex_count.to_string(), rec.vertex_count.to_string());
    }
    if (rec.curvature - want.curvature).abs() > SHARP_TOL {
        return mismatch("curvature", want.curvature.to_string(), rec.curvature.to_string());
    }
    if rec.diam != want.diameter {
        return mismatch("diameter", want.diameter.to_string(), rec.diam.to_string());
    }
    if !rec.sharp_everywhere {
        return mismatch("sharp_everywhere", "true".into(), "false".into());
    }
    let types: Vec<String> = rec.ball_types.iter().map(|t| t.to_string()).collect();
    if rec.ball_types != BTreeSet::from([want.ball_type]) {
        return mismatch("ball_type", want.ball_type.to_string(), types.join(","));
    }
    if !rec.uniform_ball {
        return mismatch("uniform_ball", "true".into(), "false".into());
    }
    Ok(rec)
}

/// Outcome of comparing a diameter to the curvature diameter bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BonnetMyers {
    pub diameter: usize,
    pub curvature: f64,
    /// `2D / K`.
    pub bound: f64,
    pub holds: bool,
    /// `bound - diameter`.
    pub slack: f64,
    pub equality: bool,
}

/// Checks `diam(G) <= 2D/K` with `K` the minimum vertex curvature.
pub fn check_bonnet_myers(g: &Graph) -> Result<BonnetMyers> {
    let d = g
        .regular_degree()
        .ok_or_else(|| Error::domain("diameter bound needs a regular graph"))?;
    let diameter = g.diameter()?;
    let mut curvature = f64::INFINITY;
    for x in 0..g.n() {
        curvature = curvature.min(k_infinity(&IncompleteTwoBall::extract(g, x)?, DEFAULT_TOL)?.k_infinity);
    }
    if !(curvature > SHARP_TOL) {
        return Err(Error::domain(format!(
            "diameter bound needs positive curvature, minimum is {curvature}"
        )));
    }
    let bound = 2.0 * d as f64 / curvature;
    let slack = bound - diameter as f64;
    Ok(BonnetMyers {
        diameter,
        curvature,
        bound,
        holds: slack >= -SHARP_TOL,
        slack,
        equality: slack.abs() <= 1e-6,
    })
}
