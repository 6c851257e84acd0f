//! The eight connected quartic graphs that are curvature sharp everywhere,
//! plus the dihedral Cayley graph builder used for two of them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedGraph {
    K5,
    Octahedron,
    K3xK3,
    K44,
    Crown10,
    Dihedral12,
    Dihedral14,
    Q4,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 8] = [
        NamedGraph::K5,
        NamedGraph::Octahedron,
        NamedGraph::K3xK3,
        NamedGraph::K44,
        NamedGraph::Crown10,
        NamedGraph::Dihedral12,
        NamedGraph::Dihedral14,
        NamedGraph::Q4,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::K5 => "K5",
            NamedGraph::Octahedron => "O",
            NamedGraph::K3xK3 => "K3xK3",
            NamedGraph::K44 => "K44",
            NamedGraph::Crown10 => "C10",
            NamedGraph::Dihedral12 => "D12",
            NamedGraph::Dihedral14 => "D14",
            NamedGraph::Q4 => "Q4",
        }
    }

    pub fn build(self) -> Graph {
        match self {
            NamedGraph::K5 => complete(5),
            NamedGraph::Octahedron => octahedron(),
            NamedGraph::K3xK3 => rook_3x3(),
            NamedGraph::K44 => complete_bipartite(4, 4),
            NamedGraph::Crown10 => crown(5),
            NamedGraph::Dihedral12 => cayley_dihedral(
                12,
                &[
                    DihedralElement::rotation(3),
                    DihedralElement::reflection(0),
                    DihedralElement::reflection(2),
                    DihedralElement::reflection(4),
                ],
            )
            .expect("valid generating set"),
            NamedGraph::Dihedral14 => cayley_dihedral(
                14,
                &[
                    DihedralElement::reflection(0),
                    DihedralElement::reflection(1),
                    DihedralElement::reflection(4),
                    DihedralElement::reflection(6),
                ],
            )
            .expect("valid generating set"),
            NamedGraph::Q4 => hypercube(4),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::input(format!(
                    "unknown graph {s:?}; expected one of K5, O, K3xK3, K44, C10, D12, D14, Q4"
                ))
            })
    }
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(a + b, &edges).unwrap()
}

/// `K_{2,2,2}`: vertices `2i` and `2i+1` are the antipodal pairs.
pub fn octahedron() -> Graph {
    let edges: Vec<_> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| u / 2 != v / 2)
        .collect();
    Graph::from_edge_list(6, &edges).unwrap()
}

/// Cartesian product `K3 x K3`; vertex `3a + b` is the pair `(a, b)`.
pub fn rook_3x3() -> Graph {
    let edges: Vec<_> = (0..9)
        .flat_map(|u| (u + 1..9).map(move |v| (u, v)))
        .filter(|&(u, v)| u / 3 == v / 3 || u % 3 == v % 3)
        .collect();
    Graph::from_edge_list(9, &edges).unwrap()
}

/// Crown graph on `2k` vertices: `a_i = i`, `b_j = k + j`, `a_i ~ b_j` iff `i != j`.
pub fn crown(k: usize) -> Graph {
    let edges: Vec<_> = (0..k)
        .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, k + j)))
        .collect();
    Graph::from_edge_list(2 * k, &edges).unwrap()
}

pub fn hypercube(dim: usize) -> Graph {
    let n = 1usize << dim;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..dim).map(move |b| (u, u ^ (1 << b))))
        .filter(|(u, v)| u < v)
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Element `s^f r^i` of the dihedral group of order `2n`, with `s r s = r^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    pub is_reflection: bool,
    pub power: usize,
}

impl DihedralElement {
    pub fn rotation(power: usize) -> Self {
        DihedralElement {
            is_reflection: false,
            power,
        }
    }

    pub fn reflection(power: usize) -> Self {
        DihedralElement {
            is_reflection: true,
            power,
        }
    }

    fn reduce(self, n: usize) -> Self {
        DihedralElement {
            power: self.power % n,
            ..self
        }
    }

    /// Group product in `D_{2n}`.
    pub fn mul(self, other: Self, n: usize) -> Self {
        let power = if other.is_reflection {
            // r^a s = s r^-a
            (other.power + n - self.power % n) % n
        } else {
            (self.power + other.power) % n
        };
        DihedralElement {
            is_reflection: self.is_reflection ^ other.is_reflection,
            power,
        }
    }

    pub fn inverse(self, n: usize) -> Self {
        if self.is_reflection {
            self.reduce(n)
        } else {
            DihedralElement::rotation((n - self.power % n) % n)
        }
    }

    /// Dense index: rotations `r^i` map to `i`, reflections `s r^i` to `n + i`.
    pub fn index(self, n: usize) -> usize {
        if self.is_reflection {
            n + self.power % n
        } else {
            self.power % n
        }
    }

    pub fn from_index(idx: usize, n: usize) -> Self {
        if idx < n {
            DihedralElement::rotation(idx)
        } else {
            DihedralElement::reflection(idx - n)
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.is_reflection, self.power) {
            (false, 0) => f.write_str("Id"),
            (false, 1) => f.write_str("r"),
            (false, p) => write!(f, "r^{p}"),
            (true, 0) => f.write_str("s"),
            (true, 1) => f.write_str("sr"),
            (true, p) => write!(f, "sr^{p}"),
        }
    }
}

/// Right Cayley graph of the dihedral group of order `order_2n`: `x ~ x g`
/// for each generator `g`. Vertex ids follow [`DihedralElement::index`].
pub fn cayley_dihedral(order_2n: usize, generators: &[DihedralElement]) -> Result<Graph> {
    if order_2n < 6 || order_2n % 2 != 0 {
        return Err(Error::input(format!(
            "dihedral group order must be even and at least 6, got {order_2n}"
        )));
    }
    let n = order_2n / 2;
    let gens: Vec<DihedralElement> = generators.iter().map(|g| g.reduce(n)).collect();
    for &g in &gens {
        if g == DihedralElement::rotation(0) {
            return Err(Error::input("identity cannot be a generator"));
        }
        if !gens.contains(&g.inverse(n)) {
            return Err(Error::input(format!(
                "generating set is not closed under inverses: {g} lacks {}",
                g.inverse(n)
            )));
        }
    }
    let mut edges = Vec::new();
    for idx in 0..order_2n {
        let x = DihedralElement::from_index(idx, n);
        for &g in &gens {
            edges.push((idx, x.mul(g, n).index(n)));
        }
    }
    Graph::from_edge_list(order_2n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_named_graphs_are_connected_and_quartic() {
        for g in NamedGraph::ALL {
            let graph = g.build();
            assert!(graph.is_connected(), "{g}");
            assert_eq!(graph.regular_degree(), Some(4), "{g}");
        }
    }

    #[test]
    fn vertex_counts_and_diameters() {
        let expect = [
            (NamedGraph::K5, 5, 1),
            (NamedGraph::Octahedron, 6, 2),
            (NamedGraph::K3xK3, 9, 2),
            (NamedGraph::K44, 8, 2),
            (NamedGraph::Crown10, 10, 3),
            (NamedGraph::Dihedral12, 12, 3),
            (NamedGraph::Dihedral14, 14, 3),
            (NamedGraph::Q4, 16, 4),
        ];
        for (g, n, diam) in expect {
            let graph = g.build();
            assert_eq!(graph.n(), n, "{g}");
            assert_eq!(graph.diameter().unwrap(), diam, "{g}");
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("k3xk3".parse::<NamedGraph>().unwrap(), NamedGraph::K3xK3);
        assert_eq!("O".parse::<NamedGraph>().unwrap(), NamedGraph::Octahedron);
        assert!(matches!("K6".parse::<NamedGraph>(), Err(Error::Input(_))));
    }

    #[test]
    fn triangle_counts_of_small_named_graphs() {
        let o = octahedron();
        for (u, v) in o.edges() {
            assert_eq!(o.triangles_at_edge(u, v).unwrap(), 2);
        }
        let k5 = complete(5);
        assert_eq!(k5.triangles_at_vertex(0), 6);
    }

    #[test]
    fn dihedral_multiplication() {
        let n = 6;
        let s = DihedralElement::reflection(0);
        let r = DihedralElement::rotation(1);
        // s r s = r^-1
        assert_eq!(s.mul(r, n).mul(s, n), DihedralElement::rotation(5));
        // s * s r^2 = r^2
        assert_eq!(s.mul(DihedralElement::reflection(2), n), DihedralElement::rotation(2));
        for idx in 0..2 * n {
            let x = DihedralElement::from_index(idx, n);
            assert_eq!(x.mul(x.inverse(n), n), DihedralElement::rotation(0));
        }
    }

    #[test]
    fn six_cycle_from_two_reflections() {
        let g = cayley_dihedral(6, &[DihedralElement::reflection(0), DihedralElement::reflection(1)])
            .unwrap();
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.is_connected());
        assert_eq!(g.num_edges(), 6);
        assert_eq!(g.diameter().unwrap(), 3);
    }

    #[test]
    fn d12_identity_neighbourhood() {
        let g = NamedGraph::Dihedral12.build();
        let n = 6;
        let id = DihedralElement::rotation(0).index(n);
        let mut nb: Vec<String> = g
            .neighbors(id)
            .map(|v| DihedralElement::from_index(v, n).to_string())
            .collect();
        nb.sort();
        assert_eq!(nb, vec!["r^3", "s", "sr^2", "sr^4"]);
    }

    #[test]
    fn cayley_rejects_bad_generators() {
        assert!(cayley_dihedral(12, &[DihedralElement::rotation(1)]).is_err());
        assert!(cayley_dihedral(12, &[DihedralElement::rotation(0)]).is_err());
        assert!(cayley_dihedral(4, &[DihedralElement::reflection(0)]).is_err());
        assert!(cayley_dihedral(
            12,
            &[DihedralElement::rotation(1), DihedralElement::rotation(5)]
        )
        .is_ok());
    }
}
