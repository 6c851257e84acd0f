//! Canonical labelling of whole graphs by individualisation-refinement.
//!
//! Starting from the unit partition, colour refinement splits cells by
//! neighbour-colour counts until the partition is equitable. If a cell is not
//! a singleton, each of its vertices is individualised in turn and the
//! process recurses. Every discrete leaf gives a relabelling, and the
//! lexicographically least relabelled edge list is the canonical form. No
//! automorphism pruning is done, so the leaf count is on the order of
//! `|Aut(G)|` times the branching that refinement fails to resolve. That is
//! cheap for the sparse vertex-transitive graphs handled here.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Isomorphism-invariant representative: the sorted edge list after
/// canonical relabelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edge_list(self.n, &self.edges).expect("edges are in range")
    }
}

/// Refines `colors` to the coarsest equitable partition finer than it.
/// Colours are renumbered `0..k` by the rank of each vertex's signature,
/// which keeps the result invariant under relabelling.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.n();
    let mut classes = count_classes(colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut rank = BTreeMap::new();
        for s in &sigs {
            rank.entry(s).or_insert(0);
        }
        for (i, r) in rank.values_mut().enumerate() {
            *r = i;
        }
        let next: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
        let k = rank.len();
        colors.copy_from_slice(&next);
        if k == classes {
            return;
        }
        classes = k;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// First smallest cell with more than one vertex, if the partition is not
/// discrete. Returns the cell colour.
fn target_cell(colors: &[usize]) -> Option<usize> {
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in colors {
        *sizes.entry(c).or_default() += 1;
    }
    sizes
        .iter()
        .filter(|&(_, &s)| s > 1)
        .min_by_key(|&(&c, &s)| (s, c))
        .map(|(&c, _)| c)
}

fn relabelled_edges(g: &Graph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    e.sort_unstable();
    e
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<(Vec<(usize, usize)>, Vec<usize>)>) {
    match target_cell(&colors) {
        None => {
            // discrete: colour is the new label
            let edges = relabelled_edges(g, &colors);
            if best.as_ref().is_none_or(|(b, _)| edges < *b) {
                *best = Some((edges, colors));
            }
        }
        Some(cell) => {
            for v in (0..g.n()).filter(|&v| colors[v] == cell) {
                // v gets a colour just below the rest of its cell
                let mut c: Vec<usize> = colors.iter().map(|&x| 2 * x + 1).collect();
                c[v] = 2 * cell;
                refine(g, &mut c);
                search(g, c, best);
            }
        }
    }
}

/// Canonical form together with the permutation (old id to new id) that
/// produces it.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let mut colors = vec![0; g.n()];
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    let (edges, perm) = best.unwrap_or_default();
    (CanonicalForm { n: g.n(), edges }, perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.num_edges() == b.num_edges() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraph;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    /// Reference: minimum relabelled edge list over all `n!` permutations.
    fn brute_force(g: &Graph) -> Vec<(usize, usize)> {
        fn rec(g: &Graph, perm: &mut Vec<usize>, used: &mut [bool], best: &mut Option<Vec<(usize, usize)>>) {
            if perm.len() == g.n() {
                let e = relabelled_edges(g, perm);
                if best.as_ref().is_none_or(|b| e < *b) {
                    *best = Some(e);
                }
                return;
            }
            for i in 0..g.n() {
                if !used[i] {
                    used[i] = true;
                    perm.push(i);
                    rec(g, perm, used, best);
                    perm.pop();
                    used[i] = false;
                }
            }
        }
        let mut best = None;
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
        best.unwrap_or_default()
    }

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn isomorphism_classes_match_brute_force() {
        // two graphs share a canonical form exactly when brute force agrees
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let graphs: Vec<Graph> = (0..60)
            .map(|_| {
                let n = rng.gen_range(1..=6);
                random_graph(&mut rng, n, 0.5)
            })
            .collect();
        let ours: Vec<_> = graphs.iter().map(canonical_form).collect();
        let reference: Vec<_> = graphs.iter().map(|g| (g.n(), brute_force(g))).collect();
        for i in 0..graphs.len() {
            for j in 0..graphs.len() {
                assert_eq!(ours[i] == ours[j], reference[i] == reference[j], "{i} {j}");
            }
        }
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for g in NamedGraph::ALL.map(NamedGraph::build) {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
        }
        for _ in 0..30 {
            let g = random_graph(&mut rng, 9, 0.4);
            let mut perm: Vec<usize> = (0..9).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
        }
    }

    #[test]
    fn labelling_reproduces_form() {
        let g = NamedGraph::Dihedral12.build();
        let (form, perm) = canonical_labeling(&g);
        assert_eq!(g.relabel(&perm), form.to_graph());
    }

    #[test]
    fn named_graphs_are_pairwise_non_isomorphic() {
        let forms: Vec<_> = NamedGraph::ALL.iter().map(|g| canonical_form(&g.build())).collect();
        for i in 0..forms.len() {
            for j in 0..i {
                assert_ne!(forms[i], forms[j]);
            }
        }
    }

    #[test]
    fn empty_graph() {
        assert_eq!(canonical_form(&Graph::empty(0)).n(), 0);
        assert_eq!(canonical_form(&Graph::empty(3)).edges(), &[]);
    }
}
