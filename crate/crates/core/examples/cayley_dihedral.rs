//! Dihedral Cayley graphs: the two sharp ones from the classification and
//! a sweep over all 4-element symmetric generating sets of `D_12` and
//! `D_14`, reporting which give connected graphs sharp at every vertex.
//!
//! ```text
//! cargo run --release --example cayley_dihedral
//! ```

use std::collections::BTreeSet;

use quartic_sharp::canon::canonical_form;
use quartic_sharp::catalog::classify_graph;
use quartic_sharp::named::{cayley_dihedral, DihedralElement};
use quartic_sharp::NamedGraph;

fn main() -> quartic_sharp::Result<()> {
    for order in [12, 14] {
        let n = order / 2;
        let elements: Vec<DihedralElement> = (1..order).map(|i| DihedralElement::from_index(i, n)).collect();
        let mut sharp = BTreeSet::new();
        let mut sets = 0;
        // symmetric sets of size 4: unions of involutions and inverse pairs
        for mask in 0u32..1 << elements.len() {
            if mask.count_ones() != 4 {
                continue;
            }
            let gens: Vec<DihedralElement> =
                (0..elements.len()).filter(|b| mask >> b & 1 == 1).map(|b| elements[b]).collect();
            let Ok(g) = cayley_dihedral(order, &gens) else { continue };
            sets += 1;
            if !g.is_connected() {
                continue;
            }
            if let Ok(rec) = classify_graph("cayley", &g) {
                if rec.sharp_everywhere {
                    let name: Vec<String> = gens.iter().map(|e| e.to_string()).collect();
                    if sharp.insert(canonical_form(&g)) {
                        println!("D{order} {{{}}}: sharp everywhere, K = {:.3}", name.join(", "), rec.curvature);
                    }
                }
            }
        }
        let named = if order == 12 { NamedGraph::Dihedral12 } else { NamedGraph::Dihedral14 };
        println!(
            "D{order}: {sets} symmetric generating sets, {} sharp class(es); contains {named}: {}\n",
            sharp.len(),
            sharp.contains(&canonical_form(&named.build()))
        );
    }
    Ok(())
}
