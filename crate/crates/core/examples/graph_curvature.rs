//! Curvature at every vertex of a graph, read from an edge-list file or, by
//! default, of a small non-sharp quartic circulant.
//!
//! ```text
//! cargo run --release --example graph_curvature [-- path/to/edges.txt]
//! ```
//!
//! Edge lists start with `n <count>` followed by one `u v` pair per line.

use quartic_sharp::curvature::{curvature_at, DEFAULT_TOL};
use quartic_sharp::Graph;

fn main() -> quartic_sharp::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(path) => Graph::parse_edge_list(&std::fs::read_to_string(path)?)?,
        None => {
            // circulant C8(1,2): quartic, with triangles on only some edges
            let edges: Vec<_> = (0..8).flat_map(|i| [(i, (i + 1) % 8), (i, (i + 2) % 8)]).collect();
            Graph::from_edge_list(8, &edges)?
        }
    };
    println!("vertex  degree  triangles  K_inf         bound   sharp");
    for x in 0..g.n() {
        let r = curvature_at(&g, x, DEFAULT_TOL)?;
        println!(
            "{x:>6}  {:>6}  {:>9}  {:>12.9}  {:>6.3}  {}",
            r.degree, r.triangles_vertex, r.k_infinity, r.upper_bound, r.sharp
        );
    }
    Ok(())
}
