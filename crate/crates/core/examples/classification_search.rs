//! Completes every sharp seed ball into all quartic graphs that are sharp at
//! every vertex, and compares the union with the eight classified graphs.
//!
//! ```text
//! cargo run --release --example classification_search [-- --no-rigidity-prune]
//! ```

use std::collections::BTreeSet;
use std::time::Instant;

use quartic_sharp::catalog::published_extensions;
use quartic_sharp::search::{search_from_seed, SearchConfig};
use quartic_sharp::{BallTypeId, NamedGraph};

fn main() -> quartic_sharp::Result<()> {
    let config = SearchConfig {
        rigidity_prune: !std::env::args().any(|a| a == "--no-rigidity-prune"),
        ..SearchConfig::default()
    };
    let mut union = BTreeSet::new();
    let start = Instant::now();
    for seed in BallTypeId::all() {
        let t = Instant::now();
        let outcome = search_from_seed(seed, &config)?;
        let found: Vec<String> = outcome
            .identify()
            .iter()
            .map(|n| n.map_or("unnamed".to_string(), |n| n.to_string()))
            .collect();
        let expected: Vec<String> = published_extensions(seed).iter().map(|g| g.to_string()).collect();
        println!(
            "{seed:>5}  found {{{}}}  expected {{{}}}  nodes {:>9}  truncated {}  {:.2?}",
            found.join(", "),
            expected.join(", "),
            outcome.nodes_explored,
            outcome.truncated,
            t.elapsed()
        );
        union.extend(outcome.canonical_forms);
    }
    println!(
        "{} isomorphism classes in total ({} classified graphs), {:.2?}",
        union.len(),
        NamedGraph::ALL.len(),
        start.elapsed()
    );
    Ok(())
}
