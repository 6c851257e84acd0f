//! Cross-checks the floating-point curvature solver against exact rational
//! bisection on every quartic incomplete 2-ball.
//!
//! ```text
//! cargo run --release --example exact_oracle
//! ```

use quartic_sharp::ball::enumerate_quartic;
use quartic_sharp::curvature::{k_infinity, k_infinity_exact, DEFAULT_TOL};
use rayon::prelude::*;

/// Exact intervals are narrower than `1 / DENOM_BOUND`.
const DENOM_BOUND: u64 = 1 << 34;

fn main() -> quartic_sharp::Result<()> {
    let balls = enumerate_quartic();
    let diffs = balls
        .par_iter()
        .map(|b| {
            let float = k_infinity(b, DEFAULT_TOL)?.k_infinity;
            let exact = k_infinity_exact(b, DENOM_BOUND)?;
            Ok(((float - exact.midpoint()).abs(), b.clone(), float, exact.midpoint()))
        })
        .collect::<quartic_sharp::Result<Vec<_>>>()?;
    let (worst, ball, float, exact) = diffs
        .iter()
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .expect("365 balls");
    println!("{} balls compared", diffs.len());
    println!("largest |float - exact| = {worst:.3e}");
    println!("  at {ball}: float {float:.12}, exact {exact:.12}");
    Ok(())
}
