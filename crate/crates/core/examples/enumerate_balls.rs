//! Enumerates all quartic incomplete 2-balls up to isomorphism and counts
//! them, with the nonnegatively curved ones, per `S1` structure.
//!
//! ```text
//! cargo run --release --example enumerate_balls
//! ```

use std::time::Instant;

use quartic_sharp::catalog::{structure_table, PUBLISHED_BALL_COUNTS, PUBLISHED_NONNEG_COUNTS};

fn main() -> quartic_sharp::Result<()> {
    let start = Instant::now();
    let rows = structure_table()?;
    println!("row  S1 adjacency    balls  K>=0   published");
    for (r, (&b, &nn)) in rows.iter().zip(PUBLISHED_BALL_COUNTS.iter().zip(&PUBLISHED_NONNEG_COUNTS)) {
        println!("{:>3}  {:?}  {:>5}  {:>4}   {b:>4} {nn:>4}", r.index, r.s1, r.balls, r.nonnegative);
    }
    let total: usize = rows.iter().map(|r| r.balls).sum();
    let nonneg: usize = rows.iter().map(|r| r.nonnegative).sum();
    println!("total             {total:>5}  {nonneg:>4}   ({:.2?})", start.elapsed());
    Ok(())
}
