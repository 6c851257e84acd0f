//! Lists the quartic incomplete 2-balls whose centre is curvature sharp,
//! grouped by the number of triangles on each edge at the centre.
//!
//! ```text
//! cargo run --release --example sharp_catalog
//! ```

use quartic_sharp::ball::{classify_sharp, enumerate_quartic};
use quartic_sharp::catalog::{published_extensions, sharp_table};

fn main() -> quartic_sharp::Result<()> {
    let found = enumerate_quartic().into_iter().filter_map(|b| classify_sharp(&b)).count();
    println!("{found} of the enumerated balls are sharp\n");
    println!("type  #tri(e)  K_inf  ball                                    extends to");
    for row in sharp_table()? {
        let ext: Vec<String> = published_extensions(row.id).iter().map(|g| g.to_string()).collect();
        println!(
            "{:<5} {:>7}  {:>5.2}  {:<40} {}",
            row.id.to_string(),
            row.edge_triangles,
            row.k_infinity,
            row.ball.to_string(),
            if ext.is_empty() { "-".to_string() } else { ext.join(", ") }
        );
    }
    Ok(())
}
