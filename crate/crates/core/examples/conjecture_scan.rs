// SPDX-License-Identifier: Apache-2.0

//! Type A/B prediction against known circuits, plus the linear-map scan.
//!
//!     cargo run --release --example conjecture_scan -- [max_bits]

use periodic_circuits::cli::render_scan;
use periodic_circuits::search::{conjecture_scan, linear_period_scan};

fn main() -> periodic_circuits::Result<()> {
    let bits = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let report = conjecture_scan(bits)?;
    print!("{}", render_scan(&report.rows));
    for c in &report.census {
        println!(
            "n={}: {} odd periods, {} type B (expected {})",
            c.n, c.odd_periods, c.type_b, c.expected_type_b
        );
    }
    println!("consistent: {}", report.consistent());

    for n in 2..=4 {
        let lin = linear_period_scan(n)?;
        println!(
            "linear maps n={n}: {} matrices, odd-period monoperiodic {:?}",
            lin.matrices, lin.odd_monoperiodic
        );
    }
    Ok(())
}
