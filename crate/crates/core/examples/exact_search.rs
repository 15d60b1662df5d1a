// SPDX-License-Identifier: Apache-2.0

//! Exact minimum-Toffoli search, and lower-bound certificates for small p.
//!
//!     cargo run --release --example exact_search -- [p] [max_toffoli]

use std::time::Instant;

use periodic_circuits::search::{
    certify_lower_bound, min_toffoli_synth, SearchBudget, SearchOutcome,
};
use periodic_circuits::text;

fn main() -> periodic_circuits::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let p = args.first().copied().unwrap_or(5);
    let budget = SearchBudget::default();

    let start = Instant::now();
    match min_toffoli_synth(p, &budget)? {
        SearchOutcome::Found {
            circuit,
            stats,
            lower_strata_exhausted,
        } => {
            println!(
                "p={p}: {} after {} states ({:.2?}), minimal: {lower_strata_exhausted}",
                circuit.cost(),
                stats.states,
                start.elapsed()
            );
            print!("{}", text::render(&circuit));
        }
        other => println!("p={p}: {} ({:?})", other.certificate(), other.stats()),
    }

    let below = args.get(1).map(|&t| t as usize).unwrap_or(1);
    let start = Instant::now();
    let outcome = certify_lower_bound(p, below, &budget)?;
    println!(
        "N_T <= {below} for p={p}: {} after {} states ({:.2?})",
        outcome.certificate(),
        outcome.stats().states,
        start.elapsed()
    );
    Ok(())
}
