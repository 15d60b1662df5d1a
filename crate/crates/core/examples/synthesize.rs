// SPDX-License-Identifier: Apache-2.0

//! Synthesize circuits for a range of periods and print their costs.
//!
//!     cargo run --example synthesize -- [max_p]

use periodic_circuits::synthesis::{construction_for, synth};
use periodic_circuits::{classify, text, Error};

fn main() -> periodic_circuits::Result<()> {
    let max_p = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(40u64);
    for p in 2..=max_p {
        match synth(p) {
            Ok(c) => {
                let report = classify(&c.truth_table()?);
                println!(
                    "p={p:<3} {:<14} {}  wires {}x{}  monoperiodic={}",
                    format!("{:?}", construction_for(p).expect("dispatched")),
                    c.cost(),
                    c.n(),
                    c.m(),
                    report.monoperiodic
                );
            }
            Err(Error::UnsupportedPeriod { p: core }) => {
                println!("p={p:<3} unsupported (odd part {core})")
            }
            Err(e) => return Err(e),
        }
    }
    println!();
    print!("{}", text::render(&synth(12)?));
    Ok(())
}
