// SPDX-License-Identifier: Apache-2.0

//! Print the truth table of a bundled circuit, msb-first.
//!
//!     cargo run --example truth_tables -- [p] [--json]

use periodic_circuits::bundled::bundled_circuit;

fn main() -> periodic_circuits::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p = args.iter().find_map(|a| a.parse().ok()).unwrap_or(5u64);
    let table = bundled_circuit(p)?.truth_table()?;
    if args.iter().any(|a| a == "--json") {
        println!("{}", table.to_json());
    } else {
        println!("S{p}: x | y");
        for row in table.rows() {
            println!("{row}");
        }
    }
    Ok(())
}
