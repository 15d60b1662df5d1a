// SPDX-License-Identifier: Apache-2.0

//! Render a circuit as OpenQASM, JSON and an ASCII diagram.
//!
//!     cargo run --example export -- [p]

use periodic_circuits::export::{to_ascii, to_json, to_qasm};
use periodic_circuits::synth;

fn main() -> periodic_circuits::Result<()> {
    let p = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let c = synth(p)?;
    print!("{}", to_ascii(&c));
    println!();
    print!("{}", to_qasm(&c));
    println!();
    println!("{}", to_json(&c));
    Ok(())
}
