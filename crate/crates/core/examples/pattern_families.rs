// SPDX-License-Identifier: Apache-2.0

//! The 2^k + 1 and 2^k - 1 families and the Toffoli cascade flip counts.

use periodic_circuits::synthesis::{synth_pow2_minus1, synth_pow2_plus1};
use periodic_circuits::{classify, text, Circuit};

fn show(label: &str, c: &Circuit) -> periodic_circuits::Result<()> {
    let r = classify(&c.truth_table()?);
    println!(
        "{label}: period {} monoperiodic={} {} flips {:?}",
        r.fundamental_period,
        r.monoperiodic,
        c.cost(),
        c.flip_counts()?
    );
    Ok(())
}

fn main() -> periodic_circuits::Result<()> {
    for k in 1..=6 {
        show(&format!("2^{k}+1"), &synth_pow2_plus1(k)?)?;
    }
    for k in 2..=6 {
        show(&format!("2^{k}-1"), &synth_pow2_minus1(k)?)?;
    }
    println!();
    print!("{}", text::render(&synth_pow2_plus1(3)?));
    Ok(())
}
