// SPDX-License-Identifier: Apache-2.0

//! Fourier peak-mass check for every bundled circuit.

use periodic_circuits::bundled::Database;
use periodic_circuits::spectral::{
    confusable_periods, dft, postselect_input_state, verify_periodicity, DEFAULT_PEAK_THRESHOLD,
};

fn main() -> periodic_circuits::Result<()> {
    let db = Database::embedded();
    let s3 = db.circuit(3)?;
    let spectrum = dft(&postselect_input_state(s3, 0)?);
    println!("S3 given y=0:");
    print!("{}", spectrum.ascii_bars(40));

    for (p, c) in db.iter() {
        let v = verify_periodicity(c, p, DEFAULT_PEAK_THRESHOLD)?;
        println!(
            "S{p:<2} passed={} min mass {:.4} also passes for {:?}",
            v.passed,
            v.min_mass().unwrap_or(0.0),
            confusable_periods(c, p, DEFAULT_PEAK_THRESHOLD)?
        );
    }
    Ok(())
}
