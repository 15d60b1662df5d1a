// SPDX-License-Identifier: Apache-2.0

//! Period classification and relabeling equivalence on small tables.

use periodic_circuits::analysis::{classify, equivalent_up_to_relabeling, relabeling};
use periodic_circuits::bundled::bundled_circuit;
use periodic_circuits::FunctionTable;

fn main() -> periodic_circuits::Result<()> {
    let mod3 = FunctionTable::from_fn(3, 2, |x| x % 3)?;
    println!("x mod 3 on 3 bits: {:?}", classify(&mod3));

    let mod3_narrow = FunctionTable::from_fn(2, 2, |x| x % 3)?;
    println!("x mod 3 on 2 bits: {:?}", classify(&mod3_narrow));

    let s3 = bundled_circuit(3)?.truth_table()?;
    println!("S3 values {:?}: {:?}", s3.values(), classify(&s3));
    println!(
        "relabeling x mod 3 -> S3: {:?}",
        relabeling(&mod3_narrow, &s3)?
    );
    println!(
        "equivalent: {}",
        equivalent_up_to_relabeling(&mod3_narrow, &s3)?
    );

    let parity = FunctionTable::from_fn(2, 1, |x| (x ^ (x >> 1)) & 1)?;
    println!("parity on 2 bits: {:?}", classify(&parity));
    Ok(())
}
