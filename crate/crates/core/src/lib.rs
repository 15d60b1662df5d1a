// SPDX-License-Identifier: Apache-2.0

//! Reversible CNOT/Toffoli circuits for simple periodic functions.
//!
//! A circuit on `n` input wires `x1..xn` and `m` output wires `y1..ym`
//! (`x1`, `y1` least significant) computes `F(x)` by running on `|x>|0>`.
//! The crate evaluates and validates such circuits, classifies their truth
//! tables by period, synthesizes circuits for a given period, runs an exact
//! minimum-Toffoli search for small widths and checks periodicity spectrally.

pub mod analysis;
pub mod bundled;
pub mod circuit;
pub mod cli;
pub mod error;
pub mod export;
pub mod search;
pub mod spectral;
pub mod synthesis;
pub mod table;
pub mod text;

pub use analysis::{classify, equivalent_up_to_relabeling, fundamental_period, PeriodReport};
pub use bundled::Database;
pub use circuit::{Circuit, Control, CostReport, Gate, Polarity, Wire, WireKind};
pub use error::{Error, Result};
pub use search::{min_toffoli_synth, SearchBudget, SearchOutcome};
pub use spectral::verify_periodicity;
pub use synthesis::synth;
pub use table::FunctionTable;
