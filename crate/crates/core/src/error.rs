// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::circuit::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input {x} out of range for {n}-bit input register")]
    InputOutOfRange { x: u64, n: usize },

    #[error("invalid circuit: {}", format_violations(.0))]
    InvalidCircuit(Vec<Violation>),

    #[error("truth table of width n+m={width} exceeds the limit of {limit} bits")]
    TableTooWide { width: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("width mismatch: ({a_n}, {a_m}) vs ({b_n}, {b_m})")]
    WidthMismatch {
        a_n: usize,
        a_m: usize,
        b_n: usize,
        b_m: usize,
    },

    #[error("invalid function table: {0}")]
    InvalidTable(String),

    #[error("period {p} out of range 1..={max}")]
    PeriodOutOfRange { p: u64, max: u64 },

    #[error(
        "unsupported period {p}: supported are even p (recursive lift), p = 2^k + 1, \
         p = 2^k - 1 and the bundled odd periods 3..=31; pass a search budget to search"
    )]
    UnsupportedPeriod { p: u64 },

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("output value {y} has no preimage")]
    EmptyPreimage { y: u64 },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("bundled data: {0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
