// SPDX-License-Identifier: Apache-2.0

//! Period classification of function tables.
//!
//! A table has period `p` when `f(x) = f(x - p)` for every `x` in
//! `[p, 2^n)`. It is *monoperiodic* when it is additionally injective on
//! `[0, p)` and `n = m = ceil(log2 p)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::FunctionTable;

/// `ceil(log2 p)` for `p >= 1`.
pub fn ceil_log2(p: u64) -> usize {
    assert!(p >= 1, "ceil_log2 of zero");
    (64 - (p - 1).leading_zeros()) as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub fundamental_period: u64,
    pub injective_within_period: bool,
    pub monoperiodic: bool,
}

fn has_period(values: &[u64], p: usize) -> bool {
    values[p..].iter().zip(values).all(|(a, b)| a == b)
}

/// Smallest `p` satisfying the shift condition, or `2^n` if none below it does.
pub fn fundamental_period(table: &FunctionTable) -> u64 {
    let v = table.values();
    (1..v.len()).find(|&p| has_period(v, p)).unwrap_or(v.len()) as u64
}

pub fn is_injective_within_period(table: &FunctionTable, p: u64) -> Result<bool> {
    let len = table.len() as u64;
    if p == 0 || p > len {
        return Err(Error::PeriodOutOfRange { p, max: len });
    }
    let mut seen: Vec<u64> = table.values()[..p as usize].to_vec();
    seen.sort_unstable();
    Ok(seen.windows(2).all(|w| w[0] != w[1]))
}

pub fn classify(table: &FunctionTable) -> PeriodReport {
    let p = fundamental_period(table);
    let injective = is_injective_within_period(table, p).expect("period is within the domain");
    let monoperiodic = p >= 2 && injective && table.n() == ceil_log2(p) && table.m() == table.n();
    PeriodReport {
        fundamental_period: p,
        injective_within_period: injective,
        monoperiodic,
    }
}

/// `true` iff the table is monoperiodic with exactly period `p`.
pub fn is_monoperiodic_with(table: &FunctionTable, p: u64) -> bool {
    let r = classify(table);
    r.monoperiodic && r.fundamental_period == p
}

/// The injective output relabeling `t` with `b[x] = t[a[x]]`, defined on the
/// image of `a`, if one exists.
pub fn relabeling(a: &FunctionTable, b: &FunctionTable) -> Result<Option<BTreeMap<u64, u64>>> {
    if a.n() != b.n() || a.m() != b.m() {
        return Err(Error::WidthMismatch {
            a_n: a.n(),
            a_m: a.m(),
            b_n: b.n(),
            b_m: b.m(),
        });
    }
    let mut forward = BTreeMap::new();
    let mut backward = BTreeMap::new();
    for (&ya, &yb) in a.values().iter().zip(b.values()) {
        if *forward.entry(ya).or_insert(yb) != yb || *backward.entry(yb).or_insert(ya) != ya {
            return Ok(None);
        }
    }
    Ok(Some(forward))
}

pub fn equivalent_up_to_relabeling(a: &FunctionTable, b: &FunctionTable) -> Result<bool> {
    Ok(relabeling(a, b)?.is_some())
}
