// SPDX-License-Identifier: Apache-2.0

//! Constructive synthesis of simple periodic circuits.
//!
//! - even `p`: copy `x1` to `y1` and lift the circuit for `p/2` one wire up;
//! - `p = 2^k + 1`: copy stage, then a `k`-gate Toffoli cascade on `y2..y(k+1)`;
//! - `p = 2^k - 1`: a `(k-1)`-gate cascade ending on `y(k-1)`, fanned out to `yk`;
//! - remaining odd `p <= 31`: the bundled circuits;
//! - anything else: exact search, when a budget is given.

use crate::analysis::{ceil_log2, classify};
use crate::bundled::{Database, MAX_BUNDLED};
use crate::circuit::{Circuit, Control, Gate, Wire};
use crate::error::{Error, Result};
use crate::search::{min_toffoli_synth, SearchBudget, SearchOutcome};

fn x(i: usize) -> Control {
    Control::positive(Wire::input(i))
}

fn not_x(i: usize) -> Control {
    Control::inverted(Wire::input(i))
}

fn y(j: usize) -> Control {
    Control::positive(Wire::output(j))
}

fn not_y(j: usize) -> Control {
    Control::inverted(Wire::output(j))
}

fn out(j: usize) -> Wire {
    Wire::output(j)
}

/// The period-2 base case: `cnot x1 y1` on one wire pair.
pub fn synth_two() -> Circuit {
    Circuit::from_gates(1, 1, vec![Gate::cnot(x(1), out(1))])
}

/// Lift a monoperiodic circuit of period `p/2` to period `p`.
pub fn synth_even(p: u64, inner: &Circuit) -> Result<Circuit> {
    if p < 4 || !p.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "synth_even needs an even period >= 4, got {p} (period 2 is the base case)"
        )));
    }
    let half = p / 2;
    let width = ceil_log2(half);
    if inner.n() != width || inner.m() != width {
        return Err(Error::InvalidArgument(format!(
            "inner circuit for period {half} must have {width} input and output wires"
        )));
    }
    let report = classify(&inner.truth_table()?);
    if !report.monoperiodic || report.fundamental_period != half {
        return Err(Error::InvalidArgument(format!(
            "inner circuit is not monoperiodic with period {half} (got {report:?})"
        )));
    }
    let mut gates = Vec::with_capacity(inner.len() + 1);
    gates.push(Gate::cnot(x(1), out(1)));
    gates.extend(inner.gates().iter().map(|g| g.shifted(1)));
    Ok(Circuit::from_gates(width + 1, width + 1, gates))
}

/// Circuit for `p = 2^k + 1` on `k + 1` wire pairs: `N_T = k`, `N_CN = k + 1`.
pub fn synth_pow2_plus1(k: u32) -> Result<Circuit> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "k must be >= 1 (period 2 is the even base case)".into(),
        ));
    }
    if k >= 23 {
        return Err(Error::InvalidArgument(format!(
            "k={k} exceeds the table limit"
        )));
    }
    let k = k as usize;
    let mut c = Circuit::new(k + 1, k + 1);
    for i in 1..=k {
        c.push(Gate::cnot(x(i), out(i)));
    }
    c.push(Gate::cnot(x(k + 1), out(1)));
    c.push(Gate::toffoli(x(k + 1), y(1), out(2)));
    for j in 2..=k {
        c.push(Gate::toffoli(not_x(j), y(j), out(j + 1)));
    }
    Ok(c)
}

/// Circuit for `p = 2^k - 1` on `k` wire pairs: `N_T = k - 1`, `N_CN = k + 1`.
pub fn synth_pow2_minus1(k: u32) -> Result<Circuit> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be >= 2, got {k}")));
    }
    if k > 24 {
        return Err(Error::InvalidArgument(format!(
            "k={k} exceeds the table limit"
        )));
    }
    let k = k as usize;
    let mut c = Circuit::new(k, k);
    for i in 1..=k - 2 {
        c.push(Gate::cnot(x(i), out(i)));
    }
    c.push(Gate::toffoli(x(k), x(k - 1), out(1)));
    for j in 1..=k - 2 {
        c.push(Gate::toffoli(x(j), not_y(j), out(j + 1)));
    }
    c.push(Gate::cnot(y(k - 1), out(k)));
    c.push(Gate::cnot(x(k - 1), out(k - 1)));
    c.push(Gate::cnot(x(k), out(k)));
    Ok(c)
}

/// `k` with `p = 2^k + 1`, `k >= 1`.
pub fn pow2_plus1_exponent(p: u64) -> Option<u32> {
    let q = p.checked_sub(1)?;
    (q >= 2 && q.is_power_of_two()).then(|| q.trailing_zeros())
}

/// `k` with `p = 2^k - 1`, `k >= 2`.
pub fn pow2_minus1_exponent(p: u64) -> Option<u32> {
    let q = p.checked_add(1)?;
    (q >= 4 && q.is_power_of_two()).then(|| q.trailing_zeros())
}

/// Which construction [`synth`] uses for a period.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Base,
    EvenLift,
    Pow2Plus1(u32),
    Pow2Minus1(u32),
    Bundled,
}

pub fn construction_for(p: u64) -> Option<Construction> {
    match p {
        0 | 1 => None,
        2 => Some(Construction::Base),
        _ if p.is_multiple_of(2) => Some(Construction::EvenLift),
        _ => {
            // p = 3 belongs to both families at their smallest k; the bundled
            // circuit is used there so even lifts of 3 keep its CNOT layout.
            if let Some(k) = pow2_plus1_exponent(p).filter(|&k| k >= 2) {
                Some(Construction::Pow2Plus1(k))
            } else if let Some(k) = pow2_minus1_exponent(p).filter(|&k| k >= 3) {
                Some(Construction::Pow2Minus1(k))
            } else if p <= MAX_BUNDLED {
                Some(Construction::Bundled)
            } else {
                None
            }
        }
    }
}

pub fn synth(p: u64) -> Result<Circuit> {
    synth_with(p, Database::embedded(), None)
}

/// Dispatcher. Odd periods outside every family and missing from `db` fail
/// unless `budget` is given, in which case the exact search is run.
pub fn synth_with(p: u64, db: &Database, budget: Option<&SearchBudget>) -> Result<Circuit> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!(
            "period must be >= 2, got {p}"
        )));
    }
    match construction_for(p) {
        Some(Construction::Base) => Ok(synth_two()),
        Some(Construction::EvenLift) => {
            let inner = synth_with(p / 2, db, budget)?;
            synth_even(p, &inner)
        }
        Some(Construction::Pow2Plus1(k)) => synth_pow2_plus1(k),
        Some(Construction::Pow2Minus1(k)) => synth_pow2_minus1(k),
        Some(Construction::Bundled) => match (db.circuit(p), budget) {
            (Ok(c), _) => Ok(c.clone()),
            (Err(_), Some(b)) => search(p, b),
            (Err(e), None) => Err(e),
        },
        None => match budget {
            None => Err(Error::UnsupportedPeriod { p }),
            Some(b) => search(p, b),
        },
    }
}

fn search(p: u64, budget: &SearchBudget) -> Result<Circuit> {
    match min_toffoli_synth(p, budget)? {
        SearchOutcome::Found { circuit, .. } => Ok(circuit),
        SearchOutcome::Exhausted { .. } => Err(Error::BudgetExhausted(format!(
            "no circuit for p={p} with N_T <= {}",
            budget.max_toffoli
        ))),
        SearchOutcome::BudgetExhausted { reason, .. } => Err(Error::BudgetExhausted(reason)),
    }
}
