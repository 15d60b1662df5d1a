// SPDX-License-Identifier: Apache-2.0

//! Exact minimal-Toffoli search and the type A/B conjecture scanner.
//!
//! The search is a best-first enumeration of gate sequences ordered by
//! `(Toffoli count, total gates)`. A state is the full table of wire
//! contents over all `2^n` inputs, stored column-wise: one `2^n`-bit column
//! per wire, packed into a `u128` key. Widths are therefore limited to
//! `n <= 4` (output columns only, or all `2n` columns when inputs are
//! writable).

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::{ceil_log2, classify, PeriodReport};
use crate::bundled::{Database, MAX_BUNDLED};
use crate::circuit::{Circuit, Control, CostReport, Gate, Polarity, Wire};
use crate::error::{Error, Result};
use crate::synthesis::{construction_for, synth_with, Construction};
use crate::table::FunctionTable;

/// Widest register the search supports.
pub const MAX_SEARCH_WIDTH: usize = 4;

/// Largest width accepted by [`linear_period_scan`].
pub const MAX_LINEAR_SCAN_WIDTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_toffoli: usize,
    pub max_gates: usize,
    pub max_states: usize,
    pub input_wires_read_only: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_toffoli: 2,
            max_gates: 24,
            max_states: 4_000_000,
            input_wires_read_only: true,
        }
    }
}

impl SearchBudget {
    pub fn with_max_toffoli(mut self, t: usize) -> Self {
        self.max_toffoli = t;
        self
    }

    pub fn with_max_gates(mut self, g: usize) -> Self {
        self.max_gates = g;
        self
    }

    fn check(&self) -> Result<()> {
        if self.max_gates == 0 || self.max_states == 0 {
            return Err(Error::InvalidArgument(
                "search budget bounds must be positive".into(),
            ));
        }
        if self.max_gates > u8::MAX as usize || self.max_toffoli > self.max_gates {
            return Err(Error::InvalidArgument(format!(
                "search budget out of range: max_gates <= 255 and max_toffoli <= max_gates required ({self})"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SearchBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "toffoli={},gates={},states={},inputs={}",
            self.max_toffoli,
            self.max_gates,
            self.max_states,
            if self.input_wires_read_only {
                "ro"
            } else {
                "rw"
            }
        )
    }
}

/// `toffoli=T,gates=G,states=S,inputs=ro|rw`; omitted keys keep defaults.
impl FromStr for SearchBudget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut b = SearchBudget::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("budget item `{part}` lacks `=`")))?;
            let num = || {
                value
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad number in `{part}`")))
            };
            match key {
                "toffoli" => b.max_toffoli = num()?,
                "gates" => b.max_gates = num()?,
                "states" => b.max_states = num()?,
                "inputs" => {
                    b.input_wires_read_only = match value {
                        "ro" => true,
                        "rw" => false,
                        _ => {
                            return Err(Error::InvalidArgument(format!(
                                "inputs must be ro|rw, got `{value}`"
                            )))
                        }
                    }
                }
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown budget key `{key}`"
                    )))
                }
            }
        }
        b.check()?;
        Ok(b)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Distinct states memoized.
    pub states: usize,
    /// States popped and expanded.
    pub expanded: usize,
    /// Deepest `(N_T, gates)` level reached.
    pub frontier: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A Toffoli-minimal circuit within the alphabet. `lower_strata_exhausted`
    /// is true when every state with fewer Toffolis was explored without
    /// hitting the gate bound, i.e. the Toffoli count is certified minimal.
    Found {
        circuit: Circuit,
        stats: SearchStats,
        lower_strata_exhausted: bool,
    },
    /// Every reachable state with `N_T <= max_toffoli` was explored and none
    /// has the target period.
    Exhausted { stats: SearchStats },
    /// A bound cut the search short; nothing is proven.
    BudgetExhausted { reason: String, stats: SearchStats },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Certificate {
        match self {
            SearchOutcome::Found { .. } => Certificate::Found,
            SearchOutcome::Exhausted { .. } => Certificate::Exhausted,
            SearchOutcome::BudgetExhausted { .. } => Certificate::Budget,
        }
    }

    pub fn stats(&self) -> SearchStats {
        match self {
            SearchOutcome::Found { stats, .. }
            | SearchOutcome::Exhausted { stats }
            | SearchOutcome::BudgetExhausted { stats, .. } => *stats,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certificate {
    Found,
    Exhausted,
    Budget,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certificate::Found => "found",
            Certificate::Exhausted => "exhausted",
            Certificate::Budget => "budget",
        })
    }
}

/// One gate of the search alphabet, as wire indices into the column array.
/// Wires `0..n` are `x1..xn`, wires `n..2n` are `y1..yn`.
#[derive(Debug, Clone, Copy)]
struct Move {
    controls: [(usize, bool); 2],
    arity: usize,
    target: usize,
}

struct Alphabet {
    n: usize,
    moves: Vec<Move>,
}

impl Alphabet {
    /// CNOTs (positive control) before Toffolis, wires ascending, positive
    /// polarity before inverted.
    fn new(n: usize, inputs_read_only: bool) -> Self {
        let wires = 2 * n;
        let targets: Vec<usize> = if inputs_read_only {
            (n..wires).collect()
        } else {
            (0..wires).collect()
        };
        let mut moves = Vec::new();
        for c in 0..wires {
            for &t in &targets {
                if t != c {
                    moves.push(Move {
                        controls: [(c, false), (0, false)],
                        arity: 1,
                        target: t,
                    });
                }
            }
        }
        for a in 0..wires {
            for b in a + 1..wires {
                for &t in &targets {
                    if t == a || t == b {
                        continue;
                    }
                    for (ia, ib) in [(false, false), (false, true), (true, false), (true, true)] {
                        moves.push(Move {
                            controls: [(a, ia), (b, ib)],
                            arity: 2,
                            target: t,
                        });
                    }
                }
            }
        }
        Self { n, moves }
    }

    fn wire(&self, w: usize) -> Wire {
        if w < self.n {
            Wire::input(w + 1)
        } else {
            Wire::output(w - self.n + 1)
        }
    }

    fn gate(&self, mv: &Move) -> Gate {
        let ctl = |(w, inv): (usize, bool)| Control {
            wire: self.wire(w),
            polarity: if inv {
                Polarity::Inverted
            } else {
                Polarity::Positive
            },
        };
        let target = self.wire(mv.target);
        if mv.arity == 1 {
            Gate::cnot(ctl(mv.controls[0]), target)
        } else {
            Gate::toffoli(ctl(mv.controls[0]), ctl(mv.controls[1]), target)
        }
    }
}

/// Column-wise wire contents; `cols[w]` bit `x` is wire `w` on input `x`.
#[derive(Clone, Copy)]
struct Columns {
    cols: [u16; 2 * MAX_SEARCH_WIDTH],
}

struct Layout {
    n: usize,
    rows: usize,
    mask: u16,
    inputs_read_only: bool,
    input_cols: [u16; MAX_SEARCH_WIDTH],
}

impl Layout {
    fn new(n: usize, inputs_read_only: bool) -> Self {
        let rows = 1usize << n;
        let mask = if rows == 16 {
            u16::MAX
        } else {
            (1u16 << rows) - 1
        };
        let mut input_cols = [0u16; MAX_SEARCH_WIDTH];
        for (i, col) in input_cols.iter_mut().enumerate().take(n) {
            *col = (0..rows)
                .filter(|x| x >> i & 1 == 1)
                .fold(0u16, |acc, x| acc | 1 << x);
        }
        Self {
            n,
            rows,
            mask,
            inputs_read_only,
            input_cols,
        }
    }

    fn initial(&self) -> Columns {
        let mut cols = [0u16; 2 * MAX_SEARCH_WIDTH];
        cols[..self.n].copy_from_slice(&self.input_cols[..self.n]);
        Columns { cols }
    }

    fn key(&self, s: &Columns) -> u128 {
        let first = if self.inputs_read_only { self.n } else { 0 };
        s.cols[first..2 * self.n]
            .iter()
            .fold(0u128, |acc, &c| (acc << self.rows) | c as u128)
    }

    fn unpack(&self, key: u128) -> Columns {
        let mut s = self.initial();
        let first = if self.inputs_read_only { self.n } else { 0 };
        let mut k = key;
        for w in (first..2 * self.n).rev() {
            s.cols[w] = (k as u16) & self.mask;
            k >>= self.rows;
        }
        s
    }

    /// Returns `None` when the gate fires on no row.
    fn apply(&self, s: &Columns, mv: &Move) -> Option<Columns> {
        let mut fire = self.mask;
        for &(w, inv) in &mv.controls[..mv.arity] {
            fire &= if inv { !s.cols[w] } else { s.cols[w] };
        }
        fire &= self.mask;
        if fire == 0 {
            return None;
        }
        let mut next = *s;
        next.cols[mv.target] ^= fire;
        Some(next)
    }

    fn output_values(&self, s: &Columns) -> [u64; 16] {
        let mut v = [0u64; 16];
        for (x, slot) in v.iter_mut().enumerate().take(self.rows) {
            for j in 0..self.n {
                *slot |= ((s.cols[self.n + j] >> x & 1) as u64) << j;
            }
        }
        v
    }
}

fn is_goal(values: &[u64], p: usize) -> bool {
    // fundamental period must be exactly p: the p-shift matches and no
    // smaller shift does, and the first p values are distinct
    let shift_ok = |q: usize| values[q..].iter().zip(values).all(|(a, b)| a == b);
    if p < values.len() && !shift_ok(p) {
        return false;
    }
    if (1..p).any(shift_ok) {
        return false;
    }
    let mut head = values[..p].to_vec();
    head.sort_unstable();
    head.windows(2).all(|w| w[0] != w[1])
}

#[derive(Clone, Copy)]
struct Node {
    toffoli: u8,
    gates: u8,
    parent: u128,
    mv: u32,
}

/// Toffoli-minimal circuit realizing some monoperiodic function of period
/// `p` on `ceil(log2 p)` wire pairs, within `budget`.
pub fn min_toffoli_synth(p: u64, budget: &SearchBudget) -> Result<SearchOutcome> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!(
            "search needs p >= 2, got {p}"
        )));
    }
    budget.check()?;
    let n = ceil_log2(p);
    if n > MAX_SEARCH_WIDTH {
        return Err(Error::InvalidArgument(format!(
            "search supports at most {MAX_SEARCH_WIDTH} wire pairs; p={p} needs {n}"
        )));
    }
    let p = p as usize;
    let layout = Layout::new(n, budget.input_wires_read_only);
    let alphabet = Alphabet::new(n, budget.input_wires_read_only);

    let max_t = budget.max_toffoli;
    let max_g = budget.max_gates;
    let mut buckets: Vec<Vec<Vec<u128>>> = vec![vec![Vec::new(); max_g + 1]; max_t + 1];
    let mut visited: HashMap<u128, Node> = HashMap::new();
    let mut stats = SearchStats::default();
    // smallest Toffoli stratum in which the gate bound discarded a new state
    let mut truncated_at: Option<usize> = None;

    let start = layout.key(&layout.initial());
    visited.insert(
        start,
        Node {
            toffoli: 0,
            gates: 0,
            parent: start,
            mv: u32::MAX,
        },
    );
    buckets[0][0].push(start);

    for t in 0..=max_t {
        for g in 0..=max_g {
            let level = std::mem::take(&mut buckets[t][g]);
            if !level.is_empty() {
                stats.frontier = (t, g);
            }
            for key in level {
                let node = visited[&key];
                if (node.toffoli as usize, node.gates as usize) != (t, g) {
                    continue;
                }
                let state = layout.unpack(key);
                if is_goal(&layout.output_values(&state)[..layout.rows], p) {
                    let circuit = reconstruct(&alphabet, &visited, key, n);
                    stats.states = visited.len();
                    return Ok(SearchOutcome::Found {
                        circuit,
                        stats,
                        lower_strata_exhausted: truncated_at.is_none_or(|s| s >= t),
                    });
                }
                stats.expanded += 1;
                for (i, mv) in alphabet.moves.iter().enumerate() {
                    let nt = t + (mv.arity - 1);
                    if nt > max_t {
                        continue;
                    }
                    let Some(next) = layout.apply(&state, mv) else {
                        continue;
                    };
                    let nkey = layout.key(&next);
                    let ng = g + 1;
                    let better = |old: &Node| (nt, ng) < (old.toffoli as usize, old.gates as usize);
                    if ng > max_g {
                        if visited.get(&nkey).is_none_or(better) {
                            truncated_at = Some(truncated_at.map_or(nt, |s| s.min(nt)));
                        }
                        continue;
                    }
                    let fresh = Node {
                        toffoli: nt as u8,
                        gates: ng as u8,
                        parent: key,
                        mv: i as u32,
                    };
                    match visited.entry(nkey) {
                        Entry::Vacant(e) => {
                            e.insert(fresh);
                        }
                        Entry::Occupied(mut e) => {
                            if !better(e.get()) {
                                continue;
                            }
                            e.insert(fresh);
                        }
                    }
                    buckets[nt][ng].push(nkey);
                }
                if visited.len() > budget.max_states {
                    stats.states = visited.len();
                    return Ok(SearchOutcome::BudgetExhausted {
                        reason: format!(
                            "state bound {} reached at N_T={t}, gates={g}",
                            budget.max_states
                        ),
                        stats,
                    });
                }
            }
        }
    }
    stats.states = visited.len();
    Ok(match truncated_at {
        Some(s) => SearchOutcome::BudgetExhausted {
            reason: format!("gate bound {max_g} truncated the N_T={s} stratum"),
            stats,
        },
        None => SearchOutcome::Exhausted { stats },
    })
}

fn reconstruct(
    alphabet: &Alphabet,
    visited: &HashMap<u128, Node>,
    mut key: u128,
    n: usize,
) -> Circuit {
    let mut gates = Vec::new();
    loop {
        let node = visited[&key];
        if node.mv == u32::MAX {
            break;
        }
        gates.push(alphabet.gate(&alphabet.moves[node.mv as usize]));
        key = node.parent;
    }
    gates.reverse();
    Circuit::from_gates(n, n, gates)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TypeClass {
    A,
    B,
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeClass::A => "A",
            TypeClass::B => "B",
        })
    }
}

/// Type A/B classification of an odd period by its binary digits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureClass {
    pub p: u64,
    /// Bit length of `p`.
    pub n: usize,
    /// `[p]_2` without its trailing 1.
    pub c_bits: String,
    pub class: TypeClass,
    pub predicted_toffoli: usize,
}

pub fn classify_type(p: u64) -> Result<ConjectureClass> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "type classification needs odd p >= 3, got {p}"
        )));
    }
    let bits = format!("{p:b}");
    let c_bits = bits[..bits.len() - 1].to_string();
    let n = bits.len();
    let (class, predicted_toffoli) = if c_bits.contains("01") {
        (TypeClass::A, n)
    } else {
        (TypeClass::B, n - 1)
    };
    Ok(ConjectureClass {
        p,
        n,
        c_bits,
        class,
        predicted_toffoli,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CircuitSource {
    Bundled,
    Pattern,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    #[serde(flatten)]
    pub class: ConjectureClass,
    pub actual: Option<CostReport>,
    pub source: Option<CircuitSource>,
}

impl ScanRow {
    /// `Some(true)` when a circuit exists and its N_T equals the prediction.
    pub fn matches(&self) -> Option<bool> {
        self.actual
            .map(|c| c.n_toffoli == self.class.predicted_toffoli)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub odd_periods: u64,
    pub type_b: u64,
    pub expected_type_b: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub rows: Vec<ScanRow>,
    pub census: Vec<CensusRow>,
}

impl ConjectureReport {
    /// Every row with a circuit matches, and every census count is `n - 1`.
    pub fn consistent(&self) -> bool {
        self.rows.iter().all(|r| r.matches() != Some(false))
            && self.census.iter().all(|c| c.type_b == c.expected_type_b)
    }
}

/// Largest bit length [`conjecture_scan`] accepts.
pub const MAX_SCAN_BITS: usize = 20;

pub fn conjecture_scan(max_bits: usize) -> Result<ConjectureReport> {
    conjecture_scan_with(max_bits, Database::embedded())
}

pub fn conjecture_scan_with(max_bits: usize, db: &Database) -> Result<ConjectureReport> {
    if !(2..=MAX_SCAN_BITS).contains(&max_bits) {
        return Err(Error::InvalidArgument(format!(
            "max_bits must be in 2..={MAX_SCAN_BITS}, got {max_bits}"
        )));
    }
    let mut rows = Vec::new();
    let mut census = Vec::new();
    for n in 2..=max_bits {
        let lo = (1u64 << (n - 1)) + 1;
        let hi = (1u64 << n) - 1;
        let mut odd = 0;
        let mut type_b = 0;
        for p in (lo..=hi).step_by(2) {
            let class = classify_type(p)?;
            odd += 1;
            if class.class == TypeClass::B {
                type_b += 1;
            }
            let (actual, source) = if p <= MAX_BUNDLED {
                (Some(db.circuit(p)?.cost()), Some(CircuitSource::Bundled))
            } else {
                match construction_for(p) {
                    Some(Construction::Pow2Plus1(_) | Construction::Pow2Minus1(_)) => (
                        Some(synth_with(p, db, None)?.cost()),
                        Some(CircuitSource::Pattern),
                    ),
                    _ => (None, None),
                }
            };
            rows.push(ScanRow {
                class,
                actual,
                source,
            });
        }
        census.push(CensusRow {
            n,
            odd_periods: odd,
            type_b,
            expected_type_b: n as u64 - 1,
        });
    }
    Ok(ConjectureReport { rows, census })
}

/// Result of exhausting all `n x n` GF(2) matrices `y = A x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearScanReport {
    pub n: usize,
    pub matrices: u64,
    /// Monoperiodic linear tables, keyed by period.
    pub monoperiodic_by_period: BTreeMap<u64, u64>,
    /// Matrices whose table is monoperiodic with odd period > 1 (expected empty).
    pub odd_monoperiodic: Vec<u64>,
}

/// Table of `y = A x` where row `j` of `A` (bits of `rows[j]`) produces `y_{j+1}`.
pub fn linear_table(n: usize, rows: &[u64]) -> Result<FunctionTable> {
    FunctionTable::from_fn(n, n, |x| {
        rows.iter()
            .enumerate()
            .map(|(j, r)| ((r & x).count_ones() as u64 & 1) << j)
            .sum()
    })
}

pub fn linear_period_scan(n: usize) -> Result<LinearScanReport> {
    if n == 0 || n > MAX_LINEAR_SCAN_WIDTH {
        return Err(Error::InvalidArgument(format!(
            "linear scan width must be in 1..={MAX_LINEAR_SCAN_WIDTH}, got {n}"
        )));
    }
    let matrices = 1u64 << (n * n);
    let row_mask = (1u64 << n) - 1;
    let mut by_period = BTreeMap::new();
    let mut odd = Vec::new();
    for a in 0..matrices {
        let rows: Vec<u64> = (0..n).map(|j| (a >> (j * n)) & row_mask).collect();
        let report: PeriodReport = classify(&linear_table(n, &rows)?);
        if report.monoperiodic {
            *by_period.entry(report.fundamental_period).or_insert(0) += 1;
            if report.fundamental_period > 1 && report.fundamental_period % 2 == 1 {
                odd.push(a);
            }
        }
    }
    Ok(LinearScanReport {
        n,
        matrices,
        monoperiodic_by_period: by_period,
        odd_monoperiodic: odd,
    })
}

/// JSON search/scan report line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub p: u64,
    pub class: TypeClass,
    pub predicted_toffoli: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual_toffoli: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

/// Try to prove no circuit with `toffoli` or fewer Toffolis exists for `p`.
pub fn certify_lower_bound(p: u64, toffoli: usize, budget: &SearchBudget) -> Result<SearchOutcome> {
    min_toffoli_synth(p, &budget.with_max_toffoli(toffoli))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_monoperiodic_with;

    #[test]
    fn type_examples() {
        let c = classify_type(23).unwrap();
        assert_eq!(
            (c.c_bits.as_str(), c.class, c.predicted_toffoli),
            ("1011", TypeClass::A, 5)
        );
        let c = classify_type(25).unwrap();
        assert_eq!(
            (c.c_bits.as_str(), c.class, c.predicted_toffoli),
            ("1100", TypeClass::B, 4)
        );
        let c = classify_type(3).unwrap();
        assert_eq!(
            (c.c_bits.as_str(), c.class, c.predicted_toffoli),
            ("1", TypeClass::B, 1)
        );
        assert!(classify_type(4).is_err());
        assert!(classify_type(1).is_err());
    }

    #[test]
    fn budget_parsing() {
        let b: SearchBudget = "toffoli=1,gates=10".parse().unwrap();
        assert_eq!((b.max_toffoli, b.max_gates), (1, 10));
        assert_eq!(b.max_states, SearchBudget::default().max_states);
        let b: SearchBudget = "inputs=rw".parse().unwrap();
        assert!(!b.input_wires_read_only);
        assert_eq!(b.to_string().parse::<SearchBudget>().unwrap(), b);
        assert!("gates=0".parse::<SearchBudget>().is_err());
        assert!("speed=3".parse::<SearchBudget>().is_err());
        assert!("toffoli".parse::<SearchBudget>().is_err());
    }

    #[test]
    fn period_two_is_one_cnot() {
        match min_toffoli_synth(2, &SearchBudget::default()).unwrap() {
            SearchOutcome::Found { circuit, .. } => {
                assert_eq!(circuit.cost(), CostReport::new(0, 1));
            }
            other => panic!("{other:?}"),
        }
        assert!(min_toffoli_synth(1, &SearchBudget::default()).is_err());
    }

    #[test]
    fn period_three_needs_one_toffoli() {
        let budget = SearchBudget::default()
            .with_max_toffoli(1)
            .with_max_gates(5);
        let SearchOutcome::Found {
            circuit,
            lower_strata_exhausted,
            ..
        } = min_toffoli_synth(3, &budget).unwrap()
        else {
            panic!("expected a circuit");
        };
        assert_eq!(circuit.cost().n_toffoli, 1);
        assert!(lower_strata_exhausted);
        assert!(is_monoperiodic_with(&circuit.truth_table().unwrap(), 3));
        assert_eq!(
            min_toffoli_synth(3, &budget.with_max_toffoli(0))
                .unwrap()
                .certificate(),
            Certificate::Exhausted
        );
    }

    #[test]
    fn tight_gate_bound_is_reported_not_hidden() {
        let budget = SearchBudget::default()
            .with_max_toffoli(0)
            .with_max_gates(1);
        assert_eq!(
            min_toffoli_synth(3, &budget).unwrap().certificate(),
            Certificate::Budget
        );
        let budget = SearchBudget {
            max_states: 3,
            ..SearchBudget::default()
        };
        assert_eq!(
            min_toffoli_synth(5, &budget).unwrap().certificate(),
            Certificate::Budget
        );
    }

    #[test]
    fn writable_inputs_also_find_period_three() {
        let budget = SearchBudget {
            input_wires_read_only: false,
            ..SearchBudget::default()
                .with_max_toffoli(1)
                .with_max_gates(5)
        };
        let outcome = min_toffoli_synth(3, &budget).unwrap();
        assert_eq!(outcome.certificate(), Certificate::Found);
    }

    #[test]
    fn search_width_is_limited() {
        assert!(min_toffoli_synth(17, &SearchBudget::default()).is_err());
    }

    #[test]
    fn goal_test() {
        assert!(is_goal(&[0, 1, 2, 0], 3));
        assert!(!is_goal(&[0, 1, 0, 1], 3));
        assert!(is_goal(&[0, 1, 2, 3], 4));
        assert!(!is_goal(&[0, 1, 1, 0], 3));
    }

    #[test]
    fn linear_scan_small() {
        let r = linear_period_scan(2).unwrap();
        assert_eq!(r.matrices, 16);
        assert!(r.odd_monoperiodic.is_empty());
        // identity: rows x1 -> y1, x2 -> y2
        let id = linear_table(2, &[0b01, 0b10]).unwrap();
        assert_eq!(id.values(), &[0, 1, 2, 3]);
        assert!(is_monoperiodic_with(&id, 4));
        assert!(linear_period_scan(5).is_err());
    }

    #[test]
    fn scan_two_bits() {
        let r = conjecture_scan(2).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].class.p, 3);
        assert_eq!(r.rows[0].matches(), Some(true));
        assert!(conjecture_scan(1).is_err());
    }
}
