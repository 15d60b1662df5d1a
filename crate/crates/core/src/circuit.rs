// SPDX-License-Identifier: Apache-2.0

//! Reversible-gate IR: wires, CNOT/Toffoli gates, circuits and their
//! classical semantics.
//!
//! Bit convention: `x1` and `y1` are the least-significant bits of the input
//! and output integers. A circuit with `n` inputs and `m` outputs is
//! simulated on a single `u64` register holding `x1..xn` in bits `0..n` and
//! `y1..ym` in bits `n..n+m`, so `n + m` is capped at 64.

use std::fmt;

use crate::error::{Error, Result};
use crate::table::FunctionTable;

/// Default cap on `n + m` for materialized truth tables.
pub const DEFAULT_TABLE_LIMIT: usize = 24;

/// Widest register `evaluate` can simulate.
pub const MAX_REGISTER_BITS: usize = 64;

/// Cost of a Toffoli gate in CNOT equivalents.
pub const TOFFOLI_CNOT_EQUIVALENT: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WireKind {
    Input,
    Output,
}

/// A wire named `x<i>` or `y<j>`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wire {
    pub kind: WireKind,
    pub index: usize,
}

impl Wire {
    pub const fn input(index: usize) -> Self {
        Self {
            kind: WireKind::Input,
            index,
        }
    }

    pub const fn output(index: usize) -> Self {
        Self {
            kind: WireKind::Output,
            index,
        }
    }

    pub fn is_input(self) -> bool {
        self.kind == WireKind::Input
    }

    /// Same kind, index moved up by `by`.
    pub fn shifted(self, by: usize) -> Self {
        Self {
            kind: self.kind,
            index: self.index + by,
        }
    }

    /// Register bit position for a circuit with `n` input wires.
    fn bit(self, n: usize) -> usize {
        match self.kind {
            WireKind::Input => self.index - 1,
            WireKind::Output => n + self.index - 1,
        }
    }

    fn in_range(self, n: usize, m: usize) -> bool {
        let limit = match self.kind {
            WireKind::Input => n,
            WireKind::Output => m,
        };
        (1..=limit).contains(&self.index)
    }
}

impl fmt::Display for Wire {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            WireKind::Input => write!(f, "x{}", self.index),
            WireKind::Output => write!(f, "y{}", self.index),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    /// Gate fires when the control bit is 0.
    Inverted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Control {
    pub wire: Wire,
    pub polarity: Polarity,
}

impl Control {
    pub const fn positive(wire: Wire) -> Self {
        Self {
            wire,
            polarity: Polarity::Positive,
        }
    }

    pub const fn inverted(wire: Wire) -> Self {
        Self {
            wire,
            polarity: Polarity::Inverted,
        }
    }

    pub fn is_inverted(self) -> bool {
        self.polarity == Polarity::Inverted
    }

    fn shifted(self, by: usize) -> Self {
        Self {
            wire: self.wire.shifted(by),
            polarity: self.polarity,
        }
    }
}

impl fmt::Display for Control {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverted() {
            write!(f, "!{}", self.wire)
        } else {
            write!(f, "{}", self.wire)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    Cnot {
        control: Control,
        target: Wire,
    },
    Toffoli {
        controls: [Control; 2],
        target: Wire,
    },
}

impl Gate {
    pub fn cnot(control: Control, target: Wire) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn toffoli(a: Control, b: Control, target: Wire) -> Self {
        Gate::Toffoli {
            controls: [a, b],
            target,
        }
    }

    pub fn target(&self) -> Wire {
        match *self {
            Gate::Cnot { target, .. } | Gate::Toffoli { target, .. } => target,
        }
    }

    pub fn controls(&self) -> &[Control] {
        match self {
            Gate::Cnot { control, .. } => std::slice::from_ref(control),
            Gate::Toffoli { controls, .. } => controls,
        }
    }

    pub fn is_toffoli(&self) -> bool {
        matches!(self, Gate::Toffoli { .. })
    }

    /// Every wire index moved up by `by` (used by the even-period lift).
    pub fn shifted(&self, by: usize) -> Self {
        match *self {
            Gate::Cnot { control, target } => Gate::Cnot {
                control: control.shifted(by),
                target: target.shifted(by),
            },
            Gate::Toffoli { controls, target } => Gate::Toffoli {
                controls: [controls[0].shifted(by), controls[1].shifted(by)],
                target: target.shifted(by),
            },
        }
    }

    /// Register masks: (control bits, inverted-control bits, target bit).
    fn masks(&self, n: usize) -> (u64, u64, u64) {
        let mut ctrl = 0u64;
        let mut inv = 0u64;
        for c in self.controls() {
            let b = 1u64 << c.wire.bit(n);
            ctrl |= b;
            if c.is_inverted() {
                inv |= b;
            }
        }
        (ctrl, inv, 1u64 << self.target().bit(n))
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Cnot { control, target } => write!(f, "cnot {control} {target}"),
            Gate::Toffoli { controls, target } => {
                write!(f, "tof {} {} {target}", controls[0], controls[1])
            }
        }
    }
}

/// One broken circuit invariant, tagged with the offending gate position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ZeroWidth { n: usize, m: usize },
    RegisterTooWide { width: usize },
    WireOutOfRange { gate: usize, wire: Wire },
    TargetEqualsControl { gate: usize, wire: Wire },
    DuplicateControls { gate: usize, wire: Wire },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroWidth { n, m } => write!(f, "widths must be >= 1 (n={n}, m={m})"),
            Violation::RegisterTooWide { width } => {
                write!(f, "register of {width} wires exceeds {MAX_REGISTER_BITS}")
            }
            Violation::WireOutOfRange { gate, wire } => {
                write!(f, "gate {gate}: wire {wire} out of range")
            }
            Violation::TargetEqualsControl { gate, wire } => {
                write!(f, "gate {gate}: target equals control ({wire})")
            }
            Violation::DuplicateControls { gate, wire } => {
                write!(f, "gate {gate}: duplicate Toffoli controls ({wire})")
            }
        }
    }
}

/// `(N_T, N_CN, Q)` with `Q = N_CN + 6 N_T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub struct CostReport {
    pub n_toffoli: usize,
    pub n_cnot: usize,
    pub quantum_cost: usize,
}

impl CostReport {
    pub fn new(n_toffoli: usize, n_cnot: usize) -> Self {
        Self {
            n_toffoli,
            n_cnot,
            quantum_cost: n_cnot + TOFFOLI_CNOT_EQUIVALENT * n_toffoli,
        }
    }
}

impl fmt::Display for CostReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N_T={} N_CN={} Q={}",
            self.n_toffoli, self.n_cnot, self.quantum_cost
        )
    }
}

/// Ordered gate list over `n` input wires and `m` zero-initialized output
/// wires. Gates apply in list order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    n: usize,
    m: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize, m: usize) -> Self {
        Self {
            n,
            m,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(n: usize, m: usize, gates: Vec<Gate>) -> Self {
        Self { n, m, gates }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn push(&mut self, gate: Gate) -> &mut Self {
        self.gates.push(gate);
        self
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// The same gates in reverse order. Every gate is an involution, so
    /// running a circuit and then its reverse restores the register.
    pub fn reversed(&self) -> Self {
        let mut gates = self.gates.clone();
        gates.reverse();
        Self::from_gates(self.n, self.m, gates)
    }

    /// All invariant violations; empty iff the circuit is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.n == 0 || self.m == 0 {
            out.push(Violation::ZeroWidth {
                n: self.n,
                m: self.m,
            });
        }
        if self.n + self.m > MAX_REGISTER_BITS {
            out.push(Violation::RegisterTooWide {
                width: self.n + self.m,
            });
        }
        for (i, g) in self.gates.iter().enumerate() {
            let target = g.target();
            for w in g.controls().iter().map(|c| c.wire).chain([target]) {
                if !w.in_range(self.n, self.m) {
                    out.push(Violation::WireOutOfRange { gate: i, wire: w });
                }
            }
            for c in g.controls() {
                if c.wire == target {
                    out.push(Violation::TargetEqualsControl {
                        gate: i,
                        wire: target,
                    });
                }
            }
            if let Gate::Toffoli { controls, .. } = g {
                if controls[0].wire == controls[1].wire {
                    out.push(Violation::DuplicateControls {
                        gate: i,
                        wire: controls[0].wire,
                    });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidCircuit(v))
        }
    }

    /// Full register after running the circuit on input `x`.
    pub fn run_register(&self, x: u64) -> Result<u64> {
        self.ensure_valid()?;
        self.check_input(x)?;
        Ok(self.run_unchecked(x))
    }

    /// Output-register value `y` for input `x`.
    pub fn evaluate(&self, x: u64) -> Result<u64> {
        self.ensure_valid()?;
        self.check_input(x)?;
        Ok(self.output_of(self.run_unchecked(x)))
    }

    pub fn truth_table(&self) -> Result<FunctionTable> {
        self.truth_table_with_limit(DEFAULT_TABLE_LIMIT)
    }

    pub fn truth_table_with_limit(&self, limit: usize) -> Result<FunctionTable> {
        self.ensure_valid()?;
        let width = self.n + self.m;
        if width > limit {
            return Err(Error::TableTooWide { width, limit });
        }
        let compiled = self.compile();
        let values = (0..1u64 << self.n)
            .map(|x| self.output_of(apply_compiled(&compiled, x)))
            .collect();
        FunctionTable::new(self.n, self.m, values)
    }

    pub fn cost(&self) -> CostReport {
        let n_toffoli = self.gates.iter().filter(|g| g.is_toffoli()).count();
        CostReport::new(n_toffoli, self.gates.len() - n_toffoli)
    }

    /// For each gate, how many of the `2^n` rows have their target bit
    /// flipped by that gate. Requires a valid circuit whose table fits the
    /// default limit.
    pub fn flip_counts(&self) -> Result<Vec<usize>> {
        self.ensure_valid()?;
        if self.n + self.m > DEFAULT_TABLE_LIMIT {
            return Err(Error::TableTooWide {
                width: self.n + self.m,
                limit: DEFAULT_TABLE_LIMIT,
            });
        }
        let compiled = self.compile();
        let mut regs: Vec<u64> = (0..1u64 << self.n).collect();
        let mut counts = Vec::with_capacity(compiled.len());
        for &(ctrl, inv, tgt) in &compiled {
            let mut flips = 0;
            for r in regs.iter_mut() {
                if fires(*r, ctrl, inv) {
                    *r ^= tgt;
                    flips += 1;
                }
            }
            counts.push(flips);
        }
        Ok(counts)
    }

    fn check_input(&self, x: u64) -> Result<()> {
        if self.n < 64 && x >> self.n != 0 {
            return Err(Error::InputOutOfRange { x, n: self.n });
        }
        Ok(())
    }

    fn compile(&self) -> Vec<(u64, u64, u64)> {
        self.gates.iter().map(|g| g.masks(self.n)).collect()
    }

    fn run_unchecked(&self, x: u64) -> u64 {
        apply_compiled(&self.compile(), x)
    }

    fn output_of(&self, reg: u64) -> u64 {
        let y = reg >> self.n;
        if self.m >= 64 {
            y
        } else {
            y & ((1u64 << self.m) - 1)
        }
    }
}

#[inline]
fn fires(reg: u64, ctrl: u64, inv: u64) -> bool {
    (reg ^ inv) & ctrl == ctrl
}

fn apply_compiled(compiled: &[(u64, u64, u64)], mut reg: u64) -> u64 {
    for &(ctrl, inv, tgt) in compiled {
        if fires(reg, ctrl, inv) {
            reg ^= tgt;
        }
    }
    reg
}
