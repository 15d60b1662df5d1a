// SPDX-License-Identifier: Apache-2.0
#![allow(dead_code)]

use periodic_circuits::{Circuit, Control, CostReport, Gate, Wire};
use proptest::prelude::*;

/// (p, N_T, N_CN, Q) for every bundled circuit.
pub const COSTS: [(u64, usize, usize, usize); 15] = [
    (3, 1, 3, 9),
    (5, 2, 3, 15),
    (7, 2, 4, 16),
    (9, 3, 4, 22),
    (11, 4, 5, 29),
    (13, 3, 6, 24),
    (15, 3, 5, 23),
    (17, 4, 5, 29),
    (19, 5, 6, 36),
    (21, 5, 6, 36),
    (23, 5, 7, 37),
    (25, 4, 8, 32),
    (27, 5, 7, 37),
    (29, 4, 7, 31),
    (31, 4, 6, 30),
];

pub fn expected_cost(p: u64) -> CostReport {
    let &(_, t, c, q) = COSTS.iter().find(|r| r.0 == p).expect("bundled period");
    let cost = CostReport::new(t, c);
    assert_eq!(cost.quantum_cost, q);
    cost
}

pub struct TableBlock {
    pub p: u64,
    pub n: usize,
    /// `(x, y)` rows as listed.
    pub rows: Vec<(u64, u64)>,
}

pub fn reference_tables() -> Vec<TableBlock> {
    let src = include_str!("../fixtures/reference_tables.txt");
    let mut blocks: Vec<TableBlock> = Vec::new();
    for line in src.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("period ") {
            let f: Vec<&str> = rest.split_whitespace().collect();
            assert_eq!(f.len(), 3, "bad header {line:?}");
            assert_eq!(f[1], "n");
            blocks.push(TableBlock {
                p: f[0].parse().unwrap(),
                n: f[2].parse().unwrap(),
                rows: Vec::new(),
            });
            continue;
        }
        let (x, y) = line.split_once('|').expect("row");
        let block = blocks.last_mut().expect("row before header");
        block.rows.push((
            u64::from_str_radix(x.trim(), 2).unwrap(),
            u64::from_str_radix(y.trim(), 2).unwrap(),
        ));
    }
    blocks
}

fn wire(n: usize, i: usize) -> Wire {
    if i < n {
        Wire::input(i + 1)
    } else {
        Wire::output(i - n + 1)
    }
}

fn gate_from(n: usize, m: usize, toffoli: bool, picks: [u8; 3], inv: [bool; 2]) -> Gate {
    let w = n + m;
    let mut pool: Vec<usize> = (0..w).collect();
    let mut take = |r: u8| pool.remove(r as usize % pool.len());
    let target = wire(n, take(picks[0]));
    let ctrl = |i: usize, inverted: bool| {
        if inverted {
            Control::inverted(wire(n, i))
        } else {
            Control::positive(wire(n, i))
        }
    };
    let a = ctrl(take(picks[1]), inv[0]);
    if toffoli && w >= 3 {
        let b = ctrl(take(picks[2]), inv[1]);
        Gate::toffoli(a, b, target)
    } else {
        Gate::cnot(a, target)
    }
}

/// Random valid circuits on up to 4 + 4 wires.
pub fn arb_circuit() -> impl Strategy<Value = Circuit> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(n, m)| {
        prop::collection::vec((any::<bool>(), any::<[u8; 3]>(), any::<[bool; 2]>()), 0..16)
            .prop_map(move |specs| {
                let gates = specs
                    .into_iter()
                    .map(|(t, picks, inv)| gate_from(n, m, t, picks, inv))
                    .collect();
                Circuit::from_gates(n, m, gates)
            })
    })
}
