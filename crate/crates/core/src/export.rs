// SPDX-License-Identifier: Apache-2.0

//! Renderers: OpenQASM 3 gate list, structural JSON and an ASCII wire diagram.

use serde::Serialize;

use crate::circuit::{Circuit, CostReport, Gate, Wire, WireKind};

/// Qubit index of a wire: `x1..xn` map to `q[0..n)`, `y1..ym` to `q[n..n+m)`.
fn qubit(circuit: &Circuit, w: Wire) -> usize {
    match w.kind {
        WireKind::Input => w.index - 1,
        WireKind::Output => circuit.n() + w.index - 1,
    }
}

pub fn to_qasm(circuit: &Circuit) -> String {
    let cost = circuit.cost();
    let mut s = String::from("OPENQASM 3.0;\ninclude \"stdgates.inc\";\n");
    s.push_str(&format!(
        "// q[0..{n}) = x1..x{n}, q[{n}..{w}) = y1..y{m}; outputs start in |0>\n",
        n = circuit.n(),
        m = circuit.m(),
        w = circuit.n() + circuit.m()
    ));
    s.push_str(&format!(
        "// cost N_T={} N_CN={} Q={}; the x gates around inverted controls are not counted\n",
        cost.n_toffoli, cost.n_cnot, cost.quantum_cost
    ));
    s.push_str(&format!("qubit[{}] q;\n", circuit.n() + circuit.m()));
    for g in circuit.gates() {
        let flips: Vec<usize> = g
            .controls()
            .iter()
            .filter(|c| c.is_inverted())
            .map(|c| qubit(circuit, c.wire))
            .collect();
        for &q in &flips {
            s.push_str(&format!("x q[{q}];\n"));
        }
        let t = qubit(circuit, g.target());
        match g {
            Gate::Cnot { control, .. } => {
                s.push_str(&format!(
                    "cx q[{}], q[{t}];\n",
                    qubit(circuit, control.wire)
                ));
            }
            Gate::Toffoli { controls, .. } => {
                s.push_str(&format!(
                    "ccx q[{}], q[{}], q[{t}];\n",
                    qubit(circuit, controls[0].wire),
                    qubit(circuit, controls[1].wire)
                ));
            }
        }
        for &q in &flips {
            s.push_str(&format!("x q[{q}];\n"));
        }
    }
    s
}

#[derive(Serialize)]
struct ControlJson {
    wire: String,
    inverted: bool,
}

#[derive(Serialize)]
struct GateJson {
    kind: &'static str,
    controls: Vec<ControlJson>,
    target: String,
}

#[derive(Serialize)]
struct CircuitJson {
    n: usize,
    m: usize,
    gates: Vec<GateJson>,
    cost: CostReport,
}

pub fn to_json(circuit: &Circuit) -> String {
    let doc = CircuitJson {
        n: circuit.n(),
        m: circuit.m(),
        gates: circuit
            .gates()
            .iter()
            .map(|g| GateJson {
                kind: if g.is_toffoli() { "toffoli" } else { "cnot" },
                controls: g
                    .controls()
                    .iter()
                    .map(|c| ControlJson {
                        wire: c.wire.to_string(),
                        inverted: c.is_inverted(),
                    })
                    .collect(),
                target: g.target().to_string(),
            })
            .collect(),
        cost: circuit.cost(),
    };
    serde_json::to_string_pretty(&doc).expect("circuit serialization cannot fail")
}

/// One column per gate; rows `x_n..x_1` then `y_m..y_1`, top to bottom.
/// `*` control, `o` inverted control, `+` target, `|` a passing connection.
pub fn to_ascii(circuit: &Circuit) -> String {
    let rows: Vec<Wire> = (1..=circuit.n())
        .rev()
        .map(Wire::input)
        .chain((1..=circuit.m()).rev().map(Wire::output))
        .collect();
    let label_width = rows.iter().map(|w| w.to_string().len()).max().unwrap_or(0);
    let mut lines: Vec<String> = rows
        .iter()
        .map(|w| format!("{:<label_width$} -", w.to_string()))
        .collect();
    for g in circuit.gates() {
        let row_of = |w: Wire| rows.iter().position(|&r| r == w).expect("wire in range");
        let mut marks = vec!['-'; rows.len()];
        let mut touched = vec![row_of(g.target())];
        marks[touched[0]] = '+';
        for c in g.controls() {
            let r = row_of(c.wire);
            marks[r] = if c.is_inverted() { 'o' } else { '*' };
            touched.push(r);
        }
        let lo = *touched.iter().min().unwrap();
        let hi = *touched.iter().max().unwrap();
        for m in &mut marks[lo..=hi] {
            if *m == '-' {
                *m = '|';
            }
        }
        for (line, m) in lines.iter_mut().zip(marks) {
            line.push('-');
            line.push(m);
            line.push('-');
        }
    }
    let mut s = String::new();
    for l in lines {
        s.push_str(&l);
        s.push_str("-\n");
    }
    s
}
