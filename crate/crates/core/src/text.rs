// SPDX-License-Identifier: Apache-2.0

//! Line-oriented circuit text format (`.rev`).
//!
//! ```text
//! # comment
//! wires 2 2
//! cnot x2 y1
//! cnot x1 y1
//! tof x2 y1 y2
//! cnot y2 y1
//! ```
//!
//! Wire tokens are `x<i>` or `y<j>` (1-based). A control may carry a `!`
//! prefix for inverted polarity; a target never does.

use crate::circuit::{Circuit, Control, Gate, Violation, Wire};
use crate::error::{Error, Result};

pub fn render(circuit: &Circuit) -> String {
    let mut s = format!("wires {} {}\n", circuit.n(), circuit.m());
    for g in circuit.gates() {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    s
}

/// Parse and validate. Errors carry the 1-based line number.
pub fn parse(src: &str) -> Result<Circuit> {
    let mut header: Option<(usize, usize)> = None;
    let mut gates = Vec::new();
    let mut gate_lines = Vec::new();
    let mut last_line = 0;

    for (i, raw) in src.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if !line.is_ascii() {
            return Err(err(line_no, "non-ASCII characters"));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => header = Some(parse_header(&toks, line_no)?),
            Some(_) => {
                gates.push(parse_gate(&toks, line_no)?);
                gate_lines.push(line_no);
            }
        }
    }

    let (n, m) = header.ok_or_else(|| err(last_line.max(1), "missing `wires <n> <m>` header"))?;
    let circuit = Circuit::from_gates(n, m, gates);
    if let Some(v) = circuit.validate().into_iter().next() {
        let line = match v {
            Violation::WireOutOfRange { gate, .. }
            | Violation::TargetEqualsControl { gate, .. }
            | Violation::DuplicateControls { gate, .. } => gate_lines[gate],
            Violation::ZeroWidth { .. } | Violation::RegisterTooWide { .. } => {
                first_content_line(src)
            }
        };
        return Err(err(line, &v.to_string()));
    }
    Ok(circuit)
}

fn first_content_line(src: &str) -> usize {
    src.lines()
        .position(|l| !l.split('#').next().unwrap_or("").trim().is_empty())
        .map_or(1, |i| i + 1)
}

fn err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

fn parse_header(toks: &[&str], line: usize) -> Result<(usize, usize)> {
    match toks {
        ["wires", n, m] => {
            let n = n
                .parse()
                .map_err(|_| err(line, &format!("bad input width `{n}`")))?;
            let m = m
                .parse()
                .map_err(|_| err(line, &format!("bad output width `{m}`")))?;
            Ok((n, m))
        }
        _ => Err(err(line, "expected `wires <n> <m>` header")),
    }
}

fn parse_gate(toks: &[&str], line: usize) -> Result<Gate> {
    match toks {
        ["cnot", c, t] => Ok(Gate::cnot(parse_control(c, line)?, parse_target(t, line)?)),
        ["tof", a, b, t] => Ok(Gate::toffoli(
            parse_control(a, line)?,
            parse_control(b, line)?,
            parse_target(t, line)?,
        )),
        ["cnot", ..] => Err(err(line, "cnot takes exactly 2 wires")),
        ["tof", ..] => Err(err(line, "tof takes exactly 3 wires")),
        [other, ..] => Err(err(line, &format!("unknown gate `{other}`"))),
        [] => unreachable!("blank lines are skipped"),
    }
}

fn parse_control(tok: &str, line: usize) -> Result<Control> {
    match tok.strip_prefix('!') {
        Some(rest) => Ok(Control::inverted(parse_wire(rest, line)?)),
        None => Ok(Control::positive(parse_wire(tok, line)?)),
    }
}

fn parse_target(tok: &str, line: usize) -> Result<Wire> {
    if tok.starts_with('!') {
        return Err(err(line, &format!("target `{tok}` cannot be inverted")));
    }
    parse_wire(tok, line)
}

fn parse_wire(tok: &str, line: usize) -> Result<Wire> {
    let bad = || err(line, &format!("bad wire `{tok}`"));
    let (ctor, digits): (fn(usize) -> Wire, &str) = if let Some(d) = tok.strip_prefix('x') {
        (Wire::input, d)
    } else if let Some(d) = tok.strip_prefix('y') {
        (Wire::output, d)
    } else {
        return Err(bad());
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    Ok(ctor(digits.parse().map_err(|_| bad())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: &str = "wires 2 2\ncnot x2 y1\ncnot x1 y1\ntof x2 y1 y2\ncnot y2 y1\n";

    #[test]
    fn parses_and_renders() {
        let c = parse(S3).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(render(&c), S3);
    }

    #[test]
    fn comments_and_blank_lines() {
        let c = parse("# header\n\nwires 1 1 # trailing\n  cnot x1 y1\n").unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn inverted_controls() {
        let c = parse("wires 3 3\ntof !x2 y2 y3\n").unwrap();
        assert!(c.gates()[0].controls()[0].is_inverted());
        assert_eq!(render(&c), "wires 3 3\ntof !x2 y2 y3\n");
    }

    #[test]
    fn errors_cite_line_numbers() {
        let cases = [
            ("wires 2 2\ncnot x1\n", 2),
            ("wires 2 2\n\nfoo x1 y1\n", 3),
            ("wires 2 2\ncnot x1 !y1\n", 2),
            ("wires 2 2\ncnot x1 y3\n", 2),
            ("wires 2 2\ncnot x1 y1\ntof x1 x1 y2\n", 3),
            ("wires 2 2\ncnot y1 y1\n", 2),
            ("cnot x1 y1\n", 1),
            ("wires two 2\n", 1),
            ("wires 2 2\ncnot z1 y1\n", 2),
            ("wires 2 2\ncnot x y1\n", 2),
        ];
        for (src, line) in cases {
            match parse(src) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{src:?}"),
                other => panic!("{src:?}: {other:?}"),
            }
        }
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
    }
}
