// SPDX-License-Identifier: Apache-2.0

//! Dense function tables `x -> y` over `x in [0, 2^n)`.
//!
//! JSON form: `{"n": .., "m": .., "table": [y_0, y_1, ...]}` with the array
//! indexed by `x`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableJson", into = "TableJson")]
pub struct FunctionTable {
    n: usize,
    m: usize,
    values: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    m: usize,
    table: Vec<u64>,
}

impl TryFrom<TableJson> for FunctionTable {
    type Error = Error;

    fn try_from(j: TableJson) -> Result<Self> {
        FunctionTable::new(j.n, j.m, j.table)
    }
}

impl From<FunctionTable> for TableJson {
    fn from(t: FunctionTable) -> Self {
        TableJson {
            n: t.n,
            m: t.m,
            table: t.values,
        }
    }
}

impl FunctionTable {
    pub fn new(n: usize, m: usize, values: Vec<u64>) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidTable(format!(
                "widths must be >= 1 (n={n}, m={m})"
            )));
        }
        if n >= usize::BITS as usize - 1 || m > 64 {
            return Err(Error::InvalidTable(format!(
                "widths too large (n={n}, m={m})"
            )));
        }
        if values.len() != 1usize << n {
            return Err(Error::InvalidTable(format!(
                "expected {} entries for n={n}, got {}",
                1usize << n,
                values.len()
            )));
        }
        if m < 64 {
            if let Some((x, y)) = values.iter().enumerate().find(|(_, &y)| y >> m != 0) {
                return Err(Error::InvalidTable(format!(
                    "value {y} at x={x} does not fit in {m} bits"
                )));
            }
        }
        Ok(Self { n, m, values })
    }

    /// Build a table by evaluating `f` on every input.
    pub fn from_fn(n: usize, m: usize, f: impl Fn(u64) -> u64) -> Result<Self> {
        Self::new(n, m, (0..1u64 << n).map(f).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, x: u64) -> Option<u64> {
        self.values.get(x as usize).copied()
    }

    /// Inputs mapping to `y`, ascending.
    pub fn preimage(&self, y: u64) -> Vec<u64> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == y)
            .map(|(x, _)| x as u64)
            .collect()
    }

    /// Distinct output values, ascending.
    pub fn image(&self) -> Vec<u64> {
        let mut img = self.values.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Rows in the `x_n..x_1 | y_m..y_1` msb-first layout.
    pub fn rows(&self) -> impl Iterator<Item = String> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(x, &y)| format!("{:0nw$b} | {:0mw$b}", x, y, nw = self.n, mw = self.m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        assert!(FunctionTable::new(2, 2, vec![0, 1, 2]).is_err());
        assert!(FunctionTable::new(2, 1, vec![0, 1, 2, 0]).is_err());
        assert!(FunctionTable::new(0, 1, vec![0]).is_err());
    }

    #[test]
    fn json_uses_table_field() {
        let t = FunctionTable::new(2, 2, vec![0, 1, 2, 0]).unwrap();
        let s = t.to_json();
        assert_eq!(s, r#"{"n":2,"m":2,"table":[0,1,2,0]}"#);
        assert_eq!(FunctionTable::from_json(&s).unwrap(), t);
        assert!(FunctionTable::from_json(r#"{"n":2,"m":1,"table":[0,1,2,0]}"#).is_err());
    }

    #[test]
    fn rows_are_msb_first() {
        let t = FunctionTable::new(2, 2, vec![0, 1, 2, 0]).unwrap();
        let rows: Vec<_> = t.rows().collect();
        assert_eq!(rows, ["00 | 00", "01 | 01", "10 | 10", "11 | 00"]);
    }

    #[test]
    fn preimage_and_image() {
        let t = FunctionTable::new(2, 2, vec![0, 1, 2, 0]).unwrap();
        assert_eq!(t.preimage(0), vec![0, 3]);
        assert_eq!(t.image(), vec![0, 1, 2]);
        assert!(t.preimage(3).is_empty());
    }
}
