// SPDX-License-Identifier: Apache-2.0

//! The fifteen hand-built circuits for odd periods 3..=31, stored as `.rev`
//! files under `data/` with a SHA-256 manifest.
//!
//! The embedded copy is compiled into the library; [`Database::load_dir`]
//! reads an on-disk copy instead and checks it against its own manifest.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::text;

pub const MIN_BUNDLED: u64 = 3;
pub const MAX_BUNDLED: u64 = 31;

pub const MANIFEST_NAME: &str = "MANIFEST.sha256";

macro_rules! embed {
    ($($p:literal => $file:literal),* $(,)?) => {
        &[$(($p, $file, include_str!(concat!("../data/", $file)))),*]
    };
}

const EMBEDDED: &[(u64, &str, &str)] = embed![
    3 => "s03.rev",
    5 => "s05.rev",
    7 => "s07.rev",
    9 => "s09.rev",
    11 => "s11.rev",
    13 => "s13.rev",
    15 => "s15.rev",
    17 => "s17.rev",
    19 => "s19.rev",
    21 => "s21.rev",
    23 => "s23.rev",
    25 => "s25.rev",
    27 => "s27.rev",
    29 => "s29.rev",
    31 => "s31.rev",
];

const EMBEDDED_MANIFEST: &str = include_str!("../data/MANIFEST.sha256");

pub fn file_name(p: u64) -> String {
    format!("s{p:02}.rev")
}

/// Inverse of [`file_name`] for odd periods in the bundled range.
pub fn period_of_file(name: &str) -> Option<u64> {
    let digits = name.strip_prefix('s')?.strip_suffix(".rev")?;
    let p: u64 = digits.parse().ok()?;
    (file_name(p) == name && p % 2 == 1 && (MIN_BUNDLED..=MAX_BUNDLED).contains(&p)).then_some(p)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn parse_manifest(src: &str) -> Result<BTreeMap<String, String>> {
    src.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            match (it.next(), it.next(), it.next()) {
                (Some(hash), Some(name), None) => Ok((name.to_string(), hash.to_string())),
                _ => Err(Error::Data(format!("malformed manifest line `{l}`"))),
            }
        })
        .collect()
}

fn check_range(p: u64) -> Result<()> {
    if p.is_multiple_of(2) || !(MIN_BUNDLED..=MAX_BUNDLED).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "no bundled circuit for p={p}; bundled periods are odd p in {MIN_BUNDLED}..={MAX_BUNDLED}"
        )));
    }
    Ok(())
}

/// Read-only set of bundled circuits keyed by period.
#[derive(Debug, Clone)]
pub struct Database {
    circuits: BTreeMap<u64, Circuit>,
    sources: BTreeMap<u64, String>,
}

impl Database {
    /// The copy compiled into the library (parsed once).
    pub fn embedded() -> &'static Database {
        static DB: OnceLock<Database> = OnceLock::new();
        DB.get_or_init(|| {
            let manifest = parse_manifest(EMBEDDED_MANIFEST).expect("embedded manifest");
            let files = EMBEDDED
                .iter()
                .map(|&(p, name, src)| (p, name, src.to_string()));
            Database::build(files, &manifest).expect("embedded circuits")
        })
    }

    /// Load every circuit listed in `dir/MANIFEST.sha256`, verifying each
    /// file's checksum. A manifest may list any subset of `s03.rev`..`s31.rev`.
    pub fn load_dir(dir: impl AsRef<Path>) -> Result<Database> {
        let dir = dir.as_ref();
        let manifest_path = dir.join(MANIFEST_NAME);
        let manifest_src = std::fs::read_to_string(&manifest_path)
            .map_err(|e| Error::Data(format!("{}: {e}", manifest_path.display())))?;
        let manifest = parse_manifest(&manifest_src)?;
        let mut files = Vec::new();
        for name in manifest.keys() {
            let p = period_of_file(name)
                .ok_or_else(|| Error::Data(format!("manifest lists unexpected file {name}")))?;
            let path = dir.join(name);
            let src = std::fs::read_to_string(&path)
                .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
            files.push((p, name.as_str(), src));
        }
        Database::build(files.into_iter(), &manifest)
    }

    fn build<'a>(
        files: impl Iterator<Item = (u64, &'a str, String)>,
        manifest: &BTreeMap<String, String>,
    ) -> Result<Database> {
        let mut circuits = BTreeMap::new();
        let mut sources = BTreeMap::new();
        for (p, name, src) in files {
            let expected = manifest
                .get(name)
                .ok_or_else(|| Error::Data(format!("{name} missing from manifest")))?;
            let actual = sha256_hex(src.as_bytes());
            if &actual != expected {
                return Err(Error::Data(format!(
                    "{name}: checksum mismatch (manifest {expected}, file {actual})"
                )));
            }
            let circuit = text::parse(&src).map_err(|e| Error::Data(format!("{name}: {e}")))?;
            circuits.insert(p, circuit);
            sources.insert(p, src);
        }
        Ok(Database { circuits, sources })
    }

    pub fn circuit(&self, p: u64) -> Result<&Circuit> {
        check_range(p)?;
        self.circuits
            .get(&p)
            .ok_or_else(|| Error::Data(format!("no circuit for p={p}")))
    }

    /// Verbatim file contents for `p`.
    pub fn source(&self, p: u64) -> Result<&str> {
        check_range(p)?;
        self.sources
            .get(&p)
            .map(String::as_str)
            .ok_or_else(|| Error::Data(format!("no source for p={p}")))
    }

    pub fn periods(&self) -> impl Iterator<Item = u64> + '_ {
        self.circuits.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &Circuit)> {
        self.circuits.iter().map(|(&p, c)| (p, c))
    }
}

/// Bundled circuit for odd `p` in `3..=31`.
pub fn bundled_circuit(p: u64) -> Result<Circuit> {
    Database::embedded().circuit(p).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_has_fifteen_circuits() {
        let db = Database::embedded();
        assert_eq!(
            db.periods().collect::<Vec<_>>(),
            (3..=31).step_by(2).collect::<Vec<_>>()
        );
    }

    #[test]
    fn out_of_range_and_even_are_rejected() {
        for p in [1, 2, 4, 30, 33, 0] {
            assert!(bundled_circuit(p).is_err(), "{p}");
        }
    }

    #[test]
    fn load_dir_checks_checksums() {
        let tmp = tempfile::tempdir().unwrap();
        let dir = tmp.path();
        let db = Database::embedded();
        let mut manifest = String::new();
        for p in db.periods().collect::<Vec<_>>() {
            let src = db.source(p).unwrap();
            std::fs::write(dir.join(file_name(p)), src).unwrap();
            manifest.push_str(&format!(
                "{}  {}\n",
                sha256_hex(src.as_bytes()),
                file_name(p)
            ));
        }
        std::fs::write(dir.join(MANIFEST_NAME), &manifest).unwrap();
        let loaded = Database::load_dir(dir).unwrap();
        assert_eq!(loaded.circuit(19).unwrap(), db.circuit(19).unwrap());

        let tampered = db.source(5).unwrap().replace("tof !x2", "tof x2");
        std::fs::write(dir.join(file_name(5)), tampered).unwrap();
        assert!(matches!(Database::load_dir(dir), Err(Error::Data(_))));
    }

    #[test]
    fn shipped_data_dir_matches_embedded() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
        let loaded = Database::load_dir(dir).unwrap();
        assert_eq!(loaded.periods().count(), 15);
        for (p, c) in Database::embedded().iter() {
            assert_eq!(loaded.circuit(p).unwrap(), c);
        }
    }

    #[test]
    fn partial_manifest_loads_a_subset() {
        let tmp = tempfile::tempdir().unwrap();
        let dir = tmp.path();
        let src = Database::embedded().source(7).unwrap();
        std::fs::write(dir.join("s07.rev"), src).unwrap();
        std::fs::write(
            dir.join(MANIFEST_NAME),
            format!("{}  s07.rev\n", sha256_hex(src.as_bytes())),
        )
        .unwrap();
        let db = Database::load_dir(dir).unwrap();
        assert_eq!(db.periods().collect::<Vec<_>>(), [7]);
        assert!(matches!(db.circuit(5), Err(Error::Data(_))));
        std::fs::write(dir.join(MANIFEST_NAME), "00  notes.txt\n").unwrap();
        assert!(Database::load_dir(dir).is_err());
    }

    #[test]
    fn file_names() {
        assert_eq!(period_of_file("s07.rev"), Some(7));
        assert_eq!(period_of_file("s7.rev"), None);
        assert_eq!(period_of_file("s08.rev"), None);
        assert_eq!(period_of_file("s33.rev"), None);
    }
}
