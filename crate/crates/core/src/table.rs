//! A small table of named knots, identified by Jones fingerprint and signature.
//!
//! A match means the invariants agree; it does not prove the knot types are equal.

use std::path::Path;

use serde::Serialize;

use crate::diagram::PlanarDiagram;
use crate::error::{KnotError, Result};
use crate::jones::{jones, JonesFingerprint};
use crate::moves::simplify;
use crate::pd::parse_pd;
use crate::signature::{signature_goeritz, SignatureValue};

/// Environment variable naming a table file that replaces the bundled one.
pub const TABLE_ENV: &str = "SHARPKNOT_TABLE";

const BUNDLED: &str = include_str!("../data/knots.csv");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub name: String,
    #[serde(skip)]
    pub pd: PlanarDiagram,
    pub fingerprint: JonesFingerprint,
    pub sigma: SignatureValue,
    /// The stored diagram is alternating.
    pub alternating_diagram: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct KnotTable {
    pub entries: Vec<TableEntry>,
    /// Groups of entry names that share a (Jones, σ) fingerprint.
    pub duplicate_fingerprints: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableMatch {
    pub name: String,
    /// The input matches the mirror image of the entry.
    pub mirror: bool,
}

fn entry(name: &str, pd_code: &str) -> Result<TableEntry> {
    let pd = parse_pd(pd_code)?;
    pd.require_knot()?;
    Ok(TableEntry {
        name: name.to_string(),
        fingerprint: jones(&pd)?,
        sigma: signature_goeritz(&pd)?,
        alternating_diagram: pd.is_alternating(),
        pd,
    })
}

/// Parses CSV text with header `name,pd_code`.
pub fn parse_table(text: &str) -> Result<KnotTable> {
    if text.trim().is_empty() {
        return Ok(KnotTable::default());
    }
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| KnotError::Table(e.to_string()))?.clone();
    if headers.iter().map(str::trim).collect::<Vec<_>>() != ["name", "pd_code"] {
        return Err(KnotError::Table(format!(
            "expected header name,pd_code, found {}",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut entries = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| KnotError::Table(e.to_string()))?;
        let row = record.position().map_or(0, |p| p.line() as usize);
        let name = record.get(0).unwrap_or("").trim();
        if name.is_empty() {
            return Err(KnotError::TableRow { row, source: Box::new(KnotError::Table("empty name".into())) });
        }
        let pd_code = record.get(1).unwrap_or("");
        entries.push(entry(name, pd_code).map_err(|e| KnotError::TableRow { row, source: Box::new(e) })?);
    }
    let mut duplicate_fingerprints: Vec<Vec<String>> = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        if entries[..i].iter().any(|f| f.fingerprint == e.fingerprint && f.sigma == e.sigma) {
            continue;
        }
        let group: Vec<String> = entries[i..]
            .iter()
            .filter(|f| f.fingerprint == e.fingerprint && f.sigma == e.sigma)
            .map(|f| f.name.clone())
            .collect();
        if group.len() > 1 {
            duplicate_fingerprints.push(group);
        }
    }
    Ok(KnotTable { entries, duplicate_fingerprints })
}

pub fn load_table(path: &Path) -> Result<KnotTable> {
    let text = std::fs::read_to_string(path).map_err(|e| KnotError::Table(format!("{}: {e}", path.display())))?;
    parse_table(&text)
}

pub fn bundled_table() -> KnotTable {
    parse_table(BUNDLED).expect("bundled table is valid")
}

/// The table named by `SHARPKNOT_TABLE`, or the bundled one.
pub fn default_table() -> Result<KnotTable> {
    match std::env::var_os(TABLE_ENV) {
        Some(path) => load_table(Path::new(&path)),
        None => Ok(bundled_table()),
    }
}

/// Entries whose Jones fingerprint and σ agree with `d`, directly or after
/// mirroring. Links match nothing.
pub fn identify(d: &PlanarDiagram, table: &KnotTable) -> Result<Vec<TableMatch>> {
    let d = simplify(d);
    if !d.is_knot() {
        return Ok(vec![]);
    }
    let fp = jones(&d)?;
    let sigma = signature_goeritz(&d)?;
    let mirror_fp = fp.mirrored();
    let mut out = Vec::new();
    for e in &table.entries {
        if e.fingerprint == fp && e.sigma == sigma {
            out.push(TableMatch { name: e.name.clone(), mirror: false });
        } else if e.fingerprint == mirror_fp && e.sigma.sigma == -sigma.sigma {
            out.push(TableMatch { name: e.name.clone(), mirror: true });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::nonalternating_certificate;
    use crate::braid::parse_braid;
    use crate::closure::braid_closure;
    use crate::moves::positive_sharp_braid;

    #[test]
    fn bundled_entries() {
        let t = bundled_table();
        let names: Vec<&str> = t.entries.iter().map(|e| e.name.as_str()).collect();
        for n in ["0_1", "3_1", "4_1", "10_139"] {
            assert!(names.contains(&n));
        }
        let k = t.entries.iter().find(|e| e.name == "10_139").unwrap();
        assert_eq!(k.pd.crossing_count(), 10);
        assert_eq!(k.fingerprint.determinant, 3);
        assert!(t.duplicate_fingerprints.is_empty());
    }

    #[test]
    fn every_entry_identifies_itself() {
        let t = bundled_table();
        for e in &t.entries {
            let m = identify(&e.pd, &t).unwrap();
            assert!(m.contains(&TableMatch { name: e.name.clone(), mirror: false }), "{}", e.name);
        }
    }

    #[test]
    fn alternating_entries_do_not_certify() {
        for e in bundled_table().entries.iter().filter(|e| e.alternating_diagram) {
            assert!(!nonalternating_certificate(&e.pd).unwrap().verdict, "{}", e.name);
        }
    }

    #[test]
    fn mirror_trefoil_is_flagged() {
        let t = bundled_table();
        // the table trefoil is left-handed; the positive braid gives its mirror
        let m = identify(&braid_closure(&parse_braid("1 1 1").unwrap()), &t).unwrap();
        assert_eq!(m, vec![TableMatch { name: "3_1".into(), mirror: true }]);
    }

    #[test]
    fn unknot_and_links() {
        let t = bundled_table();
        assert_eq!(
            identify(&PlanarDiagram::unknot(), &t).unwrap(),
            vec![TableMatch { name: "0_1".into(), mirror: false }]
        );
        assert!(identify(&braid_closure(&parse_braid("1 1").unwrap()), &t).unwrap().is_empty());
    }

    #[test]
    fn sharp_outputs() {
        let t = bundled_table();
        let b = parse_braid("1 2 3").unwrap();
        let d = braid_closure(&positive_sharp_braid(&b, 1, 3).unwrap().0);
        assert_eq!(identify(&d, &t).unwrap(), vec![TableMatch { name: "10_139".into(), mirror: false }]);
        let b = parse_braid("-1 2 1 3 2").unwrap();
        let d = braid_closure(&positive_sharp_braid(&b, 1, 5).unwrap().0);
        assert!(identify(&d, &t).unwrap().is_empty());
    }

    #[test]
    fn malformed_tables() {
        assert_eq!(parse_table("").unwrap(), KnotTable::default());
        let err =
            parse_table("name,pd_code\n3_1,\"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"\nbad,\"X(1,1,1,2) X(2,3,3,4)\"\n")
                .unwrap_err();
        match err {
            KnotError::TableRow { row, source } => {
                assert_eq!(row, 3);
                assert!(matches!(*source, KnotError::ArcMultiplicity { arc: 1, count: 3 }));
            }
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_table("knot,code\n"), Err(KnotError::Table(_))));
    }

    #[test]
    fn duplicate_fingerprints_are_reported() {
        let text = "name,pd_code\na,\"X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)\"\nb,\"X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)\"\n";
        let t = parse_table(text).unwrap();
        assert_eq!(t.duplicate_fingerprints, vec![vec!["a".to_string(), "b".to_string()]]);
    }

    #[test]
    fn loads_from_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.csv");
        std::fs::write(&path, "name,pd_code\n0_1,\n").unwrap();
        assert_eq!(load_table(&path).unwrap().entries.len(), 1);
        assert!(load_table(&dir.path().join("missing.csv")).is_err());
    }
}
