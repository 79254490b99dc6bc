//! Named matroid inputs for the CLI and the verification suites: graphic
//! matroids of complete graphs and cycles, their duals, and matrices loaded
//! from JSON or CSV files.
//!
//! Spec grammar: `graphic:K<n>` (n ≤ 6), `graphic:cycle_<n>` (n ≤ 12),
//! `dual:<spec>`, `file:<path>`.

use std::fs;

use num_bigint::BigInt;
use thiserror::Error;

use crate::matroid::{Matroid, MatroidError};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unknown corpus spec `{0}`")]
    UnknownCorpus(String),
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    #[error("cannot parse matrix from `{source_name}`: {message}")]
    Parse { source_name: String, message: String },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Graphic matroid of the complete graph on `n` vertices: one column
/// `e_i - e_j` per edge. Totally unimodular, rank `n - 1`.
pub fn graphic_complete(n: usize) -> Matroid {
    assert!((2..=6).contains(&n), "complete graphs are provided for 2 ≤ n ≤ 6");
    let mut rows = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            for (v, row) in rows.iter_mut().enumerate() {
                let entry = if v == i {
                    1
                } else if v == j {
                    -1
                } else {
                    0
                };
                row.push(BigInt::from(entry));
            }
        }
    }
    Matroid::from_matrix(rows).expect("incidence columns are nonzero")
}

/// Graphic matroid of the n-cycle: n edges `e_k - e_{k+1 mod n}`, rank n-1.
pub fn graphic_cycle(n: usize) -> Matroid {
    assert!((2..=12).contains(&n), "cycles are provided for 2 ≤ n ≤ 12");
    let mut rows = vec![vec![BigInt::from(0); n]; n];
    for k in 0..n {
        rows[k][k] += 1;
        rows[(k + 1) % n][k] -= 1;
    }
    Matroid::from_matrix(rows).expect("cycle columns are nonzero")
}

/// Parse a matrix from inline text or file contents: a JSON array of arrays
/// (or an object with a `matrix` key), else rows separated by newlines or
/// `;` with comma-separated integer entries.
pub fn parse_matrix(text: &str, source_name: &str) -> Result<Vec<Vec<BigInt>>, CorpusError> {
    let parse_err = |message: String| CorpusError::Parse {
        source_name: source_name.to_string(),
        message,
    };
    let trimmed = text.trim();
    let rows: Vec<Vec<BigInt>> = if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(trimmed).map_err(|e| parse_err(e.to_string()))?;
        let array = match &value {
            serde_json::Value::Object(map) => map
                .get("matrix")
                .ok_or_else(|| parse_err("expected a `matrix` key".into()))?,
            other => other,
        };
        let outer = array
            .as_array()
            .ok_or_else(|| parse_err("expected an array of rows".into()))?;
        outer
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| parse_err("expected rows to be arrays".into()))?
                    .iter()
                    .map(|cell| {
                        cell.as_i64()
                            .map(BigInt::from)
                            .ok_or_else(|| parse_err(format!("non-integer entry {cell}")))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?
    } else {
        trimmed
            .split(|c| c == ';' || c == '\n')
            .map(str::trim)
            .filter(|line| !line.is_empty())
            .map(|line| {
                line.split(',')
                    .map(|cell| {
                        cell.trim()
                            .parse::<i64>()
                            .map(BigInt::from)
                            .map_err(|e| parse_err(format!("`{cell}`: {e}")))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?
    };
    if rows.is_empty() {
        return Err(parse_err("empty matrix".into()));
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(parse_err("rows of unequal length".into()));
    }
    Ok(rows)
}

/// Resolve a corpus spec to a named matroid.
pub fn load_matroid(spec: &str) -> Result<(String, Matroid), CorpusError> {
    let spec = spec.trim();
    if let Some(inner) = spec.strip_prefix("dual:") {
        let (name, m) = load_matroid(inner)?;
        return Ok((format!("dual:{name}"), m.dual()));
    }
    if let Some(graph) = spec.strip_prefix("graphic:") {
        if let Some(n) = graph.strip_prefix('K').and_then(|d| d.parse::<usize>().ok()) {
            if (2..=6).contains(&n) {
                return Ok((spec.to_string(), graphic_complete(n)));
            }
        }
        if let Some(n) = graph.strip_prefix("cycle_").and_then(|d| d.parse::<usize>().ok()) {
            if (2..=12).contains(&n) {
                return Ok((spec.to_string(), graphic_cycle(n)));
            }
        }
        return Err(CorpusError::UnknownCorpus(spec.to_string()));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = fs::read_to_string(path).map_err(|e| CorpusError::Io {
            path: path.to_string(),
            message: e.to_string(),
        })?;
        let rows = parse_matrix(&text, path)?;
        return Ok((spec.to_string(), Matroid::from_matrix(rows)?));
    }
    Err(CorpusError::UnknownCorpus(spec.to_string()))
}

/// Resolve either a corpus spec (`graphic:`, `dual:`, `file:` prefixes) or an
/// inline matrix in any [`parse_matrix`] format.
pub fn matroid_from_text(text: &str) -> Result<Matroid, CorpusError> {
    let text = text.trim();
    if text.starts_with("graphic:") || text.starts_with("dual:") || text.starts_with("file:") {
        return load_matroid(text).map(|(_, m)| m);
    }
    let rows = parse_matrix(text, "matrix")?;
    Ok(Matroid::from_matrix(rows)?)
}

/// The default verification corpus: complete graphs K4 and K5, cycles C3–C6,
/// and the duals of all six. Every member is unimodular and coloop-free.
pub fn default_corpus() -> Vec<(String, Matroid)> {
    let specs = [
        "graphic:K4",
        "graphic:K5",
        "graphic:cycle_3",
        "graphic:cycle_4",
        "graphic:cycle_5",
        "graphic:cycle_6",
    ];
    let mut out = Vec::new();
    for spec in specs {
        let (name, m) = load_matroid(spec).expect("built-in specs resolve");
        out.push((name, m));
    }
    for spec in specs {
        let (name, m) = load_matroid(&format!("dual:{spec}")).expect("built-in specs resolve");
        out.push((name, m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use std::collections::BTreeMap;

    fn tutte_at_ones(m: &Matroid) -> BigRational {
        let point: BTreeMap<_, _> = [
            ("x".to_string(), BigRational::from_integer(1.into())),
            ("y".to_string(), BigRational::from_integer(1.into())),
        ]
        .into();
        m.tutte().evaluate(&point).unwrap()
    }

    #[test]
    fn complete_graphs() {
        let k4 = graphic_complete(4);
        assert_eq!(k4.rank(), 3);
        assert_eq!(k4.len(), 6);
        // Cayley: 4^2 spanning trees.
        assert_eq!(tutte_at_ones(&k4), BigRational::from_integer(16.into()));
        let k5 = graphic_complete(5);
        assert_eq!((k5.rank(), k5.len()), (4, 10));
        assert_eq!(tutte_at_ones(&k5), BigRational::from_integer(125.into()));
    }

    #[test]
    fn cycles_are_circuits() {
        let c3 = graphic_cycle(3);
        assert_eq!((c3.rank(), c3.len()), (2, 3));
        // Same Tutte polynomial as the three-point line.
        assert_eq!(c3.tutte().to_string(), "x^2 + x + y");
        let c6 = graphic_cycle(6);
        assert_eq!(c6.circuits().unwrap(), vec![vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn corpus_members_are_clean() {
        let corpus = default_corpus();
        assert_eq!(corpus.len(), 12);
        for (name, m) in &corpus {
            assert!(m.coloops().is_empty(), "{name} has a coloop");
            assert!(m.is_unimodular(), "{name} is not unimodular");
        }
    }

    #[test]
    fn dual_specs() {
        let (name, d) = load_matroid("dual:graphic:K4").unwrap();
        assert_eq!(name, "dual:graphic:K4");
        assert_eq!(d.rank(), 3);
        assert_eq!(tutte_at_ones(&d), BigRational::from_integer(16.into()));
    }

    #[test]
    fn unknown_specs_are_rejected() {
        for bad in ["graphic:K7", "graphic:cycle_1", "petersen", "graphic:path_3", ""] {
            assert!(
                matches!(load_matroid(bad), Err(CorpusError::UnknownCorpus(_))),
                "{bad:?} should be unknown"
            );
        }
        assert!(matches!(
            load_matroid("file:/nonexistent/missing.json"),
            Err(CorpusError::Io { .. })
        ));
    }

    #[test]
    fn matrix_parsing_formats() {
        let json = parse_matrix("[[1,0,1],[0,1,1]]", "inline").unwrap();
        let wrapped = parse_matrix("{\"matrix\": [[1,0,1],[0,1,1]]}", "inline").unwrap();
        let csv = parse_matrix("1,0,1; 0,1,1", "inline").unwrap();
        let lines = parse_matrix("1,0,1\n0,1,1\n", "inline").unwrap();
        assert_eq!(json, wrapped);
        assert_eq!(json, csv);
        assert_eq!(json, lines);
        assert!(parse_matrix("[[1,0],[1]]", "inline").is_err());
        assert!(parse_matrix("[[1.5]]", "inline").is_err());
        assert!(parse_matrix("", "inline").is_err());
    }

    #[test]
    fn file_loading_round_trip() {
        let dir = std::env::temp_dir();
        let json_path = dir.join("corpus_test_matrix.json");
        let csv_path = dir.join("corpus_test_matrix.csv");
        fs::write(&json_path, "{\"matrix\": [[1,0,1],[0,1,1]]}").unwrap();
        fs::write(&csv_path, "1,0,1\n0,1,1\n").unwrap();
        let (_, from_json) = load_matroid(&format!("file:{}", json_path.display())).unwrap();
        let (_, from_csv) = load_matroid(&format!("file:{}", csv_path.display())).unwrap();
        assert_eq!(from_json, from_csv);
        assert_eq!(from_json.tutte().to_string(), "x^2 + x + y");
        fs::remove_file(json_path).ok();
        fs::remove_file(csv_path).ok();
    }
}
