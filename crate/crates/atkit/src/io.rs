//! Graph file format, figure fixtures, DOT export, and run reports.
//!
//! Edge-list format: a header line `n m`, then `m` lines `u v` where the
//! endpoints are arbitrary whitespace-free tokens. Vertices receive
//! canonical indices in name-introduction order.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "empty input".into(),
    })?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(Error::Parse {
            line: header_line,
            reason: "expected header `n m`".into(),
        })?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(Error::Parse {
            line: header_line,
            reason: "expected header `n m`".into(),
        })?;
    if parts.next().is_some() {
        return Err(Error::Parse {
            line: header_line,
            reason: "trailing tokens after header".into(),
        });
    }
    let mut pairs: Vec<(String, String, usize)> = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        let (u, v) = match (toks.next(), toks.next(), toks.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::Parse {
                    line,
                    reason: "expected `u v`".into(),
                })
            }
        };
        pairs.push((u.to_string(), v.to_string(), line));
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: header_line,
            reason: format!("header promises {m} edges, found {}", pairs.len()),
        });
    }
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(u, v, _)| (u.as_str(), v.as_str())).collect();
    let g = Graph::from_named_edges(&refs).map_err(|e| match e {
        // Re-point builder line numbers at file lines.
        Error::SelfLoop { line, vertex } => Error::SelfLoop {
            line: pairs[line - 1].2,
            vertex,
        },
        Error::DuplicateEdge { line, edge } => Error::DuplicateEdge {
            line: pairs[line - 1].2,
            edge,
        },
        other => other,
    })?;
    if g.n() != n {
        return Err(Error::Parse {
            line: header_line,
            reason: format!("header promises {n} vertices, found {}", g.n()),
        });
    }
    Ok(g)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.name(u), g.name(v)));
    }
    out
}

/// Write-only DOT export for inspection.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  \"{}\";\n", g.name(v)));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.name(u), g.name(v)));
    }
    out.push_str("}\n");
    out
}

pub fn fig1() -> Graph {
    Graph::from_named_edges(&[
        ("1", "2"),
        ("2", "3"),
        ("3", "4"),
        ("3", "5"),
        ("4", "6"),
        ("5", "6"),
        ("6", "7"),
        ("7", "8"),
    ])
    .unwrap()
}

pub fn fig2g() -> Graph {
    Graph::from_named_edges(&[("1", "2"), ("2", "4"), ("2", "5"), ("1", "3"), ("3", "5")]).unwrap()
}

/// `fig2g` with the three-vertex pendant path attached to vertex 1.
pub fn fig2gp() -> Graph {
    Graph::from_named_edges(&[
        ("v1", "v2"),
        ("v2", "v3"),
        ("v3", "1"),
        ("1", "2"),
        ("2", "4"),
        ("2", "5"),
        ("1", "3"),
        ("3", "5"),
    ])
    .unwrap()
}

pub fn fig3() -> Graph {
    Graph::from_named_edges(&[
        ("1", "2"),
        ("2", "3"),
        ("3", "a"),
        ("a", "4"),
        ("4", "2"),
        ("2", "z"),
        ("z", "4"),
        ("z", "c"),
        ("c", "a"),
        ("c", "b"),
        ("b", "2"),
    ])
    .unwrap()
}

pub fn fig4() -> Graph {
    Graph::from_named_edges(&[
        ("b'", "5"),
        ("5", "z'"),
        ("z'", "4"),
        ("4", "2"),
        ("2", "5"),
        ("2", "a'"),
        ("2", "1"),
        ("1", "3"),
        ("3", "a"),
        ("3", "6"),
        ("6", "b"),
        ("6", "z"),
        ("z", "7"),
        ("7", "3"),
    ])
    .unwrap()
}

/// All named figure fixtures.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("fig1", fig1()),
        ("fig2g", fig2g()),
        ("fig2gp", fig2gp()),
        ("fig3", fig3()),
        ("fig4", fig4()),
    ]
}

pub fn fixture(name: &str) -> Option<Graph> {
    match name {
        "fig1" => Some(fig1()),
        "fig2g" => Some(fig2g()),
        "fig2gp" => Some(fig2gp()),
        "fig3" => Some(fig3()),
        "fig4" => Some(fig4()),
        _ => None,
    }
}

/// Machine-checkable run report: ordered key/value verdicts with an echo
/// of the command and an input digest. Reproducible except for `timing_ms`.
#[derive(Debug, Clone, Default)]
pub struct RunReport {
    entries: Vec<(String, String)>,
}

impl RunReport {
    pub fn new() -> Self {
        RunReport::default()
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut map = Map::new();
        for (k, v) in &self.entries {
            map.insert(k.clone(), Value::String(v.clone()));
        }
        serde_json::to_string_pretty(&Value::Object(map)).unwrap()
    }
}

/// FNV-1a digest of the input bytes, for report provenance.
pub fn input_digest(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}
