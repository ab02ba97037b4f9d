//! Line-oriented digraph format:
//!
//! ```text
//! # optional comments
//! n 4
//! arc 0 1
//! edge 1 2
//! ```
//!
//! `edge u v` expands to both arcs. The serializer sorts arcs and collapses
//! bidirectional pairs back into `edge` lines.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::Digraph;
use crate::error::{Error, Result};

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut n: Option<usize> = None;
    let mut arcs = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields.as_slice() {
            ["n", count] => {
                if n.is_some() {
                    return Err(err("repeated header".into()));
                }
                n = Some(
                    count
                        .parse()
                        .map_err(|_| err(format!("bad vertex count `{count}`")))?,
                );
            }
            [kind @ ("arc" | "edge"), u, v] => {
                let n = n.ok_or_else(|| err("arc before `n` header".into()))?;
                let parse_vertex = |s: &str| -> Result<usize> {
                    let x: usize = s.parse().map_err(|_| err(format!("bad vertex `{s}`")))?;
                    if x >= n {
                        return Err(err(format!("vertex {x} out of range (n = {n})")));
                    }
                    Ok(x)
                };
                let (u, v) = (parse_vertex(u)?, parse_vertex(v)?);
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                let pairs: &[(usize, usize)] = if *kind == "arc" {
                    &[(u, v)]
                } else {
                    &[(u, v), (v, u)]
                };
                for &a in pairs {
                    if !arcs.insert(a) {
                        return Err(err(format!("duplicate arc {} -> {}", a.0, a.1)));
                    }
                }
            }
            _ => return Err(err(format!("unrecognised line `{trimmed}`"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `n` header".into(),
    })?;
    Ok(Digraph::from_arc_set(n, arcs))
}

pub fn serialize_digraph(g: &Digraph) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        let _ = writeln!(out, "# {name}");
    }
    let _ = writeln!(out, "n {}", g.vertex_count());
    for &(u, v) in g.arcs() {
        if g.has_arc(v, u) {
            if u < v {
                let _ = writeln!(out, "edge {u} {v}");
            }
        } else {
            let _ = writeln!(out, "arc {u} {v}");
        }
    }
    out
}
