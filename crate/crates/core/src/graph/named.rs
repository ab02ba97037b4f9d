use std::collections::BTreeSet;

use super::Digraph;
use crate::error::{Error, Result};

/// Transposed adjacency matrix of the six-vertex 4-gadget graph:
/// row `i` has a one in column `j` iff `j -> i` is an arc.
pub(crate) const SIX_VERTEX_IN_MATRIX: [[u8; 6]; 6] = [
    [0, 1, 0, 0, 0, 1],
    [0, 0, 1, 1, 0, 0],
    [1, 0, 0, 0, 1, 0],
    [1, 0, 1, 0, 0, 1],
    [1, 1, 0, 1, 0, 0],
    [0, 1, 1, 0, 1, 0],
];

/// The graph families that can be built by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    /// Complete graph, every ordered pair is an arc.
    Clique(usize),
    /// Bidirected `K_{m,s}`; the `m` left vertices are numbered first.
    CompleteBipartite(usize, usize),
    /// Arcs `i -> i+1 mod n`.
    DirectedCycle(usize),
    /// Bidirected cycle with edges `{i, i+1 mod n}`.
    UndirectedCycle(usize),
    /// Bidirected path `0 - 1 - ... - n-1`.
    Path(usize),
    SixVertexGadget,
}

impl NamedGraph {
    pub fn build(self) -> Result<Digraph> {
        let mut arcs = BTreeSet::new();
        let (n, name) = match self {
            NamedGraph::Clique(n) => {
                at_least("clique", n, 1)?;
                for u in 0..n {
                    for v in 0..n {
                        if u != v {
                            arcs.insert((u, v));
                        }
                    }
                }
                (n, format!("clique({n})"))
            }
            NamedGraph::CompleteBipartite(m, s) => {
                at_least("complete_bipartite left part", m, 1)?;
                at_least("complete_bipartite right part", s, 1)?;
                for u in 0..m {
                    for v in m..m + s {
                        arcs.insert((u, v));
                        arcs.insert((v, u));
                    }
                }
                (m + s, format!("complete_bipartite({m},{s})"))
            }
            NamedGraph::DirectedCycle(n) => {
                at_least("directed_cycle", n, 3)?;
                for u in 0..n {
                    arcs.insert((u, (u + 1) % n));
                }
                (n, format!("directed_cycle({n})"))
            }
            NamedGraph::UndirectedCycle(n) => {
                at_least("undirected_cycle", n, 3)?;
                for u in 0..n {
                    let v = (u + 1) % n;
                    arcs.insert((u, v));
                    arcs.insert((v, u));
                }
                (n, format!("undirected_cycle({n})"))
            }
            NamedGraph::Path(n) => {
                at_least("path", n, 1)?;
                for u in 1..n {
                    arcs.insert((u - 1, u));
                    arcs.insert((u, u - 1));
                }
                (n, format!("path({n})"))
            }
            NamedGraph::SixVertexGadget => {
                for (i, row) in SIX_VERTEX_IN_MATRIX.iter().enumerate() {
                    for (j, &bit) in row.iter().enumerate() {
                        if bit == 1 {
                            arcs.insert((j, i));
                        }
                    }
                }
                (6, "six_vertex_gadget_graph".to_string())
            }
        };
        Ok(Digraph::from_arc_set(n, arcs).with_name(name))
    }
}

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::SizeOutOfRange(format!(
            "{what} needs size >= {min}, got {value}"
        )));
    }
    Ok(())
}
