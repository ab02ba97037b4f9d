//! Loop-free digraphs, the constructions used throughout the crate, and the
//! exponential structural analyses (acyclic sets, semibipartite partitions,
//! clique number) that back the non-solvability certificates.
//!
//! Vertices are `0..n`. Undirected graphs are stored as bidirected digraphs.

mod analysis;
mod named;
mod product;
mod text;

pub use analysis::{
    induces_acyclic, is_independent, AcyclicSet, SemibipartitePartition, DEFAULT_SUBSET_CAP,
    MAX_MASK_VERTICES,
};
pub use named::NamedGraph;
pub use text::{parse_digraph, serialize_digraph};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A directed graph without loops or repeated arcs. Bidirectional pairs are
/// allowed and model undirected edges.
#[derive(Debug, Clone)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    in_adj: Vec<Vec<usize>>,
    out_adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arcs == other.arcs
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// Builds a digraph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    /// Builds a digraph from arcs that may repeat; duplicates are merged.
    pub(crate) fn from_arc_set(n: usize, arcs: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(arcs.iter().all(|&(u, v)| u != v && u < n && v < n));
        Self::from_sorted(n, arcs.into_iter().collect())
    }

    fn from_sorted(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        let mut in_adj = vec![Vec::new(); n];
        let mut out_adj = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Self {
            n,
            arcs,
            in_adj,
            out_adj,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in ascending lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// In-neighbourhood of `v` in ascending order.
    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    /// Out-neighbourhood of `v` in ascending order.
    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    /// True when every arc has its reverse, i.e. the digraph encodes an
    /// undirected graph.
    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.has_arc(v, u))
    }

    /// True when no pair of vertices is joined in both directions.
    pub fn is_oriented(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| !self.has_arc(v, u))
    }

    /// Undirected edges `{u, v}` with `u < v`, for symmetric digraphs.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        self.arcs
            .iter()
            .copied()
            .filter(|&(u, v)| u < v && self.has_arc(v, u))
            .collect()
    }

    /// Copy of the digraph with the given arcs removed (missing arcs are ignored).
    pub fn without_arcs(&self, removed: &[(usize, usize)]) -> Self {
        let arcs: BTreeSet<_> = self
            .arcs
            .iter()
            .copied()
            .filter(|a| !removed.contains(a))
            .collect();
        Self::from_arc_set(self.n, arcs)
    }

    /// Copy of the digraph with extra arcs added (existing arcs are kept once).
    pub fn with_extra_arcs(&self, extra: &[(usize, usize)]) -> Result<Self> {
        let mut arcs: BTreeSet<_> = self.arcs.iter().copied().collect();
        for &(u, v) in extra {
            if u >= self.n || v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n: self.n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            arcs.insert((u, v));
        }
        Ok(Self::from_arc_set(self.n, arcs))
    }

    /// True when the symmetric digraph, read as an undirected graph, is a forest.
    pub fn is_undirected_forest(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (u, v) in self.undirected_edges() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}
