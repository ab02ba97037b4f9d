//! Exact subset searches over vertex bitmasks. All of these are exponential,
//! so every entry point takes an explicit vertex cap and refuses larger
//! inputs instead of truncating.
//!
//! Ties are broken towards the lexicographically smallest sorted witness.

use super::Digraph;
use crate::error::{Error, Result};

/// Default vertex cap for the subset-exponential analyses.
pub const DEFAULT_SUBSET_CAP: usize = 20;
/// Hard limit imposed by the `u64` vertex masks.
pub const MAX_MASK_VERTICES: usize = 64;

/// A maximum acyclic induced vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicSet {
    pub size: usize,
    pub vertices: Vec<usize>,
}

/// Partition `V = L ∪ R` with `L` independent and `D[R]` acyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemibipartitePartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// `right` in an order where every arc inside `R` points forward.
    pub right_order: Vec<usize>,
}

impl SemibipartitePartition {
    /// Validates `left` as the independent side and derives `R` with its
    /// topological order.
    pub fn new(g: &Digraph, left: &[usize]) -> Result<Self> {
        let n = g.vertex_count();
        let mut in_left = vec![false; n];
        for &v in left {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if in_left[v] {
                return Err(Error::Precondition(format!("vertex {v} repeated in L")));
            }
            in_left[v] = true;
        }
        let mut left_sorted = left.to_vec();
        left_sorted.sort_unstable();
        if !is_independent(g, &left_sorted) {
            return Err(Error::Precondition("L is not independent".into()));
        }
        let right: Vec<usize> = (0..n).filter(|&v| !in_left[v]).collect();
        let right_order = topological_order(g, &right)
            .ok_or_else(|| Error::Precondition("D[R] contains a directed cycle".into()))?;
        Ok(Self {
            left: left_sorted,
            right,
            right_order,
        })
    }

    pub fn m(&self) -> usize {
        self.left.len()
    }

    pub fn s(&self) -> usize {
        self.right.len()
    }
}

fn check_cap(g: &Digraph, cap: usize, what: &'static str) -> Result<()> {
    let n = g.vertex_count();
    let limit = cap.min(MAX_MASK_VERTICES);
    if n > limit {
        return Err(Error::CapExceeded {
            what,
            size: n,
            cap: limit,
        });
    }
    Ok(())
}

struct Masks {
    n: usize,
    inn: Vec<u64>,
    adj: Vec<u64>,
}

impl Masks {
    fn new(g: &Digraph) -> Self {
        let n = g.vertex_count();
        let mut inn = vec![0u64; n];
        let mut out = vec![0u64; n];
        for &(u, v) in g.arcs() {
            inn[v] |= 1 << u;
            out[u] |= 1 << v;
        }
        let adj = (0..n).map(|v| inn[v] | out[v]).collect();
        Self { n, inn, adj }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn acyclic(&self, set: u64) -> bool {
        let mut remaining = set;
        while remaining != 0 {
            let mut peeled = 0u64;
            let mut bits = remaining;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.inn[v] & remaining == 0 {
                    peeled |= 1 << v;
                }
            }
            if peeled == 0 {
                return false;
            }
            remaining &= !peeled;
        }
        true
    }

    fn independent(&self, set: u64) -> bool {
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if self.adj[v] & set != 0 {
                return false;
            }
        }
        true
    }
}

fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | (1 << v))
}

fn vertices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Visits the `k`-subsets of `0..n` in lexicographic order until `visit`
/// returns true; returns the accepted subset.
fn first_subset(n: usize, k: usize, mut visit: impl FnMut(u64) -> bool) -> Option<u64> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = mask_of(&idx);
        if visit(mask) {
            return Some(mask);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// True when the sub-digraph induced by `vertices` has no directed cycle.
/// Works for any size; a bidirectional pair counts as a 2-cycle.
pub fn induces_acyclic(g: &Digraph, vertices: &[usize]) -> bool {
    topological_order(g, vertices).is_some()
}

/// True when no arc joins two vertices of `vertices`.
pub fn is_independent(g: &Digraph, vertices: &[usize]) -> bool {
    let mut member = vec![false; g.vertex_count()];
    for &v in vertices {
        member[v] = true;
    }
    g.arcs().iter().all(|&(u, v)| !(member[u] && member[v]))
}

/// Kahn's algorithm on the induced sub-digraph, always taking the smallest
/// available vertex.
fn topological_order(g: &Digraph, vertices: &[usize]) -> Option<Vec<usize>> {
    use std::collections::BTreeSet;
    let n = g.vertex_count();
    let mut member = vec![false; n];
    for &v in vertices {
        member[v] = true;
    }
    let mut indeg = vec![0usize; n];
    for &(u, v) in g.arcs() {
        if member[u] && member[v] {
            indeg[v] += 1;
        }
    }
    let mut ready: BTreeSet<usize> = vertices.iter().copied().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(vertices.len());
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for &w in g.out_neighbours(v) {
            if member[w] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
    }
    (order.len() == vertices.len()).then_some(order)
}

impl Digraph {
    /// Largest vertex set inducing an acyclic sub-digraph.
    pub fn max_acyclic_induced(&self, cap: usize) -> Result<AcyclicSet> {
        check_cap(self, cap, "max_acyclic_induced")?;
        let masks = Masks::new(self);
        let n = self.vertex_count();
        for k in (0..=n).rev() {
            if let Some(mask) = first_subset(n, k, |s| masks.acyclic(s)) {
                return Ok(AcyclicSet {
                    size: k,
                    vertices: vertices_of(mask),
                });
            }
        }
        unreachable!("the empty set is acyclic")
    }

    /// Semibipartite partition with the largest possible `L`, or `None` when
    /// no partition exists (e.g. `K_4`).
    pub fn best_semibipartite(&self, cap: usize) -> Result<Option<SemibipartitePartition>> {
        check_cap(self, cap, "best_semibipartite")?;
        let n = self.vertex_count();
        self.semibipartite_search((0..=n).rev())
    }

    /// Semibipartite partition with the smallest possible `L`, or `None`
    /// when the digraph admits no semibipartite partition at all. This is
    /// the partition that gives the strongest non-solvability bound.
    pub fn min_semibipartite(&self, cap: usize) -> Result<Option<SemibipartitePartition>> {
        check_cap(self, cap, "min_semibipartite")?;
        let n = self.vertex_count();
        self.semibipartite_search(0..=n)
    }

    fn semibipartite_search(
        &self,
        sizes: impl Iterator<Item = usize>,
    ) -> Result<Option<SemibipartitePartition>> {
        let masks = Masks::new(self);
        let n = self.vertex_count();
        let full = masks.full();
        for k in sizes {
            let found = first_subset(n, k, |l| masks.independent(l) && masks.acyclic(full & !l));
            if let Some(l) = found {
                return SemibipartitePartition::new(self, &vertices_of(l)).map(Some);
            }
        }
        Ok(None)
    }

    /// Size of the largest set of pairwise bidirectionally joined vertices.
    pub fn clique_number(&self, cap: usize) -> Result<usize> {
        Ok(self.max_clique(cap)?.len())
    }

    /// A maximum set of pairwise bidirectionally joined vertices, the
    /// lexicographically smallest among the maximum ones.
    pub fn max_clique(&self, cap: usize) -> Result<Vec<usize>> {
        let n = self.vertex_count();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "clique_number",
                size: n,
                cap,
            });
        }
        let mutual: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| self.has_arc(u, v) && self.has_arc(v, u)).collect())
            .collect();
        let mut current = Vec::new();
        let mut best = Vec::new();
        extend_clique(&mutual, &mut current, &(0..n).collect::<Vec<_>>(), &mut best);
        Ok(best)
    }
}

/// Include-first branch and bound; candidates stay ascending, so the first
/// maximum clique found is the lexicographically smallest.
fn extend_clique(mutual: &[Vec<bool>], current: &mut Vec<usize>, candidates: &[usize], best: &mut Vec<usize>) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    for (i, &v) in candidates.iter().enumerate() {
        if current.len() + candidates.len() - i <= best.len() {
            return;
        }
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&u| mutual[v][u])
            .collect();
        current.push(v);
        extend_clique(mutual, current, &next, best);
        current.pop();
    }
}
