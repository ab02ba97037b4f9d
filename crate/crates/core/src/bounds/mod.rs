//! Non-solvability certificates: the counting bound over an acyclic induced
//! set, the semibipartite adversary, and the edge-criticality checker built
//! on them.
//!
//! All bound comparisons are exact.

mod critical;

pub use critical::{edge_critical_check, Axioms, Criticality, CriticalityReport, EdgeFinding};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Pow;

use crate::error::{Error, Result};
use crate::graph::{Digraph, SemibipartitePartition};
use crate::strategy::{HatConfig, Strategy};

/// `(n - I) (q / (q-1))^I < q`, compared as `(n - I) q^I < q (q-1)^I`.
/// True means a digraph on `n` vertices with an acyclic induced set of size
/// `I` is not `q`-solvable.
pub fn counting_bound_check(n: usize, acyclic: usize, q: usize) -> Result<bool> {
    if acyclic > n || q < 2 {
        return Err(Error::Precondition(format!(
            "need 0 <= I <= n and q >= 2, got n = {n}, I = {acyclic}, q = {q}"
        )));
    }
    let i = acyclic as u32;
    let lhs = BigUint::from(n - acyclic) * BigUint::from(q).pow(i);
    let rhs = BigUint::from(q) * BigUint::from(q - 1).pow(i);
    Ok(lhs < rhs)
}

/// `I + q ((q-1)/q)^I`: fewest vertices a `q`-solvable graph with an
/// acyclic induced set of size `I` can have.
pub fn min_vertex_bound(acyclic: usize, q: usize) -> Result<BigRational> {
    if q < 2 {
        return Err(Error::Precondition(format!("q must be >= 2, got {q}")));
    }
    let i = acyclic as u32;
    let q_big = BigUint::from(q);
    let tail = BigRational::new(
        (BigUint::from(q - 1).pow(i)).into(),
        q_big.clone().pow(i).into(),
    );
    Ok(BigRational::from_integer(BigUint::from(acyclic).into())
        + BigRational::from_integer(q_big.into()) * tail)
}

/// Root of `a + ln a = 0` by bisection on `[0.1, 1]`.
pub fn alpha_constant(tolerance: f64) -> Result<f64> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let g = |a: f64| a + a.ln();
    let (mut lo, mut hi) = (0.1f64, 1.0f64);
    loop {
        let mid = 0.5 * (lo + hi);
        let value = g(mid);
        if value.abs() <= tolerance || hi - lo <= f64::EPSILON {
            return Ok(mid);
        }
        if value < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// For a graph whose acyclic induced sets reach `n / 2`: true means it is
/// not `q`-solvable, because `n < 2 alpha (q - 1)`.
pub fn half_acyclic_check(n: usize, q: usize) -> Result<bool> {
    let alpha = alpha_constant(1e-12)?;
    Ok((n as f64) < 2.0 * alpha * (q as f64 - 1.0))
}

/// Evidence that a digraph is not `q`-solvable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Counting bound with a certified acyclic induced set.
    CountingBound {
        n: usize,
        witness: Vec<usize>,
        q: usize,
    },
    /// A semibipartite partition with `|L| <= q - 2`.
    Semibipartite {
        partition: SemibipartitePartition,
        q: usize,
    },
    /// Declared external fact: undirected trees are not 3-solvable (and so
    /// not solvable for any larger alphabet).
    TreeAxiom { q: usize },
    /// The exact search exhausted every strategy.
    ExhaustedSearch { q: usize, nodes: u64 },
}

impl Certificate {
    /// One-line machine-readable form.
    pub fn line(&self) -> String {
        match self {
            Certificate::CountingBound { n, witness, q } => {
                format!("certificate counting-bound n={n} I={} q={q}", witness.len())
            }
            Certificate::Semibipartite { partition, q } => {
                let ids: Vec<String> = partition.left.iter().map(|v| v.to_string()).collect();
                format!("certificate semibipartite L={} q={q}", ids.join(","))
            }
            Certificate::TreeAxiom { .. } => "certificate axiom trees-not-3solvable".into(),
            Certificate::ExhaustedSearch { q, nodes } => {
                format!("certificate exhausted-search q={q} nodes={nodes}")
            }
        }
    }
}

/// Tries the counting bound and then the semibipartite theorem on `g`.
/// Both need the subset searches, so `g` must fit under `cap`.
pub fn certify_not_solvable(g: &Digraph, q: usize, cap: usize) -> Result<Option<Certificate>> {
    let acyclic = g.max_acyclic_induced(cap)?;
    if counting_bound_check(g.vertex_count(), acyclic.size, q)? {
        return Ok(Some(Certificate::CountingBound {
            n: g.vertex_count(),
            witness: acyclic.vertices,
            q,
        }));
    }
    if let Some(partition) = g.min_semibipartite(cap)? {
        if partition.m() + 2 <= q {
            return Ok(Some(Certificate::Semibipartite { partition, q }));
        }
    }
    Ok(None)
}

fn validate_partition(g: &Digraph, p: &SemibipartitePartition) -> Result<()> {
    let n = g.vertex_count();
    let mut side = vec![0u8; n];
    for &v in p.left.iter().chain(&p.right_order) {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        side[v] += 1;
    }
    if side.iter().any(|&c| c != 1) {
        return Err(Error::Precondition("L and R do not partition the vertices".into()));
    }
    let mut position = vec![usize::MAX; n];
    for (t, &v) in p.right_order.iter().enumerate() {
        position[v] = t;
    }
    for &(u, v) in g.arcs() {
        let (pu, pv) = (position[u], position[v]);
        if pu == usize::MAX && pv == usize::MAX {
            return Err(Error::Precondition(format!("arc {u} -> {v} inside L")));
        }
        if pu != usize::MAX && pv != usize::MAX && pu >= pv {
            return Err(Error::Precondition(format!(
                "arc {u} -> {v} points backwards in the order of R"
            )));
        }
    }
    Ok(())
}

/// Builds a configuration that every vertex of `g` guesses wrong under `f`,
/// given a semibipartite partition with `|L| <= q - 2`.
///
/// `R` is coloured along its topological order, each vertex avoiding the
/// guesses it would make while `L` wears any constant colour `a != 0`; then
/// `L` wears a constant nonzero colour none of its vertices guesses.
pub fn semibipartite_refute(
    g: &Digraph,
    partition: &SemibipartitePartition,
    f: &Strategy,
    q: usize,
) -> Result<HatConfig> {
    f.check_shape(g, q)?;
    validate_partition(g, partition)?;
    if partition.m() + 2 > q {
        return Err(Error::Precondition(format!(
            "|L| = {} exceeds q - 2 = {}",
            partition.m(),
            q as isize - 2
        )));
    }
    let mut x = vec![0u8; g.vertex_count()];
    for &r in &partition.right_order {
        let mut blocked = 0u64;
        for a in 1..q as u8 {
            for &l in &partition.left {
                x[l] = a;
            }
            blocked |= 1 << f.guess(r, &x);
        }
        x[r] = (!blocked).trailing_zeros() as u8;
        debug_assert!((x[r] as usize) < q);
    }
    let mut blocked = 1u64;
    for &l in &partition.left {
        blocked |= 1 << f.guess(l, &x);
    }
    let b = (!blocked).trailing_zeros() as u8;
    debug_assert!((b as usize) < q);
    for &l in &partition.left {
        x[l] = b;
    }
    assert_eq!(
        f.correct_count(&x),
        0,
        "semibipartite adversary failed on {x:?}"
    );
    HatConfig::new(q, x)
}
