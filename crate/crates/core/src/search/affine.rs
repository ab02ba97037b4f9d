//! Enumeration of affine strategies `f(x) = M x + c (mod q)` with `M`
//! supported on the in-adjacency (zero diagonal), and of the gadgets among
//! them.
//!
//! Free slots are the arcs `u -> v` (entry `M[v][u]`) in ascending `(v, u)`
//! order followed by the offsets `c_0..c_{n-1}`. Candidates are ranked
//! big-endian over the slots and results come back in rank order.

use super::{exact_solve, SearchBudget, SolveOutcome};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::par::{map_chunks, Execution};
use crate::strategy::{check_alphabet, modq, Gadget, Strategy};
use crate::verify::{certify_gadget, config_space, verify, VerifyOptions, DEFAULT_MAX_CONFIGS};

/// Default cap on `candidates x configurations` work units.
pub const DEFAULT_MAX_CANDIDATES: u64 = 50_000_000;

const CANDIDATE_CHUNK: u64 = 1024;

/// Coefficient values allowed on each arc and whether offsets are free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineClass {
    pub coefficients: Vec<u8>,
    pub offsets: bool,
}

impl AffineClass {
    /// All of `Z_q` on every arc, free offsets.
    pub fn full(q: usize) -> Self {
        Self {
            coefficients: (0..q as u8).collect(),
            offsets: true,
        }
    }

    /// Only the given nonzero coefficients on every arc, zero offsets. Use
    /// this to reach larger graphs where the full class is out of budget.
    pub fn linear_with(coefficients: &[u8]) -> Self {
        Self {
            coefficients: coefficients.to_vec(),
            offsets: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineStrategy {
    /// Dense `n x n` coefficient matrix, row `v` is `f_v`.
    pub matrix: Vec<Vec<u8>>,
    pub offset: Vec<u8>,
    pub strategy: Strategy,
}

struct Space<'a> {
    g: &'a Digraph,
    q: usize,
    class: &'a AffineClass,
    arcs: Vec<(usize, usize)>,
    count: u64,
}

impl<'a> Space<'a> {
    fn new(g: &'a Digraph, q: usize, class: &'a AffineClass, max_work: u64) -> Result<Self> {
        check_alphabet(q)?;
        if class.coefficients.is_empty() || class.coefficients.iter().any(|&c| c as usize >= q) {
            return Err(Error::Precondition(format!(
                "coefficients must be a nonempty subset of [{q}]"
            )));
        }
        let n = g.vertex_count();
        let configs = config_space(n, q, DEFAULT_MAX_CONFIGS)?;
        let arcs: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| g.in_neighbours(v).iter().map(move |&u| (v, u)))
            .collect();
        let k = class.coefficients.len() as u128;
        let mut count = k.checked_pow(arcs.len() as u32).unwrap_or(u128::MAX);
        if class.offsets {
            count = count.saturating_mul((q as u128).pow(n as u32));
        }
        if count.saturating_mul(configs as u128) > max_work as u128 {
            return Err(Error::BudgetExceeded(format!(
                "{count} affine candidates over {configs} configurations"
            )));
        }
        Ok(Self {
            g,
            q,
            class,
            arcs,
            count: count as u64,
        })
    }

    fn decode(&self, mut rank: u64) -> (Vec<Vec<u8>>, Vec<u8>) {
        let n = self.g.vertex_count();
        let mut matrix = vec![vec![0u8; n]; n];
        let mut offset = vec![0u8; n];
        if self.class.offsets {
            for c in offset.iter_mut().rev() {
                *c = (rank % self.q as u64) as u8;
                rank /= self.q as u64;
            }
        }
        let k = self.class.coefficients.len() as u64;
        for &(v, u) in self.arcs.iter().rev() {
            matrix[v][u] = self.class.coefficients[(rank % k) as usize];
            rank /= k;
        }
        (matrix, offset)
    }

    /// Scans all configurations; `on_losing` may abort the scan by
    /// returning false. Returns whether the scan completed.
    fn scan(
        &self,
        matrix: &[Vec<u8>],
        offset: &[u8],
        mut on_losing: impl FnMut(&[u8]) -> bool,
    ) -> bool {
        let (n, q) = (self.g.vertex_count(), self.q);
        let total = q.pow(n as u32);
        let mut x = vec![0u8; n];
        for mut rank in 0..total {
            for c in x.iter_mut().rev() {
                *c = (rank % q) as u8;
                rank /= q;
            }
            let hit = (0..n).any(|v| {
                let s: usize = self
                    .g
                    .in_neighbours(v)
                    .iter()
                    .map(|&u| matrix[v][u] as usize * x[u] as usize)
                    .sum::<usize>()
                    + offset[v] as usize;
                s % q == x[v] as usize
            });
            if !hit && !on_losing(&x) {
                return false;
            }
        }
        true
    }

    fn tabulate(&self, matrix: &[Vec<u8>], offset: &[u8]) -> Result<Strategy> {
        Strategy::tabulate(self.g, self.q, |v, x| {
            let s: i64 = self
                .g
                .in_neighbours(v)
                .iter()
                .map(|&u| matrix[v][u] as i64 * x[u] as i64)
                .sum();
            modq(s + offset[v] as i64, self.q)
        })
    }

    fn chunks(&self) -> usize {
        self.count.div_ceil(CANDIDATE_CHUNK) as usize
    }

    fn chunk_ranks(&self, c: usize) -> std::ops::Range<u64> {
        let start = c as u64 * CANDIDATE_CHUNK;
        start..(start + CANDIDATE_CHUNK).min(self.count)
    }
}

/// All affine strategies in `class` that solve `g`, in rank order.
pub fn affine_strategy_search(
    g: &Digraph,
    q: usize,
    class: &AffineClass,
    max_work: u64,
    execution: Execution,
) -> Result<Vec<AffineStrategy>> {
    let space = Space::new(g, q, class, max_work)?;
    let solvers: Vec<u64> = map_chunks(space.chunks(), execution, |c| {
        space
            .chunk_ranks(c)
            .filter(|&rank| {
                let (m, off) = space.decode(rank);
                space.scan(&m, &off, |_| false)
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();
    solvers
        .into_iter()
        .map(|rank| {
            let (matrix, offset) = space.decode(rank);
            let strategy = space.tabulate(&matrix, &offset)?;
            debug_assert!(verify(g, q, &strategy, &VerifyOptions::sequential())?.is_solved());
            Ok(AffineStrategy {
                matrix,
                offset,
                strategy,
            })
        })
        .collect()
}

/// What is known about the solvability of the searched graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphStatus {
    /// Exact search exhausted the strategy space: proper gadgets.
    Unsolvable,
    /// Some strategy solves the graph, so it carries no gadget.
    Solvable,
    /// Solvability undecided within budget; gadgets found are weak.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundGadget {
    pub matrix: Vec<Vec<u8>>,
    pub offset: Vec<u8>,
    pub gadget: Gadget,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetSearch {
    pub status: GraphStatus,
    pub gadgets: Vec<FoundGadget>,
}

impl GadgetSearch {
    /// Gadgets whose graph is not known to be unsolvable.
    pub fn is_weak(&self) -> bool {
        self.status != GraphStatus::Unsolvable
    }
}

enum Candidate {
    Solver,
    Gadget(u64),
    Neither,
}

/// Affine strategies in `class` whose losing set is nonempty and pins the
/// pivot colour as a function of the others, each certified with
/// [`certify_gadget`]. The graph's own solvability is settled by affine
/// solvers or, failing that, by [`exact_solve`] within `budget`.
pub fn gadget_search(
    g: &Digraph,
    q: usize,
    pivot: usize,
    class: &AffineClass,
    max_work: u64,
    budget: SearchBudget,
    execution: Execution,
) -> Result<GadgetSearch> {
    let n = g.vertex_count();
    if pivot >= n {
        return Err(Error::VertexOutOfRange { vertex: pivot, n });
    }
    let space = Space::new(g, q, class, max_work)?;
    let phi_len = q.pow(n as u32 - 1);
    let phi_key = |x: &[u8]| {
        x.iter()
            .enumerate()
            .filter(|&(v, _)| v != pivot)
            .fold(0usize, |acc, (_, &c)| acc * q + c as usize)
    };
    let found: Vec<Candidate> = map_chunks(space.chunks(), execution, |c| {
        let mut table = vec![u8::MAX; phi_len];
        space
            .chunk_ranks(c)
            .map(|rank| {
                let (m, off) = space.decode(rank);
                table.fill(u8::MAX);
                let mut any = false;
                let complete = space.scan(&m, &off, |x| {
                    any = true;
                    let slot = &mut table[phi_key(x)];
                    if *slot == u8::MAX {
                        *slot = x[pivot];
                        true
                    } else {
                        *slot == x[pivot]
                    }
                });
                match (complete, any) {
                    (true, false) => Candidate::Solver,
                    (true, true) => Candidate::Gadget(rank),
                    (false, _) => Candidate::Neither,
                }
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    if found.iter().any(|c| matches!(c, Candidate::Solver)) {
        return Ok(GadgetSearch {
            status: GraphStatus::Solvable,
            gadgets: Vec::new(),
        });
    }
    let status = match exact_solve(g, q, budget) {
        Ok(report) => match report.outcome {
            SolveOutcome::Solvable(_) => GraphStatus::Solvable,
            SolveOutcome::Unsolvable => GraphStatus::Unsolvable,
            SolveOutcome::Unknown => GraphStatus::Unknown,
        },
        Err(Error::ConfigSpaceTooLarge { .. }) => GraphStatus::Unknown,
        Err(e) => return Err(e),
    };
    if status == GraphStatus::Solvable {
        return Ok(GadgetSearch {
            status,
            gadgets: Vec::new(),
        });
    }
    let mut gadgets = Vec::new();
    for candidate in found {
        let Candidate::Gadget(rank) = candidate else {
            continue;
        };
        let (matrix, offset) = space.decode(rank);
        let strategy = space.tabulate(&matrix, &offset)?;
        let provisional = Gadget::new(g.clone(), strategy, pivot, vec![0; phi_len])?;
        let phi = induced_phi(&provisional)?;
        let gadget = Gadget { phi, ..provisional };
        certify_gadget(&gadget, DEFAULT_MAX_CONFIGS)?;
        gadgets.push(FoundGadget {
            matrix,
            offset,
            gadget,
        });
    }
    Ok(GadgetSearch { status, gadgets })
}

/// `phi` read off the losing set, zero elsewhere.
fn induced_phi(gadget: &Gadget) -> Result<Vec<u8>> {
    let losing = crate::verify::losing_set(
        &gadget.graph,
        gadget.q,
        &gadget.strategy,
        DEFAULT_MAX_CONFIGS,
        Execution::Sequential,
    )?;
    let mut phi = vec![0u8; gadget.phi.len()];
    for x in &losing {
        phi[gadget.phi_index(x.values())] = x.values()[gadget.pivot];
    }
    Ok(phi)
}
