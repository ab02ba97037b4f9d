//! Complete backtracking over guess tables, organised as a covering
//! problem: every configuration must be covered by some vertex whose table
//! entry at that configuration equals its own colour.
//!
//! Each table entry carries a bitmask of still-allowed guesses. A node picks
//! the uncovered configuration with the fewest remaining coverers and
//! branches over them; branch `k` fixes coverer `k` and forbids coverers
//! `0..k`, so the branches partition the remaining strategy space.
//! Configurations with a single remaining coverer are forced without
//! branching.

use std::time::{Duration, Instant};

use crate::error::Result;
use crate::graph::Digraph;
use crate::strategy::{check_alphabet, Strategy};
use crate::verify::{config_space, verify, VerifyOptions};

/// Largest configuration space the exact search accepts.
const MAX_SEARCH_CONFIGS: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_nodes: 1_000_000,
            max_seconds: 60.0,
        }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// A strategy with an empty losing set.
    Solvable(Strategy),
    /// The whole strategy space was exhausted.
    Unsolvable,
    /// The budget ran out first.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub outcome: SolveOutcome,
    pub nodes: u64,
}

enum Step {
    Found(Vec<u64>),
    Fail,
    OutOfBudget,
}

struct Search {
    /// Per configuration: `(entry, colour)` for each vertex.
    cover: Vec<Vec<(u32, u8)>>,
    nodes: u64,
    max_nodes: u64,
    deadline: Instant,
}

impl Search {
    fn node(&mut self, domains: &mut Vec<u64>) -> Step {
        self.nodes += 1;
        if self.nodes > self.max_nodes
            || (self.nodes.is_multiple_of(1024) && Instant::now() >= self.deadline)
        {
            return Step::OutOfBudget;
        }
        let branch_on = loop {
            let mut forced = None;
            let mut best: Option<(usize, u32)> = None;
            for (c, options) in self.cover.iter().enumerate() {
                let mut count = 0u32;
                let mut last = (0u32, 0u8);
                let mut covered = false;
                for &(e, colour) in options {
                    let d = domains[e as usize];
                    if d >> colour & 1 == 1 {
                        if d == 1 << colour {
                            covered = true;
                            break;
                        }
                        count += 1;
                        last = (e, colour);
                    }
                }
                if covered {
                    continue;
                }
                match count {
                    0 => return Step::Fail,
                    1 => {
                        forced = Some(last);
                        break;
                    }
                    _ => {
                        if best.is_none_or(|(_, k)| count < k) {
                            best = Some((c, count));
                        }
                    }
                }
            }
            match (forced, best) {
                (Some((e, colour)), _) => domains[e as usize] = 1 << colour,
                (None, None) => return Step::Found(domains.clone()),
                (None, Some((c, _))) => break c,
            }
        };
        let options: Vec<(u32, u8)> = self.cover[branch_on]
            .iter()
            .copied()
            .filter(|&(e, colour)| domains[e as usize] >> colour & 1 == 1)
            .collect();
        for (e, colour) in options {
            let saved = domains.clone();
            domains[e as usize] = 1 << colour;
            match self.node(domains) {
                Step::Fail => {}
                other => return other,
            }
            *domains = saved;
            domains[e as usize] &= !(1 << colour);
            if domains[e as usize] == 0 {
                return Step::Fail;
            }
        }
        Step::Fail
    }
}

/// Decides `q`-solvability of `g` by complete search. `Unsolvable` is only
/// reported after the search space is exhausted; running out of budget
/// gives `Unknown`.
pub fn exact_solve(g: &Digraph, q: usize, budget: SearchBudget) -> Result<SolveReport> {
    check_alphabet(q)?;
    let n = g.vertex_count();
    let total = config_space(n, q, MAX_SEARCH_CONFIGS)?;
    let mut offsets = Vec::with_capacity(n);
    let mut entries = 0usize;
    for v in 0..n {
        offsets.push(entries);
        entries += q.pow(g.in_degree(v) as u32);
    }
    let mut cover = Vec::with_capacity(total as usize);
    let mut x = vec![0u8; n];
    for mut rank in 0..total {
        for c in x.iter_mut().rev() {
            *c = (rank % q as u64) as u8;
            rank /= q as u64;
        }
        let options = (0..n)
            .map(|v| {
                let idx = g
                    .in_neighbours(v)
                    .iter()
                    .fold(0usize, |acc, &u| acc * q + x[u] as usize);
                ((offsets[v] + idx) as u32, x[v])
            })
            .collect();
        cover.push(options);
    }
    let full = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
    let mut domains = vec![full; entries];
    let mut search = Search {
        cover,
        nodes: 0,
        max_nodes: budget.max_nodes,
        deadline: Instant::now() + Duration::from_secs_f64(budget.max_seconds.max(0.0)),
    };
    let outcome = match search.node(&mut domains) {
        Step::Found(domains) => {
            let strategy = Strategy::tabulate(g, q, |v, x| {
                let idx = g
                    .in_neighbours(v)
                    .iter()
                    .fold(0usize, |acc, &u| acc * q + x[u] as usize);
                domains[offsets[v] + idx].trailing_zeros() as usize
            })?;
            let verdict = verify(g, q, &strategy, &VerifyOptions::sequential())?;
            assert!(verdict.is_solved(), "exact search produced a non-solving strategy");
            SolveOutcome::Solvable(strategy)
        }
        Step::Fail => SolveOutcome::Unsolvable,
        Step::OutOfBudget => SolveOutcome::Unknown,
    };
    Ok(SolveReport {
        outcome,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn solve(g: &Digraph, q: usize) -> SolveOutcome {
        exact_solve(g, q, SearchBudget::nodes(1_000_000)).unwrap().outcome
    }

    #[test]
    fn single_vertex_is_never_solvable() {
        let g = Digraph::new(1, []).unwrap();
        assert_eq!(solve(&g, 2), SolveOutcome::Unsolvable);
    }

    #[test]
    fn directed_triangle() {
        let c3 = NamedGraph::DirectedCycle(3).build().unwrap();
        assert!(matches!(solve(&c3, 2), SolveOutcome::Solvable(_)));
        assert_eq!(solve(&c3, 3), SolveOutcome::Unsolvable);
    }

    #[test]
    fn edge_over_two_and_three_colours() {
        let k2 = NamedGraph::Clique(2).build().unwrap();
        assert!(matches!(solve(&k2, 2), SolveOutcome::Solvable(_)));
        assert_eq!(solve(&k2, 3), SolveOutcome::Unsolvable);
    }

    #[test]
    fn tiny_budget_gives_unknown() {
        let c4 = NamedGraph::UndirectedCycle(4).build().unwrap();
        let r = exact_solve(&c4, 3, SearchBudget::nodes(3)).unwrap();
        assert_eq!(r.outcome, SolveOutcome::Unknown);
    }

    #[test]
    fn deterministic_node_counts() {
        let c3 = NamedGraph::DirectedCycle(3).build().unwrap();
        let a = exact_solve(&c3, 3, SearchBudget::default()).unwrap();
        let b = exact_solve(&c3, 3, SearchBudget::default()).unwrap();
        assert_eq!(a, b);
    }
}
