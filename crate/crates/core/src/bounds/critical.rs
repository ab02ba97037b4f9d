use super::{certify_not_solvable, Certificate};
use crate::error::{Error, Result};
use crate::graph::{Digraph, DEFAULT_SUBSET_CAP};
use crate::search::{exact_solve, SearchBudget, SolveOutcome};
use crate::strategy::Strategy;
use crate::verify::{verify, Verdict, VerifyOptions};

/// Externally sourced facts the checker may rely on. Each one is off unless
/// switched on explicitly.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Axioms {
    /// Undirected trees (hence forests) are not 3-solvable.
    pub trees_not_3solvable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Criticality {
    /// The strategy solves the graph and every edge deletion is certified
    /// non-solvable.
    EdgeCritical,
    NotEdgeCritical(String),
    /// Edges whose deletion could not be certified.
    Inconclusive(Vec<(usize, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFinding {
    pub edge: (usize, usize),
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityReport {
    pub outcome: Criticality,
    pub edges: Vec<EdgeFinding>,
}

impl CriticalityReport {
    /// One line per examined edge, then the outcome.
    pub fn report(&self) -> String {
        let mut out = String::new();
        for finding in &self.edges {
            let (u, v) = finding.edge;
            match &finding.certificate {
                Some(cert) => out.push_str(&format!("{} edge={u}-{v}\n", cert.line())),
                None => out.push_str(&format!("uncertified edge={u}-{v}\n")),
            }
        }
        match &self.outcome {
            Criticality::EdgeCritical => out.push_str("critical edge-critical\n"),
            Criticality::NotEdgeCritical(reason) => {
                out.push_str(&format!("critical not-edge-critical {reason}\n"))
            }
            Criticality::Inconclusive(missing) => {
                out.push_str(&format!("critical inconclusive missing={}\n", missing.len()))
            }
        }
        out
    }
}

/// Checks that `f` solves the undirected graph `g` and that deleting any
/// single edge leaves a non-solvable graph.
///
/// Certificates are tried in order: counting bound, semibipartite
/// partition, the tree axiom when enabled, and exact search within `budget`.
pub fn edge_critical_check(
    g: &Digraph,
    q: usize,
    f: &Strategy,
    axioms: Axioms,
    budget: SearchBudget,
    opts: &VerifyOptions,
) -> Result<CriticalityReport> {
    if !g.is_symmetric() {
        return Err(Error::Precondition("edge criticality needs an undirected graph".into()));
    }
    if let Verdict::NotSolvedBy { count, .. } = verify(g, q, f, opts)? {
        return Ok(CriticalityReport {
            outcome: Criticality::NotEdgeCritical(format!(
                "strategy-does-not-solve losing-count={count}"
            )),
            edges: Vec::new(),
        });
    }
    let mut edges = Vec::new();
    let mut missing = Vec::new();
    for (u, v) in g.undirected_edges() {
        let h = g.without_arcs(&[(u, v), (v, u)]);
        let mut certificate = if h.vertex_count() <= DEFAULT_SUBSET_CAP {
            certify_not_solvable(&h, q, DEFAULT_SUBSET_CAP)?
        } else {
            None
        };
        if certificate.is_none() && axioms.trees_not_3solvable && q >= 3 && h.is_undirected_forest() {
            certificate = Some(Certificate::TreeAxiom { q });
        }
        if certificate.is_none() {
            match exact_solve(&h, q, budget) {
                Ok(report) => match report.outcome {
                    SolveOutcome::Unsolvable => {
                        certificate = Some(Certificate::ExhaustedSearch {
                            q,
                            nodes: report.nodes,
                        })
                    }
                    SolveOutcome::Solvable(_) => {
                        edges.push(EdgeFinding {
                            edge: (u, v),
                            certificate: None,
                        });
                        return Ok(CriticalityReport {
                            outcome: Criticality::NotEdgeCritical(format!(
                                "edge {u}-{v} is removable"
                            )),
                            edges,
                        });
                    }
                    SolveOutcome::Unknown => {}
                },
                Err(Error::ConfigSpaceTooLarge { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        if certificate.is_none() {
            missing.push((u, v));
        }
        edges.push(EdgeFinding {
            edge: (u, v),
            certificate,
        });
    }
    let outcome = if missing.is_empty() {
        Criticality::EdgeCritical
    } else {
        Criticality::Inconclusive(missing)
    };
    Ok(CriticalityReport { outcome, edges })
}
