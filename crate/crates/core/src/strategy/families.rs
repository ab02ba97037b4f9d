//! Blown-up bipartite families: few vertices per colour with small clique
//! number. Graphs are always built; strategies are attached only when the
//! guess tables fit under [`MAX_TABLE_ENTRIES`](super::MAX_TABLE_ENTRIES).

use num_rational::Ratio;

use super::{bipartite_strategy, blowup_strategy, k22_strategy, MAX_ALPHABET};
use crate::error::{Error, Result};
use crate::graph::{Digraph, NamedGraph};
use crate::strategy::Strategy;

/// Largest product graph the family constructors will materialise.
const MAX_FAMILY_VERTICES: usize = 100_000;

/// Which `p`-solvable bipartite base graph is blown up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsilonRoute {
    /// `K_{p-1,(p-1)^(p-1)}` with the bipartite strategy.
    Bipartite,
    /// `K_{2,2}` over three colours; requires `p = 3`.
    K22,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    /// Alphabet of the base game.
    pub p: usize,
    /// Blow-up factor.
    pub r: usize,
    /// Requested alphabet.
    pub q: usize,
    /// Alphabet actually solved, `p * r >= q`.
    pub q_effective: usize,
    pub base_vertex_count: usize,
    pub vertex_count: usize,
    pub clique_number: usize,
    /// The family's clique-number requirement holds.
    pub clique_ok: bool,
    /// The family's vertex-count bound holds.
    pub vertex_bound_ok: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Digraph,
    pub strategy: Option<Strategy>,
    pub report: ConstructionReport,
}

fn bipartite_base(p: usize) -> Result<(Digraph, Option<Strategy>)> {
    match bipartite_strategy(p) {
        Ok((g, s)) => Ok((g, Some(s))),
        Err(Error::TableTooLarge { .. }) => {
            let m = p - 1;
            let g = NamedGraph::CompleteBipartite(m, m.pow(m as u32)).build()?;
            Ok((g, None))
        }
        Err(e) => Err(e),
    }
}

fn blow_up(base: Digraph, strategy: Option<Strategy>, r: usize) -> Result<(Digraph, Option<Strategy>, Vec<String>)> {
    if base.vertex_count() * r > MAX_FAMILY_VERTICES {
        return Err(Error::Infeasible(format!(
            "product would have {} vertices",
            base.vertex_count() * r
        )));
    }
    let mut notes = Vec::new();
    if let Some(f) = strategy {
        match blowup_strategy(&base, &f, r) {
            Ok((g, s)) => return Ok((g, Some(s), notes)),
            Err(Error::TableTooLarge { entries, .. }) => {
                notes.push(format!("strategy omitted: a guess table needs {entries} entries"));
            }
            Err(e) => return Err(e),
        }
    } else {
        notes.push("strategy omitted: base strategy tables too large".into());
    }
    Ok((base.lex_product(r)?, None, notes))
}

/// Blow-up of a bipartite `p`-solvable graph with clique number at most
/// `eps * q'`, where `q' = p * ceil(q / p)`. Uses `p = ceil(2 / eps)`, the
/// smallest base alphabet for which the blown-up clique number `2 q' / p`
/// stays within `eps * q'`.
pub fn construct_epsilon(q: usize, eps: Ratio<u64>, route: EpsilonRoute) -> Result<Construction> {
    if *eps.numer() == 0 || eps > Ratio::from_integer(1) {
        return Err(Error::Precondition(format!("epsilon must lie in (0, 1], got {eps}")));
    }
    if q < 2 {
        return Err(Error::AlphabetOutOfRange { q, cap: MAX_ALPHABET });
    }
    let two_over = Ratio::from_integer(2) / eps;
    let p = (two_over.ceil().to_integer() as usize).max(2);
    let r = q.div_ceil(p);
    let q_effective = p * r;
    if q_effective > MAX_ALPHABET {
        return Err(Error::Infeasible(format!(
            "effective alphabet {q_effective} exceeds {MAX_ALPHABET}"
        )));
    }
    let (base, base_strategy) = match route {
        EpsilonRoute::Bipartite => bipartite_base(p)?,
        EpsilonRoute::K22 => {
            if p != 3 {
                return Err(Error::Infeasible(format!(
                    "the K_2,2 route needs p = 3, epsilon {eps} gives p = {p}"
                )));
            }
            let (g, s) = k22_strategy()?;
            (g, Some(s))
        }
    };
    let base_vertex_count = base.vertex_count();
    let (graph, strategy, notes) = blow_up(base, base_strategy, r)?;
    // complete bipartite bases have clique number 2
    let clique_number = 2 * r;
    let clique_ok = Ratio::from_integer(clique_number as u64)
        <= eps * Ratio::from_integer(q_effective as u64);
    let vertex_count = graph.vertex_count();
    Ok(Construction {
        report: ConstructionReport {
            p,
            r,
            q,
            q_effective,
            base_vertex_count,
            vertex_count,
            clique_number,
            clique_ok,
            vertex_bound_ok: vertex_count == base_vertex_count * q_effective / p,
            notes,
        },
        graph,
        strategy,
    })
}

/// `K_omega`-free blow-up of the bipartite construction with
/// `p = floor(2 q / omega) + 1`. `clique_ok` records `2 ceil(q/p) < omega`,
/// `vertex_bound_ok` records `n <= q (p-1)^(p-1)`; `within_poly_bound`
/// in the notes records `n <= q^(2m+1)`.
pub fn construct_kfree(q: usize, omega: usize, m: u32) -> Result<Construction> {
    if omega < 2 {
        return Err(Error::Precondition(format!("omega must be >= 2, got {omega}")));
    }
    if q < 2 {
        return Err(Error::AlphabetOutOfRange { q, cap: MAX_ALPHABET });
    }
    let p = 2 * q / omega + 1;
    if p < 2 {
        return Err(Error::Infeasible(format!(
            "p = floor(2q/omega) + 1 = {p} < 2 for q = {q}, omega = {omega}"
        )));
    }
    let r = q.div_ceil(p);
    let q_effective = p * r;
    let side = (p - 1)
        .checked_pow(p as u32 - 1)
        .ok_or_else(|| Error::Infeasible(format!("(p-1)^(p-1) overflows for p = {p}")))?;
    if (side + p - 1).saturating_mul(r) > MAX_FAMILY_VERTICES {
        return Err(Error::Infeasible(format!(
            "product would have {} vertices",
            (side + p - 1).saturating_mul(r)
        )));
    }
    let (base, base_strategy) = if q_effective <= MAX_ALPHABET {
        bipartite_base(p)?
    } else {
        (NamedGraph::CompleteBipartite(p - 1, side).build()?, None)
    };
    let base_vertex_count = base.vertex_count();
    let (graph, strategy, mut notes) = blow_up(base, base_strategy, r)?;
    let vertex_count = graph.vertex_count();
    let clique_number = 2 * r;
    let poly = (q as u128)
        .checked_pow(2 * m + 1)
        .is_none_or(|b| vertex_count as u128 <= b);
    notes.push(format!("within_poly_bound {poly}"));
    Ok(Construction {
        report: ConstructionReport {
            p,
            r,
            q,
            q_effective,
            base_vertex_count,
            vertex_count,
            clique_number,
            clique_ok: clique_number < omega,
            vertex_bound_ok: vertex_count <= q * side,
            notes,
        },
        graph,
        strategy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_two_thirds_via_k22() {
        let c = construct_epsilon(6, Ratio::new(2, 3), EpsilonRoute::K22).unwrap();
        assert_eq!((c.report.p, c.report.r, c.report.q_effective), (3, 2, 6));
        assert_eq!(c.report.vertex_count, 8);
        assert_eq!(c.report.clique_number, 4);
        assert!(c.report.clique_ok);
        assert!(c.strategy.is_some());
        assert_eq!(c.graph.clique_number(20).unwrap(), 4);
    }

    #[test]
    fn epsilon_one() {
        let c = construct_epsilon(4, Ratio::new(1, 1), EpsilonRoute::Bipartite).unwrap();
        assert_eq!((c.report.p, c.report.r), (2, 2));
        assert_eq!(c.report.vertex_count, 4);
        assert_eq!(c.report.clique_number, 4);
        assert!(c.report.vertex_bound_ok);
    }

    #[test]
    fn epsilon_rounds_q_up() {
        let c = construct_epsilon(5, Ratio::new(2, 3), EpsilonRoute::Bipartite).unwrap();
        assert_eq!((c.report.p, c.report.r, c.report.q_effective), (3, 2, 6));
        assert_eq!(c.report.vertex_count, 12);
        assert!(c.report.clique_ok);
        assert!(c.report.vertex_bound_ok);
        // left vertices of (K_{2,4}, 2) would need 6^9 entries each
        assert!(c.strategy.is_none());
    }

    #[test]
    fn epsilon_errors() {
        assert!(construct_epsilon(6, Ratio::new(0, 1), EpsilonRoute::Bipartite).is_err());
        assert!(construct_epsilon(6, Ratio::new(3, 2), EpsilonRoute::Bipartite).is_err());
        assert!(construct_epsilon(6, Ratio::new(1, 1), EpsilonRoute::K22).is_err());
        assert!(construct_epsilon(64, Ratio::new(1, 40), EpsilonRoute::Bipartite).is_err());
    }

    #[test]
    fn kfree_examples() {
        let c = construct_kfree(4, 5, 1).unwrap();
        assert_eq!((c.report.p, c.report.r), (2, 2));
        assert_eq!(c.report.vertex_count, 4);
        assert_eq!(c.report.clique_number, 4);
        assert!(c.report.clique_ok);
        assert!(c.strategy.is_some());

        let c = construct_kfree(6, 5, 1).unwrap();
        assert_eq!((c.report.p, c.report.r), (3, 2));
        assert_eq!(c.report.vertex_count, 12);
        assert!(c.report.clique_ok);
        assert!(c.report.vertex_bound_ok);
        assert!(c.report.vertex_count <= 6 * 2usize.pow(2));
        assert_eq!(c.graph.clique_number(20).unwrap(), 4);
    }

    #[test]
    fn kfree_errors() {
        assert!(construct_kfree(4, 1, 1).is_err());
    }
}
