//! Gadgets and their composition into solvable oriented graphs.
//!
//! A gadget is a non-solvable digraph together with a strategy whose losing
//! configurations all satisfy `x_pivot = phi(x_rest)`, where `x_rest` lists
//! the remaining colours in ascending vertex order.

use std::collections::BTreeSet;

use super::{check_alphabet, modq, Strategy};
use crate::error::{Error, Result};
use crate::graph::{Digraph, NamedGraph};

/// Strategy matrix of the six-vertex 4-gadget: `f(x) = M x (mod 4)`.
pub(crate) const SIX_VERTEX_STRATEGY: [[i64; 6]; 6] = [
    [0, -1, 0, 0, 0, 1],
    [0, 0, -1, 1, 0, 0],
    [-1, 0, 0, 0, 1, 0],
    [-1, 0, 1, 0, 0, 1],
    [1, -1, 0, 1, 0, 0],
    [0, 1, -1, 0, 1, 0],
];

/// Every losing configuration of the six-vertex gadget satisfies
/// `RELATION . x = 2 (mod 4)`.
pub(crate) const SIX_VERTEX_RELATION: [i64; 6] = [2, 2, 2, 1, 1, 1];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    /// One vertex, two colours.
    Unit,
    /// Directed triangle, three colours.
    Cycle3,
    /// The six-vertex oriented graph, four colours.
    SixVertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Digraph,
    pub q: usize,
    pub strategy: Strategy,
    pub pivot: usize,
    /// `phi` over `[q]^(n-1)`, indexed big-endian by the non-pivot colours.
    pub phi: Vec<u8>,
}

impl Gadget {
    pub fn new(graph: Digraph, strategy: Strategy, pivot: usize, phi: Vec<u8>) -> Result<Self> {
        let q = strategy.q();
        strategy.check_shape(&graph, q)?;
        let n = graph.vertex_count();
        if pivot >= n {
            return Err(Error::VertexOutOfRange { vertex: pivot, n });
        }
        let expected = (q as u128).pow(n as u32 - 1);
        if phi.len() as u128 != expected || phi.iter().any(|&c| c as usize >= q) {
            return Err(Error::ShapeMismatch(format!(
                "phi must map [{q}]^{} into [{q}]",
                n - 1
            )));
        }
        Ok(Self {
            graph,
            q,
            strategy,
            pivot,
            phi,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Index into `phi` for the non-pivot colours of a full configuration.
    pub fn phi_index(&self, config: &[u8]) -> usize {
        config
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != self.pivot)
            .fold(0, |acc, (_, &c)| acc * self.q + c as usize)
    }

    /// `phi` evaluated on the non-pivot colours of a full configuration.
    pub fn phi_at(&self, config: &[u8]) -> u8 {
        self.phi[self.phi_index(config)]
    }
}

/// Tabulates `phi` from a closure over full configurations (pivot slot 0).
fn tabulate_phi(n: usize, q: usize, pivot: usize, rule: impl Fn(&[u8]) -> usize) -> Vec<u8> {
    let len = q.pow(n as u32 - 1);
    let mut config = vec![0u8; n];
    let rest: Vec<usize> = (0..n).filter(|&v| v != pivot).collect();
    (0..len)
        .map(|mut rank| {
            for &v in rest.iter().rev() {
                config[v] = (rank % q) as u8;
                rank /= q;
            }
            rule(&config) as u8
        })
        .collect()
}

pub fn make_gadget(kind: GadgetKind) -> Result<Gadget> {
    match kind {
        GadgetKind::Unit => {
            let graph = Digraph::new(1, [])?.with_name("unit_gadget");
            let strategy = Strategy::tabulate(&graph, 2, |_, _| 0)?;
            Gadget::new(graph, strategy, 0, vec![1])
        }
        GadgetKind::Cycle3 => {
            let graph = NamedGraph::DirectedCycle(3).build()?;
            let strategy = Strategy::tabulate(&graph, 3, |v, x| x[(v + 2) % 3] as usize)?;
            let phi = tabulate_phi(3, 3, 0, |x| modq(-(x[1] as i64) - x[2] as i64, 3));
            Gadget::new(graph, strategy, 0, phi)
        }
        GadgetKind::SixVertex => {
            let graph = NamedGraph::SixVertexGadget.build()?;
            let strategy = Strategy::tabulate(&graph, 4, |v, x| {
                let dot: i64 = (0..6).map(|j| SIX_VERTEX_STRATEGY[v][j] * x[j] as i64).sum();
                modq(dot, 4)
            })?;
            let pivot = 4;
            let phi = tabulate_phi(6, 4, pivot, |x| {
                let rest: i64 = (0..6)
                    .filter(|&j| j != pivot)
                    .map(|j| SIX_VERTEX_RELATION[j] * x[j] as i64)
                    .sum();
                modq(2 - rest, 4)
            });
            Gadget::new(graph, strategy, pivot, phi)
        }
    }
}

#[derive(Clone, Copy)]
enum Role {
    Tournament(usize),
    Copy { i: usize, base: usize, local: usize },
}

/// Builds the `p`-solvable oriented graph from a `p`-gadget on `n` vertices:
/// a transitive tournament `0..p` (arcs `i -> j` for `i < j`) and, for each
/// `i > j`, a gadget copy `D_{i,j}` fed by `i` and feeding `j`. Copies are
/// laid out after the tournament in lexicographic `(i, j)` order, `n`
/// consecutive ids each. Total `n p (p - 1) / 2 + p` vertices.
pub fn gadget_compose(p: usize, gadget: &Gadget) -> Result<(Digraph, Strategy)> {
    check_alphabet(p)?;
    if gadget.q != p {
        return Err(Error::ShapeMismatch(format!(
            "gadget alphabet mismatch: gadget is over {} colours, composition over {p}",
            gadget.q
        )));
    }
    let n = gadget.vertex_count();
    let pairs: Vec<(usize, usize)> = (0..p).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    let total = p + n * pairs.len();
    let copy_base = move |k: usize| p + n * k;

    let mut arcs = BTreeSet::new();
    let mut roles: Vec<Role> = (0..p).map(Role::Tournament).collect();
    for i in 0..p {
        for j in i + 1..p {
            arcs.insert((i, j));
        }
    }
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let base = copy_base(k);
        for &(u, v) in gadget.graph.arcs() {
            arcs.insert((base + u, base + v));
        }
        for local in 0..n {
            arcs.insert((i, base + local));
            arcs.insert((base + local, j));
            roles.push(Role::Copy { i, base, local });
        }
    }
    let graph = Digraph::from_arc_set(total, arcs).with_name(format!(
        "gadget_compose({p},{})",
        gadget.graph.name().unwrap_or("gadget")
    ));

    let pivot = gadget.pivot;
    let gadget = gadget.clone();
    // the tournament vertices read whole gadget copies, so their tables are
    // usually too big to store and stay formulas
    let strategy = Strategy::from_formula(&graph, p, move |w, x| match roles[w] {
        Role::Tournament(j) => {
            let mut guess = j as i64 - (0..j).map(|k| x[k] as i64).sum::<i64>();
            for (k, &(i, jj)) in pairs.iter().enumerate() {
                if jj == j {
                    debug_assert!(i > j);
                    let local = &x[copy_base(k)..copy_base(k) + n];
                    guess -= gadget.phi_at(local) as i64 - local[pivot] as i64;
                }
            }
            modq(guess, p)
        }
        Role::Copy { i, base, local } => {
            let mut view = x[base..base + n].to_vec();
            if local == pivot {
                modq(gadget.strategy.guess(pivot, &view) as i64 - x[i] as i64, p)
            } else {
                view[pivot] = modq(view[pivot] as i64 + x[i] as i64, p) as u8;
                gadget.strategy.guess(local, &view) as usize
            }
        }
    })?;
    Ok((graph, strategy))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle3_strategy_and_phi() {
        let g = make_gadget(GadgetKind::Cycle3).unwrap();
        assert_eq!(g.strategy.guesses(&[0, 1, 2]), vec![2, 0, 1]);
        assert_eq!(g.phi_at(&[0, 1, 2]), 0);
        assert_eq!(g.phi_at(&[9, 0, 2]), 1);
        assert_eq!(g.phi_at(&[9, 0, 1]), 2);
        assert_eq!(g.strategy.correct_count(&[0, 0, 1]), 1);
    }

    #[test]
    fn six_vertex_strategy_respects_the_in_matrix() {
        let g = make_gadget(GadgetKind::SixVertex).unwrap();
        assert_eq!(g.pivot, 4);
        assert_eq!(g.phi.len(), 1024);
        // the matrix support is exactly the in-neighbourhood
        for (v, row) in SIX_VERTEX_STRATEGY.iter().enumerate() {
            let support: Vec<usize> = (0..6).filter(|&j| row[j] != 0).collect();
            assert_eq!(support, g.graph.in_neighbours(v));
        }
    }

    #[test]
    fn composition_sizes() {
        for (kind, p, n) in [
            (GadgetKind::Unit, 2, 1),
            (GadgetKind::Cycle3, 3, 3),
            (GadgetKind::SixVertex, 4, 6),
        ] {
            let gadget = make_gadget(kind).unwrap();
            let (g, s) = gadget_compose(p, &gadget).unwrap();
            assert_eq!(g.vertex_count(), n * p * (p - 1) / 2 + p);
            assert!(g.is_oriented());
            s.check_shape(&g, p).unwrap();
            assert_eq!(s.is_tabulated(), p < 4);
        }
    }

    #[test]
    fn composition_rejects_alphabet_mismatch() {
        let gadget = make_gadget(GadgetKind::Cycle3).unwrap();
        assert!(matches!(gadget_compose(4, &gadget), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn gadget_constructor_validates_phi() {
        let g = make_gadget(GadgetKind::Cycle3).unwrap();
        assert!(Gadget::new(g.graph.clone(), g.strategy.clone(), 0, vec![0; 8]).is_err());
        assert!(Gadget::new(g.graph.clone(), g.strategy.clone(), 3, g.phi.clone()).is_err());
    }
}
