use std::collections::BTreeSet;

use super::Digraph;
use crate::error::{Error, Result};

impl Digraph {
    /// Lexicographic product with the clique `K_r`: vertex `(v, a)` is
    /// numbered `v * r + a`, and `(u, a) -> (v, b)` is an arc iff `u -> v` is
    /// an arc or `u == v` and `a != b`.
    pub fn lex_product(&self, r: usize) -> Result<Digraph> {
        if r == 0 {
            return Err(Error::SizeOutOfRange("blow-up factor must be >= 1".into()));
        }
        let mut arcs = BTreeSet::new();
        for &(u, v) in self.arcs() {
            for a in 0..r {
                for b in 0..r {
                    arcs.insert((u * r + a, v * r + b));
                }
            }
        }
        for v in 0..self.vertex_count() {
            for a in 0..r {
                for b in 0..r {
                    if a != b {
                        arcs.insert((v * r + a, v * r + b));
                    }
                }
            }
        }
        let product = Digraph::from_arc_set(self.vertex_count() * r, arcs);
        Ok(match self.name() {
            Some(name) => product.with_name(format!("({name},{r})")),
            None => product,
        })
    }
}
