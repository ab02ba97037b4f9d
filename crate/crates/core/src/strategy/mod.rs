//! Guessing strategies as explicit per-vertex guess tables, and the
//! constructions that produce them.
//!
//! A vertex's table is indexed by the colours of its in-neighbours, read in
//! ascending vertex order with the first in-neighbour as the most
//! significant digit. Tables never see the owner's colour.

mod blowup;
mod classic;
mod codec;
mod families;
mod gadget;
mod text;

pub use blowup::blowup_strategy;
pub use classic::{
    bipartite_strategy, clique_partition_strategy, clique_strategy, cycle2_strategy,
    even_cycle_config, even_cycle_strategy, k22_matrices, k22_strategy, mat2_inverse_mod,
};
pub use codec::ColorPairCodec;
pub use families::{construct_epsilon, construct_kfree, Construction, ConstructionReport, EpsilonRoute};
pub use gadget::{gadget_compose, make_gadget, Gadget, GadgetKind};
pub use text::{parse_strategy, serialize_strategy};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 64;
/// Largest number of entries a single strategy may tabulate across all vertices.
pub const MAX_TABLE_ENTRIES: u64 = 20_000_000;

pub(crate) fn check_alphabet(q: usize) -> Result<()> {
    if !(2..=MAX_ALPHABET).contains(&q) {
        return Err(Error::AlphabetOutOfRange {
            q,
            cap: MAX_ALPHABET,
        });
    }
    Ok(())
}

/// `x mod q` into `0..q`.
pub(crate) fn modq(x: i64, q: usize) -> usize {
    x.rem_euclid(q as i64) as usize
}

/// One hat colouring in `[q]^n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HatConfig {
    q: usize,
    values: Vec<u8>,
}

impl HatConfig {
    pub fn new(q: usize, values: Vec<u8>) -> Result<Self> {
        check_alphabet(q)?;
        if let Some(&bad) = values.iter().find(|&&c| c as usize >= q) {
            return Err(Error::ShapeMismatch(format!("colour {bad} outside [{q}]")));
        }
        Ok(Self { q, values })
    }

    pub(crate) fn from_raw(q: usize, values: Vec<u8>) -> Self {
        Self { q, values }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for HatConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A guess computed from the full configuration. It must only read the
/// in-neighbours of the vertex it is asked about.
pub type Formula = Arc<dyn Fn(usize, &[u8]) -> usize + Send + Sync>;

#[derive(Clone)]
enum Body {
    Table(Vec<u8>),
    Formula(Formula),
}

/// The guess rule of one vertex: a table, or a formula when the table would
/// be too large to store.
#[derive(Clone)]
pub struct LocalRule {
    sees: Vec<usize>,
    body: Body,
}

impl LocalRule {
    pub fn sees(&self) -> &[usize] {
        &self.sees
    }

    /// The guess table, `None` for formula rules.
    pub fn table(&self) -> Option<&[u8]> {
        match &self.body {
            Body::Table(t) => Some(t),
            Body::Formula(_) => None,
        }
    }
}

impl PartialEq for LocalRule {
    fn eq(&self, other: &Self) -> bool {
        self.sees == other.sees
            && match (&self.body, &other.body) {
                (Body::Table(a), Body::Table(b)) => a == b,
                (Body::Formula(a), Body::Formula(b)) => Arc::ptr_eq(a, b),
                _ => false,
            }
    }
}

impl Eq for LocalRule {}

impl fmt::Debug for LocalRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("LocalRule");
        d.field("sees", &self.sees);
        match &self.body {
            Body::Table(t) => d.field("table", t),
            Body::Formula(_) => d.field("table", &"<formula>"),
        };
        d.finish()
    }
}

/// Largest single table built by [`Strategy::from_formula`]; bigger
/// neighbourhoods keep the formula.
pub const FORMULA_TABLE_CAP: u128 = 1 << 16;

/// A D-function over `[q]`, one rule per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strategy {
    q: usize,
    rules: Vec<LocalRule>,
}

fn table_len(q: usize, k: usize) -> u128 {
    (q as u128).pow(k as u32)
}

impl Strategy {
    /// Tabulates `rule(v, config)` for every vertex. `config` holds the
    /// in-neighbour colours of `v` and zeros elsewhere, so a rule that reads
    /// anything else sees a constant.
    pub fn tabulate<F>(g: &Digraph, q: usize, rule: F) -> Result<Self>
    where
        F: Fn(usize, &[u8]) -> usize,
    {
        check_alphabet(q)?;
        let n = g.vertex_count();
        let mut total = 0u128;
        for v in 0..n {
            let entries = table_len(q, g.in_degree(v));
            total += entries;
            if total > MAX_TABLE_ENTRIES as u128 {
                return Err(Error::TableTooLarge {
                    vertex: v,
                    entries,
                    cap: MAX_TABLE_ENTRIES,
                });
            }
        }
        let mut scratch = vec![0u8; n];
        let rules = (0..n)
            .map(|v| {
                let sees = g.in_neighbours(v).to_vec();
                let table = tabulate_one(q, v, &sees, &mut scratch, &rule);
                LocalRule {
                    sees,
                    body: Body::Table(table),
                }
            })
            .collect();
        Ok(Self { q, rules })
    }

    /// Like [`Strategy::tabulate`], but vertices whose table would exceed
    /// [`FORMULA_TABLE_CAP`] entries keep `rule` and evaluate it on demand.
    pub fn from_formula<F>(g: &Digraph, q: usize, rule: F) -> Result<Self>
    where
        F: Fn(usize, &[u8]) -> usize + Send + Sync + 'static,
    {
        check_alphabet(q)?;
        let n = g.vertex_count();
        let rule: Formula = Arc::new(rule);
        let mut scratch = vec![0u8; n];
        let mut total = 0u128;
        let rules = (0..n)
            .map(|v| {
                let sees = g.in_neighbours(v).to_vec();
                let len = table_len(q, sees.len());
                let body = if len <= FORMULA_TABLE_CAP && total + len <= MAX_TABLE_ENTRIES as u128 {
                    total += len;
                    Body::Table(tabulate_one(q, v, &sees, &mut scratch, &*rule))
                } else {
                    Body::Formula(rule.clone())
                };
                LocalRule { sees, body }
            })
            .collect();
        Ok(Self { q, rules })
    }

    /// True when every vertex has an explicit table.
    pub fn is_tabulated(&self) -> bool {
        self.rules.iter().all(|r| r.table().is_some())
    }

    /// Assembles a strategy from explicit `(sees, table)` pairs.
    pub fn from_tables(q: usize, rules: Vec<(Vec<usize>, Vec<u8>)>) -> Result<Self> {
        check_alphabet(q)?;
        let n = rules.len();
        let mut out = Vec::with_capacity(n);
        for (v, (sees, table)) in rules.into_iter().enumerate() {
            if sees.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::ShapeMismatch(format!(
                    "vertex {v}: in-neighbours must be strictly ascending"
                )));
            }
            if let Some(&u) = sees.iter().find(|&&u| u >= n || u == v) {
                return Err(Error::ShapeMismatch(format!(
                    "vertex {v}: invalid in-neighbour {u}"
                )));
            }
            if table.len() as u128 != table_len(q, sees.len()) {
                return Err(Error::ShapeMismatch(format!(
                    "vertex {v}: table has {} entries, expected {q}^{}",
                    table.len(),
                    sees.len()
                )));
            }
            if table.iter().any(|&g| g as usize >= q) {
                return Err(Error::ShapeMismatch(format!(
                    "vertex {v}: guess outside [{q}]"
                )));
            }
            out.push(LocalRule {
                sees,
                body: Body::Table(table),
            });
        }
        Ok(Self { q, rules: out })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn vertex_count(&self) -> usize {
        self.rules.len()
    }

    pub fn rule(&self, v: usize) -> &LocalRule {
        &self.rules[v]
    }

    pub fn rules(&self) -> &[LocalRule] {
        &self.rules
    }

    /// Total number of tabulated entries.
    pub fn table_entries(&self) -> usize {
        self.rules.iter().filter_map(|r| r.table()).map(<[u8]>::len).sum()
    }

    /// Fails unless the strategy is a D-function for `g` over `q` colours.
    pub fn check_shape(&self, g: &Digraph, q: usize) -> Result<()> {
        if self.q != q {
            return Err(Error::ShapeMismatch(format!(
                "strategy is over {} colours, expected {q}",
                self.q
            )));
        }
        if self.rules.len() != g.vertex_count() {
            return Err(Error::ShapeMismatch(format!(
                "strategy has {} vertices, graph has {}",
                self.rules.len(),
                g.vertex_count()
            )));
        }
        for (v, rule) in self.rules.iter().enumerate() {
            if rule.sees != g.in_neighbours(v) {
                return Err(Error::ShapeMismatch(format!(
                    "vertex {v} reads {:?} but its in-neighbourhood is {:?}",
                    rule.sees,
                    g.in_neighbours(v)
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn index(&self, v: usize, config: &[u8]) -> usize {
        self.rules[v]
            .sees
            .iter()
            .fold(0usize, |acc, &u| acc * self.q + config[u] as usize)
    }

    /// Guess of vertex `v` on a full configuration.
    pub fn guess(&self, v: usize, config: &[u8]) -> u8 {
        match &self.rules[v].body {
            Body::Table(t) => t[self.index(v, config)],
            Body::Formula(rule) => {
                let guess = rule(v, config);
                assert!(guess < self.q, "rule for vertex {v} guessed {guess} outside [{}]", self.q);
                guess as u8
            }
        }
    }

    pub fn guesses(&self, config: &[u8]) -> Vec<u8> {
        (0..self.rules.len()).map(|v| self.guess(v, config)).collect()
    }

    /// Number of vertices guessing their own colour correctly.
    pub fn correct_count(&self, config: &[u8]) -> usize {
        (0..self.rules.len())
            .filter(|&v| self.guess(v, config) == config[v])
            .count()
    }

    /// The same guesses on a supergraph: vertices read their enlarged
    /// in-neighbourhoods but ignore the new inputs.
    pub fn extend_to(&self, bigger: &Digraph) -> Result<Self> {
        if bigger.vertex_count() != self.rules.len() {
            return Err(Error::ShapeMismatch("vertex counts differ".into()));
        }
        for (v, rule) in self.rules.iter().enumerate() {
            if !rule.sees.iter().all(|u| bigger.in_neighbours(v).contains(u)) {
                return Err(Error::ShapeMismatch(format!(
                    "vertex {v} lost an in-neighbour"
                )));
            }
        }
        Self::tabulate(bigger, self.q, |v, config| self.guess(v, config) as usize)
    }
}

/// Table of one vertex; `scratch` must be zero on `sees` and is left so.
fn tabulate_one<F>(q: usize, v: usize, sees: &[usize], scratch: &mut [u8], rule: &F) -> Vec<u8>
where
    F: Fn(usize, &[u8]) -> usize + ?Sized,
{
    let len = table_len(q, sees.len()) as usize;
    let mut table = Vec::with_capacity(len);
    let mut digits = vec![0u8; sees.len()];
    for _ in 0..len {
        let guess = rule(v, scratch);
        assert!(guess < q, "rule for vertex {v} guessed {guess} outside [{q}]");
        table.push(guess as u8);
        // advance the tuple, last in-neighbour fastest
        for j in (0..digits.len()).rev() {
            digits[j] += 1;
            if (digits[j] as usize) < q {
                scratch[sees[j]] = digits[j];
                break;
            }
            digits[j] = 0;
            scratch[sees[j]] = 0;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    #[test]
    fn tabulation_uses_lexicographic_tuple_order() {
        let g = NamedGraph::Clique(3).build().unwrap();
        // vertex 0 sees (1, 2); record 3 * x1 + x2 to read back the index
        let s = Strategy::tabulate(&g, 3, |v, x| {
            if v == 0 {
                (x[1] as usize * 3 + x[2] as usize) % 3
            } else {
                0
            }
        })
        .unwrap();
        assert_eq!(s.rule(0).table().unwrap(), &[0, 1, 2, 0, 1, 2, 0, 1, 2]);
        assert_eq!(s.guess(0, &[2, 1, 2]), 2);
        assert_eq!(s.index(0, &[2, 1, 2]), 5);
    }

    #[test]
    fn table_cap_is_enforced() {
        let g = NamedGraph::Clique(10).build().unwrap();
        assert!(matches!(
            Strategy::tabulate(&g, 8, |_, _| 0),
            Err(Error::TableTooLarge { .. })
        ));
    }

    #[test]
    fn formula_rules_beyond_the_cap() {
        let g = NamedGraph::Clique(18).build().unwrap();
        let s = Strategy::from_formula(&g, 2, |v, x| {
            x.iter().enumerate().filter(|&(u, _)| u != v).map(|(_, &c)| c as usize).sum::<usize>() % 2
        })
        .unwrap();
        assert!(!s.is_tabulated());
        assert_eq!(s.table_entries(), 0);
        let x: Vec<u8> = (0..18).map(|i| (i % 3 == 0) as u8).collect();
        assert_eq!(s.guess(0, &x), 1);
        assert_eq!(s.guess(1, &x), 0);
        assert_eq!(s, s.clone());

        let small = NamedGraph::Clique(3).build().unwrap();
        let f = Strategy::from_formula(&small, 3, |v, x| (x[(v + 1) % 3] as usize + 1) % 3).unwrap();
        let t = Strategy::tabulate(&small, 3, |v, x| (x[(v + 1) % 3] as usize + 1) % 3).unwrap();
        assert!(f.is_tabulated());
        assert_eq!(f, t);
    }

    #[test]
    fn from_tables_validates() {
        assert!(Strategy::from_tables(2, vec![(vec![1], vec![0, 1]), (vec![0], vec![1, 1])]).is_ok());
        assert!(Strategy::from_tables(2, vec![(vec![1], vec![0]), (vec![], vec![0])]).is_err());
        assert!(Strategy::from_tables(2, vec![(vec![0], vec![0, 1])]).is_err());
        assert!(Strategy::from_tables(2, vec![(vec![], vec![2])]).is_err());
        assert!(Strategy::from_tables(1, vec![]).is_err());
    }

    #[test]
    fn shape_check_catches_wrong_neighbourhood() {
        let c3 = NamedGraph::DirectedCycle(3).build().unwrap();
        let k3 = NamedGraph::Clique(3).build().unwrap();
        let s = Strategy::tabulate(&c3, 2, |_, _| 0).unwrap();
        assert!(s.check_shape(&c3, 2).is_ok());
        assert!(s.check_shape(&c3, 3).is_err());
        assert!(s.check_shape(&k3, 2).is_err());
    }

    #[test]
    fn hat_config_display_and_validation() {
        let c = HatConfig::new(3, vec![0, 2, 1]).unwrap();
        assert_eq!(c.to_string(), "0 2 1");
        assert!(HatConfig::new(3, vec![3]).is_err());
    }
}
