//! Exhaustive enumeration of `[q]^n` with incrementally maintained table
//! indices.
//!
//! Configurations are ranked big-endian (vertex `n-1` is the fastest digit),
//! so rank order is lexicographic order and the first losing configurations
//! met are the lexicographically smallest ones.

use crate::strategy::Strategy;

pub(crate) struct Engine<'a> {
    n: usize,
    q: usize,
    strategy: &'a Strategy,
    /// `None` marks a formula vertex, evaluated directly.
    tables: Vec<Option<&'a [u8]>>,
    /// `feeds[u]` lists `(v, weight)`: raising `x_u` by one moves the index
    /// of `v` by `weight`.
    feeds: Vec<Vec<(usize, usize)>>,
}

#[derive(Debug, Default)]
pub(crate) struct ChunkOutcome {
    pub losing: Vec<Vec<u8>>,
    pub losing_count: u64,
    pub correct_total: u64,
}

impl<'a> Engine<'a> {
    pub fn new(strategy: &'a Strategy) -> Self {
        let n = strategy.vertex_count();
        let q = strategy.q();
        let mut feeds = vec![Vec::new(); n];
        for (v, rule) in strategy.rules().iter().enumerate() {
            let k = rule.sees().len();
            for (j, &u) in rule.sees().iter().enumerate() {
                feeds[u].push((v, q.pow((k - 1 - j) as u32)));
            }
        }
        Self {
            n,
            q,
            strategy,
            tables: strategy.rules().iter().map(|r| r.table()).collect(),
            feeds,
        }
    }

    fn decode(&self, mut rank: u64, x: &mut [u8]) {
        for v in (0..self.n).rev() {
            x[v] = (rank % self.q as u64) as u8;
            rank /= self.q as u64;
        }
    }

    /// Scans ranks `start..end`, keeping at most `cap` losing configurations.
    pub fn run(&self, start: u64, end: u64, cap: usize) -> ChunkOutcome {
        let (n, q) = (self.n, self.q);
        let mut out = ChunkOutcome::default();
        if start >= end {
            return out;
        }
        let mut x = vec![0u8; n];
        self.decode(start, &mut x);
        let mut idx = vec![0usize; n];
        for u in 0..n {
            for &(v, w) in &self.feeds[u] {
                idx[v] += w * x[u] as usize;
            }
        }
        for _ in start..end {
            let mut correct = 0u64;
            for v in 0..n {
                let guess = match self.tables[v] {
                    Some(t) => t[idx[v]],
                    None => self.strategy.guess(v, &x),
                };
                correct += u64::from(guess == x[v]);
            }
            out.correct_total += correct;
            if correct == 0 {
                out.losing_count += 1;
                if out.losing.len() < cap {
                    out.losing.push(x.clone());
                }
            }
            // odometer step, last vertex fastest
            let mut u = n;
            while u > 0 {
                u -= 1;
                if (x[u] as usize) + 1 < q {
                    x[u] += 1;
                    for &(v, w) in &self.feeds[u] {
                        idx[v] += w;
                    }
                    break;
                }
                x[u] = 0;
                for &(v, w) in &self.feeds[u] {
                    idx[v] -= w * (q - 1);
                }
            }
        }
        out
    }
}
