//! Ground truth: exhaustive and sampled evaluation of strategies, gadget
//! certification and remoteness of word sets.

mod engine;
mod gadget;
mod remoteness;
mod report;

pub use gadget::certify_gadget;
pub use remoteness::{hamming, is_distinguishable, remoteness};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::par::{find_first_chunk, map_chunks, Execution};
use crate::strategy::{HatConfig, Strategy};
use engine::Engine;

/// Default cap on the exhaustively enumerated configuration space.
pub const DEFAULT_MAX_CONFIGS: u64 = 20_000_000;
/// Default number of losing configurations listed in a verdict.
pub const DEFAULT_LOSING_CAP: usize = 1000;

const SAMPLE_BLOCK: u64 = 4096;

/// Outcome of checking a strategy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Every configuration has a correct guess.
    Solved,
    /// `count` configurations are guessed wrong by everyone; `losing` holds
    /// the lexicographically first of them.
    NotSolvedBy {
        losing: Vec<HatConfig>,
        count: u64,
        truncated: bool,
    },
    /// No losing configuration among `samples` seeded draws. Never a proof.
    SampledClean { samples: u64, seed: u64 },
    SampledCounterexample {
        config: HatConfig,
        sample_index: u64,
        seed: u64,
    },
}

impl Verdict {
    pub fn is_solved(&self) -> bool {
        matches!(self, Verdict::Solved)
    }

    /// Number of known losing configurations.
    pub fn losing_count(&self) -> u64 {
        match self {
            Verdict::Solved | Verdict::SampledClean { .. } => 0,
            Verdict::NotSolvedBy { count, .. } => *count,
            Verdict::SampledCounterexample { .. } => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub losing_cap: usize,
    pub max_configs: u64,
    pub execution: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            losing_cap: DEFAULT_LOSING_CAP,
            max_configs: DEFAULT_MAX_CONFIGS,
            execution: Execution::default(),
        }
    }
}

impl VerifyOptions {
    pub fn sequential() -> Self {
        Self {
            execution: Execution::Sequential,
            ..Self::default()
        }
    }

    pub fn with_losing_cap(mut self, cap: usize) -> Self {
        self.losing_cap = cap;
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }
}

/// Exhaustive verdict together with the enumeration statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub verdict: Verdict,
    pub configs: u64,
    /// Correct guesses summed over all configurations; always `n q^(n-1)`.
    pub correct_total: u64,
}

pub(crate) fn config_space(n: usize, q: usize, max_configs: u64) -> Result<u64> {
    let size = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > max_configs as u128 {
        return Err(Error::ConfigSpaceTooLarge {
            configs: size,
            cap: max_configs,
        });
    }
    Ok(size as u64)
}

fn chunk_bounds(total: u64) -> (u64, usize) {
    let size = (total / 256).clamp(4096, 1 << 20);
    (size, total.div_ceil(size) as usize)
}

/// Exhaustively checks `f` on `g` over `q` colours.
pub fn evaluate(g: &Digraph, q: usize, f: &Strategy, opts: &VerifyOptions) -> Result<Evaluation> {
    f.check_shape(g, q)?;
    let total = config_space(g.vertex_count(), q, opts.max_configs)?;
    let engine = Engine::new(f);
    let (size, chunks) = chunk_bounds(total);
    let cap = opts.losing_cap;
    let parts = map_chunks(chunks, opts.execution, |c| {
        let start = c as u64 * size;
        engine.run(start, (start + size).min(total), cap)
    });
    let mut losing = Vec::new();
    let (mut count, mut correct_total) = (0u64, 0u64);
    for part in parts {
        count += part.losing_count;
        correct_total += part.correct_total;
        let room = cap - losing.len();
        losing.extend(part.losing.into_iter().take(room));
    }
    let verdict = if count == 0 {
        Verdict::Solved
    } else {
        Verdict::NotSolvedBy {
            losing: losing.into_iter().map(|x| HatConfig::from_raw(q, x)).collect(),
            count,
            truncated: count > cap as u64,
        }
    };
    Ok(Evaluation {
        verdict,
        configs: total,
        correct_total,
    })
}

/// Exhaustive verdict; see [`evaluate`].
pub fn verify(g: &Digraph, q: usize, f: &Strategy, opts: &VerifyOptions) -> Result<Verdict> {
    evaluate(g, q, f, opts).map(|e| e.verdict)
}

/// Every losing configuration, in lexicographic order.
pub fn losing_set(
    g: &Digraph,
    q: usize,
    f: &Strategy,
    max_configs: u64,
    execution: Execution,
) -> Result<Vec<HatConfig>> {
    let opts = VerifyOptions {
        losing_cap: usize::MAX,
        max_configs,
        execution,
    };
    Ok(match verify(g, q, f, &opts)? {
        Verdict::NotSolvedBy { losing, .. } => losing,
        _ => Vec::new(),
    })
}

/// Draws `samples` uniform configurations from a seeded ChaCha stream and
/// reports the first one nobody guesses. Sample `k` always comes from
/// stream `k / 4096` of the seed, independently of scheduling.
pub fn sample_verify(
    g: &Digraph,
    q: usize,
    f: &Strategy,
    samples: u64,
    seed: u64,
    execution: Execution,
) -> Result<Verdict> {
    f.check_shape(g, q)?;
    if samples == 0 {
        return Err(Error::Precondition("samples must be >= 1".into()));
    }
    let n = g.vertex_count();
    let blocks = samples.div_ceil(SAMPLE_BLOCK) as usize;
    let hit = find_first_chunk(blocks, execution, |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(b as u64);
        let first = b as u64 * SAMPLE_BLOCK;
        let mut x = vec![0u8; n];
        for k in first..(first + SAMPLE_BLOCK).min(samples) {
            for c in x.iter_mut() {
                *c = rng.random_range(0..q) as u8;
            }
            if f.correct_count(&x) == 0 {
                return Some((k, x));
            }
        }
        None
    });
    Ok(match hit {
        Some((sample_index, x)) => Verdict::SampledCounterexample {
            config: HatConfig::from_raw(q, x),
            sample_index,
            seed,
        },
        None => Verdict::SampledClean { samples, seed },
    })
}

/// Histogram over the `q^|set|` colourings of `set` (all other vertices
/// fixed by `fixed`) of how many vertices of `set` guess correctly.
pub fn correct_count_profile(f: &Strategy, set: &[usize], fixed: &[u8]) -> Result<Vec<u64>> {
    let q = f.q();
    if fixed.len() != f.vertex_count() {
        return Err(Error::ShapeMismatch("fixed colouring has the wrong length".into()));
    }
    let total = config_space(set.len(), q, DEFAULT_MAX_CONFIGS)?;
    let mut x = fixed.to_vec();
    let mut profile = vec![0u64; set.len() + 1];
    for mut rank in 0..total {
        for &v in set.iter().rev() {
            x[v] = (rank % q as u64) as u8;
            rank /= q as u64;
        }
        let hits = set.iter().filter(|&&v| f.guess(v, &x) == x[v]).count();
        profile[hits] += 1;
    }
    Ok(profile)
}
