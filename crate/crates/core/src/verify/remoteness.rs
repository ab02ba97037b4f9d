use crate::error::{Error, Result};
use crate::verify::{config_space, DEFAULT_MAX_CONFIGS};

pub fn hamming(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// `min_x max_{s in S} d_H(x, s)` over all centres `x in [q]^m`.
pub fn remoteness(words: &[Vec<u8>], q: usize) -> Result<usize> {
    let first = words
        .first()
        .ok_or_else(|| Error::InvalidWords("empty word set".into()))?;
    let m = first.len();
    if words.iter().any(|w| w.len() != m) {
        return Err(Error::InvalidWords("words have different lengths".into()));
    }
    if words.iter().flatten().any(|&c| c as usize >= q) {
        return Err(Error::InvalidWords(format!("letter outside [{q}]")));
    }
    let total = config_space(m, q, DEFAULT_MAX_CONFIGS)?;
    let mut best = m;
    let mut x = vec![0u8; m];
    for mut rank in 0..total {
        for c in x.iter_mut().rev() {
            *c = (rank % q as u64) as u8;
            rank /= q as u64;
        }
        let mut worst = 0;
        for w in words {
            worst = worst.max(hamming(&x, w));
            if worst >= best {
                break;
            }
        }
        best = best.min(worst);
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

/// Some centre is within distance `m - 1` of every word.
pub fn is_distinguishable(words: &[Vec<u8>], q: usize) -> Result<bool> {
    let m = words.first().map_or(0, Vec::len);
    Ok(remoteness(words, q)? < m)
}
