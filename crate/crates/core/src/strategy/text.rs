//! Strategy text format:
//!
//! ```text
//! strategy q 2 n 2
//! vertex 0 sees 1
//! 0 -> 1
//! 1 -> 0
//! vertex 1 sees
//! -> 0
//! ```
//!
//! Each vertex block lists its in-neighbours and then all `q^k` tuples in
//! lexicographic order.

use std::fmt::Write;

use super::Strategy;
use crate::error::{Error, Result};

/// Fails with [`Error::TableTooLarge`] when a vertex only has a formula.
pub fn serialize_strategy(s: &Strategy) -> Result<String> {
    let q = s.q();
    let mut out = String::new();
    let _ = writeln!(out, "strategy q {q} n {}", s.vertex_count());
    for (v, rule) in s.rules().iter().enumerate() {
        out.push_str(&format!("vertex {v} sees"));
        for u in rule.sees() {
            let _ = write!(out, " {u}");
        }
        out.push('\n');
        let k = rule.sees().len();
        let mut digits = vec![0usize; k];
        let table = rule.table().ok_or_else(|| Error::TableTooLarge {
            vertex: v,
            entries: (q as u128).pow(rule.sees().len() as u32),
            cap: super::FORMULA_TABLE_CAP as u64,
        })?;
        for &guess in table {
            for d in &digits {
                let _ = write!(out, "{d} ");
            }
            let _ = writeln!(out, "-> {guess}");
            for j in (0..k).rev() {
                digits[j] += 1;
                if digits[j] < q {
                    break;
                }
                digits[j] = 0;
            }
        }
    }
    Ok(out)
}

pub fn parse_strategy(text: &str) -> Result<Strategy> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, message: String| Error::Parse { line, message };
    let number = |line: usize, s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| err(line, format!("expected a number, found `{s}`")))
    };

    let (line, header) = lines.next().ok_or_else(|| err(1, "empty strategy".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (q, n) = match fields.as_slice() {
        ["strategy", "q", q, "n", n] => (number(line, q)?, number(line, n)?),
        _ => return Err(err(line, "expected `strategy q <q> n <n>`".into())),
    };
    if !(2..=super::MAX_ALPHABET).contains(&q) {
        return Err(err(line, format!("alphabet size {q} unsupported")));
    }

    let mut rules = Vec::with_capacity(n);
    for v in 0..n {
        let (line, head) = lines
            .next()
            .ok_or_else(|| err(line, format!("missing block for vertex {v}")))?;
        let fields: Vec<&str> = head.split_whitespace().collect();
        let sees = match fields.as_slice() {
            ["vertex", id, "sees", rest @ ..] if number(line, id)? == v => rest
                .iter()
                .map(|s| number(line, s))
                .collect::<Result<Vec<_>>>()?,
            _ => return Err(err(line, format!("expected `vertex {v} sees ...`"))),
        };
        let k = sees.len();
        let len = (q as u128).pow(k as u32);
        if len > super::MAX_TABLE_ENTRIES as u128 {
            return Err(err(line, format!("table of {len} entries is too large")));
        }
        let mut table = Vec::with_capacity(len as usize);
        let mut expected = vec![0usize; k];
        for _ in 0..len {
            let (line, entry) = lines
                .next()
                .ok_or_else(|| err(line, format!("table of vertex {v} is truncated")))?;
            let (tuple, guess) = entry
                .split_once("->")
                .ok_or_else(|| err(line, "expected `<tuple> -> <guess>`".into()))?;
            let tuple = tuple
                .split_whitespace()
                .map(|s| number(line, s))
                .collect::<Result<Vec<_>>>()?;
            if tuple != expected {
                return Err(err(line, format!("expected tuple {expected:?}, found {tuple:?}")));
            }
            let guess = number(line, guess.trim())?;
            if guess >= q {
                return Err(err(line, format!("guess {guess} outside [{q}]")));
            }
            table.push(guess as u8);
            for j in (0..k).rev() {
                expected[j] += 1;
                if expected[j] < q {
                    break;
                }
                expected[j] = 0;
            }
        }
        rules.push((sees, table));
    }
    if let Some((line, extra)) = lines.next() {
        return Err(err(line, format!("unexpected trailing line `{extra}`")));
    }
    Strategy::from_tables(q, rules)
}
