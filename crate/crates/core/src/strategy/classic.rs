//! The explicit strategies: cliques, the exponential bipartite construction,
//! `K_{2,2}` over three colours, the two-colour directed cycle and the
//! L-shaped even-cycle rules.

use super::{check_alphabet, modq, Strategy};
use crate::error::{Error, Result};
use crate::graph::{Digraph, NamedGraph};

/// `K_q` with `f_v(x) = v - sum_{u != v} x_u (mod q)`: exactly one vertex is
/// right on every configuration.
pub fn clique_strategy(q: usize) -> Result<(Digraph, Strategy)> {
    clique_partition_strategy(q, q)
}

/// `K_n` split into consecutive blocks of `q` vertices, each running the
/// clique strategy; leftover vertices guess 0. Guarantees `floor(n / q)`
/// correct guesses.
pub fn clique_partition_strategy(n: usize, q: usize) -> Result<(Digraph, Strategy)> {
    check_alphabet(q)?;
    let g = NamedGraph::Clique(n).build()?;
    let blocks = n / q;
    let s = Strategy::tabulate(&g, q, |v, x| {
        let block = v / q;
        if block >= blocks {
            return 0;
        }
        let others: i64 = (block * q..block * q + q)
            .filter(|&u| u != v)
            .map(|u| x[u] as i64)
            .sum();
        modq((v - block * q) as i64 - others, q)
    })?;
    Ok((g, s))
}

/// `K_{m, m^m}` with `m = q - 1` over `q` colours.
///
/// Right vertex `w_z` (one per `z ∈ {1..q-1}^m`, lexicographic, numbered
/// after the `m` left vertices) guesses 0 if the left colouring `x` differs
/// from `z` everywhere and otherwise the 1-based index of the first
/// agreement. Given the right colours `y`, the left vertices list the
/// colourings `x` on which every `w_z` is wrong and play the
/// lexicographically first centre `a` agreeing with each of them somewhere;
/// `v_i` guesses `a_i`.
pub fn bipartite_strategy(q: usize) -> Result<(Digraph, Strategy)> {
    check_alphabet(q)?;
    let m = q - 1;
    let right = m
        .checked_pow(m as u32)
        .filter(|&r| r <= 1 << 20)
        .ok_or_else(|| Error::Infeasible(format!("K_{{{m},{m}^{m}}} is too large to build")))?;
    let g = NamedGraph::CompleteBipartite(m, right).build()?;
    let words: Vec<Vec<u8>> = (0..right).map(|rank| digits(rank, m, m, 1)).collect();
    let right_guess = |z: &[u8], x: &[u8]| (0..m).find(|&i| x[i] == z[i]).map_or(0, |i| i + 1);
    let lefts: Vec<Vec<u8>> = (0..q.pow(m as u32)).map(|rank| digits(rank, q, m, 0)).collect();
    let centre = |y: &[u8]| -> Vec<u8> {
        let unguessed: Vec<&Vec<u8>> = lefts
            .iter()
            .filter(|x| words.iter().zip(y).all(|(z, &c)| right_guess(z, x) != c as usize))
            .collect();
        lefts
            .iter()
            .find(|a| unguessed.iter().all(|x| x.iter().zip(a.iter()).any(|(u, v)| u == v)))
            .expect("some centre covers the unguessed colourings")
            .clone()
    };
    let s = Strategy::tabulate(&g, q, |v, x| {
        if v < m {
            centre(&x[m..])[v] as usize
        } else {
            right_guess(&words[v - m], x)
        }
    })?;
    Ok((g, s))
}

/// `rank` as `len` base-`base` digits, most significant first, each shifted
/// by `offset`.
fn digits(mut rank: usize, base: usize, len: usize, offset: u8) -> Vec<u8> {
    let mut out = vec![0u8; len];
    for slot in out.iter_mut().rev() {
        *slot = (rank % base) as u8 + offset;
        rank /= base;
    }
    out
}

/// Inverse of a 2x2 matrix over `Z_q`, if it exists.
pub fn mat2_inverse_mod(a: [[usize; 2]; 2], q: usize) -> Option<[[usize; 2]; 2]> {
    let det = modq(
        a[0][0] as i64 * a[1][1] as i64 - a[0][1] as i64 * a[1][0] as i64,
        q,
    );
    let inv = (1..q).find(|&d| d * det % q == 1)? as i64;
    Some([
        [modq(inv * a[1][1] as i64, q), modq(-inv * a[0][1] as i64, q)],
        [modq(-inv * a[1][0] as i64, q), modq(inv * a[0][0] as i64, q)],
    ])
}

/// `A = [[1, 1], [1, -1]]` over `Z_3` and its inverse.
pub fn k22_matrices() -> ([[usize; 2]; 2], [[usize; 2]; 2]) {
    let a = [[1, 1], [1, 2]];
    let inv = mat2_inverse_mod(a, 3).expect("det A = -2 is a unit mod 3");
    (a, inv)
}

/// `K_{2,2}` over three colours: the left pair guesses `(x_2, x_3) A`, the
/// right pair guesses `(x_0, x_1) A^{-1}`, as row vectors.
pub fn k22_strategy() -> Result<(Digraph, Strategy)> {
    let g = NamedGraph::CompleteBipartite(2, 2).build()?;
    let (a, inv) = k22_matrices();
    let s = Strategy::tabulate(&g, 3, |v, x| {
        let (mat, row, col) = if v < 2 { (&a, [x[2], x[3]], v) } else { (&inv, [x[0], x[1]], v - 2) };
        (row[0] as usize * mat[0][col] + row[1] as usize * mat[1][col]) % 3
    })?;
    Ok((g, s))
}

/// Directed cycle over two colours: vertex 0 copies its predecessor, every
/// other vertex guesses its predecessor plus one.
pub fn cycle2_strategy(n: usize) -> Result<(Digraph, Strategy)> {
    let g = NamedGraph::DirectedCycle(n).build()?;
    let s = Strategy::tabulate(&g, 2, |v, x| {
        if v == 0 {
            x[n - 1] as usize
        } else {
            (x[v - 1] as usize + 1) % 2
        }
    })?;
    Ok((g, s))
}

/// Vertex ids of `C_{2n}` used by [`even_cycle_strategy`]: `v_i` is `2i`,
/// `w_i` is `2i + 1`, so `v_i` sits between `w_{i-1}` and `w_i`.
pub fn even_cycle_config(x: &[u8], y: &[u8]) -> Vec<u8> {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).flat_map(|(&a, &b)| [a, b]).collect()
}

/// The L-shaped rules on `C_{2n}` over three colours. Solves the cycle when
/// `n ≡ 0 (mod 3)` and loses on exactly three configurations otherwise.
pub fn even_cycle_strategy(n: usize) -> Result<(Digraph, Strategy)> {
    if n < 2 {
        return Err(Error::SizeOutOfRange(format!("even cycle needs n >= 2, got {n}")));
    }
    let g = NamedGraph::UndirectedCycle(2 * n).build()?;
    let s = Strategy::tabulate(&g, 3, |u, c| {
        let i = u / 2;
        let x = |k: usize| c[2 * k] as i64;
        let y = |k: usize| c[2 * k + 1] as i64;
        let guess = if u % 2 == 0 {
            let cur = y(i);
            let prev = y((i + n - 1) % n);
            // v_0 switches when y_0 = y_{n-1} - 1, the others when y_i = y_{i-1} + 1
            let step = if i == 0 { -1 } else { 1 };
            if modq(cur - prev - step, 3) == 0 {
                cur + 1
            } else {
                cur - 1
            }
        } else if i + 1 < n {
            if modq(x(i) - x(i + 1) - 1, 3) == 0 {
                x(i) - 1
            } else {
                x(i)
            }
        } else if x(n - 1) == x(0) {
            x(n - 1) - 1
        } else {
            x(n - 1)
        };
        modq(guess, 3)
    })?;
    Ok((g, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_strategy_examples() {
        let (_, s) = clique_strategy(2).unwrap();
        assert_eq!(s.guess(0, &[0, 0]), 0);
        let (_, s) = clique_strategy(3).unwrap();
        assert_eq!(s.guess(0, &[1, 2, 0]), 1);
        assert_eq!(s.correct_count(&[1, 2, 0]), 1);
    }

    #[test]
    fn k22_inverse_is_an_inverse() {
        let (a, inv) = k22_matrices();
        for i in 0..2 {
            for j in 0..2 {
                let e = (0..2).map(|k| a[i][k] * inv[k][j]).sum::<usize>() % 3;
                assert_eq!(e, usize::from(i == j));
            }
        }
        assert_eq!(inv, [[2, 2], [2, 1]]);
        assert_eq!(mat2_inverse_mod([[2, 0], [0, 2]], 4), None);
    }

    #[test]
    fn k22_all_zero_guessed() {
        let (_, s) = k22_strategy().unwrap();
        assert_eq!(s.guess(0, &[0, 0, 0, 0]), 0);
    }

    #[test]
    fn bipartite_right_rule() {
        let (g, s) = bipartite_strategy(3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        // words in order: (1,1), (1,2), (2,1), (2,2); w_(1,2) is vertex 3
        assert_eq!(s.guess(3, &[2, 1, 0, 0, 0, 0]), 0);
        assert_eq!(s.guess(3, &[1, 1, 0, 0, 0, 0]), 1);
        assert_eq!(s.guess(3, &[0, 2, 0, 0, 0, 0]), 2);
        // no right vertex wears 0 here, yet the left pair must still cover x
        assert!(s.correct_count(&[1, 1, 2, 2, 1, 1]) > 0);
    }

    #[test]
    fn bipartite_left_centre_covers_every_unguessed_colouring() {
        let (_, s) = bipartite_strategy(3).unwrap();
        for rank in 0..81usize {
            let y: Vec<u8> = (0..4).map(|k| (rank / 3usize.pow(3 - k) % 3) as u8).collect();
            let mut x = vec![0u8, 0];
            x.extend(&y);
            let a = [s.guess(0, &x), s.guess(1, &x)];
            for x0 in 0..3 {
                for x1 in 0..3 {
                    x[0] = x0;
                    x[1] = x1;
                    let right_wrong = (2..6).all(|v| s.guess(v, &x) != x[v]);
                    if right_wrong {
                        assert!(a[0] == x0 || a[1] == x1, "y = {y:?}, x = ({x0}, {x1})");
                    }
                }
            }
        }
    }

    #[test]
    fn bipartite_table_cap() {
        assert!(matches!(bipartite_strategy(4), Err(Error::TableTooLarge { .. })));
    }

    #[test]
    fn cycle2_all_zero() {
        let (_, s) = cycle2_strategy(4).unwrap();
        assert_eq!(s.guess(0, &[0, 0, 0, 0]), 0);
        assert!(cycle2_strategy(2).is_err());
    }
}
