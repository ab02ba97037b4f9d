use super::{check_alphabet, modq, ColorPairCodec, Strategy};
use crate::error::Result;
use crate::graph::Digraph;

/// Lifts a strategy over `p` colours on `d` to the lexicographic product
/// `(d, r)` over `q = p r` colours.
///
/// Colours split as `c = x + p y` (see [`ColorPairCodec`]). With `X_v`, `Y_v`
/// the sums of the `x` and `y` parts over the copies of `v`, copy `(v, a)`
/// guesses `x = f_v(X) - sum_{b != a} x_(v,b) (mod p)` and
/// `y = a - sum_{b != a} y_(v,b) (mod r)`; it is right iff `f_v(X) = X_v` and
/// `Y_v = a`. Exactly one copy of each vertex has `Y_v = a`, so the lifted
/// strategy fails only where `f` fails on `X`.
pub fn blowup_strategy(d: &Digraph, f: &Strategy, r: usize) -> Result<(Digraph, Strategy)> {
    let p = f.q();
    f.check_shape(d, p)?;
    check_alphabet(p * r)?;
    let codec = ColorPairCodec::new(p, r)?;
    let product = d.lex_product(r)?;
    let n = d.vertex_count();
    let strategy = Strategy::tabulate(&product, codec.q(), |w, c| {
        let (v, a) = (w / r, w % r);
        let mut sums = vec![0u8; n];
        for &u in d.in_neighbours(v) {
            let total: usize = (0..r).map(|b| codec.decode(c[u * r + b] as usize).0).sum();
            sums[u] = (total % p) as u8;
        }
        let (mut others_x, mut others_y) = (0i64, 0i64);
        for b in (0..r).filter(|&b| b != a) {
            let (x, y) = codec.decode(c[v * r + b] as usize);
            others_x += x as i64;
            others_y += y as i64;
        }
        let x = modq(f.guess(v, &sums) as i64 - others_x, p);
        let y = modq(a as i64 - others_y, r);
        codec.encode(x, y)
    })?;
    Ok((product, strategy))
}
