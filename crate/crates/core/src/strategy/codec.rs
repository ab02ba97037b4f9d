use crate::error::{Error, Result};

/// Bijection `[p] x [r] -> [p r]`, `c = x + p y`. The low part `x = c mod p`
/// carries the colour of the underlying `p`-game.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorPairCodec {
    p: usize,
    r: usize,
}

impl ColorPairCodec {
    pub fn new(p: usize, r: usize) -> Result<Self> {
        if p == 0 || r == 0 {
            return Err(Error::SizeOutOfRange("codec factors must be positive".into()));
        }
        Ok(Self { p, r })
    }

    pub fn q(&self) -> usize {
        self.p * self.r
    }

    pub fn encode(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.p && y < self.r);
        x + self.p * y
    }

    pub fn decode(&self, c: usize) -> (usize, usize) {
        debug_assert!(c < self.q());
        (c % self.p, c / self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colour_five_with_p3_r2() {
        let codec = ColorPairCodec::new(3, 2).unwrap();
        assert_eq!(codec.decode(5), (2, 1));
        assert_eq!(codec.encode(2, 1), 5);
    }

    #[test]
    fn bijection() {
        for (p, r) in [(2, 2), (3, 2), (2, 5), (4, 4)] {
            let codec = ColorPairCodec::new(p, r).unwrap();
            let mut seen = vec![false; p * r];
            for x in 0..p {
                for y in 0..r {
                    let c = codec.encode(x, y);
                    assert!(!seen[c]);
                    seen[c] = true;
                    assert_eq!(codec.decode(c), (x, y));
                }
            }
        }
    }
}
