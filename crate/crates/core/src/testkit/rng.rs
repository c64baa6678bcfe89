use crate::linalg::{int, ratio, Scalar, Vector};

/// SplitMix64: `state += 0x9e3779b97f4a7c15`, then the standard
/// xor-shift-multiply finalizer. Outputs are identical on every platform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// An independent stream derived from this one.
    pub fn split(&mut self) -> Rng {
        Rng::new(self.next_u64())
    }

    /// Uniform in `0..n` up to modulo bias, which is negligible for the small
    /// `n` used here.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "empty range");
        (self.next_u64() % n as u64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    pub fn small_int(&mut self) -> Scalar {
        int(self.range(-3, 3))
    }

    pub fn nonzero_int(&mut self) -> Scalar {
        let v = self.range(1, 3);
        int(if self.coin() { v } else { -v })
    }

    /// `p/q` with `|p| ≤ 3`, `1 ≤ q ≤ 3`.
    pub fn small_rational(&mut self) -> Scalar {
        let p = self.range(-3, 3);
        ratio(p, self.range(1, 3))
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        let p = self.range(1, 3);
        let p = if self.coin() { p } else { -p };
        ratio(p, self.range(1, 3))
    }

    /// One of `±1, ±2, ±1/2`.
    pub fn unit_rational(&mut self) -> Scalar {
        let m = [ratio(1, 1), ratio(2, 1), ratio(1, 2)][self.below(3)].clone();
        if self.coin() {
            m
        } else {
            -m
        }
    }

    pub fn int_vector(&mut self, n: usize) -> Vector {
        (0..n).map(|_| self.small_int()).collect()
    }

    pub fn rational_vector(&mut self, n: usize) -> Vector {
        (0..n).map(|_| self.small_rational()).collect()
    }
}
