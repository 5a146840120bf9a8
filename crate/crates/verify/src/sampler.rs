//! Deterministic parameter draws. Each check gets its own stream, seeded from
//! the suite seed and the FNV-1a hash of the check id, so results do not
//! depend on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;

/// Largest denominator of a sampled rational.
pub const MAX_DENOMINATOR: u32 = 12;

fn fnv1a(text: &str) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in text.bytes() {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, id: &str) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed ^ fnv1a(id)),
        }
    }

    /// A rational `n/d` strictly inside `(lo, hi)` with `d <= 12`.
    pub fn rational(&mut self, lo: f64, hi: f64) -> Rational {
        assert!(lo < hi, "empty sampling interval");
        loop {
            let den = self.rng.gen_range(1..=MAX_DENOMINATOR) as i64;
            let first = (lo * den as f64).floor() as i64 + 1;
            let last = (hi * den as f64).ceil() as i64 - 1;
            if first > last {
                continue;
            }
            let num = self.rng.gen_range(first..=last);
            let x = Rational::from((num, den));
            if x > lo && x < hi {
                return x;
            }
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn pick<T: Clone>(&mut self, items: &[T]) -> T {
        items[self.rng.gen_range(0..items.len())].clone()
    }

    /// One of the singular-modulus points `r in {1, 2, 3, 5, 2/5}`.
    pub fn r_value(&mut self) -> Rational {
        self.pick(&r_points())
    }
}

pub fn r_points() -> Vec<Rational> {
    vec![
        Rational::from(1),
        Rational::from(2),
        Rational::from(3),
        Rational::from(5),
        Rational::from((2, 5)),
    ]
}
