//! Seeded, platform-stable randomness for the batch verifier.

use crate::segment::{LineSet, Multisegment, Segment};

/// SplitMix64. Small, deterministic across platforms and versions, which keeps
/// seeded campaigns and golden outputs reproducible.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from 0..n (n > 0).
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        // widening multiply keeps the draw unbiased enough at desk scale
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn chance(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

/// A random multisegment over the declared lines: up to `max_t` segments of
/// length up to `max_len`, left endpoints in `[-window, window]`.
pub fn random_multisegment(
    lines: &LineSet,
    rng: &mut SplitMix64,
    max_t: usize,
    max_len: i64,
    window: i64,
) -> Multisegment {
    assert!(!lines.is_empty(), "need at least one declared line");
    let ids: Vec<_> = lines.iter().map(|(id, _)| id).collect();
    let t = 1 + rng.below(max_t as u64) as usize;
    (0..t)
        .map(|_| {
            let line = ids[rng.below(ids.len() as u64) as usize];
            let a = rng.range_i64(-window, window);
            let len = 1 + rng.below(max_len as u64) as i64;
            Segment::new(line, a, a + len - 1).unwrap()
        })
        .collect()
}
