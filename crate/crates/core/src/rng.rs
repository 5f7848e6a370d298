//! Seeded random streams.
//!
//! Every random object in the crate is drawn from a SplitMix64 stream. The
//! conversions are fixed so that a port to another language reproduces the
//! same matrices bit for bit:
//!
//! * uniform in `[0, 1)`: `(next_u64 >> 11) * 2^-53`
//! * standard normal pair: Box–Muller on `u1 = 1 - uniform`, `u2 = uniform`,
//!   giving `(r cos 2πu2, r sin 2πu2)` with `r = sqrt(-2 ln u1)`
//! * complex Gaussian: one Box–Muller pair, real part first
//! * child streams: `SplitMix64(seed + (index + 1) * 0x9E3779B97F4A7C15)`,
//!   whose first output becomes the child's seed

use num_complex::Complex64;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

pub struct Stream {
    inner: SplitMix64,
}

impl Stream {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: SplitMix64::seed_from_u64(seed),
        }
    }

    /// Independent stream for work item `index`; used so that parallel loops
    /// give the same answer regardless of scheduling.
    pub fn child(seed: u64, index: u64) -> Self {
        let mixed = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
        let mut parent = SplitMix64::seed_from_u64(mixed);
        Self::new(parent.next_u64())
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    pub fn normal_pair(&mut self) -> (f64, f64) {
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let phase = 2.0 * std::f64::consts::PI * u2;
        (r * phase.cos(), r * phase.sin())
    }

    pub fn complex_normal(&mut self) -> Complex64 {
        let (re, im) = self.normal_pair();
        Complex64::new(re, im)
    }

    /// Uniform point of the square `[-1, 1]²`.
    pub fn in_unit_square(&mut self) -> Complex64 {
        let re = self.uniform_in(-1.0, 1.0);
        let im = self.uniform_in(-1.0, 1.0);
        Complex64::new(re, im)
    }

    /// Random unit vector of length `n` (normalized complex Gaussian).
    pub fn unit_vector(&mut self, n: usize) -> Vec<Complex64> {
        loop {
            let v: Vec<Complex64> = (0..n).map(|_| self.complex_normal()).collect();
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-300 {
                return v.into_iter().map(|z| z / norm).collect();
            }
        }
    }
}
