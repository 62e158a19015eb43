//! Exact comparisons against the fractional powers of `n` used by the partition procedure.
//!
//! With `q = 3ℓ − 1`, every threshold is `c · n^{k/q}`, so `s ≥ c · n^{k/q}` is decided by
//! comparing `s^q` with `c^q · n^k` in arbitrary precision.

use num_bigint::BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exponents {
    pub ell: usize,
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

impl Exponents {
    pub fn new(ell: usize) -> Self {
        assert!(ell >= 2, "uniformity {ell} < 2");
        Exponents { ell }
    }

    /// Common denominator `3ℓ − 1`.
    pub fn q(&self) -> u32 {
        3 * self.ell as u32 - 1
    }

    /// `ε = (ℓ + 1) / (3ℓ − 1)`.
    pub fn epsilon(&self) -> f64 {
        (self.ell + 1) as f64 / self.q() as f64
    }

    /// `γ = 2 / (3ℓ − 1)`.
    pub fn gamma(&self) -> f64 {
        2.0 / self.q() as f64
    }

    fn l(&self) -> u32 {
        self.ell as u32
    }

    /// `size ≥ n^{1−γ}`.
    pub fn part_is_large(&self, size: usize, n: usize) -> bool {
        big(size as u64).pow(self.q()) >= big(n as u64).pow(3 * self.l() - 3)
    }

    /// `size ≥ n^{1−ε}`.
    pub fn at_least_component_threshold(&self, size: usize, n: usize) -> bool {
        big(size as u64).pow(self.q()) >= big(n as u64).pow(2 * self.l() - 2)
    }

    /// `size > n^{1−ε}`.
    pub fn exceeds_component_threshold(&self, size: usize, n: usize) -> bool {
        big(size as u64).pow(self.q()) > big(n as u64).pow(2 * self.l() - 2)
    }

    /// `count ≤ 2^ℓ · n^{ℓ−1+ε}`.
    pub fn first_bad_set_within(&self, count: usize, n: usize) -> bool {
        let (q, l) = (self.q(), self.l());
        big(count as u64).pow(q) <= big(2).pow(l * q) * big(n as u64).pow((l - 1) * q + l + 1)
    }

    /// `count ≤ n^{ℓ−(ℓ−1)γ}`.
    pub fn second_bad_set_within(&self, count: usize, n: usize) -> bool {
        let (q, l) = (self.q(), self.l());
        big(count as u64).pow(q) <= big(n as u64).pow(l * q - 2 * l + 2)
    }

    /// `count ≤ (2^ℓ + 1) · n^{(3ℓ²−3ℓ+2)/(3ℓ−1)}`.
    pub fn bad_set_within(&self, count: usize, n: usize) -> bool {
        let (q, l) = (self.q(), self.l());
        big(count as u64).pow(q) <= big((1u64 << l) + 1).pow(q) * big(n as u64).pow(3 * l * l - 3 * l + 2)
    }

    /// `size ≥ 0.5 · n^{1/(3ℓ−1)}`.
    pub fn meets_early_bound(&self, size: usize, n: usize) -> bool {
        big(2 * size as u64).pow(self.q()) >= big(n as u64)
    }

    /// `⌈0.5 · n^{1/(3ℓ−1)}⌉`.
    pub fn early_bound(&self, n: usize) -> u64 {
        (0..).find(|&s| self.meets_early_bound(s as usize, n)).unwrap()
    }
}

/// `⌈√m⌉`.
pub fn ceil_sqrt(m: u64) -> u64 {
    let r = m.isqrt();
    if r * r == m {
        r
    } else {
        r + 1
    }
}
