//! Binomial coefficients, colexicographic ranking of k-subsets, and subset enumeration.
//!
//! A strictly increasing tuple `t_0 < t_1 < ... < t_{k-1}` has colex rank
//! `sum_i C(t_i, i + 1)`. Ranks of k-subsets of `0..n` are exactly `0..C(n, k)`, and
//! ascending rank order is colex order, which is the canonical edge order of
//! [`Hypergraph`](crate::Hypergraph).

use std::sync::OnceLock;

use crate::error::{Error, Result};

const TABLE_N: usize = 1024;
const TABLE_K: usize = 16;

/// `C(n, k)` for `n < TABLE_N`, `k < TABLE_K`; `None` marks values that overflow `u64`.
fn table() -> &'static [[Option<u64>; TABLE_K]] {
    static TABLE: OnceLock<Vec<[Option<u64>; TABLE_K]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows = vec![[None; TABLE_K]; TABLE_N];
        for n in 0..TABLE_N {
            rows[n][0] = Some(1);
            for k in 1..TABLE_K {
                rows[n][k] = if k > n {
                    Some(0)
                } else if k == n {
                    Some(1)
                } else {
                    match (rows[n - 1][k - 1], rows[n - 1][k]) {
                        (Some(a), Some(b)) => u64::checked_add(a, b),
                        _ => None,
                    }
                };
            }
        }
        rows
    })
}

/// Exact `C(n, k)`, or an overflow error.
pub fn binomial(n: usize, k: usize) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    if n < TABLE_N && k < TABLE_K {
        return table()[n][k].ok_or(Error::Overflow { n, k });
    }
    let wide = binomial_wide(n, k);
    u64::try_from(wide).map_err(|_| Error::Overflow { n, k })
}

/// `C(n, k)` in 128 bits, saturating at `u128::MAX`. Used by the resource guards.
pub fn binomial_wide(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc == C(n, i) here, so acc * (n - i) is divisible by i + 1
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// Table lookup for ranking; callers guarantee the value fits.
#[inline]
fn c(n: usize, k: usize) -> u64 {
    if n < TABLE_N && k < TABLE_K {
        table()[n][k].unwrap_or(u64::MAX)
    } else {
        binomial(n, k).unwrap_or(u64::MAX)
    }
}

/// Colex rank of a strictly increasing tuple.
#[inline]
pub fn rank(tuple: &[usize]) -> u64 {
    tuple
        .iter()
        .enumerate()
        .map(|(i, &t)| c(t, i + 1))
        .sum()
}

/// Inverse of [`rank`]: writes the `k`-subset with the given rank into `out`.
pub fn unrank_into(mut r: u64, k: usize, out: &mut Vec<usize>) {
    out.clear();
    out.resize(k, 0);
    let mut hi = usize::MAX;
    for i in (1..=k).rev() {
        // largest t with C(t, i) <= r, searched in [i - 1, hi)
        let mut lo = i - 1;
        let mut top = if hi == usize::MAX {
            let mut t = i.max(1);
            while c(t, i) <= r {
                t = t.saturating_mul(2);
            }
            t
        } else {
            hi
        };
        while lo + 1 < top {
            let mid = lo + (top - lo) / 2;
            if c(mid, i) <= r {
                lo = mid;
            } else {
                top = mid;
            }
        }
        out[i - 1] = lo;
        r -= c(lo, i);
        hi = lo;
    }
}

pub fn unrank(r: u64, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    unrank_into(r, k, &mut out);
    out
}

/// Streaming enumeration of the `k`-subsets of a sorted pool, in colex order.
///
/// ```
/// use disperse_core::combinatorics::Combinations;
/// let mut it = Combinations::new(vec![1, 4, 6], 2);
/// let mut seen = Vec::new();
/// while let Some(s) = it.next_subset() {
///     seen.push(s.to_vec());
/// }
/// assert_eq!(seen, vec![vec![1, 4], vec![1, 6], vec![4, 6]]);
/// ```
#[derive(Debug, Clone)]
pub struct Combinations {
    pool: Vec<usize>,
    idx: Vec<usize>,
    buf: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub fn new(pool: Vec<usize>, k: usize) -> Self {
        let done = k > pool.len();
        Combinations {
            idx: (0..k).collect(),
            buf: Vec::with_capacity(k),
            pool,
            started: false,
            done,
        }
    }

    /// All `k`-subsets of `0..n`.
    pub fn of_range(n: usize, k: usize) -> Self {
        Self::new((0..n).collect(), k)
    }

    pub fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if self.started {
            let k = self.idx.len();
            let m = self.pool.len();
            let mut j = 0;
            loop {
                if j == k {
                    self.done = true;
                    return None;
                }
                let limit = if j + 1 < k { self.idx[j + 1] } else { m };
                if self.idx[j] + 1 < limit {
                    break;
                }
                j += 1;
            }
            self.idx[j] += 1;
            for i in 0..j {
                self.idx[i] = i;
            }
        }
        self.started = true;
        self.buf.clear();
        self.buf.extend(self.idx.iter().map(|&i| self.pool[i]));
        Some(&self.buf)
    }
}

/// Calls `f` on every `k`-subset of the sorted pool, in colex order.
pub fn for_each_subset(pool: &[usize], k: usize, mut f: impl FnMut(&[usize])) {
    let mut it = Combinations::new(pool.to_vec(), k);
    while let Some(s) = it.next_subset() {
        f(s);
    }
}

/// Integer square root (floor).
pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(64, 8).unwrap(), 4_426_165_368);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial_wide(2000, 3), 1_331_334_000);
    }

    #[test]
    fn overflow_is_an_error() {
        assert!(matches!(binomial(200, 100), Err(Error::Overflow { .. })));
        assert!(binomial(68, 34).is_err());
        assert!(binomial(67, 33).is_ok());
        assert_eq!(binomial_wide(400, 200), u128::MAX);
    }

    #[test]
    fn colex_order_matches_rank_order() {
        let mut it = Combinations::of_range(7, 3);
        let mut expected = 0u64;
        while let Some(s) = it.next_subset() {
            assert_eq!(rank(s), expected);
            assert_eq!(unrank(expected, 3), s);
            expected += 1;
        }
        assert_eq!(expected, 35);
    }

    #[test]
    fn degenerate_subset_sizes() {
        let mut it = Combinations::of_range(3, 0);
        assert_eq!(it.next_subset(), Some(&[][..]));
        assert_eq!(it.next_subset(), None);
        let mut it = Combinations::of_range(2, 3);
        assert_eq!(it.next_subset(), None);
    }

    #[test]
    fn rank_round_trip_exhaustive() {
        for n in 0..=32usize {
            for k in 1..=5usize {
                let total = binomial(n, k).unwrap();
                for r in 0..total {
                    let t = unrank(r, k);
                    assert!(t.windows(2).all(|w| w[0] < w[1]));
                    assert!(t.iter().all(|&v| v < n));
                    assert_eq!(rank(&t), r);
                }
            }
        }
    }

    #[test]
    fn isqrt_boundaries() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(15), 3);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
    }
}
