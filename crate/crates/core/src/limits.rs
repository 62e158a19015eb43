//! Resource guards shared by every operation that materializes a family of subsets.

use std::sync::OnceLock;

use crate::combinatorics::binomial_wide;
use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::max_cells`].
pub const MAX_CELLS_ENV: &str = "DISPERSE_MAX_CELLS";

pub const DEFAULT_MAX_CELLS: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest subset family (e.g. `C(n, ell)`) any single operation may enumerate or index.
    pub max_cells: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cells: DEFAULT_MAX_CELLS,
        }
    }
}

impl Limits {
    /// Defaults, with `DISPERSE_MAX_CELLS` applied when set and parseable.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(MAX_CELLS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
        {
            limits.max_cells = cap;
        }
        limits
    }

    /// Process-wide limits, read from the environment once.
    pub fn global() -> &'static Limits {
        static GLOBAL: OnceLock<Limits> = OnceLock::new();
        GLOBAL.get_or_init(Limits::from_env)
    }

    /// Refuses when `C(n, k)` exceeds the cell cap.
    pub fn check_subsets(&self, what: &'static str, n: usize, k: usize) -> Result<u64> {
        let cells = binomial_wide(n, k);
        if cells > self.max_cells as u128 {
            return Err(Error::TooLarge {
                what,
                cells,
                cap: self.max_cells,
            });
        }
        Ok(cells as u64)
    }
}
