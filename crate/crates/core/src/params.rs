use crate::error::{Error, Result};

/// Relaxation/completeness parameters: `e >= 0` spare misses, cover
/// multiplicity `r >= 1`.
///
/// `(e, r) = (0, 1)` is the classical complete-partition setting; raising `e`
/// relaxes the cover requirement, raising `r` lets every part be used up to
/// `r` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    e: u64,
    r: u64,
}

impl Params {
    pub fn new(e: u64, r: u64) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidParams("r must be at least 1".into()));
        }
        Ok(Params { e, r })
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// e + 1, the length of a disqualifying run of absent values.
    pub fn e1(&self) -> u64 {
        self.e + 1
    }

    /// (e+1) * (r+1)^i, the i-th part of the canonical minimal tower.
    pub fn tower_part(&self, i: u32) -> Result<u64> {
        (self.r + 1)
            .checked_pow(i)
            .and_then(|p| p.checked_mul(self.e1()))
            .ok_or(Error::Overflow)
    }

    /// (e+1) * ((r+1)^(n+1) - 1) / r: the largest m any valid configuration
    /// of n+1 parts can sum to. Exact: (r+1)^(n+1) - 1 is divisible by r.
    pub fn capacity(&self, n: u32) -> Result<u64> {
        let top = (self.r + 1)
            .checked_pow(n + 1)
            .ok_or(Error::Overflow)?
            .checked_sub(1)
            .ok_or(Error::Overflow)?;
        self.e1().checked_mul(top / self.r).ok_or(Error::Overflow)
    }
}
