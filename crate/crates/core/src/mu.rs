//! The complement transform mu_i = (e+1)(r+1)^i - lambda_i.
//!
//! On partitions with n+1 parts satisfying the prefix inequalities, the
//! transform is a bijection onto vectors (mu_0, ..., mu_n) with
//!
//!   0 <= mu_0 <= e,
//!   r*(mu_0 + ... + mu_(i-1)) <= mu_i <= (e+1)*r*(r+1)^(i-1) + mu_(i-1)
//!
//! and it sends a partition of m to a vector of weight
//! (e+1)((r+1)^(n+1) - 1)/r - m. The lower constraint mirrors the prefix
//! inequality, the upper one mirrors part sortedness; telescoping the upper
//! one gives mu_i <= (e+1)((r+1)^i - 1) + e, so inversion always lands on
//! positive parts. Weights below (e+1)(r+1)^n are the ones whose reflected
//! m admits no partition with fewer than n+1 parts; only there do
//! mu-vector counts agree with minimal-partition counts.

use crate::classify::is_er_partition;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuVector {
    mus: Vec<u64>,
    params: Params,
}

impl MuVector {
    /// Validates the two constraint families above.
    pub fn new(mus: Vec<u64>, params: Params) -> Result<Self> {
        if mus.is_empty() {
            return Err(Error::InvalidMuVector("no entries".into()));
        }
        if mus[0] > params.e() {
            return Err(Error::InvalidMuVector(format!(
                "mu_0 = {} exceeds e = {}",
                mus[0],
                params.e()
            )));
        }
        let mut prefix: u64 = mus[0];
        for i in 1..mus.len() {
            let lower = params.r().checked_mul(prefix).ok_or(Error::Overflow)?;
            let upper = params
                .tower_part(i as u32 - 1)?
                .checked_mul(params.r())
                .and_then(|v| v.checked_add(mus[i - 1]))
                .ok_or(Error::Overflow)?;
            if mus[i] < lower || mus[i] > upper {
                return Err(Error::InvalidMuVector(format!(
                    "mu_{i} = {} outside [{lower}, {upper}]",
                    mus[i]
                )));
            }
            prefix = prefix.checked_add(mus[i]).ok_or(Error::Overflow)?;
        }
        Ok(MuVector { mus, params })
    }

    pub fn mus(&self) -> &[u64] {
        &self.mus
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// Sum of entries; equals capacity(n) - m for the transform of a
    /// partition of m with n+1 parts.
    pub fn weight(&self) -> u64 {
        self.mus.iter().sum()
    }
}

/// Complement an (e,r)-partition against the tower (e+1)(r+1)^i.
pub fn mu_transform(p: &Partition, params: Params) -> Result<MuVector> {
    if !is_er_partition(p, params) {
        return Err(Error::NotErPartition);
    }
    let mus = p
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| {
            let tower = params.tower_part(i as u32)?;
            debug_assert!(tower >= part);
            Ok(tower - part)
        })
        .collect::<Result<Vec<_>>>()?;
    MuVector::new(mus, params)
}

/// Invert the complement: lambda_i = (e+1)(r+1)^i - mu_i.
pub fn mu_inverse(mv: &MuVector) -> Result<Partition> {
    let params = mv.params();
    let parts = mv
        .mus()
        .iter()
        .enumerate()
        .map(|(i, &mu)| {
            let tower = params.tower_part(i as u32)?;
            if mu >= tower {
                return Err(Error::NonpositivePart { index: i });
            }
            Ok(tower - mu)
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}
