//! Exhaustive generation, the ground truth the fast counts are checked
//! against.
//!
//! `enumerate_all` walks weakly increasing part sequences depth-first,
//! choosing each next part from [last, min(e+1 + r*prefix, m - prefix)], so
//! only prefixes of valid (e,r)-partitions are ever visited and output
//! arrives in lexicographic order of part sequences. `r_n_brute` walks
//! mu-vectors against their constraint windows instead.

use crate::classify::min_parts;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::Partition;

/// What to enumerate. `minimal_only` restricts to exactly `min_parts(m)`
/// parts and overrides `part_count`; `limit` caps the number of results,
/// hitting it is an error carrying the partial list.
#[derive(Debug, Clone, Copy)]
pub struct EnumConfig {
    pub m: u64,
    pub params: Params,
    pub minimal_only: bool,
    pub part_count: Option<usize>,
    pub limit: Option<usize>,
}

impl EnumConfig {
    pub fn all(m: u64, params: Params) -> Self {
        EnumConfig {
            m,
            params,
            minimal_only: false,
            part_count: None,
            limit: None,
        }
    }

    pub fn minimal(m: u64, params: Params) -> Self {
        EnumConfig {
            minimal_only: true,
            ..EnumConfig::all(m, params)
        }
    }
}

struct Walk {
    params: Params,
    m: u64,
    part_count: Option<usize>,
    limit: Option<usize>,
    stack: Vec<u64>,
    out: Vec<Partition>,
}

impl Walk {
    /// Returns false when the limit was hit.
    fn recurse(&mut self, prefix_sum: u64, last: u64) -> bool {
        if prefix_sum == self.m {
            if self.part_count.is_none_or(|t| t == self.stack.len()) {
                if self.limit.is_some_and(|l| self.out.len() >= l) {
                    return false;
                }
                self.out
                    .push(Partition::new(self.stack.clone()).expect("walk builds valid parts"));
            }
            return true;
        }
        let budget = self.m - prefix_sum;
        let cap = self
            .params
            .e1()
            .saturating_add(self.params.r().saturating_mul(prefix_sum))
            .min(budget);
        for part in last.max(1)..=cap {
            if let Some(t) = self.part_count {
                if self.stack.len() >= t {
                    break;
                }
                // every slot still open holds at least `part`
                let slots_left = (t - self.stack.len()) as u64;
                if part.saturating_mul(slots_left) > budget {
                    break;
                }
            }
            self.stack.push(part);
            let more = self.recurse(prefix_sum + part, part);
            self.stack.pop();
            if !more {
                return false;
            }
        }
        true
    }
}

/// All (e,r)-partitions of m selected by `cfg`, in lexicographic order of
/// part sequences.
pub fn enumerate_all(cfg: &EnumConfig) -> Result<Vec<Partition>> {
    assert!(cfg.m >= 1, "m must be positive");
    let part_count = if cfg.minimal_only {
        Some(min_parts(cfg.m, cfg.params)?)
    } else {
        cfg.part_count
    };
    if let Some(t) = part_count {
        assert!(t >= 1, "part count must be positive");
    }
    let mut walk = Walk {
        params: cfg.params,
        m: cfg.m,
        part_count,
        limit: cfg.limit,
        stack: Vec::new(),
        out: Vec::new(),
    };
    if walk.recurse(0, 1) {
        Ok(walk.out)
    } else {
        Err(Error::LimitExceeded {
            limit: cfg.limit.unwrap_or(0),
            partial: walk.out,
        })
    }
}

/// Number of (e,r)-partitions of m with exactly `min_parts(m)` parts, by
/// direct walk.
pub fn count_minimal_brute(m: u64, params: Params) -> Result<usize> {
    Ok(enumerate_all(&EnumConfig::minimal(m, params))?.len())
}

/// Weight census of mu-vectors of length n+1: entry k counts vectors with
/// mu_0 + ... + mu_n = k, for k up to `k_max`, walked directly against the
/// constraint windows.
pub fn r_n_brute(n: usize, params: Params, k_max: u64) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; k_max as usize + 1];

    // level i chooses mu_i within [r*prefix, (e+1)*r*(r+1)^(i-1) + prev],
    // with mu_0 in [0, e]; prune on weight > k_max
    fn walk(
        counts: &mut [u64],
        params: Params,
        n: usize,
        level: usize,
        prefix: u64,
        prev: u64,
        k_max: u64,
    ) -> Result<()> {
        if level > n {
            counts[prefix as usize] += 1;
            return Ok(());
        }
        let (lo, hi) = if level == 0 {
            (0, params.e())
        } else {
            let lo = params.r().checked_mul(prefix).ok_or(Error::Overflow)?;
            let hi = params
                .tower_part(level as u32 - 1)?
                .checked_mul(params.r())
                .and_then(|v| v.checked_add(prev))
                .ok_or(Error::Overflow)?;
            (lo, hi)
        };
        for mu in lo..=hi {
            let weight = prefix.checked_add(mu).ok_or(Error::Overflow)?;
            if weight > k_max {
                break;
            }
            walk(counts, params, n, level + 1, weight, mu, k_max)?;
        }
        Ok(())
    }

    walk(&mut counts, params, n, 0, 0, 0, k_max)?;
    Ok(counts)
}
