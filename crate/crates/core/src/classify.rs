//! Fast classification and minimal-partition construction.
//!
//! Key entry points:
//! - `satisfies_inequalities` / `is_er_partition`: linear-time test
//!   lambda_i <= (e+1) + r * (lambda_0 + ... + lambda_(i-1)), equivalent to
//!   the cover having no e+1 consecutive absent values in [0, r*m]
//! - `min_parts`: fewest parts any qualifying partition of m can have
//! - `canonical_minimal`: an explicit witness with that many parts
//!
//! A configuration of n+1 parts can sum to at most
//! (e+1)((r+1)^(n+1) - 1)/r, each part being at most e+1 plus r times the
//! prefix sum; conversely every m up to that capacity is reachable with
//! n+1 parts. `min_parts` is therefore the least n+1 whose capacity
//! reaches m. (A floor-log of r*m/(e+1) gives the same answer except on
//! the last few m below each capacity when e >= r, where the log form
//! overshoots the true capacity; the capacity comparison is the one the
//! counting identities require.)

use crate::error::Result;
use crate::params::Params;
use crate::partition::Partition;

/// The prefix inequalities: part i is at most (e+1) + r * (sum of earlier
/// parts). The i = 0 case reads lambda_0 <= e+1 via the empty prefix.
pub fn satisfies_inequalities(p: &Partition, params: Params) -> bool {
    let mut prefix: u64 = 0;
    for &part in p.parts() {
        // part <= e+1 + r*prefix, rearranged to avoid overflow on r*prefix
        if part > params.e1() && (part - params.e1()).div_ceil(params.r()) > prefix {
            return false;
        }
        prefix += part;
    }
    true
}

/// Whether `p` is an (e,r)-partition. Same predicate as a full cover-gap
/// scan, without building the cover.
pub fn is_er_partition(p: &Partition, params: Params) -> bool {
    satisfies_inequalities(p, params)
}

/// Fewest parts over all (e,r)-partitions of m: the least n+1 with
/// m <= (e+1)((r+1)^(n+1) - 1)/r.
pub fn min_parts(m: u64, params: Params) -> Result<usize> {
    assert!(m >= 1, "m must be positive");
    let n = min_level(m, params)?;
    Ok(n as usize + 1)
}

/// The least n with m <= capacity(n); `min_parts` minus one.
pub(crate) fn min_level(m: u64, params: Params) -> Result<u32> {
    let mut n = 0u32;
    while params.capacity(n)? < m {
        n += 1;
    }
    Ok(n)
}

/// The sorted multiset {(e+1)(r+1)^i : i < n} plus the residual
/// m - (e+1)((r+1)^n - 1)/r, where n+1 = min_parts(m). Always a valid
/// (e,r)-partition with exactly min_parts(m) parts.
pub fn canonical_minimal(m: u64, params: Params) -> Result<Partition> {
    assert!(m >= 1, "m must be positive");
    let n = min_level(m, params)?;
    let mut parts = Vec::with_capacity(n as usize + 1);
    let mut tower_sum = 0u64;
    for i in 0..n {
        let t = params.tower_part(i)?;
        parts.push(t);
        tower_sum += t;
    }
    debug_assert!(m > tower_sum);
    parts.push(m - tower_sum);
    parts.sort_unstable();
    Partition::new(parts)
}
