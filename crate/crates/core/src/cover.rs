//! Occupancy oracle for the r-fold cover of a partition.
//!
//! The r-cover of lambda_0 + ... + lambda_n is the set of subset sums
//! sum alpha_i * lambda_i with every alpha_i in 0..=r; it lives in [0, r*m].
//! `cover_gap` reports the least start of a run of e+1 consecutive absent
//! values whose window lies entirely inside [0, r*m]. Both entry points
//! refuse to materialize covers with r*m beyond a size bound so a stray
//! query cannot eat the machine.

use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::Partition;

/// Default bound on r*m for the occupancy array.
pub const DEFAULT_ORACLE_LIMIT: u64 = 1_000_000;

/// Outcome of the gap scan. `ok` holds exactly when `gap_start` is `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverReport {
    pub ok: bool,
    pub gap_start: Option<u64>,
}

/// Bit-packed occupancy over [0, r*m].
struct Occupancy {
    words: Vec<u64>,
    len: usize,
}

impl Occupancy {
    fn new(len: usize) -> Self {
        Occupancy {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// self |= self << k, truncated to the fixed length.
    fn or_shift(&mut self, k: usize) {
        debug_assert!(k >= 1);
        let (wk, bk) = (k / 64, k % 64);
        let n = self.words.len();
        for i in (wk..n).rev() {
            let lo = self.words[i - wk];
            let shifted = if bk == 0 {
                lo
            } else {
                let carry = if i > wk {
                    self.words[i - wk - 1] >> (64 - bk)
                } else {
                    0
                };
                (lo << bk) | carry
            };
            self.words[i] |= shifted;
        }
        if self.len % 64 != 0 {
            let mask = (1u64 << (self.len % 64)) - 1;
            *self.words.last_mut().unwrap() &= mask;
        }
    }

    /// Close the set under adding a value `step` up to `uses` more times.
    /// Doubling: after j rounds the set is closed under 0..2^j-1 extra uses,
    /// so log(uses) shift-ors suffice.
    fn add_value(&mut self, step: usize, uses: usize) {
        if step == 0 || uses == 0 {
            return;
        }
        let mut have = 0usize; // closed under 0..=have extra uses
        let mut chunk = 1usize;
        while have < uses {
            let take = chunk.min(uses - have);
            if let Some(shift) = step.checked_mul(take) {
                if shift >= self.len {
                    break; // further uses land beyond r*m, which cannot happen
                }
                self.or_shift(shift);
            }
            have += take;
            chunk = have + 1;
        }
    }
}

fn occupancy(p: &Partition, params: Params, limit: u64) -> Result<Occupancy> {
    let rm = params
        .r()
        .checked_mul(p.m())
        .ok_or(Error::Overflow)?;
    if rm > limit {
        return Err(Error::OracleSizeExceeded { rm, limit });
    }
    let len = rm as usize + 1;
    let mut occ = Occupancy::new(len);
    occ.set(0);
    // equal parts collapse: c copies of v, each usable r times, is one value
    // with r*c uses
    let mut i = 0;
    let parts = p.parts();
    while i < parts.len() {
        let v = parts[i];
        let mut copies = 0usize;
        while i < parts.len() && parts[i] == v {
            copies += 1;
            i += 1;
        }
        let uses = copies
            .checked_mul(params.r() as usize)
            .ok_or(Error::Overflow)?;
        occ.add_value(v as usize, uses);
    }
    Ok(occ)
}

/// The r-cover as a sorted list of present values, bounded by `DEFAULT_ORACLE_LIMIT`.
pub fn r_cover(p: &Partition, params: Params) -> Result<Vec<u64>> {
    r_cover_with_limit(p, params, DEFAULT_ORACLE_LIMIT)
}

pub fn r_cover_with_limit(p: &Partition, params: Params, limit: u64) -> Result<Vec<u64>> {
    let occ = occupancy(p, params, limit)?;
    Ok((0..occ.len)
        .filter(|&i| occ.get(i))
        .map(|i| i as u64)
        .collect())
}

/// Scan for the least window of e+1 consecutive absent values inside [0, r*m].
pub fn cover_gap(p: &Partition, params: Params) -> Result<CoverReport> {
    cover_gap_with_limit(p, params, DEFAULT_ORACLE_LIMIT)
}

pub fn cover_gap_with_limit(p: &Partition, params: Params, limit: u64) -> Result<CoverReport> {
    let occ = occupancy(p, params, limit)?;
    let window = params.e1() as usize;
    let mut run_start = 0usize;
    let mut run_len = 0usize;
    for v in 0..occ.len {
        if occ.get(v) {
            run_len = 0;
        } else {
            if run_len == 0 {
                run_start = v;
            }
            run_len += 1;
            if run_len == window {
                return Ok(CoverReport {
                    ok: false,
                    gap_start: Some(run_start as u64),
                });
            }
        }
    }
    Ok(CoverReport {
        ok: true,
        gap_start: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pr(e: u64, r: u64) -> Params {
        Params::new(e, r).unwrap()
    }

    #[test]
    fn cover_of_two_six_doubled() {
        // 2+6 under r=2: sums a*2 + b*6, a,b in 0..=2
        let cover = r_cover(&part("2+6"), pr(1, 2)).unwrap();
        assert_eq!(cover, vec![0, 2, 4, 6, 8, 10, 12, 14, 16]);
    }

    #[test]
    fn cover_respects_multiplicity() {
        // 1+1 under r=1: each copy of 1 used once -> {0,1,2}
        let cover = r_cover(&part("1+1"), pr(0, 1)).unwrap();
        assert_eq!(cover, vec![0, 1, 2]);
    }

    #[test]
    fn gap_scan_finds_least_window() {
        // cover of 1+1+7 under r=2 is {0..4, 7..11, 14..18}; first absent
        // pair is {5,6}
        let report = cover_gap(&part("1+1+7"), pr(1, 2)).unwrap();
        assert_eq!(report.ok, false);
        assert_eq!(report.gap_start, Some(5));
    }

    #[test]
    fn single_part_nine_fails_immediately() {
        let report = cover_gap(&part("9"), pr(0, 1)).unwrap();
        assert_eq!(report.gap_start, Some(1));
    }

    #[test]
    fn ok_report_has_no_witness() {
        let report = cover_gap(&part("1+2+6"), pr(1, 2)).unwrap();
        assert!(report.ok && report.gap_start.is_none());
    }

    #[test]
    fn size_guard_trips() {
        let err = cover_gap_with_limit(&part("100"), pr(0, 2), 150).unwrap_err();
        assert!(matches!(err, Error::OracleSizeExceeded { rm: 200, limit: 150 }));
    }

    #[test]
    fn window_must_fit_inside_range() {
        // cover of 2 under (1,1) is {0,2}; the only absent value is 1 and no
        // window of two consecutive absent values fits in [0,2]
        let report = cover_gap(&part("2"), pr(1, 1)).unwrap();
        assert!(report.ok);
    }
}
