//! Counting all (e,r)-partitions of m: a largest-part recursion and an
//! equivalent generating-function form.
//!
//! Write E_k(m) for the number of (e,r)-partitions of m with largest part
//! exactly k. Removing the largest part shows
//!
//!   E_k(m) = E_k(m-k) + E_(k-1)(m-1)   whenever k <= e+1 + r*(m-k),
//!
//! and E_k(m) = 0 outside that guard (also for k > m, k < 0, or m < 0),
//! with E_0(0) = 1. A largest part k exists at all only when
//! k*(r+1) <= r*m + e+1, so the total count of (e,r)-partitions of m is
//! sum of E_k(m) for k = 1 ..= floor((r*m + e+1)/(r+1)).
//!
//! The series `phi_series(k)` packages column k: its coefficient of x^m is
//! E_k(m). It equals the bounded-part partition series x^k / prod_(j=1..k)
//! (1 - x^j) minus correction terms
//!
//!   x^(k-1) * sum_(i=2..k) x^(a_i) / prod_(j=i..k) (1 - x^j) * E_(i-1)(i + a_i - 2),
//!
//! where a_i = ceil((i - (e+1)) / r). The factor E_(i-1)(i + a_i - 2) is
//! nonzero only when a_i >= 1, so terms with i <= e+1 vanish on their own;
//! in particular the i = 2 term only contributes when e = 0, and for e >= 1
//! the sum effectively starts at i = 3.

use crate::error::Result;
use crate::params::Params;
use crate::series::Series;
use num_bigint::BigInt;
use num_traits::Zero;

/// Table of E_k(m) for m <= m_max, k <= floor((r*m_max + e+1)/(r+1)).
#[derive(Debug, Clone)]
pub struct CountTable {
    params: Params,
    m_max: usize,
    k_max: usize,
    /// rows[m][k]
    rows: Vec<Vec<BigInt>>,
}

impl CountTable {
    /// Fill the table bottom-up in m; the recursion only reads entries at
    /// smaller m.
    pub fn build(params: Params, m_max: usize) -> Self {
        let k_max = k_bound(m_max as u64, params) as usize;
        let e1 = params.e1() as i64;
        let r = params.r() as i64;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m_max + 1);
        for m in 0..=(m_max as i64) {
            let mut row = vec![BigInt::zero(); k_max + 1];
            for k in 0..=(k_max as i64) {
                if k == 0 {
                    if m == 0 {
                        row[0] = BigInt::from(1);
                    }
                    continue;
                }
                if k > m || k > e1 + r * (m - k) {
                    continue;
                }
                // both lookups are in bounds: 0 <= m-k < m and m-1 < m
                let same_k = &rows[(m - k) as usize][k as usize];
                let prev_k = &rows[(m - 1) as usize][(k - 1) as usize];
                row[k as usize] = same_k + prev_k;
            }
            rows.push(row);
        }
        CountTable {
            params,
            m_max,
            k_max,
            rows,
        }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// E_k(m). Negative arguments count zero; m beyond the table is a bug.
    pub fn get(&self, k: i64, m: i64) -> BigInt {
        if k < 0 || m < 0 {
            return BigInt::zero();
        }
        assert!(
            m as usize <= self.m_max,
            "m = {m} beyond table bound {}",
            self.m_max
        );
        if k as usize > self.k_max {
            // k above the global bound implies k above the per-m bound
            return BigInt::zero();
        }
        self.rows[m as usize][k as usize].clone()
    }

    /// CSV dump, header `m,k,E`, row-major in m then k.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,k,E\n");
        for (m, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                out.push_str(&format!("{m},{k},{v}\n"));
            }
        }
        out
    }
}

/// Largest part bound: floor((r*m + e+1)/(r+1)).
pub fn k_bound(m: u64, params: Params) -> u64 {
    (params.r() * m + params.e1()) / (params.r() + 1)
}

/// Number of (e,r)-partitions of m, summed from a fresh table.
pub fn count_all(m: u64, params: Params) -> BigInt {
    let table = CountTable::build(params, m as usize);
    count_all_from(&table, m)
}

/// Same sum against a prebuilt table covering m.
pub fn count_all_from(table: &CountTable, m: u64) -> BigInt {
    let hi = k_bound(m, table.params()).min(m);
    let mut total = BigInt::zero();
    for k in 1..=hi {
        total += table.get(k as i64, m as i64);
    }
    total
}

/// a_i = ceil((i - (e+1)) / r), the least admissible excess index at
/// largest part i; negative when i <= e+1.
pub fn a_index(i: u64, params: Params) -> i64 {
    (i as i64 - params.e1() as i64).div_ceil(params.r() as i64)
}

/// The bounded-part main term x^k / prod_(j=1..k) (1 - x^j).
pub fn phi_main(k: u64, n: usize) -> Series {
    let mut prod = Series::one(n);
    for j in 1..=(k as usize) {
        prod = &prod * &Series::geom(j, n);
    }
    prod.shift(k as usize)
}

/// The correction sum of `phi_series`, as a (nonnegative) series.
pub fn phi_correction(k: u64, table: &CountTable, n: usize) -> Series {
    let mut total = Series::zero(n);
    for i in 2..=k {
        let a = a_index(i, table.params());
        let weight = table.get(i as i64 - 1, i as i64 + a - 2);
        if weight.is_zero() {
            continue;
        }
        // weight != 0 forces a >= 1
        debug_assert!(a >= 1);
        let mut term = Series::monomial(weight, (k - 1) as usize + a as usize, n);
        for j in i..=k {
            term = &term * &Series::geom(j as usize, n);
        }
        total = &total + &term;
    }
    total
}

/// Column-k series: coefficient of x^m is E_k(m), for m < n.
///
/// The internal table must reach i + a_i - 2 <= k + a_k - 2, which stays
/// below max(k, n) for every admissible i.
pub fn phi_series(k: u64, params: Params, n: usize) -> Series {
    let reach = (k as i64 + a_index(k, params).max(0)) as usize;
    let table = CountTable::build(params, reach);
    phi_series_from(k, &table, n)
}

/// Same, against a caller-held table (must cover k + a_k - 2).
pub fn phi_series_from(k: u64, table: &CountTable, n: usize) -> Series {
    &phi_main(k, n) - &phi_correction(k, table, n)
}

/// Number of (e,r)-partitions of m read off the phi columns: coefficient of
/// x^m in sum of phi_k over admissible k.
pub fn count_all_via_series(m: u64, params: Params) -> Result<BigInt> {
    let n = m as usize + 1;
    let hi = k_bound(m, params).min(m);
    let table = CountTable::build(params, m as usize);
    let mut total = Series::zero(n);
    for k in 1..=hi {
        total = &total + &phi_series_from(k, &table, n);
    }
    Ok(total.coeff(m as usize)?.clone())
}
