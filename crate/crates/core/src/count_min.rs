//! Counting minimal (e,r)-partitions through the mu-vector weight series.
//!
//! Level n covers partitions with n+1 parts, i.e. m in the window
//! (capacity(n-1), capacity(n)]. Writing R_n for the weight series of
//! mu-vectors of length n+1, the count of minimal partitions of m is the
//! coefficient of x^k in R_n at k = capacity(n) - m, and every identity
//! below holds up to the validity order (e+1)(r+1)^n.
//!
//! Series inventory (all exact rational combinations, reusable at any
//! order):
//! - F_n = prod_(j=0..n) 1/(1 - x^((r+1)^j)), F_(-1) = 1
//! - G_n = sum_(j=0..n-1) x^((r+1)^j - 1)/(1 - x^(2(r+1)^j))
//!   * F_j(x) * F_(n-j-1)(x^((2r+1)(r+1)^j)), G_0 = 0
//! - for r = 1 only, with F taken at r = 1:
//!   D_n    = sum_(j=0..n-1) x^(2^j - 1) F_(j+1)(x) F_(n-j-2)(x^(3*2^j))
//!   D*_n   = sum_(j=0..n-1) x^(2^(j+2) - 4) F_(j+1)(x) D_(n-j)(x^(3*2^j))
//!
//! Closed forms for R_n below the validity order:
//! - r >= 2, n >= 1:  R_n = F_n - x^(r(e+1)(r+1)^(n-1) + 1) G_n,
//!   trustworthy for e <= 2r+1; for larger e the discarded tail of the
//!   level-1 anchor already pollutes coefficients below the validity order
//!   (first seen at (e,r) = (6,2): the closed form gives 3 at weight 20
//!   where the true census says 4), so the dispatcher switches to the
//!   recursion there
//! - r = 1, n >= 3:   R_n = F_n - x^(2^(n-1)(e+1) + 1) D_n
//!   + x^(7*2^(n-3)(e+1) + 4) D*_(n-2)
//! - n <= 2: `r_series_base` spells out the small levels directly
//!
//! Independent of the closed forms, R obeys
//!
//!   R_n = 1/(1-x) R_(n-1)(x^(r+1))
//!       - x^(r(e+1)(r+1)^(n-1) + 1)/((1-x)(1-x^2)) R_(n-2)(x^(2r+1))
//!
//! for n >= 2, which `r_series_recursive` evaluates; it is valid for every
//! e and serves as the cross-check path.

use crate::classify::min_level;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::series::Series;
use num_bigint::BigInt;

/// F_level at order `n`; `level = -1` is the empty product.
pub fn f_series(level: i64, r: u64, n: usize) -> Series {
    let mut prod = Series::one(n);
    if level < 0 {
        return prod;
    }
    let mut step = 1u64;
    for _ in 0..=level {
        prod = &prod * &Series::geom(step as usize, n);
        step = step.saturating_mul(r + 1);
        if step as usize >= n {
            // remaining factors are 1 + O(x^n)
            break;
        }
    }
    prod
}

/// G_level at order `n`; G_0 = 0.
pub fn g_series(level: u32, r: u64, n: usize) -> Series {
    let mut total = Series::zero(n);
    for j in 0..level {
        let pow = (r + 1).pow(j);
        let f_low = f_series(j as i64, r, n);
        let f_high = f_series(level as i64 - j as i64 - 1, r, n)
            .substitute(((2 * r + 1) * pow) as usize);
        let base = Series::geom(2 * pow as usize, n);
        let term = (&(&base * &f_low) * &f_high).shift(pow as usize - 1);
        total = &total + &term;
    }
    total
}

/// D_level at order `n` (r = 1); D_0 = 0.
pub fn d_series(level: u32, n: usize) -> Series {
    let mut total = Series::zero(n);
    for j in 0..level {
        let pow = 1u64 << j;
        let f_low = f_series(j as i64 + 1, 1, n);
        let f_high = f_series(level as i64 - j as i64 - 2, 1, n).substitute(3 * pow as usize);
        let term = (&f_low * &f_high).shift(pow as usize - 1);
        total = &total + &term;
    }
    total
}

/// D*_level at order `n` (r = 1); D*_0 = 0.
pub fn dstar_series(level: u32, n: usize) -> Series {
    let mut total = Series::zero(n);
    for j in 0..level {
        let pow = 1u64 << j;
        let f_low = f_series(j as i64 + 1, 1, n);
        let d_high = d_series(level - j, n).substitute(3 * pow as usize);
        let term = (&f_low * &d_high).shift(4 * pow as usize - 4);
        total = &total + &term;
    }
    total
}

/// The order below which a level-`level` series matches the true census:
/// (e+1)(r+1)^level.
pub fn validity_order(level: u32, params: Params) -> Result<usize> {
    Ok(params.tower_part(level)? as usize)
}

fn clamp(n: usize, level: u32, params: Params) -> Result<usize> {
    Ok(n.min(validity_order(level, params)?).max(1))
}

/// Shift exponent of the correction term: r(e+1)(r+1)^(level-1) + 1.
fn correction_shift(level: u32, params: Params) -> Result<usize> {
    let s = params
        .tower_part(level - 1)?
        .checked_mul(params.r())
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow)?;
    Ok(s as usize)
}

/// Closed-form R at levels where one exists (r >= 2: level >= 1; r = 1:
/// level >= 3), truncated to the validity order.
pub fn r_series_closed(level: u32, params: Params, n: usize) -> Result<Series> {
    let r = params.r();
    if (r >= 2 && level < 1) || (r == 1 && level < 3) {
        return Err(Error::UnsupportedLevel {
            n: level as usize,
            r,
        });
    }
    let order = clamp(n, level, params)?;
    let f = f_series(level as i64, r, order);
    if r >= 2 {
        let g = g_series(level, r, order);
        Ok(&f - &g.shift(correction_shift(level, params)?))
    } else {
        let d = d_series(level, order).shift(correction_shift(level, params)?);
        let dstar_shift = params
            .tower_part(level - 3)?
            .checked_mul(7)
            .and_then(|v| v.checked_add(4))
            .ok_or(Error::Overflow)? as usize;
        let dstar = dstar_series(level - 2, order).shift(dstar_shift);
        Ok(&(&f - &d) + &dstar)
    }
}

/// The small levels spelled out: R_0 is the exact polynomial
/// 1 + x + ... + x^e; R_1 and R_2 come truncated to their validity orders.
pub fn r_series_base(level: u32, params: Params, n: usize) -> Result<Series> {
    let r = params.r();
    match level {
        0 => {
            let mut coeffs = vec![BigInt::from(0); n];
            let mut k = 0usize;
            while k < n && (k as u64) <= params.e() {
                coeffs[k] = BigInt::from(1);
                k += 1;
            }
            Ok(Series::from_coeffs(coeffs))
        }
        1 => {
            let order = clamp(n, 1, params)?;
            let head = &Series::geom(1, order) * &Series::geom(r as usize + 1, order);
            let tail = &Series::geom(1, order) * &Series::geom(2, order);
            Ok(&head - &tail.shift(correction_shift(1, params)?))
        }
        2 if r == 1 => {
            let order = clamp(n, 2, params)?;
            let f2 = f_series(2, 1, order);
            let bracket = &f2.shift(1)
                + &(&f_series(1, 1, order) * &f_series(0, 1, order).substitute(3));
            Ok(&f2 - &bracket.shift(correction_shift(2, params)?))
        }
        2 => r_series_closed(2, params, n),
        _ => Err(Error::UnsupportedLevel {
            n: level as usize,
            r,
        }),
    }
}

/// R via the two-step recursion, valid for every e and r; levels 0 and 1
/// delegate to the base forms. Result truncated to the validity order.
pub fn r_series_recursive(level: u32, params: Params, n: usize) -> Result<Series> {
    let order = clamp(n, level, params)?;
    r_candidate(level, params, order)
}

/// The recursion evaluated at exactly `order`, no validity clamp. The
/// returned coefficients are meaningful only below the validity order of
/// `level`; garbage above it never contaminates lower exponents because
/// both recursion branches land their inherited tails at or beyond
/// (e+1)(r+1)^level.
fn r_candidate(level: u32, params: Params, order: usize) -> Result<Series> {
    match level {
        0 => r_series_base(0, params, order),
        1 => {
            let head = &Series::geom(1, order) * &Series::geom(params.r() as usize + 1, order);
            let tail = &Series::geom(1, order) * &Series::geom(2, order);
            Ok(&head - &tail.shift(correction_shift(1, params)?))
        }
        _ => {
            let r = params.r() as usize;
            let prev = r_candidate(level - 1, params, order)?.substitute(r + 1);
            let prev2 = r_candidate(level - 2, params, order)?.substitute(2 * r + 1);
            let head = &Series::geom(1, order) * &prev;
            let tail = &(&Series::geom(1, order) * &Series::geom(2, order)) * &prev2;
            Ok(&head - &tail.shift(correction_shift(level, params)?))
        }
    }
}

/// R at a level, by whichever path is trusted there: base forms at the
/// small levels, the closed forms where they hold, the recursion when
/// r >= 2 and e > 2r+1.
pub fn r_series(level: u32, params: Params, n: usize) -> Result<Series> {
    let r = params.r();
    if level == 0 || (r == 1 && level <= 2) {
        let order = clamp(n, level, params)?;
        return r_series_base(level, params, order);
    }
    if r >= 2 && params.e() > 2 * r + 1 {
        return r_series_recursive(level, params, n);
    }
    r_series_closed(level, params, n)
}

/// The (level, weight) address of m in the minimal-count scheme:
/// level = min_parts(m) - 1 and weight k = capacity(level) - m.
pub fn minimal_index(m: u64, params: Params) -> Result<(u32, u64)> {
    assert!(m >= 1, "m must be positive");
    let level = min_level(m, params)?;
    let k = params.capacity(level)? - m;
    // by minimality of the level, k < (e+1)(r+1)^level
    assert!(k < params.tower_part(level)?, "weight left the minimal window");
    Ok((level, k))
}

/// Number of minimal (e,r)-partitions of m.
pub fn count_minimal(m: u64, params: Params) -> Result<BigInt> {
    let (level, k) = minimal_index(m, params)?;
    let series = r_series(level, params, k as usize + 1)?;
    Ok(series.coeff(k as usize)?.clone())
}

/// Same count through the recursion, the cross-check path.
pub fn count_minimal_recursive(m: u64, params: Params) -> Result<BigInt> {
    let (level, k) = minimal_index(m, params)?;
    let series = r_series_recursive(level, params, k as usize + 1)?;
    Ok(series.coeff(k as usize)?.clone())
}

/// The level series bundled for inspection: F, the correction pieces in
/// play at this (r, level), and R, all at one order.
#[derive(Debug, Clone)]
pub struct MinSeriesBundle {
    pub params: Params,
    pub level: u32,
    pub order: usize,
    pub f: Series,
    pub correction: CorrectionSeries,
    pub r_series: Series,
    pub validity: usize,
}

/// Which correction accompanies F at this level.
#[derive(Debug, Clone)]
pub enum CorrectionSeries {
    /// Base levels carry their explicit polynomials/products instead.
    None,
    G(Series),
    D { d: Series, dstar: Series },
}

impl MinSeriesBundle {
    pub fn build(params: Params, level: u32, n: usize) -> Result<Self> {
        let validity = validity_order(level, params)?;
        let order = clamp(n, level, params)?;
        let r_ser = r_series(level, params, order)?;
        let f = f_series(level as i64, params.r(), order);
        let correction = if level == 0 || (params.r() == 1 && level <= 2) {
            CorrectionSeries::None
        } else if params.r() >= 2 {
            CorrectionSeries::G(g_series(level, params.r(), order))
        } else {
            CorrectionSeries::D {
                d: d_series(level, order),
                dstar: dstar_series(level - 2, order),
            }
        };
        Ok(MinSeriesBundle {
            params,
            level,
            order,
            f,
            correction,
            r_series: r_ser,
            validity,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::r_n_brute;

    fn pr(e: u64, r: u64) -> Params {
        Params::new(e, r).unwrap()
    }

    fn small(s: &Series, k: usize) -> i64 {
        i64::try_from(s.coeff(k).unwrap()).unwrap()
    }

    #[test]
    fn f_two_coefficients() {
        let f2 = f_series(2, 2, 19);
        let got: Vec<i64> = (14..=18).map(|k| small(&f2, k)).collect();
        assert_eq!(got, [7, 9, 9, 9, 12]);
    }

    #[test]
    fn g_two_leading_coefficients() {
        let g2 = g_series(2, 2, 7);
        let got: Vec<i64> = (0..7).map(|k| small(&g2, k)).collect();
        assert_eq!(got, [1, 1, 3, 3, 4, 6, 7]);
    }

    #[test]
    fn g_one_matches_its_short_form_below_order_five() {
        let g1 = g_series(1, 2, 12);
        let short = &Series::geom(1, 12) * &Series::geom(2, 12);
        for k in 0..5 {
            assert_eq!(g1.coeff(k).unwrap(), short.coeff(k).unwrap());
        }
        // they part ways once 1/(1 - x^(2r+1)) wakes up
        assert_ne!(g1.coeff(5).unwrap(), short.coeff(5).unwrap());
    }

    #[test]
    fn closed_r_two_under_one_two() {
        let r2 = r_series_closed(2, pr(1, 2), 100).unwrap();
        assert_eq!(r2.order(), 18, "validity order clamps");
        assert_eq!(small(&r2, 17), 5);
        // q_2(17) = 5 pairs with f coefficient 9 minus g coefficient 4
        let g2 = g_series(2, 2, 18);
        assert_eq!(small(&g2, 4), 4);
    }

    #[test]
    fn base_level_zero_is_the_run_polynomial() {
        let r0 = r_series_base(0, pr(1, 2), 6).unwrap();
        assert_eq!(r0.to_string(), "1 + x");
        assert_eq!(r0.order(), 6);
        let r0 = r_series_base(0, pr(3, 1), 3).unwrap();
        assert_eq!(r0.to_string(), "1 + x + x^2");
    }

    #[test]
    fn base_level_one_r_one() {
        let r1 = r_series_base(1, pr(0, 1), 50).unwrap();
        assert_eq!(r1.order(), 2);
        assert_eq!((small(&r1, 0), small(&r1, 1)), (1, 1));
    }

    #[test]
    fn base_level_one_matches_census_below_validity() {
        for (e, r) in [(0, 2), (1, 2), (2, 3), (1, 1)] {
            let params = pr(e, r);
            let validity = validity_order(1, params).unwrap();
            let r1 = r_series_base(1, params, validity).unwrap();
            let census = r_n_brute(1, params, validity as u64 - 1).unwrap();
            for k in 0..validity {
                assert_eq!(
                    small(&r1, k),
                    census[k] as i64,
                    "k={k} e={e} r={r}"
                );
            }
        }
    }

    #[test]
    fn census_disagrees_beyond_validity() {
        // lemma-order truncation is real: under (0,2) the base formula
        // continues 1,1,1,1,... past order 3 while the census stops
        let census = r_n_brute(1, pr(0, 2), 5).unwrap();
        assert_eq!(census, [1, 1, 1, 0, 0, 0]);
        let wide = &(&Series::geom(1, 7) * &Series::geom(3, 7))
            - &(&Series::geom(1, 7) * &Series::geom(2, 7)).shift(3);
        assert_eq!(small(&wide, 3), 1, "formula alone keeps going");
    }

    #[test]
    fn d_small_levels() {
        let n = 16;
        assert_eq!(d_series(0, n), Series::zero(n));
        assert_eq!(d_series(1, n), f_series(1, 1, n));
        // D_3 = x^3 F_3 + x F_2 F_0(x^6) + F_1 F_1(x^3)
        let direct = &(&f_series(3, 1, n).shift(3)
            + &(&f_series(2, 1, n) * &f_series(0, 1, n).substitute(6)).shift(1))
            + &(&f_series(1, 1, n) * &f_series(1, 1, n).substitute(3));
        assert_eq!(d_series(3, n), direct);
    }

    #[test]
    fn dstar_level_one() {
        let n = 14;
        let direct = &f_series(1, 1, n) * &d_series(1, n).substitute(3);
        assert_eq!(dstar_series(1, n), direct);
    }

    #[test]
    fn functional_equations_hold_exactly() {
        let n = 40;
        for r in 1..=3u64 {
            for level in 0..=4i64 {
                let lhs = f_series(level, r, n);
                let rhs = &Series::geom(1, n)
                    * &f_series(level - 1, r, n).substitute(r as usize + 1);
                assert_eq!(lhs, rhs, "F level {level} r {r}");
            }
            for level in 1..=4u32 {
                let lhs = g_series(level, r, n);
                let carry = (&Series::geom(1, n)
                    * &g_series(level - 1, r, n).substitute(r as usize + 1))
                    .shift(r as usize);
                let fresh = &(&Series::geom(1, n) * &Series::geom(2, n))
                    * &f_series(level as i64 - 1, r, n).substitute(2 * r as usize + 1);
                assert_eq!(lhs, &carry + &fresh, "G level {level} r {r}");
            }
        }
        for level in 1..=4u32 {
            let lhs = d_series(level, n);
            let carry = (&Series::geom(1, n) * &d_series(level - 1, n).substitute(2)).shift(1);
            let fresh = &f_series(1, 1, n) * &f_series(level as i64 - 2, 1, n).substitute(3);
            assert_eq!(lhs, &carry + &fresh, "D level {level}");

            let lhs = dstar_series(level, n);
            let carry =
                (&Series::geom(1, n) * &dstar_series(level - 1, n).substitute(2)).shift(4);
            let fresh = &f_series(1, 1, n) * &d_series(level, n).substitute(3);
            assert_eq!(lhs, &carry + &fresh, "D* level {level}");
        }
    }

    #[test]
    fn closed_form_counts_bachet_weights() {
        // weights under (0,2) at level 3: k = 0 must give exactly one
        // partition (1+3+9+27 shifted into weight space)
        let r3 = r_series(3, pr(0, 2), 5).unwrap();
        assert_eq!(small(&r3, 0), 1);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_minimal(9, pr(1, 2)).unwrap(), BigInt::from(5));
        assert_eq!(count_minimal(40, pr(0, 2)).unwrap(), BigInt::from(1));
        assert_eq!(count_minimal(17, pr(1, 2)).unwrap(), BigInt::from(9 - 4));
    }

    #[test]
    fn closed_form_needs_e_at_most_two_r_plus_one() {
        // (6,2) at level 1, weight 20: census says 4
        let params = pr(6, 2);
        let census = r_n_brute(1, params, 20).unwrap();
        assert_eq!(census[20], 4);
        let closed = r_series_closed(1, params, 21).unwrap();
        assert_eq!(small(&closed, 20), 3, "closed form breaks here");
        let recursive = r_series_recursive(1, params, 21).unwrap();
        assert_eq!(small(&recursive, 20), 4);
        // the dispatcher picks the safe path
        let dispatched = r_series(1, params, 21).unwrap();
        assert_eq!(small(&dispatched, 20), 4);
    }

    #[test]
    fn unsupported_levels_error() {
        assert!(matches!(
            r_series_closed(0, pr(1, 2), 10),
            Err(Error::UnsupportedLevel { n: 0, r: 2 })
        ));
        assert!(matches!(
            r_series_closed(2, pr(0, 1), 10),
            Err(Error::UnsupportedLevel { n: 2, r: 1 })
        ));
        assert!(r_series_base(3, pr(0, 2), 10).is_err());
    }

    #[test]
    fn bundle_reports_validity() {
        let bundle = MinSeriesBundle::build(pr(1, 2), 2, 50).unwrap();
        assert_eq!(bundle.validity, 18);
        assert_eq!(bundle.order, 18);
        assert!(matches!(bundle.correction, CorrectionSeries::G(_)));
        let bundle = MinSeriesBundle::build(pr(0, 1), 4, 12).unwrap();
        assert!(matches!(bundle.correction, CorrectionSeries::D { .. }));
    }
}
