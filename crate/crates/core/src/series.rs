//! Dense truncated power series over arbitrary-precision integers.
//!
//! A `Series` carries its coefficients together with an explicit truncation
//! order N and stands for a power series known modulo x^N. Binary operations
//! truncate to the smaller order of their inputs, and reading a coefficient
//! at or beyond the order is an `OrderExceeded` error rather than a zero, so
//! "valid up to order N" claims stay honest through a whole pipeline.
//!
//! Building blocks:
//! - `geom(j, n)`: 1/(1 - x^j)
//! - `*`, `+`, `-` on references: Cauchy product, termwise sum/difference
//! - `shift(t)`: multiply by x^t, the top t coefficients fall off
//! - `substitute(t)`: x -> x^t at unchanged order
//! - `coeff(k)`: checked coefficient access

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// The zero series at order `n >= 1`.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "order must be positive");
        Series {
            coeffs: vec![BigInt::zero(); n],
        }
    }

    /// The constant 1 at order `n`.
    pub fn one(n: usize) -> Self {
        let mut s = Series::zero(n);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// c * x^k at order `n`; zero when k >= n.
    pub fn monomial(c: impl Into<BigInt>, k: usize, n: usize) -> Self {
        let mut s = Series::zero(n);
        if k < n {
            s.coeffs[k] = c.into();
        }
        s
    }

    /// A polynomial from its coefficient list; the order is the list length.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "order must be positive");
        Series { coeffs }
    }

    /// 1/(1 - x^j) at order `n`: ones at multiples of j.
    pub fn geom(j: usize, n: usize) -> Self {
        assert!(j >= 1, "geometric step must be positive");
        let mut s = Series::zero(n);
        let mut k = 0;
        while k < n {
            s.coeffs[k] = BigInt::one();
            k += j;
        }
        s
    }

    /// The truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of x^k; `OrderExceeded` for k >= N.
    pub fn coeff(&self, k: usize) -> Result<&BigInt> {
        self.coeffs.get(k).ok_or(Error::OrderExceeded {
            index: k,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The same series cut down to order `n <= N`.
    pub fn truncated(&self, n: usize) -> Self {
        assert!(n >= 1 && n <= self.order(), "truncation must shrink");
        Series {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    /// Multiply by x^t at unchanged order; the top t coefficients fall off.
    pub fn shift(&self, t: usize) -> Self {
        let n = self.order();
        let mut out = Series::zero(n);
        for k in t..n {
            out.coeffs[k] = self.coeffs[k - t].clone();
        }
        out
    }

    /// x -> x^t at unchanged order: coefficient k of self lands at t*k.
    pub fn substitute(&self, t: usize) -> Self {
        assert!(t >= 1, "substitution step must be positive");
        let n = self.order();
        let mut out = Series::zero(n);
        let mut k = 0;
        while k * t < n {
            out.coeffs[k * t] = self.coeffs[k].clone();
            k += 1;
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = Series::zero(n);
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b, c) in rhs.coeffs.iter().zip(out.coeffs[i..].iter_mut()) {
                if !b.is_zero() {
                    *c += a * b;
                }
            }
        }
        out
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = Series::zero(n);
        for k in 0..n {
            out.coeffs[k] = &self.coeffs[k] + &rhs.coeffs[k];
        }
        out
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = Series::zero(n);
        for k in 0..n {
            out.coeffs[k] = &self.coeffs[k] - &rhs.coeffs[k];
        }
        out
    }
}

/// Sparse display, increasing exponents, zero terms omitted: `1 + x + 3*x^2`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}
