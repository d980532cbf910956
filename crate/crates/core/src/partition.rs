//! Partitions written smallest part first.
//!
//! The text form is `INT(+INT)*` with weakly increasing parts, e.g. `1+2+6`.
//! `Display` and `FromStr` round-trip that form exactly.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A partition of a positive integer into weakly increasing parts >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
    m: u64,
}

impl Partition {
    /// Validates part order and positivity; the sum is cached.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        let mut m: u64 = 0;
        let mut prev = 0u64;
        for &part in &parts {
            if part == 0 {
                return Err(Error::InvalidPartition("parts must be positive".into()));
            }
            if part < prev {
                return Err(Error::InvalidPartition(
                    "parts must be weakly increasing".into(),
                ));
            }
            prev = part;
            m = m
                .checked_add(part)
                .ok_or_else(|| Error::InvalidPartition("sum overflows".into()))?;
        }
        Ok(Partition { parts, m })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The partitioned integer (sum of parts).
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Every part multiplied by `factor > 0`.
    pub fn scaled(&self, factor: u64) -> Result<Self> {
        if factor == 0 {
            return Err(Error::InvalidPartition("scale factor must be positive".into()));
        }
        let parts = self
            .parts
            .iter()
            .map(|&p| p.checked_mul(factor).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidPartition("empty literal".into()));
        }
        let parts = s
            .split('+')
            .map(|tok| {
                if tok.is_empty() {
                    return Err(Error::InvalidPartition(format!("empty term in `{s}`")));
                }
                tok.parse::<u64>()
                    .map_err(|_| Error::InvalidPartition(format!("bad integer `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let p: Partition = "1+2+6".parse().unwrap();
        assert_eq!(p.parts(), &[1, 2, 6]);
        assert_eq!(p.m(), 9);
        assert_eq!(p.to_string(), "1+2+6");
        let single: Partition = "9".parse().unwrap();
        assert_eq!(single.parts(), &[9]);
    }

    #[test]
    fn rejects_bad_literals() {
        assert!("".parse::<Partition>().is_err());
        assert!("3+1".parse::<Partition>().is_err());
        assert!("0+2".parse::<Partition>().is_err());
        assert!("1+2+".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("-1+2".parse::<Partition>().is_err());
    }

    #[test]
    fn equal_parts_allowed() {
        let p: Partition = "2+2+5".parse().unwrap();
        assert_eq!(p.m(), 9);
    }

    #[test]
    fn scaling() {
        let p: Partition = "1+3+9".parse().unwrap();
        assert_eq!(p.scaled(2).unwrap().to_string(), "2+6+18");
        assert!(p.scaled(0).is_err());
    }
}
