use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Even index i, odd index −i, or primed odd index −i′ (all with 1 ≤ i ≤ n).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CrystalIndex {
    Even(usize),
    OddMinus(usize),
    OddMinusPrime(usize),
}

impl CrystalIndex {
    pub fn value(self) -> usize {
        match self {
            CrystalIndex::Even(i) | CrystalIndex::OddMinus(i) | CrystalIndex::OddMinusPrime(i) => i,
        }
    }

    pub fn check(self, rank: usize) -> Result<Self> {
        let i = self.value();
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange {
                index: self.to_string(),
                rank,
            });
        }
        Ok(self)
    }

    /// I₀ = {1, …, n}.
    pub fn even_set(rank: usize) -> Vec<CrystalIndex> {
        (1..=rank).map(CrystalIndex::Even).collect()
    }

    /// {1, …, i}.
    pub fn even_up_to(i: usize) -> Vec<CrystalIndex> {
        (1..=i).map(CrystalIndex::Even).collect()
    }
}

impl fmt::Display for CrystalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalIndex::Even(i) => write!(f, "{i}"),
            CrystalIndex::OddMinus(i) => write!(f, "-{i}"),
            CrystalIndex::OddMinusPrime(i) => write!(f, "-{i}'"),
        }
    }
}

impl FromStr for CrystalIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Schema(format!("bad crystal index {s:?}"));
        let (body, primed) = match s.strip_suffix('\'') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let (digits, odd) = match body.strip_prefix('-') {
            Some(rest) => (rest, true),
            None => (body, false),
        };
        let i: usize = digits.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match (odd, primed) {
            (false, false) => Ok(CrystalIndex::Even(i)),
            (true, false) => Ok(CrystalIndex::OddMinus(i)),
            (true, true) => Ok(CrystalIndex::OddMinusPrime(i)),
            (false, true) => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        for idx in [
            CrystalIndex::Even(3),
            CrystalIndex::OddMinus(1),
            CrystalIndex::OddMinusPrime(2),
        ] {
            assert_eq!(idx.to_string().parse::<CrystalIndex>().unwrap(), idx);
        }
        assert!("0".parse::<CrystalIndex>().is_err());
        assert!("2'".parse::<CrystalIndex>().is_err());
        assert!("x".parse::<CrystalIndex>().is_err());
    }

    #[test]
    fn range_check() {
        assert!(CrystalIndex::Even(3).check(3).is_ok());
        assert!(CrystalIndex::OddMinus(4).check(3).is_err());
    }
}
