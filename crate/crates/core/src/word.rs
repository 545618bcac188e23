use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Letter = u16;

/// An element b1 ⊗ … ⊗ bℓ of the crystal of words of rank n (letters 1..=n+1).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(rank: usize, letters: Vec<Letter>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        for (idx, &l) in letters.iter().enumerate() {
            if l == 0 || l as usize > rank + 1 {
                return Err(Error::InvalidLetter {
                    position: idx + 1,
                    letter: l.to_string(),
                    max: rank + 1,
                });
            }
        }
        Ok(Word { rank, letters })
    }

    pub(crate) fn from_raw(rank: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && l as usize <= rank + 1));
        Word { rank, letters }
    }

    pub fn empty(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// Parses a digit string ("1331242312111") or a comma-separated list ("10,2,1").
    /// Error positions are 1-based.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let text = text.trim();
        let bad = |position: usize, letter: &str| Error::InvalidLetter {
            position,
            letter: letter.to_string(),
            max: rank + 1,
        };
        let mut letters = Vec::new();
        if text.contains(',') {
            for (idx, tok) in text.split(',').enumerate() {
                let tok = tok.trim();
                match tok.parse::<Letter>() {
                    Ok(l) if l >= 1 && l as usize <= rank + 1 => letters.push(l),
                    _ => return Err(bad(idx + 1, tok)),
                }
            }
        } else {
            for (idx, ch) in text.chars().enumerate() {
                match ch.to_digit(10) {
                    Some(d) if d >= 1 && d as usize <= rank + 1 => letters.push(d as Letter),
                    _ => return Err(bad(idx + 1, &ch.to_string())),
                }
            }
        }
        Ok(Word { rank, letters })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at a 1-based position.
    pub fn at(&self, pos: usize) -> Letter {
        self.letters[pos - 1]
    }

    /// Copy with the letter at a 1-based position replaced.
    pub fn with_letter(&self, pos: usize, letter: Letter) -> Word {
        let mut letters = self.letters.clone();
        letters[pos - 1] = letter;
        Word::from_raw(self.rank, letters)
    }

    pub fn weight(&self) -> Weight {
        let mut counts = vec![0u32; self.rank + 1];
        for &l in &self.letters {
            counts[l as usize - 1] += 1;
        }
        Weight(counts)
    }

    /// Tensor notation used for graph labels: "1 ⊗ 2 ⊗ 1".
    pub fn tensor_string(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ⊗ ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank < 9 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Letter multiplicities; entry m-1 counts letter m.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<u32>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank + 1])
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    /// Entry for letter m (1-based).
    pub fn get(&self, m: usize) -> u32 {
        self.0[m - 1]
    }

    pub fn rank(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// The pairing ⟨wt, αᵢ^∨⟩ = wtᵢ − wtᵢ₊₁.
    pub fn coroot(&self, i: usize) -> i64 {
        self.0[i - 1] as i64 - self.0[i] as i64
    }

    /// Componentwise difference self − other.
    pub fn diff(&self, other: &Weight) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    /// Weight difference equal to −αᵢ (the change caused by fᵢ)?
    pub fn is_minus_root(delta: &[i64], i: usize) -> bool {
        delta.iter().enumerate().all(|(idx, &d)| match idx + 1 {
            m if m == i => d == -1,
            m if m == i + 1 => d == 1,
            _ => d == 0,
        })
    }

    /// Nonzero entries strictly decreasing and all zeros trailing.
    pub fn is_strict_partition(&self) -> bool {
        let nonzero = self.0.iter().take_while(|&&c| c > 0).count();
        self.0[nonzero..].iter().all(|&c| c == 0) && self.0[..nonzero].windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, n).unwrap()
    }

    #[test]
    fn weight_counts_letters() {
        assert_eq!(w("1331242312111", 3).weight(), Weight(vec![6, 3, 3, 1]));
        assert_eq!(w("", 3).weight(), Weight(vec![0, 0, 0, 0]));
        assert_eq!(w("2111", 3).weight(), Weight(vec![3, 1, 0, 0]));
    }

    #[test]
    fn parse_reports_position() {
        let err = Word::parse("105", 3).unwrap_err();
        assert!(matches!(err, Error::InvalidLetter { position: 2, .. }));
        let err = Word::parse("125", 3).unwrap_err();
        assert!(matches!(err, Error::InvalidLetter { position: 3, .. }));
        assert_eq!(Word::parse("1", 0).unwrap_err(), Error::ZeroRank);
    }

    #[test]
    fn large_alphabet_round_trip() {
        let b = Word::parse("10,2,1,11", 10).unwrap();
        assert_eq!(b.letters(), &[10, 2, 1, 11]);
        assert_eq!(b.to_string(), "10,2,1,11");
        assert_eq!(Word::parse(&b.to_string(), 10).unwrap(), b);
        assert!(Word::parse("1,12", 10).is_err());
    }

    #[test]
    fn strict_partitions() {
        assert!(Weight(vec![4, 2, 0]).is_strict_partition());
        assert!(Weight(vec![0, 0, 0]).is_strict_partition());
        assert!(!Weight(vec![2, 2, 0]).is_strict_partition());
        assert!(!Weight(vec![2, 0, 1]).is_strict_partition());
    }

    #[test]
    fn tensor_notation() {
        assert_eq!(w("121", 2).tensor_string(), "1 ⊗ 2 ⊗ 1");
    }
}
