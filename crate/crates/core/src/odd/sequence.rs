use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Positions (1-based) of an initial k-sequence: `p(k)` is the leftmost k and
/// `p(j)` the leftmost j strictly right of `p(j+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialSequence {
    pub k: usize,
    positions: Vec<usize>,
}

impl InitialSequence {
    pub fn p(&self, j: usize) -> usize {
        self.positions[j - 1]
    }

    /// Positions indexed by letter: entry j-1 holds p(j).
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }
}

pub fn initial_sequence(b: &Word, k: usize) -> Option<InitialSequence> {
    let mut positions = vec![0; k];
    let mut start = 0;
    for j in (1..=k).rev() {
        let off = b.letters()[start..].iter().position(|&l| l as usize == j)?;
        positions[j - 1] = start + off + 1;
        start += off + 1;
    }
    Some(InitialSequence { k, positions })
}

/// q is the initial i-sequence; r(1) = q(1) and r(j) is the largest position
/// before r(j-1) holding j; pivot is the largest j with q(j) = r(j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRData {
    pub i: usize,
    pub q: InitialSequence,
    r: Vec<usize>,
    pub pivot: usize,
}

impl QRData {
    pub fn r(&self, j: usize) -> usize {
        self.r[j - 1]
    }
}

pub fn qr_data(b: &Word, i: usize) -> Result<QRData> {
    let q = initial_sequence(b, i)
        .ok_or_else(|| Error::Precondition(format!("{b} has no initial {i}-sequence")))?;
    let mut r = vec![q.p(1)];
    for j in 2..=i {
        let prev = r[j - 2];
        let pos = b.letters()[..prev - 1]
            .iter()
            .rposition(|&l| l as usize == j)
            .ok_or_else(|| Error::Precondition(format!("no {j} before position {prev} in {b}")))?;
        r.push(pos + 1);
    }
    let pivot = (1..=i).rev().find(|&j| q.p(j) == r[j - 1]).unwrap_or(1);
    Ok(QRData { i, q, r, pivot })
}

/// Marks the k-bracketed entries: every k is marked, and a j < k is marked when
/// it is bracketed against a marked j+1 in the ordinary pairing of the subword
/// formed by marked (j+1)'s and all j's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketMask {
    pub k: usize,
    marked: Vec<bool>,
}

impl BracketMask {
    pub fn is_marked(&self, pos: usize) -> bool {
        self.marked[pos - 1]
    }

    pub fn positions(&self) -> Vec<usize> {
        self.marked
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(idx, _)| idx + 1)
            .collect()
    }
}

pub fn k_bracketed(b: &Word, k: usize) -> BracketMask {
    let letters = b.letters();
    let mut marked: Vec<bool> = letters.iter().map(|&l| l as usize == k).collect();
    for j in (1..k).rev() {
        let mut stack = 0usize;
        for (idx, &l) in letters.iter().enumerate() {
            if l as usize == j + 1 && marked[idx] {
                stack += 1;
            } else if l as usize == j && stack > 0 {
                stack -= 1;
                marked[idx] = true;
            }
        }
    }
    BracketMask { k, marked }
}

/// Whether `b` has letters k-1, k-2, …, 1 at increasing positions, all before
/// `before` and none marked in `mask`.
pub fn has_unbracketed_descending(b: &Word, mask: &BracketMask, k: usize, before: usize) -> bool {
    let mut want = k as Letter - 1;
    if want == 0 {
        return true;
    }
    for pos in 1..before {
        if b.at(pos) == want && !mask.is_marked(pos) {
            want -= 1;
            if want == 0 {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, n).unwrap()
    }

    #[test]
    fn initial_sequence_examples() {
        let b = w("1331242312111", 3);
        let p = initial_sequence(&b, 4).unwrap();
        assert_eq!((p.p(4), p.p(3), p.p(2), p.p(1)), (6, 8, 10, 11));
        let q = initial_sequence(&b, 3).unwrap();
        assert_eq!((q.p(3), q.p(2), q.p(1)), (2, 5, 9));
        assert_eq!(initial_sequence(&w("222", 1), 1), None);
    }

    #[test]
    fn qr_examples() {
        let d = qr_data(&w("1331242312111", 3), 3).unwrap();
        assert_eq!(d.pivot, 1);
        let d = qr_data(&w("545423321211", 5), 5).unwrap();
        assert_eq!(d.pivot, 2);
        for j in 1..=5 {
            assert!(d.q.p(j) <= d.r(j));
        }
    }

    #[test]
    fn k_bracketed_example() {
        let mask = k_bracketed(&w("142334122311322111", 3), 4);
        assert_eq!(mask.positions(), vec![2, 4, 6, 8, 10, 11, 14, 16]);
        assert!(k_bracketed(&w("1212", 3), 4).positions().is_empty());
    }

    #[test]
    fn descending_sequence_search() {
        let b = w("3211", 2);
        let none = k_bracketed(&b, 3);
        assert!(has_unbracketed_descending(&b, &k_bracketed(&w("1111", 2), 3), 3, 4));
        assert!(!has_unbracketed_descending(&b, &none, 3, 4));
        assert!(has_unbracketed_descending(&b, &none, 1, 1));
    }
}
