use crate::error::{Error, Result};
use crate::operators::is_highest_up_to;
use crate::word::{Letter, Word};

use super::sequence::{initial_sequence, k_bracketed, qr_data, InitialSequence};

/// Record of the second step of the explicit e₋ᵢ: `t[j-1]` is the position of
/// the letter j raised to j+1, and `cycled[j-1]` says whether the leftward scan
/// for it had to wrap around the right end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTrace {
    pub i: usize,
    pub p: InitialSequence,
    pub t: Vec<usize>,
    pub cycled: Vec<bool>,
}

impl CycleTrace {
    /// t_j with the convention t_0 = p_1.
    pub fn t_at(&self, j: usize) -> usize {
        if j == 0 {
            self.p.p(1)
        } else {
            self.t[j - 1]
        }
    }
}

fn require_hw(b: &Word, i: usize) -> Result<()> {
    if i == 0 || i > b.rank() {
        return Err(Error::IndexOutOfRange {
            index: i.to_string(),
            rank: b.rank(),
        });
    }
    if !is_highest_up_to(b, i) {
        return Err(Error::Precondition(format!("{b} is not {{1..{i}}}-highest")));
    }
    Ok(())
}

/// ε₋ᵢ on a {1..i}-highest word: 1 iff some i+1 occurs and the initial (i+1)-
/// and i-sequences share a position.
pub fn eps_minus_hw(b: &Word, i: usize) -> Result<u8> {
    require_hw(b, i)?;
    if b.weight().get(i + 1) == 0 {
        return Ok(0);
    }
    let missing = |k: usize| Error::Precondition(format!("{b} has no initial {k}-sequence"));
    let p = initial_sequence(b, i + 1).ok_or_else(|| missing(i + 1))?;
    let q = initial_sequence(b, i).ok_or_else(|| missing(i))?;
    Ok((1..=i).any(|j| p.p(j) == q.p(j)) as u8)
}

/// φ₋ᵢ on a {1..i}-highest word: 1 iff some i occurs and ε₋ᵢ is 0.
pub fn phi_minus_hw(b: &Word, i: usize) -> Result<u8> {
    let eps = eps_minus_hw(b, i)?;
    if b.weight().get(i) == 0 {
        return Ok(0);
    }
    Ok(1 - eps)
}

pub fn f_minus_explicit(b: &Word, i: usize) -> Result<Word> {
    if phi_minus_hw(b, i)? != 1 {
        return Err(Error::Precondition(format!("f_-{i} annihilates {b}")));
    }
    let d = qr_data(b, i)?;
    let mut letters = b.letters().to_vec();
    for j in d.pivot + 1..=i {
        letters[d.q.p(j) - 1] = j as Letter - 1;
    }
    for j in d.pivot..=i {
        letters[d.r(j) - 1] = j as Letter + 1;
    }
    Ok(Word::from_raw(b.rank(), letters))
}

/// Lowers the initial (i+1)-sequence entries j → j-1 for j ≥ 2, then for
/// t = 1, …, i-1 scans leftward cyclically from the previous change for a
/// t that is not i-bracketed in the current word and raises it.
pub fn e_minus_explicit(b: &Word, i: usize) -> Result<(Word, CycleTrace)> {
    if eps_minus_hw(b, i)? != 1 {
        return Err(Error::Precondition(format!("e_-{i} annihilates {b}")));
    }
    let p = initial_sequence(b, i + 1)
        .ok_or_else(|| Error::Precondition(format!("{b} has no initial {}-sequence", i + 1)))?;
    let mut c = b.letters().to_vec();
    for j in 2..=i + 1 {
        c[p.p(j) - 1] = j as Letter - 1;
    }
    let len = c.len();
    let mut start = p.p(1);
    let mut t = Vec::with_capacity(i.saturating_sub(1));
    let mut cycled = Vec::with_capacity(i.saturating_sub(1));
    for letter in 1..i as Letter {
        let cur = Word::from_raw(b.rank(), c.clone());
        let mask = k_bracketed(&cur, i);
        let pos = (1..start)
            .rev()
            .chain((start..=len).rev())
            .find(|&pos| c[pos - 1] == letter && !mask.is_marked(pos))
            .ok_or_else(|| {
                Error::Precondition(format!("no unbracketed {letter} left in {cur}"))
            })?;
        cycled.push(pos >= start);
        t.push(pos);
        c[pos - 1] = letter + 1;
        start = pos;
    }
    let trace = CycleTrace { i, p, t, cycled };
    Ok((Word::from_raw(b.rank(), c), trace))
}

/// The output is {1..i}-highest iff t_{i-1} < … < t_1 < t_0 = p_1.
pub fn e_output_is_hw(trace: &CycleTrace) -> bool {
    (1..trace.i).all(|j| trace.t_at(j) < trace.t_at(j - 1))
}

/// Smallest ℓ with t_{ℓ-1} ≤ t_ℓ and t_{ℓ+1} < t_ℓ (the second condition is
/// vacuous at ℓ = i-1): the smallest index at which the output is not highest.
pub fn first_violation(trace: &CycleTrace) -> Result<usize> {
    let i = trace.i;
    (1..i)
        .find(|&l| {
            trace.t_at(l - 1) <= trace.t_at(l) && (l + 1 >= i || trace.t_at(l + 1) < trace.t_at(l))
        })
        .ok_or_else(|| Error::Precondition("output is highest weight".into()))
}
