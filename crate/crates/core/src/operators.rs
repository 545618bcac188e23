//! Even operators by the signature rule, the odd operators e₋₁/f₋₁, Weyl group
//! reflections and the conjugated odd operators e₋ᵢ/f₋ᵢ, e₋ᵢ′/f₋ᵢ′.
//!
//! Index arguments outside 1..=n are programming errors and panic.

use crate::index::CrystalIndex;
use crate::word::{Letter, Word};

/// `None` is the annihilation value 0.
pub type OpResult = Option<Word>;

/// Matched (i+1, i) pairs plus unbracketed i and i+1 positions (all 1-based, ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracketing {
    pub pairs: Vec<(usize, usize)>,
    pub unbracketed_lower: Vec<usize>,
    pub unbracketed_upper: Vec<usize>,
}

fn check_even(b: &Word, i: usize) {
    assert!(i >= 1 && i <= b.rank(), "index {i} out of range for rank {}", b.rank());
}

pub fn bracketing(b: &Word, i: usize) -> Bracketing {
    check_even(b, i);
    let lo = i as Letter;
    let hi = lo + 1;
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    let mut unbracketed_lower = Vec::new();
    for (idx, &l) in b.letters().iter().enumerate() {
        if l == hi {
            stack.push(idx + 1);
        } else if l == lo {
            match stack.pop() {
                Some(p) => pairs.push((p, idx + 1)),
                None => unbracketed_lower.push(idx + 1),
            }
        }
    }
    pairs.sort_unstable();
    Bracketing {
        pairs,
        unbracketed_lower,
        unbracketed_upper: stack,
    }
}

pub fn f_even(b: &Word, i: usize) -> OpResult {
    let br = bracketing(b, i);
    br.unbracketed_lower
        .last()
        .map(|&p| b.with_letter(p, i as Letter + 1))
}

pub fn e_even(b: &Word, i: usize) -> OpResult {
    let br = bracketing(b, i);
    br.unbracketed_upper
        .first()
        .map(|&p| b.with_letter(p, i as Letter))
}

pub fn phi_even(b: &Word, i: usize) -> usize {
    bracketing(b, i).unbracketed_lower.len()
}

pub fn eps_even(b: &Word, i: usize) -> usize {
    bracketing(b, i).unbracketed_upper.len()
}

fn first_one_or_two(b: &Word) -> Option<usize> {
    b.letters().iter().position(|&l| l == 1 || l == 2).map(|p| p + 1)
}

pub fn f_minus1(b: &Word) -> OpResult {
    match first_one_or_two(b) {
        Some(p) if b.at(p) == 1 => Some(b.with_letter(p, 2)),
        _ => None,
    }
}

pub fn e_minus1(b: &Word) -> OpResult {
    match first_one_or_two(b) {
        Some(p) if b.at(p) == 2 => Some(b.with_letter(p, 1)),
        _ => None,
    }
}

/// sᵢ: fᵢᵏ(b) for k = φᵢ − εᵢ ≥ 0, else eᵢ⁻ᵏ(b). Equivalently the reduced
/// signature i^φ (i+1)^ε is replaced by i^ε (i+1)^φ.
pub fn s_reflect(b: &Word, i: usize) -> Word {
    let br = bracketing(b, i);
    let eps = br.unbracketed_upper.len();
    let mut letters = b.letters().to_vec();
    for (n, &p) in br
        .unbracketed_lower
        .iter()
        .chain(br.unbracketed_upper.iter())
        .enumerate()
    {
        letters[p - 1] = if n < eps { i as Letter } else { i as Letter + 1 };
    }
    Word::from_raw(b.rank(), letters)
}

/// Applies a product s_{a₁} ⋯ s_{a_m} as an operator, rightmost factor first.
pub fn apply_reflections(b: &Word, product: &[usize]) -> Word {
    product
        .iter()
        .rev()
        .fold(b.clone(), |acc, &i| s_reflect(&acc, i))
}

/// The factors of w_i = s₂ ⋯ sᵢ s₁ ⋯ s_{i−1}, left to right.
pub fn w_word(i: usize) -> Vec<usize> {
    (2..=i).chain(1..i).collect()
}

pub fn s_w(b: &Word, i: usize) -> Word {
    apply_reflections(b, &w_word(i))
}

pub fn s_w_inverse(b: &Word, i: usize) -> Word {
    let mut inv = w_word(i);
    inv.reverse();
    apply_reflections(b, &inv)
}

/// The reduced word s₁(s₂s₁)(s₃s₂s₁)⋯(sₙ⋯s₁) of the longest element.
pub fn w0_word(rank: usize) -> Vec<usize> {
    (1..=rank).flat_map(|m| (1..=m).rev()).collect()
}

pub fn s_w0(b: &Word) -> Word {
    apply_reflections(b, &w0_word(b.rank()))
}

pub fn f_minus(b: &Word, i: usize) -> OpResult {
    check_even(b, i);
    if i == 1 {
        return f_minus1(b);
    }
    f_minus1(&s_w(b, i)).map(|c| s_w_inverse(&c, i))
}

pub fn e_minus(b: &Word, i: usize) -> OpResult {
    check_even(b, i);
    if i == 1 {
        return e_minus1(b);
    }
    e_minus1(&s_w(b, i)).map(|c| s_w_inverse(&c, i))
}

pub fn f_minus_prime(b: &Word, i: usize) -> OpResult {
    check_even(b, i);
    e_minus(&s_w0(b), b.rank() + 1 - i).map(|c| s_w0(&c))
}

pub fn e_minus_prime(b: &Word, i: usize) -> OpResult {
    check_even(b, i);
    f_minus(&s_w0(b), b.rank() + 1 - i).map(|c| s_w0(&c))
}

pub fn apply_f(b: &Word, idx: CrystalIndex) -> OpResult {
    match idx {
        CrystalIndex::Even(i) => f_even(b, i),
        CrystalIndex::OddMinus(i) => f_minus(b, i),
        CrystalIndex::OddMinusPrime(i) => f_minus_prime(b, i),
    }
}

pub fn apply_e(b: &Word, idx: CrystalIndex) -> OpResult {
    match idx {
        CrystalIndex::Even(i) => e_even(b, i),
        CrystalIndex::OddMinus(i) => e_minus(b, i),
        CrystalIndex::OddMinusPrime(i) => e_minus_prime(b, i),
    }
}

/// φ for any index: the number of times f applies before annihilating.
pub fn phi(b: &Word, idx: CrystalIndex) -> usize {
    match idx {
        CrystalIndex::Even(i) => phi_even(b, i),
        _ => iterate_count(b, |w| apply_f(w, idx)),
    }
}

/// ε for any index: the number of times e applies before annihilating.
pub fn eps(b: &Word, idx: CrystalIndex) -> usize {
    match idx {
        CrystalIndex::Even(i) => eps_even(b, i),
        _ => iterate_count(b, |w| apply_e(w, idx)),
    }
}

fn iterate_count(b: &Word, op: impl Fn(&Word) -> OpResult) -> usize {
    let mut count = 0;
    let mut cur = b.clone();
    while let Some(next) = op(&cur) {
        count += 1;
        cur = next;
    }
    count
}

pub fn is_j_highest(b: &Word, j: &[CrystalIndex]) -> bool {
    j.iter().all(|&idx| apply_e(b, idx).is_none())
}

pub fn is_j_lowest(b: &Word, j: &[CrystalIndex]) -> bool {
    j.iter().all(|&idx| apply_f(b, idx).is_none())
}

/// Annihilated by every eᵢ, i ∈ I₀.
pub fn is_i0_highest(b: &Word) -> bool {
    (1..=b.rank()).all(|i| eps_even(b, i) == 0)
}

/// Annihilated by every fᵢ, i ∈ I₀.
pub fn is_i0_lowest(b: &Word) -> bool {
    (1..=b.rank()).all(|i| phi_even(b, i) == 0)
}

/// Annihilated by e₁, …, eᵢ.
pub fn is_highest_up_to(b: &Word, i: usize) -> bool {
    (1..=i).all(|m| eps_even(b, m) == 0)
}

/// Order in which raise/lower sweep the even indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepOrder {
    Ascending,
    Descending,
}

fn sweep(b: &Word, order: SweepOrder, op: fn(&Word, usize) -> OpResult) -> Word {
    let n = b.rank();
    let indices: Vec<usize> = match order {
        SweepOrder::Ascending => (1..=n).collect(),
        SweepOrder::Descending => (1..=n).rev().collect(),
    };
    let mut cur = b.clone();
    loop {
        let mut moved = false;
        for &i in &indices {
            if let Some(next) = op(&cur, i) {
                cur = next;
                moved = true;
            }
        }
        if !moved {
            return cur;
        }
    }
}

/// ↑b: the I₀-highest element of the type-A component of b.
pub fn raise_to_hw(b: &Word) -> Word {
    sweep(b, SweepOrder::Ascending, e_even)
}

/// ↓b: the I₀-lowest element of the type-A component of b.
pub fn lower_to_lw(b: &Word) -> Word {
    sweep(b, SweepOrder::Ascending, f_even)
}

pub fn raise_to_hw_with(b: &Word, order: SweepOrder) -> Word {
    sweep(b, order, e_even)
}

pub fn lower_to_lw_with(b: &Word, order: SweepOrder) -> Word {
    sweep(b, order, f_even)
}

/// Applies a chain of even e's written as a product (rightmost applied first).
pub fn e_chain(b: &Word, product: &[usize]) -> OpResult {
    product
        .iter()
        .rev()
        .try_fold(b.clone(), |acc, &i| e_even(&acc, i))
}

/// Applies a chain of even f's written as a product (rightmost applied first).
pub fn f_chain(b: &Word, product: &[usize]) -> OpResult {
    product
        .iter()
        .rev()
        .try_fold(b.clone(), |acc, &i| f_even(&acc, i))
}
