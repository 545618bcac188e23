//! Queer components of the crystal of words and their type-A classes.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::crystal::AbstractCrystalGraph;
use crate::index::CrystalIndex;
use crate::operators::{
    e_even, e_minus, e_minus1, f_even, f_minus1, is_i0_highest, is_j_highest, lower_to_lw,
    raise_to_hw,
};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueerComponent {
    rank: usize,
    words: Vec<Word>,
    hw: Word,
}

/// A type-A component, tagged by its I₀-highest word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeAClass {
    pub hw: Word,
    pub lw: Word,
    pub members: Vec<Word>,
}

/// Closure of `seed` under eᵢ, fᵢ (i ∈ I₀), e₋₁ and f₋₁.
pub fn generate_component(seed: &Word) -> QueerComponent {
    let n = seed.rank();
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(b) = queue.pop_front() {
        let mut next = Vec::with_capacity(2 * n + 2);
        for i in 1..=n {
            next.push(e_even(&b, i));
            next.push(f_even(&b, i));
        }
        next.push(e_minus1(&b));
        next.push(f_minus1(&b));
        for c in next.into_iter().flatten() {
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    let mut words: Vec<Word> = seen.into_iter().collect();
    words.sort();
    let hw = highest_words(&words)
        .into_iter()
        .next()
        .unwrap_or_else(|| words[0].clone());
    QueerComponent { rank: n, words, hw }
}

fn highest_words(words: &[Word]) -> Vec<Word> {
    words
        .iter()
        .filter(|b| is_i0_highest(b) && (1..=b.rank()).all(|i| e_minus(b, i).is_none()))
        .cloned()
        .collect()
}

impl QueerComponent {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Members in sorted order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn hw(&self) -> &Word {
        &self.hw
    }

    pub fn contains(&self, b: &Word) -> bool {
        self.words.binary_search(b).is_ok()
    }

    /// All words annihilated by every eᵢ and every e₋ᵢ.
    pub fn highest_weight_words(&self) -> Vec<Word> {
        highest_words(&self.words)
    }

    /// All words annihilated by the given e's.
    pub fn highest_for(&self, j: &[CrystalIndex]) -> Vec<Word> {
        self.words
            .iter()
            .filter(|b| is_j_highest(b, j))
            .cloned()
            .collect()
    }

    pub fn type_a_components(&self) -> Vec<TypeAClass> {
        let mut groups: BTreeMap<Word, Vec<Word>> = BTreeMap::new();
        for b in &self.words {
            groups.entry(raise_to_hw(b)).or_default().push(b.clone());
        }
        groups
            .into_iter()
            .map(|(hw, members)| TypeAClass {
                lw: lower_to_lw(&hw),
                hw,
                members,
            })
            .collect()
    }

    /// Element-level graph with fᵢ and f₋₁ arrows (and f₋ᵢ for `extra_odd`).
    pub fn to_abstract(&self, extra_odd: &[usize]) -> AbstractCrystalGraph {
        AbstractCrystalGraph::from_words(self.rank, &self.words, extra_odd)
    }
}
