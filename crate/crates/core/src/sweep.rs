//! Enumeration of words and components for exhaustive checks.

use std::collections::HashSet;

use crate::component::{generate_component, QueerComponent};
use crate::word::{Letter, Word};

/// All words of exactly `len` letters over 1..=rank+1, in lexicographic order.
pub fn all_words(rank: usize, len: usize) -> Vec<Word> {
    let base = rank + 1;
    let total = base.checked_pow(len as u32).expect("enumeration too large");
    let mut out = Vec::with_capacity(total);
    let mut letters = vec![1 as Letter; len];
    for _ in 0..total {
        out.push(Word::from_raw(rank, letters.clone()));
        for pos in (0..len).rev() {
            if (letters[pos] as usize) < base {
                letters[pos] += 1;
                break;
            }
            letters[pos] = 1;
        }
    }
    out
}

/// All words of length 1..=max_len.
pub fn words_up_to(rank: usize, max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(|l| all_words(rank, l)).collect()
}

/// The queer components partitioning the words of length `len`.
pub fn components_of_length(rank: usize, len: usize) -> Vec<QueerComponent> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut out = Vec::new();
    for b in all_words(rank, len) {
        if seen.contains(&b) {
            continue;
        }
        let c = generate_component(&b);
        seen.extend(c.words().iter().cloned());
        out.push(c);
    }
    out
}
