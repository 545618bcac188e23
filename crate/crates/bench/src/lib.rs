//! Workloads shared by the benchmarks.

use qcrystal::operators::is_highest_up_to;
use qcrystal::sweep::all_words;
use qcrystal::Word;

/// Words of the given shape that are {1..i}-highest, paired with i.
pub fn highest_inputs(rank: usize, len: usize) -> Vec<(Word, usize)> {
    let mut out = Vec::new();
    for b in all_words(rank, len) {
        for i in 1..=rank {
            if is_highest_up_to(&b, i) {
                out.push((b.clone(), i));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_highest() {
        let v = highest_inputs(2, 3);
        assert!(!v.is_empty());
        assert!(v.iter().all(|(b, i)| is_highest_up_to(b, *i)));
    }
}
