//! Exhaustive comparison of the explicit odd rules against the operators
//! defined by conjugation, plus the almost-lowest description of g_{j,k}.

use std::collections::BTreeSet;
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::axioms::{almost_lowest, gjk};
use crate::component::QueerComponent;
use crate::index::CrystalIndex;
use crate::odd::{
    bypass_reduce, e_minus_explicit, e_output_is_hw, eps_minus_hw, f_minus_explicit,
    first_violation, phi_minus_hw, predicted_up_after_e, BypassForm,
};
use crate::operators::{
    e_even, e_minus, eps, f_minus, is_highest_up_to, is_i0_highest, phi, raise_to_hw,
};
use crate::sweep::{all_words, components_of_length};
use crate::word::Word;

/// Cases examined and divergences found for one comparison.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub cases: usize,
    pub divergences: usize,
}

impl Tally {
    fn add(&mut self, other: Tally) {
        self.cases += other.cases;
        self.divergences += other.divergences;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub rank: usize,
    pub max_len: usize,
    pub words: usize,
    /// p/q criterion for φ₋ᵢ and ε₋ᵢ against the conjugated operators.
    pub phi_eps: Tally,
    pub f_explicit: Tally,
    pub e_explicit: Tally,
    /// Chain predicate against direct highest weight testing of e₋ᵢ b.
    pub output_hw: Tally,
    /// First violation index against the smallest ℓ with e_ℓ defined.
    pub first_violation: Tally,
    /// By-pass reductions that fail to find a valid k.
    pub bypass: Tally,
    /// ↑e₋ᵢ by the letter recipe against raising.
    pub predicted_up: Tally,
    pub bypass_commuted: usize,
    pub bypass_collapsed: usize,
    pub first_divergence: Option<String>,
}

impl CrosscheckReport {
    pub fn total_divergences(&self) -> usize {
        [
            self.phi_eps,
            self.f_explicit,
            self.e_explicit,
            self.output_hw,
            self.first_violation,
            self.bypass,
            self.predicted_up,
        ]
        .iter()
        .map(|t| t.divergences)
        .sum()
    }

    fn merge(&mut self, o: CrosscheckReport) {
        self.words += o.words;
        self.phi_eps.add(o.phi_eps);
        self.f_explicit.add(o.f_explicit);
        self.e_explicit.add(o.e_explicit);
        self.output_hw.add(o.output_hw);
        self.first_violation.add(o.first_violation);
        self.bypass.add(o.bypass);
        self.predicted_up.add(o.predicted_up);
        self.bypass_commuted += o.bypass_commuted;
        self.bypass_collapsed += o.bypass_collapsed;
        if self.first_divergence.is_none() {
            self.first_divergence = o.first_divergence;
        }
    }

    fn record(&mut self, which: fn(&mut Self) -> &mut Tally, ok: bool, detail: impl FnOnce() -> String) {
        let t = which(self);
        t.cases += 1;
        if !ok {
            t.divergences += 1;
            if self.first_divergence.is_none() {
                self.first_divergence = Some(detail());
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "rank {} words of length <= {}: {}", self.rank, self.max_len, self.words);
        let rows = [
            ("phi/eps criterion", self.phi_eps),
            ("f explicit", self.f_explicit),
            ("e explicit", self.e_explicit),
            ("output highest", self.output_hw),
            ("first violation", self.first_violation),
            ("by-pass", self.bypass),
            ("predicted raise", self.predicted_up),
        ];
        for (name, t) in rows {
            let _ = writeln!(out, "{name:<18} {} cases, {} divergences", t.cases, t.divergences);
        }
        let _ = writeln!(
            out,
            "by-pass forms: {} commuted, {} collapsed",
            self.bypass_commuted, self.bypass_collapsed
        );
        if let Some(d) = &self.first_divergence {
            let _ = writeln!(out, "first divergence: {d}");
        }
        out
    }
}

/// All comparisons for one word.
pub fn crosscheck_word(b: &Word) -> CrosscheckReport {
    let mut r = CrosscheckReport {
        words: 1,
        ..Default::default()
    };
    for i in 1..=b.rank() {
        if !is_highest_up_to(b, i) {
            continue;
        }
        let idx = CrystalIndex::OddMinus(i);
        let (phi_c, eps_c) = (phi(b, idx), eps(b, idx));
        let (phi_x, eps_x) = (phi_minus_hw(b, i), eps_minus_hw(b, i));
        r.record(
            |r| &mut r.phi_eps,
            phi_x == Ok(phi_c as u8) && eps_x == Ok(eps_c as u8),
            || format!("phi/eps_-{i}({b}): criterion {phi_x:?}/{eps_x:?}, conjugation {phi_c}/{eps_c}"),
        );
        if phi_c == 1 {
            let x = f_minus_explicit(b, i).ok();
            let y = f_minus(b, i);
            r.record(|r| &mut r.f_explicit, x.is_some() && x == y, || {
                format!("f_-{i}({b}): explicit {x:?}, conjugation {y:?}")
            });
        }
        if eps_c != 1 {
            continue;
        }
        let y = e_minus(b, i);
        let Ok((c, trace)) = e_minus_explicit(b, i) else {
            r.record(|r| &mut r.e_explicit, false, || format!("e_-{i}({b}): explicit failed"));
            continue;
        };
        r.record(|r| &mut r.e_explicit, y.as_ref() == Some(&c), || {
            format!("e_-{i}({b}): explicit {c}, conjugation {y:?}")
        });
        let pred = e_output_is_hw(&trace);
        let direct = is_highest_up_to(&c, i);
        r.record(|r| &mut r.output_hw, pred == direct, || {
            format!("e_-{i}({b}) = {c}: chain says {pred}, direct {direct}")
        });
        if direct {
            continue;
        }
        let fv = first_violation(&trace).ok();
        let want = (1..=i).find(|&l| e_even(&c, l).is_some());
        r.record(|r| &mut r.first_violation, fv == want, || {
            format!("e_-{i}({b}) = {c}: first violation {fv:?}, direct {want:?}")
        });
        if !is_i0_highest(b) {
            continue;
        }
        match bypass_reduce(b, i) {
            Ok(red) => {
                match red.form {
                    BypassForm::Commuted => r.bypass_commuted += 1,
                    BypassForm::Collapsed => r.bypass_collapsed += 1,
                    _ => {}
                }
                let ok = red.is_valid() && red.k >= 1 && red.k < i;
                r.record(|r| &mut r.bypass, ok, || {
                    format!("by-pass {b}, i={i}: k={} form {:?}", red.k, red.form)
                });
            }
            Err(e) => r.record(|r| &mut r.bypass, false, || format!("by-pass {b}, i={i}: {e}")),
        }
        let p = predicted_up_after_e(b, i);
        let truth = raise_to_hw(&c);
        r.record(|r| &mut r.predicted_up, p.as_ref() == Ok(&truth), || {
            format!("raise e_-{i}({b}): predicted {p:?}, actual {truth}")
        });
    }
    r
}

/// Every word of length 1..=max_len over rank `rank`, in parallel.
pub fn crosscheck(rank: usize, max_len: usize) -> CrosscheckReport {
    let mut total = CrosscheckReport {
        rank,
        max_len,
        ..Default::default()
    };
    for len in 1..=max_len {
        let part = all_words(rank, len)
            .par_iter()
            .map(crosscheck_word)
            .reduce(CrosscheckReport::default, |mut a, b| {
                a.merge(b);
                a
            });
        total.merge(part);
    }
    total
}

/// Per type-A class: the nonzero g_{j,k} of its lowest element against the
/// brute-force set of members with φ₁ = 2 and φᵢ = 0 for i > 1. Returns the
/// lowest words of the classes where the two sets differ.
pub fn gjk_divergences(c: &QueerComponent) -> Vec<String> {
    let n = c.rank();
    let mut out = Vec::new();
    for class in c.type_a_components() {
        let from_g: BTreeSet<Word> = (1..=n)
            .flat_map(|k| (1..=k).map(move |j| (j, k)))
            .filter_map(|(j, k)| gjk(&class.lw, j, k).ok().and_then(|g| g.word))
            .collect();
        let brute: BTreeSet<Word> = class.members.iter().filter(|b| almost_lowest(b)).cloned().collect();
        if from_g != brute {
            out.push(class.lw.to_string());
        }
    }
    out
}

/// The g_{j,k} comparison over every component of words of length 1..=max_len.
pub fn gjk_sweep(rank: usize, max_len: usize) -> (usize, Vec<String>) {
    let mut classes = 0;
    let mut bad = Vec::new();
    for len in 1..=max_len {
        for c in components_of_length(rank, len) {
            classes += c.type_a_components().len();
            bad.extend(gjk_divergences(&c));
        }
    }
    (classes, bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_agrees() {
        let r = crosscheck(2, 5);
        assert_eq!(r.total_divergences(), 0, "{}", r.to_text());
        assert!(r.e_explicit.cases > 0 && r.f_explicit.cases > 0);
        assert_eq!(r.words, 3 + 9 + 27 + 81 + 243);
    }

    #[test]
    fn single_letters_trivial() {
        let r = crosscheck(3, 1);
        assert_eq!(r.total_divergences(), 0);
        assert_eq!(r.bypass.cases, 0);
    }

    #[test]
    fn gjk_small() {
        let (classes, bad) = gjk_sweep(2, 5);
        assert!(classes > 0);
        assert!(bad.is_empty(), "{bad:?}");
    }
}
