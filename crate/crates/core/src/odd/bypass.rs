use crate::error::{Error, Result};
use crate::operators::{e_even, e_minus, is_highest_up_to, is_i0_highest, raise_to_hw};
use crate::word::{Letter, Word};

use super::explicit::{e_minus_explicit, e_output_is_hw, eps_minus_hw, CycleTrace};

/// Which of the two ↑-identities relates ↑e₋ᵢ b and ↑e₋ₖ b.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BypassForm {
    /// ↑e₋ᵢ(↑e₋ₖ b) = ↑e₋ᵢ b
    Commuted,
    /// ↑e₋ₖ b = ↑e₋ᵢ b
    Collapsed,
    Both,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BypassReduction {
    pub i: usize,
    pub k: usize,
    pub trace: CycleTrace,
    pub eps_k_is_one: bool,
    /// e₋ₖ b, when defined
    pub e_k: Option<Word>,
    pub e_k_is_highest: bool,
    pub up_i: Word,
    pub up_k: Option<Word>,
    /// ↑e₋ᵢ(↑e₋ₖ b), when defined
    pub commuted: Option<Word>,
    pub form: BypassForm,
}

impl BypassReduction {
    pub fn is_valid(&self) -> bool {
        self.eps_k_is_one
            && self.e_k_is_highest
            && matches!(self.form, BypassForm::Commuted | BypassForm::Collapsed)
    }
}

fn bypass_trace(b: &Word, i: usize) -> Result<(Word, CycleTrace)> {
    if !is_i0_highest(b) {
        return Err(Error::Precondition(format!("{b} is not I0-highest")));
    }
    let (c, trace) = e_minus_explicit(b, i)?;
    if e_output_is_hw(&trace) {
        return Err(Error::Precondition(format!(
            "e_-{i}({b}) is already {{1..{i}}}-highest"
        )));
    }
    Ok((c, trace))
}

fn first_cycle(trace: &CycleTrace) -> usize {
    trace.cycled.iter().position(|&c| c).map(|p| p + 1).unwrap_or(0)
}

/// For an I₀-highest b whose e₋ᵢ b is not {1..i}-highest, finds the smallest k
/// at which the scan wraps and relates ↑e₋ᵢ b to ↑e₋ₖ b.
pub fn bypass_reduce(b: &Word, i: usize) -> Result<BypassReduction> {
    let (c, trace) = bypass_trace(b, i)?;
    let k = first_cycle(&trace);
    let eps_k_is_one = eps_minus_hw(b, k)? == 1;
    let e_k = e_minus(b, k);
    let e_k_is_highest = e_k.as_ref().is_some_and(|w| is_highest_up_to(w, k));
    let up_i = raise_to_hw(&c);
    let up_k = e_k.as_ref().map(raise_to_hw);
    let commuted = up_k
        .as_ref()
        .and_then(|u| e_minus(u, i))
        .map(|w| raise_to_hw(&w));
    let comm = commuted.as_ref() == Some(&up_i);
    let coll = up_k.as_ref() == Some(&up_i);
    let form = match (comm, coll) {
        (true, true) => BypassForm::Both,
        (true, false) => BypassForm::Commuted,
        (false, true) => BypassForm::Collapsed,
        (false, false) => BypassForm::Neither,
    };
    Ok(BypassReduction {
        i,
        k,
        trace,
        eps_k_is_one,
        e_k,
        e_k_is_highest,
        up_i,
        up_k,
        commuted,
        form,
    })
}

/// ↑e₋ᵢ b computed without raising through e₁…eᵢ: lower the initial
/// (i+1)-sequence, raise the letters t_j for j < k, then apply e_m with m > i
/// until none applies. Errors if the result disagrees with ↑ of the explicit e₋ᵢ.
pub fn predicted_up_after_e(b: &Word, i: usize) -> Result<Word> {
    let (c, trace) = bypass_trace(b, i)?;
    let k = first_cycle(&trace);
    let mut letters = b.letters().to_vec();
    for j in 2..=i + 1 {
        letters[trace.p.p(j) - 1] = j as Letter - 1;
    }
    for j in 1..k {
        letters[trace.t[j - 1] - 1] = j as Letter + 1;
    }
    let mut z = Word::from_raw(b.rank(), letters);
    if !is_highest_up_to(&z, i) {
        return Err(Error::Inconsistent(format!(
            "intermediate {z} is not {{1..{i}}}-highest"
        )));
    }
    loop {
        let mut moved = false;
        for m in i + 1..=b.rank() {
            if let Some(next) = e_even(&z, m) {
                z = next;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let truth = raise_to_hw(&c);
    if z != truth {
        return Err(Error::Inconsistent(format!(
            "predicted {z} but raising gives {truth}"
        )));
    }
    Ok(z)
}
