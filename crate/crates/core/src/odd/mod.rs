//! Explicit descriptions of the odd operators on highest weight words.

mod bypass;
mod explicit;
mod sequence;

pub use bypass::{bypass_reduce, predicted_up_after_e, BypassForm, BypassReduction};
pub use explicit::{
    e_minus_explicit, e_output_is_hw, eps_minus_hw, f_minus_explicit, first_violation,
    phi_minus_hw, CycleTrace,
};
pub use sequence::{
    has_unbracketed_descending, initial_sequence, k_bracketed, qr_data, BracketMask,
    InitialSequence, QRData,
};
