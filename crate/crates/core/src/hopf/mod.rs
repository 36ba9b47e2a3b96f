//! The quantum group `F`, its coactions on the plane, the dual algebra `H`
//! and the decomposition of the plane under `H`.

mod action;
mod coaction;
mod decomposition;
mod felement;

pub use action::{
    act, act_from_coaction, act_from_coaction_with, act_h, act_h_inv, act_xm, act_xp,
    action_table_check, coact_right_symbolic, operator_identity_check, pairing, pairing_with,
    symbolic_coaction_matches, DualGenerator, FGenerator, LinearOperator, PairingTable,
};
pub use coaction::{coact, coact_generators, coact_left, coact_right, Side, TensorElement};
pub use decomposition::{decompose, invariance_check, Decomposition};
pub use felement::{
    expand_d, f_mul, monomial_mul, normalize_word, qdet_check, word_product, FElement, FIndex,
    FLetter, QDet, RewriteStrategy,
};
