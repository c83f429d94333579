//! Independent per-variety descriptions of induction and deduction, used to
//! cross-check the generic engine.

pub mod identities;
pub mod monoid;
pub mod natchain;
pub mod semiring;
pub mod union_find;

pub use identities::{
    check_jonsson_tarski_term, check_maltsev_term, check_subtractive_term, is_jonsson_tarski_term, is_maltsev_term,
    is_subtractive_term, JONSSON_TARSKI_IDENTITIES, MALTSEV_IDENTITIES, SUBTRACTIVE_IDENTITIES,
};
pub use monoid::{
    is_submonoid, is_subtractive, monoid_ded_formula, submonoid_ded_formula, subsemigroup_generated,
    subtractive_closure_submonoid,
};
pub use natchain::{format_big_set, nat_chain_closed_form, nat_mult_deduction_chain, BigNaturalSet};
pub use semiring::{
    is_ideal, is_subtractive_ideal, semiring_ded_oracle, semiring_ideal_generated, semiring_ind_oracle, SemiringView,
};
pub use union_find::congruence_union_find;
