//! Closure computations on finite algebras.
//!
//! Given a finite algebra `A`, a distinguished element `⊤` and a set `I`, the
//! semicongruence `R` generated by `I × {⊤}` yields the ⊤-clot `R⊤`, the
//! ⊤-induction `RI` and the ⊤-deduction `IR`. This crate computes them, iterates
//! them to fixpoints, measures per-algebra ranks, and cross-checks everything
//! against independent descriptions for semirings, monoids and algebras with
//! Mal'tsev, subtractive or Jónsson–Tarski terms.
//!
//! ```
//! use ua_closure::{catalog, closure, ElementSet};
//!
//! let z4 = catalog::ring(4).unwrap();
//! let two = ElementSet::from_elements(4, [2]).unwrap();
//! let ind = closure::top_induction(&z4, 0, &two).unwrap();
//! assert_eq!(ind.to_string(), "{0,2}");
//! ```

pub mod algebra;
pub mod catalog;
pub mod closure;
pub mod error;
pub mod format;
pub mod oracles;
pub mod rank;
pub mod relation;
pub mod set;
pub mod suites;
pub mod term;

pub use algebra::{generate_subalgebra, product_square, FiniteAlgebra, OpId, Operations, Signature, Symbol};
pub use closure::{
    clot_closure, congruence_generated, fixpoint, is_top_normal, iterate, semicongruence_generated, top_deduction,
    top_induction, ClosureReport, Mode,
};
pub use error::{Error, Result};
pub use rank::{algebra_rank, Rank, RankResult};
pub use relation::BinRel;
pub use set::ElementSet;
pub use term::{eval_term, Term};

/// Elements of a carrier of size `n` are the indices `0..n`.
pub type Element = usize;
