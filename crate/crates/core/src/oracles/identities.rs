//! Exhaustive checks of the term conditions that bound induction and deduction
//! ranks: Mal'tsev, subtractive, and Jónsson–Tarski terms.
//!
//! Each check takes a [`Term`] in variables `x0, x1, …` so that derived terms
//! (for example `x + (n-1)·y + z` in `ℤₙ`) qualify, with symbol-based wrappers for
//! the common case of a basic operation.

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::term::{eval_term, Term};

/// The identities verified by [`check_subtractive_term`]. The second one is the
/// form the subtraction arguments actually use.
pub const SUBTRACTIVE_IDENTITIES: &str = "s(x,x)=0, s(x,0)=x";
pub const MALTSEV_IDENTITIES: &str = "p(x,y,y)=x, p(x,x,y)=y";
pub const JONSSON_TARSKI_IDENTITIES: &str = "u(x,0)=x, u(0,x)=x";

fn require_vars(t: &Term, count: usize, a: &FiniteAlgebra) -> Result<()> {
    t.check(a.signature())?;
    if let Some(v) = t.max_var() {
        if v >= count {
            return Err(Error::UnboundVariable(v));
        }
    }
    Ok(())
}

/// `p(x,y,y) = x` and `p(x,x,y) = y` for all `x, y`.
pub fn is_maltsev_term(a: &FiniteAlgebra, p: &Term) -> Result<bool> {
    require_vars(p, 3, a)?;
    for x in 0..a.size() {
        for y in 0..a.size() {
            if eval_term(a, p, &[x, y, y])? != x || eval_term(a, p, &[x, x, y])? != y {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `s(x,x) = 0` and `s(x,0) = x` for all `x`.
pub fn is_subtractive_term(a: &FiniteAlgebra, s: &Term, zero: usize) -> Result<bool> {
    require_vars(s, 2, a)?;
    a.check_element(zero)?;
    for x in 0..a.size() {
        if eval_term(a, s, &[x, x])? != zero || eval_term(a, s, &[x, zero])? != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `u(x,0) = x = u(0,x)` for all `x`.
pub fn is_jonsson_tarski_term(a: &FiniteAlgebra, u: &Term, zero: usize) -> Result<bool> {
    require_vars(u, 2, a)?;
    a.check_element(zero)?;
    for x in 0..a.size() {
        if eval_term(a, u, &[x, zero])? != x || eval_term(a, u, &[zero, x])? != x {
            return Ok(false);
        }
    }
    Ok(true)
}

fn basic(a: &FiniteAlgebra, symbol: &str, arity: usize) -> Result<Term> {
    a.signature().lookup_arity(symbol, arity)?;
    Term::basic(a.signature(), symbol)
}

/// [`is_maltsev_term`] for the ternary operation named `symbol`.
pub fn check_maltsev_term(a: &FiniteAlgebra, symbol: &str) -> Result<bool> {
    is_maltsev_term(a, &basic(a, symbol, 3)?)
}

/// [`is_subtractive_term`] for the binary operation named `symbol`; checks
/// [`SUBTRACTIVE_IDENTITIES`].
pub fn check_subtractive_term(a: &FiniteAlgebra, symbol: &str, zero: usize) -> Result<bool> {
    is_subtractive_term(a, &basic(a, symbol, 2)?, zero)
}

/// [`is_jonsson_tarski_term`] for the binary operation named `symbol`.
pub fn check_jonsson_tarski_term(a: &FiniteAlgebra, symbol: &str, zero: usize) -> Result<bool> {
    is_jonsson_tarski_term(a, &basic(a, symbol, 2)?, zero)
}

/// `s(x,y) = p(x,y,c)` where `c` is the constant term for the zero.
pub fn subtraction_from_maltsev(p: &Term, zero_const: &Term) -> Term {
    p.substitute(&[Term::var(0), Term::var(1), zero_const.clone()])
}

/// `u(x,y) = p(x,c,y)`.
pub fn jonsson_tarski_from_maltsev(p: &Term, zero_const: &Term) -> Term {
    p.substitute(&[Term::var(0), zero_const.clone(), Term::var(1)])
}
