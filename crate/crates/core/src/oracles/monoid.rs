//! Commutative-monoid descriptions: induction generates the subsemigroup, and
//! deduction of a submonoid is its subtractive closure.

use crate::algebra::{FiniteAlgebra, OpId};
use crate::error::Result;
use crate::set::ElementSet;

/// Binary operation of `m` named `add`.
fn addition(m: &FiniteAlgebra, add: &str) -> Result<OpId> {
    m.signature().lookup_arity(add, 2)
}

/// Closure of `I` under `+` alone. No identity is adjoined, so `∅ ↦ ∅`.
pub fn subsemigroup_generated(m: &FiniteAlgebra, add: &str, set: &ElementSet) -> Result<ElementSet> {
    let op = addition(m, add)?;
    let mut out = set.clone();
    loop {
        let members: Vec<usize> = out.iter().collect();
        let mut grew = false;
        for &x in &members {
            for &y in &members {
                grew |= out.insert(m.apply_op(op, &[x, y]));
            }
        }
        if !grew {
            return Ok(out);
        }
    }
}

/// Repeatedly adds every `x` with `x + y ∈ J` and `y ∈ J`, until stable.
pub fn subtractive_closure_submonoid(m: &FiniteAlgebra, add: &str, set: &ElementSet) -> Result<ElementSet> {
    let op = addition(m, add)?;
    let mut out = set.clone();
    loop {
        let mut grew = false;
        for x in 0..m.size() {
            if !out.contains(x) && out.iter().any(|y| out.contains(m.apply_op(op, &[x, y]))) {
                out.insert(x);
                grew = true;
            }
        }
        if !grew {
            return Ok(out);
        }
    }
}

/// `x + y ∈ I ∧ y ∈ I ⇒ x ∈ I`.
pub fn is_subtractive(m: &FiniteAlgebra, add: &str, set: &ElementSet) -> Result<bool> {
    let op = addition(m, add)?;
    Ok((0..m.size()).all(|x| set.contains(x) || set.iter().all(|y| !set.contains(m.apply_op(op, &[x, y])))))
}

/// Contains `zero` and is closed under `+`.
pub fn is_submonoid(m: &FiniteAlgebra, add: &str, zero: usize, set: &ElementSet) -> Result<bool> {
    Ok(set.contains(zero) && subsemigroup_generated(m, add, set)? == *set)
}

/// `I ∪ { x : x + s ∈ I, s a sum of one or more elements of I }`: the deduction of
/// an arbitrary set in a commutative monoid.
pub fn monoid_ded_formula(m: &FiniteAlgebra, add: &str, set: &ElementSet) -> Result<ElementSet> {
    let op = addition(m, add)?;
    let sums = subsemigroup_generated(m, add, set)?;
    let mut out = set.clone();
    for x in 0..m.size() {
        if sums.iter().any(|s| set.contains(m.apply_op(op, &[x, s]))) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// `{ x : x + y ∈ I, y ∈ I }`: deduction of a submonoid.
pub fn submonoid_ded_formula(m: &FiniteAlgebra, add: &str, set: &ElementSet) -> Result<ElementSet> {
    let op = addition(m, add)?;
    let mut out = ElementSet::empty(m.size());
    for x in 0..m.size() {
        if set.iter().any(|y| set.contains(m.apply_op(op, &[x, y]))) {
            out.insert(x);
        }
    }
    Ok(out)
}
