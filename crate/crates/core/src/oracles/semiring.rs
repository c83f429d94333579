//! Closed-form descriptions of induction and deduction in semirings, computed
//! directly from the `+`, `·` tables.

use crate::algebra::{FiniteAlgebra, OpId};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest carrier on which the axioms are checked exhaustively.
pub const SEMIRING_CHECK_LIMIT: usize = 64;

/// A finite algebra read as a semiring through designated symbols.
#[derive(Debug, Clone)]
pub struct SemiringView<'a> {
    algebra: &'a FiniteAlgebra,
    add: OpId,
    mul: OpId,
    zero: usize,
    one: Option<usize>,
}

impl<'a> SemiringView<'a> {
    /// Looks up the symbols and checks every semiring axiom on every tuple.
    /// The error names the first violated axiom.
    pub fn new(algebra: &'a FiniteAlgebra, add: &str, mul: &str, zero: &str, one: Option<&str>) -> Result<Self> {
        let sig = algebra.signature();
        let add = sig.lookup_arity(add, 2)?;
        let mul = sig.lookup_arity(mul, 2)?;
        let zero_op = sig.lookup_arity(zero, 0)?;
        let zero = algebra.apply_op(zero_op, &[]);
        let one = match one {
            Some(name) => {
                let op = sig.lookup_arity(name, 0)?;
                Some(algebra.apply_op(op, &[]))
            }
            None => None,
        };
        let n = algebra.size();
        if n > SEMIRING_CHECK_LIMIT {
            return Err(Error::CarrierTooLarge {
                size: n,
                limit: SEMIRING_CHECK_LIMIT,
            });
        }
        let view = SemiringView {
            algebra,
            add,
            mul,
            zero,
            one,
        };
        view.validate()?;
        Ok(view)
    }

    fn validate(&self) -> Result<()> {
        let n = self.algebra.size();
        let fail = |what: String| Err(Error::NotASemiring(what));
        for x in 0..n {
            if self.add(x, self.zero) != x {
                return fail(format!("{x} + 0 != {x}"));
            }
            if self.mul(self.zero, x) != self.zero || self.mul(x, self.zero) != self.zero {
                return fail(format!("0 is not absorbing for {x}"));
            }
            if let Some(one) = self.one {
                if self.mul(one, x) != x || self.mul(x, one) != x {
                    return fail(format!("1 is not a multiplicative identity for {x}"));
                }
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return fail(format!("+ not commutative at ({x},{y})"));
                }
                for z in 0..n {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return fail(format!("+ not associative at ({x},{y},{z})"));
                    }
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return fail(format!("· not associative at ({x},{y},{z})"));
                    }
                    if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                        return fail(format!("· not left distributive at ({x},{y},{z})"));
                    }
                    if self.mul(self.add(y, z), x) != self.add(self.mul(y, x), self.mul(z, x)) {
                        return fail(format!("· not right distributive at ({x},{y},{z})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        self.algebra
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.algebra.apply_op(self.add, &[x, y])
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.algebra.apply_op(self.mul, &[x, y])
    }

    fn size(&self) -> usize {
        self.algebra.size()
    }
}

/// The ideal `Ī` generated by `I`: the smallest additive submonoid containing `I`
/// and closed under multiplication by arbitrary elements on either side.
pub fn semiring_ideal_generated(s: &SemiringView<'_>, set: &ElementSet) -> ElementSet {
    let n = s.size();
    let mut ideal = set.clone();
    ideal.insert(s.zero());
    let mut work: Vec<usize> = ideal.iter().collect();
    while let Some(y) = work.pop() {
        let members: Vec<usize> = ideal.iter().collect();
        let mut fresh = Vec::new();
        for x in 0..n {
            fresh.push(s.mul(x, y));
            fresh.push(s.mul(y, x));
        }
        for &m in &members {
            fresh.push(s.add(m, y));
        }
        for v in fresh {
            if ideal.insert(v) {
                work.push(v);
            }
        }
    }
    ideal
}

/// `I + Ī = { x + y : x ∈ I, y ∈ Ī }`.
pub fn semiring_ind_oracle(s: &SemiringView<'_>, set: &ElementSet) -> ElementSet {
    let ideal = semiring_ideal_generated(s, set);
    let mut out = ElementSet::empty(s.size());
    for x in set.iter() {
        for y in ideal.iter() {
            out.insert(s.add(x, y));
        }
    }
    out
}

/// `{ x : x + y ∈ I for some y ∈ Ī }`.
pub fn semiring_ded_oracle(s: &SemiringView<'_>, set: &ElementSet) -> ElementSet {
    let ideal = semiring_ideal_generated(s, set);
    let mut out = ElementSet::empty(s.size());
    for x in 0..s.size() {
        if ideal.iter().any(|y| set.contains(s.add(x, y))) {
            out.insert(x);
        }
    }
    out
}

/// Two-sided ideal test: contains 0, closed under `+`, and under multiplication by
/// any element on either side.
pub fn is_ideal(s: &SemiringView<'_>, set: &ElementSet) -> bool {
    if !set.contains(s.zero()) {
        return false;
    }
    set.iter().all(|y| {
        set.iter().all(|z| set.contains(s.add(y, z)))
            && (0..s.size()).all(|x| set.contains(s.mul(x, y)) && set.contains(s.mul(y, x)))
    })
}

/// An ideal `I` with `x + y ∈ I ∧ y ∈ I ⇒ x ∈ I`.
pub fn is_subtractive_ideal(s: &SemiringView<'_>, set: &ElementSet) -> bool {
    is_ideal(s, set) && (0..s.size()).all(|x| set.contains(x) || set.iter().all(|y| !set.contains(s.add(x, y))))
}
