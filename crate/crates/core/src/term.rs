//! Terms over a signature, their evaluation, and depth-bounded enumeration of
//! term values.
//!
//! The enumeration routines here are deliberately naive level-by-level
//! computations over ordinary collections. They serve as an independent check
//! on the worklist closures in [`crate::algebra`] and [`crate::closure`].

use std::collections::BTreeSet;

use crate::algebra::{FiniteAlgebra, OpId, Signature};
use crate::error::{Error, Result};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    App(OpId, Vec<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn app(op: OpId, args: Vec<Term>) -> Term {
        Term::App(op, args)
    }

    /// `f(x0, …, x_{k-1})` for the symbol named `name`.
    pub fn basic(sig: &Signature, name: &str) -> Result<Term> {
        let op = sig.lookup(name)?;
        let k = sig.symbol(op).arity;
        Ok(Term::App(op, (0..k).map(Term::Var).collect()))
    }

    /// Depth of a variable or constant is 0; otherwise one more than the deepest argument.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => args.iter().map(|t| t.depth() + 1).max().unwrap_or(0),
        }
    }

    /// Checks every application against the arities of `sig`.
    pub fn check(&self, sig: &Signature) -> Result<()> {
        match self {
            Term::Var(_) => Ok(()),
            Term::App(op, args) => {
                if op.0 >= sig.len() {
                    return Err(Error::UnknownSymbol(format!("#{}", op.0)));
                }
                let sym = sig.symbol(*op);
                if sym.arity != args.len() {
                    return Err(Error::WrongArity {
                        symbol: sym.name.clone(),
                        expected: sym.arity,
                        found: args.len(),
                    });
                }
                args.iter().try_for_each(|t| t.check(sig))
            }
        }
    }

    /// Replaces variable `i` by `subst[i]`.
    pub fn substitute(&self, subst: &[Term]) -> Term {
        match self {
            Term::Var(i) => subst.get(*i).cloned().unwrap_or(Term::Var(*i)),
            Term::App(op, args) => Term::App(*op, args.iter().map(|t| t.substitute(subst)).collect()),
        }
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            Term::Var(i) => Some(*i),
            Term::App(_, args) => args.iter().filter_map(Term::max_var).max(),
        }
    }
}

/// Evaluates `t` in `a`, binding variable `i` to `env[i]`.
pub fn eval_term(a: &FiniteAlgebra, t: &Term, env: &[usize]) -> Result<usize> {
    match t {
        Term::Var(i) => {
            let v = *env.get(*i).ok_or(Error::UnboundVariable(*i))?;
            a.check_element(v)?;
            Ok(v)
        }
        Term::App(op, args) => {
            if op.0 >= a.signature().len() {
                return Err(Error::UnknownSymbol(format!("#{}", op.0)));
            }
            let sym = a.signature().symbol(*op);
            if sym.arity != args.len() {
                return Err(Error::WrongArity {
                    symbol: sym.name.clone(),
                    expected: sym.arity,
                    found: args.len(),
                });
            }
            let vals = args.iter().map(|s| eval_term(a, s, env)).collect::<Result<Vec<_>>>()?;
            Ok(a.apply_op(*op, &vals))
        }
    }
}

/// One level of term growth: `level ∪ { f(v_1,…,v_k) : v_i ∈ level }`.
fn grow<T: Ord + Clone>(a: &FiniteAlgebra, level: &BTreeSet<T>, apply: impl Fn(OpId, &[T]) -> T) -> BTreeSet<T> {
    let mut next = level.clone();
    let items: Vec<T> = level.iter().cloned().collect();
    for (i, sym) in a.signature().symbols().iter().enumerate() {
        let k = sym.arity;
        if k == 0 {
            next.insert(apply(OpId(i), &[]));
            continue;
        }
        if items.is_empty() {
            continue;
        }
        let mut idx = vec![0usize; k];
        loop {
            let args: Vec<T> = idx.iter().map(|&j| items[j].clone()).collect();
            next.insert(apply(OpId(i), &args));
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < items.len() {
                    break;
                }
                idx[pos] = 0;
            }
            if idx.iter().all(|&j| j == 0) {
                break;
            }
        }
    }
    next
}

fn depth_zero<T: Ord + Clone>(
    a: &FiniteAlgebra,
    gens: impl IntoIterator<Item = T>,
    constant: impl Fn(usize) -> T,
) -> BTreeSet<T> {
    let mut level: BTreeSet<T> = gens.into_iter().collect();
    for c in a.constants() {
        level.insert(constant(c));
    }
    level
}

/// Values of all terms of depth `<= max_depth` whose variables range over
/// `generators` (constants count as depth 0).
pub fn enumerate_term_images(a: &FiniteAlgebra, generators: &ElementSet, max_depth: usize) -> ElementSet {
    let mut level = depth_zero(a, generators.iter(), |c| c);
    for _ in 0..max_depth {
        let next = grow(a, &level, |op, args| a.apply_op(op, args));
        if next == level {
            break;
        }
        level = next;
    }
    ElementSet::from_elements(a.size(), level).expect("term values lie in the carrier")
}

/// Term values of unbounded depth, found by growing the depth until two
/// consecutive levels agree. Returns the set and the depth at which it stabilised.
pub fn stable_term_images(a: &FiniteAlgebra, generators: &ElementSet) -> (ElementSet, usize) {
    let mut level = depth_zero(a, generators.iter(), |c| c);
    let mut depth = 0;
    loop {
        let next = grow(a, &level, |op, args| a.apply_op(op, args));
        if next == level {
            let set = ElementSet::from_elements(a.size(), level).expect("in carrier");
            return (set, depth);
        }
        level = next;
        depth += 1;
    }
}

/// The pairs `(t(x⃗, y⃗), t(x⃗, ⊤⃗))` with `x⃗` ranging over the carrier and `y⃗`
/// over `seed`, grown by depth until stable.
///
/// A term in variables `x⃗, y⃗` evaluated at the two substitutions is the same as a
/// term in the generators `(x, x)` and `(y, ⊤)` evaluated componentwise, which is
/// what the levels enumerate.
pub fn term_pairs(a: &FiniteAlgebra, top: usize, seed: &ElementSet) -> BTreeSet<(usize, usize)> {
    let gens = (0..a.size()).map(|x| (x, x)).chain(seed.iter().map(|y| (y, top)));
    let mut level = depth_zero(a, gens, |c| (c, c));
    loop {
        let next = grow(a, &level, |op, args: &[(usize, usize)]| {
            let left: Vec<usize> = args.iter().map(|p| p.0).collect();
            let right: Vec<usize> = args.iter().map(|p| p.1).collect();
            (a.apply_op(op, &left), a.apply_op(op, &right))
        });
        if next == level {
            return level;
        }
        level = next;
    }
}

/// `{ t(x⃗, y⃗) : y⃗ ∈ I, t(x⃗, ⊤⃗) ∈ I }`.
pub fn term_induction(a: &FiniteAlgebra, top: usize, set: &ElementSet) -> ElementSet {
    let pairs = term_pairs(a, top, set);
    let xs = pairs.iter().filter(|p| set.contains(p.1)).map(|p| p.0);
    ElementSet::from_elements(a.size(), xs).expect("in carrier")
}

/// `{ t(x⃗, ⊤⃗) : t(x⃗, y⃗) ∈ I, y⃗ ∈ I }`.
pub fn term_deduction(a: &FiniteAlgebra, top: usize, set: &ElementSet) -> ElementSet {
    let pairs = term_pairs(a, top, set);
    let xs = pairs.iter().filter(|p| set.contains(p.0)).map(|p| p.1);
    ElementSet::from_elements(a.size(), xs).expect("in carrier")
}

/// `{ t(x⃗, y⃗) : y⃗ ∈ I, t(x⃗, ⊤⃗) = ⊤ }`.
pub fn term_clot(a: &FiniteAlgebra, top: usize, set: &ElementSet) -> ElementSet {
    let pairs = term_pairs(a, top, set);
    let xs = pairs.iter().filter(|p| p.1 == top).map(|p| p.0);
    ElementSet::from_elements(a.size(), xs).expect("in carrier")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generate_subalgebra;

    fn zn_monoid(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::from_fns(
            &[("add", 2), ("zero", 0)],
            n,
            &[&|a: &[usize]| (a[0] + a[1]) % n, &|_: &[usize]| 0],
            Some(0),
        )
        .unwrap()
    }

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_elements(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn projection_returns_binding() {
        let z4 = zn_monoid(4);
        assert_eq!(eval_term(&z4, &Term::var(0), &[3]).unwrap(), 3);
    }

    #[test]
    fn doubling_in_z3() {
        let z3 = zn_monoid(3);
        let add = z3.signature().lookup("add").unwrap();
        let t = Term::app(add, vec![Term::var(0), Term::var(0)]);
        assert_eq!(eval_term(&z3, &t, &[2]).unwrap(), 1);
    }

    #[test]
    fn constant_term() {
        let z3 = zn_monoid(3);
        let zero = Term::basic(z3.signature(), "zero").unwrap();
        assert_eq!(eval_term(&z3, &zero, &[]).unwrap(), 0);
        assert_eq!(zero.depth(), 0);
    }

    #[test]
    fn unbound_variable() {
        let z3 = zn_monoid(3);
        let add = Term::basic(z3.signature(), "add").unwrap();
        assert_eq!(eval_term(&z3, &add, &[1]).unwrap_err(), Error::UnboundVariable(1));
    }

    #[test]
    fn ill_formed_term_rejected() {
        let z3 = zn_monoid(3);
        let add = z3.signature().lookup("add").unwrap();
        let bad = Term::app(add, vec![Term::var(0)]);
        assert!(matches!(bad.check(z3.signature()), Err(Error::WrongArity { .. })));
        assert!(eval_term(&z3, &bad, &[0]).is_err());
    }

    #[test]
    fn depth_counts_nesting() {
        let z3 = zn_monoid(3);
        let add = z3.signature().lookup("add").unwrap();
        let t = Term::app(
            add,
            vec![Term::var(0), Term::app(add, vec![Term::var(1), Term::var(1)])],
        );
        assert_eq!(t.depth(), 2);
        assert_eq!(t.max_var(), Some(1));
    }

    #[test]
    fn term_images_by_depth() {
        let z4 = zn_monoid(4);
        assert_eq!(enumerate_term_images(&z4, &set(4, &[1]), 0), set(4, &[0, 1]));
        assert_eq!(enumerate_term_images(&z4, &set(4, &[1]), 1), set(4, &[0, 1, 2]));
        assert_eq!(enumerate_term_images(&z4, &set(4, &[1]), 2), ElementSet::full(4));
        assert_eq!(enumerate_term_images(&z4, &ElementSet::full(4), 0), ElementSet::full(4));
    }

    #[test]
    fn stable_images_match_worklist() {
        let z4 = zn_monoid(4);
        for s in crate::set::subsets_by_size(4) {
            let (img, _) = stable_term_images(&z4, &s);
            assert_eq!(img, generate_subalgebra(&z4, &s));
        }
    }

    #[test]
    fn term_pairs_without_seed_are_diagonal() {
        let z3 = zn_monoid(3);
        let pairs = term_pairs(&z3, 0, &ElementSet::empty(3));
        assert_eq!(pairs, (0..3).map(|x| (x, x)).collect());
    }
}
