//! Deterministic catalog of small algebras chosen to exercise each family of results.

use crate::algebra::{FiniteAlgebra, OpFn};
use crate::error::Result;
use crate::term::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(ℤₙ, +, 0)`.
    CyclicMonoid,
    /// `({0..k}, x ⊕ y = min(x + y, k), 0)`.
    SaturatingMonoid,
    /// `(ℤₙ, +, −, 0, p)` with `p(x,y,z) = x − y + z`.
    CyclicGroup,
    /// `(ℤₙ, +, ·, 0, 1)`.
    Ring,
    /// `({0,1}, ∨, ∧, 0, 1)`.
    BooleanSemiring,
    /// `({0..k, ∞}, min, capped +, ∞, 0)`.
    MinPlusSemiring,
    /// `ℤₙ` as a module over itself: `+`, `0`, and one unary map `x ↦ r·x` per scalar.
    Module,
    /// A set with one constant.
    PointedSet,
    /// `({0..k}, x ∸ y, 0)`: truncated subtraction.
    Monus,
    /// `({0..k}, ∸, max, 0)`.
    MonusMax,
    /// Supplied by the caller rather than built here.
    User,
}

/// Symbols of a catalog semiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiringSymbols {
    pub add: &'static str,
    pub mul: &'static str,
    pub zero: &'static str,
    pub one: Option<&'static str>,
}

pub const STANDARD_SEMIRING: SemiringSymbols = SemiringSymbols {
    add: "add",
    mul: "mul",
    zero: "zero",
    one: Some("one"),
};

/// A named algebra together with candidate terms for the rank-bounding conditions.
/// Candidates are claims, not facts: suites verify them before relying on them.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub family: Family,
    pub algebra: FiniteAlgebra,
    pub maltsev: Option<Term>,
    pub subtraction: Option<Term>,
    pub jonsson_tarski: Option<Term>,
    pub semiring: Option<SemiringSymbols>,
    /// Name of the commutative monoid addition, if the algebra is one.
    pub monoid_add: Option<&'static str>,
}

impl CatalogEntry {
    fn new(name: impl Into<String>, family: Family, algebra: FiniteAlgebra) -> Self {
        CatalogEntry {
            name: name.into(),
            family,
            algebra,
            maltsev: None,
            subtraction: None,
            jonsson_tarski: None,
            semiring: None,
            monoid_add: None,
        }
    }

    pub fn top(&self) -> usize {
        self.algebra.top().expect("catalog algebras carry a top")
    }

    /// Wraps a caller's algebra. Term conditions are taken from basic operations
    /// that satisfy them: the first ternary Mal'tsev operation, and the first
    /// binary operations that are a subtraction or a Jónsson–Tarski term for the top.
    /// Symbols `add`, `mul`, `zero` (and optionally `one`) that form a semiring are
    /// recorded as one.
    pub fn user(name: impl Into<String>, algebra: FiniteAlgebra) -> Result<Self> {
        use crate::oracles::{check_jonsson_tarski_term, check_maltsev_term, check_subtractive_term, SemiringView};
        let top = algebra.resolve_top(None)?;
        let mut e = CatalogEntry::new(name, Family::User, algebra);
        let a = &e.algebra;
        for sym in a.signature().symbols() {
            let term = || Term::basic(a.signature(), &sym.name).expect("own symbol");
            match sym.arity {
                3 if e.maltsev.is_none() && check_maltsev_term(a, &sym.name)? => e.maltsev = Some(term()),
                2 => {
                    if e.subtraction.is_none() && check_subtractive_term(a, &sym.name, top)? {
                        e.subtraction = Some(term());
                    }
                    if e.jonsson_tarski.is_none() && check_jonsson_tarski_term(a, &sym.name, top)? {
                        e.jonsson_tarski = Some(term());
                    }
                }
                _ => {}
            }
        }
        let s = STANDARD_SEMIRING;
        let one = a
            .signature()
            .lookup(s.one.expect("named"))
            .ok()
            .map(|_| s.one.expect("named"));
        if a.size() <= crate::oracles::semiring::SEMIRING_CHECK_LIMIT
            && SemiringView::new(a, s.add, s.mul, s.zero, one).is_ok()
        {
            let zero = a.apply_op(a.signature().lookup(s.zero)?, &[]);
            if zero == top {
                e.semiring = Some(SemiringSymbols { one, ..s });
            }
        }
        Ok(e)
    }
}

fn op_term(a: &FiniteAlgebra, name: &str, args: Vec<Term>) -> Term {
    let op = a.signature().lookup(name).expect("catalog symbol");
    Term::app(op, args)
}

/// `x + c·y + z` style helper: `add(add(x, scaled_y), z)`.
fn add3(a: &FiniteAlgebra, x: Term, y: Term, z: Term) -> Term {
    op_term(a, "add", vec![op_term(a, "add", vec![x, y]), z])
}

/// `y` added to itself `times` times (`times >= 1`).
fn repeat_add(a: &FiniteAlgebra, y: Term, times: usize) -> Term {
    (1..times).fold(y.clone(), |acc, _| op_term(a, "add", vec![acc, y.clone()]))
}

pub fn cyclic_monoid(n: usize) -> Result<FiniteAlgebra> {
    FiniteAlgebra::from_fns(
        &[("add", 2), ("zero", 0)],
        n,
        &[&|a: &[usize]| (a[0] + a[1]) % n, &|_: &[usize]| 0],
        Some(0),
    )
}

pub fn saturating_monoid(cap: usize) -> Result<FiniteAlgebra> {
    FiniteAlgebra::from_fns(
        &[("add", 2), ("zero", 0)],
        cap + 1,
        &[&|a: &[usize]| (a[0] + a[1]).min(cap), &|_: &[usize]| 0],
        Some(0),
    )
}

pub fn cyclic_group(n: usize) -> Result<FiniteAlgebra> {
    FiniteAlgebra::from_fns(
        &[("add", 2), ("neg", 1), ("zero", 0), ("malt", 3)],
        n,
        &[
            &|a: &[usize]| (a[0] + a[1]) % n,
            &|a: &[usize]| (n - a[0]) % n,
            &|_: &[usize]| 0,
            &|a: &[usize]| (a[0] + n - a[1] + a[2]) % n,
        ],
        Some(0),
    )
}

pub fn ring(n: usize) -> Result<FiniteAlgebra> {
    FiniteAlgebra::from_fns(
        &[("add", 2), ("mul", 2), ("zero", 0), ("one", 0)],
        n,
        &[
            &|a: &[usize]| (a[0] + a[1]) % n,
            &|a: &[usize]| (a[0] * a[1]) % n,
            &|_: &[usize]| 0,
            &|_: &[usize]| 1 % n,
        ],
        Some(0),
    )
}

pub fn boolean_semiring() -> Result<FiniteAlgebra> {
    FiniteAlgebra::from_fns(
        &[("add", 2), ("mul", 2), ("zero", 0), ("one", 0)],
        2,
        &[
            &|a: &[usize]| a[0] | a[1],
            &|a: &[usize]| a[0] & a[1],
            &|_: &[usize]| 0,
            &|_: &[usize]| 1,
        ],
        Some(0),
    )
}

/// Carrier `{0..k}` plus `∞` encoded as `k + 1`. Addition is `min` (identity `∞`),
/// multiplication is addition capped at `k` with `∞` absorbing. The top is `∞`.
pub fn min_plus_semiring(k: usize) -> Result<FiniteAlgebra> {
    let inf = k + 1;
    FiniteAlgebra::from_fns(
        &[("add", 2), ("mul", 2), ("zero", 0), ("one", 0)],
        k + 2,
        &[
            &|a: &[usize]| a[0].min(a[1]),
            &move |a: &[usize]| {
                if a[0] == inf || a[1] == inf {
                    inf
                } else {
                    (a[0] + a[1]).min(k)
                }
            },
            &move |_: &[usize]| inf,
            &|_: &[usize]| 0,
        ],
        Some(inf),
    )
}

/// `ℤₙ` as a `ℤₙ`-module: `add`, `zero`, and `scale{r}` for every scalar `r`.
pub fn module(n: usize) -> Result<FiniteAlgebra> {
    let names: Vec<String> = (0..n).map(|r| format!("scale{r}")).collect();
    let mut symbols: Vec<(&str, usize)> = vec![("add", 2), ("zero", 0)];
    symbols.extend(names.iter().map(|s| (s.as_str(), 1)));
    let add = move |a: &[usize]| (a[0] + a[1]) % n;
    let zero = |_: &[usize]| 0;
    type Scalar = Box<dyn Fn(&[usize]) -> usize>;
    let scalars: Vec<Scalar> = (0..n)
        .map(|r| Box::new(move |a: &[usize]| (r * a[0]) % n) as Box<_>)
        .collect();
    let mut ops: Vec<OpFn<'_>> = vec![&add, &zero];
    ops.extend(scalars.iter().map(|f| f.as_ref()));
    FiniteAlgebra::from_fns(&symbols, n, &ops, Some(0))
}

pub fn pointed_set(n: usize) -> Result<FiniteAlgebra> {
    FiniteAlgebra::from_fns(&[("top", 0)], n, &[&|_: &[usize]| 0], Some(0))
}

pub fn monus(k: usize) -> Result<FiniteAlgebra> {
    FiniteAlgebra::from_fns(
        &[("sub", 2), ("zero", 0)],
        k + 1,
        &[&|a: &[usize]| a[0].saturating_sub(a[1]), &|_: &[usize]| 0],
        Some(0),
    )
}

pub fn monus_max(k: usize) -> Result<FiniteAlgebra> {
    FiniteAlgebra::from_fns(
        &[("sub", 2), ("max", 2), ("zero", 0)],
        k + 1,
        &[
            &|a: &[usize]| a[0].saturating_sub(a[1]),
            &|a: &[usize]| a[0].max(a[1]),
            &|_: &[usize]| 0,
        ],
        Some(0),
    )
}

fn with_group_terms(mut e: CatalogEntry) -> CatalogEntry {
    let a = &e.algebra;
    let p = Term::basic(a.signature(), "malt").expect("malt");
    let zero = Term::basic(a.signature(), "zero").expect("zero");
    e.subtraction = Some(crate::oracles::identities::subtraction_from_maltsev(&p, &zero));
    e.jonsson_tarski = Some(Term::basic(a.signature(), "add").expect("add"));
    e.maltsev = Some(p);
    e
}

/// Mal'tsev, subtraction and Jónsson–Tarski terms of `ℤₙ` written with `add` and
/// a negation term.
fn with_additive_terms(mut e: CatalogEntry, neg: impl Fn(&FiniteAlgebra, Term) -> Term) -> CatalogEntry {
    let a = &e.algebra;
    let (x, y, z) = (Term::var(0), Term::var(1), Term::var(2));
    e.maltsev = Some(add3(a, x.clone(), neg(a, y.clone()), z));
    e.subtraction = Some(op_term(a, "add", vec![x, neg(a, y)]));
    e.jonsson_tarski = Some(Term::basic(a.signature(), "add").expect("add"));
    e
}

/// The catalog for carriers up to `limit` elements (`limit >= 2`).
///
/// Order is fixed: trivial algebras, then each family by increasing size.
pub fn build_catalog(limit: usize) -> Vec<CatalogEntry> {
    let limit = limit.max(2);
    let mut out = Vec::new();
    let expect = |r: Result<FiniteAlgebra>| r.expect("catalog tables are well formed");

    // One-element algebras.
    let mut m = CatalogEntry::new("trivial-monoid", Family::CyclicMonoid, expect(cyclic_monoid(1)));
    m.monoid_add = Some("add");
    out.push(m);
    out.push(with_group_terms(CatalogEntry::new(
        "trivial-group",
        Family::CyclicGroup,
        expect(cyclic_group(1)),
    )));
    let mut r = CatalogEntry::new("trivial-ring", Family::Ring, expect(ring(1)));
    r.semiring = Some(STANDARD_SEMIRING);
    out.push(with_additive_terms(r, |_, y| y));
    out.push(CatalogEntry::new(
        "trivial-pointed",
        Family::PointedSet,
        expect(pointed_set(1)),
    ));

    for n in 2..=limit {
        let mut e = CatalogEntry::new(format!("z{n}-monoid"), Family::CyclicMonoid, expect(cyclic_monoid(n)));
        e.monoid_add = Some("add");
        e.jonsson_tarski = Some(Term::basic(e.algebra.signature(), "add").expect("add"));
        out.push(e);
    }
    for k in 1..limit {
        let mut e = CatalogEntry::new(
            format!("sat{k}-monoid"),
            Family::SaturatingMonoid,
            expect(saturating_monoid(k)),
        );
        e.monoid_add = Some("add");
        e.jonsson_tarski = Some(Term::basic(e.algebra.signature(), "add").expect("add"));
        out.push(e);
    }
    for n in 2..=limit {
        out.push(with_group_terms(CatalogEntry::new(
            format!("z{n}-group"),
            Family::CyclicGroup,
            expect(cyclic_group(n)),
        )));
    }
    for n in 2..=limit {
        let mut e = CatalogEntry::new(format!("z{n}-ring"), Family::Ring, expect(ring(n)));
        e.semiring = Some(STANDARD_SEMIRING);
        // −y is y added to itself n − 1 times.
        out.push(with_additive_terms(e, move |a, y| repeat_add(a, y, n - 1)));
    }
    let mut b = CatalogEntry::new("bool-semiring", Family::BooleanSemiring, expect(boolean_semiring()));
    b.semiring = Some(STANDARD_SEMIRING);
    out.push(b);
    for k in 0..limit.saturating_sub(1) {
        let a = expect(min_plus_semiring(k));
        let symbols = STANDARD_SEMIRING;
        // Entries failing the semiring axioms are left out rather than patched.
        if crate::oracles::SemiringView::new(&a, symbols.add, symbols.mul, symbols.zero, symbols.one).is_ok() {
            let mut e = CatalogEntry::new(format!("minplus{k}-semiring"), Family::MinPlusSemiring, a);
            e.semiring = Some(symbols);
            out.push(e);
        }
    }
    for n in 2..=limit {
        let e = CatalogEntry::new(format!("z{n}-module"), Family::Module, expect(module(n)));
        let scale = format!("scale{}", n - 1);
        out.push(with_additive_terms(e, move |a, y| op_term(a, &scale, vec![y])));
    }
    for n in 2..=limit {
        out.push(CatalogEntry::new(
            format!("pointed{n}"),
            Family::PointedSet,
            expect(pointed_set(n)),
        ));
    }
    for k in 1..limit {
        let mut e = CatalogEntry::new(format!("monus{k}"), Family::Monus, expect(monus(k)));
        e.subtraction = Some(Term::basic(e.algebra.signature(), "sub").expect("sub"));
        out.push(e);
    }
    for k in 1..limit {
        let mut e = CatalogEntry::new(format!("monus-max{k}"), Family::MonusMax, expect(monus_max(k)));
        e.subtraction = Some(Term::basic(e.algebra.signature(), "sub").expect("sub"));
        e.jonsson_tarski = Some(Term::basic(e.algebra.signature(), "max").expect("max"));
        out.push(e);
    }
    out
}

/// Finds an entry of `build_catalog(limit)` by name.
pub fn catalog_entry(name: &str, limit: usize) -> Option<CatalogEntry> {
    build_catalog(limit).into_iter().find(|e| e.name == name)
}
