//! Finite algebras over arbitrary signatures.
//!
//! Elements are the indices `0..n`. Each operation of arity `k` is a table of
//! `n^k` entries laid out row-major: the leftmost argument varies slowest, so the
//! entry for `f(a_1, …, a_k)` sits at `((a_1 * n + a_2) * n + …) * n + a_k`.

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Default bound on carrier sizes. Large enough that the square of a 64-element
/// algebra still fits.
pub const DEFAULT_CARRIER_LIMIT: usize = 4096;

/// Index of an operation symbol within its [`Signature`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

/// Ordered list of operation symbols with their arities. Constants have arity 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    symbols: Vec<Symbol>,
}

impl Signature {
    pub fn new<S: Into<String>, I: IntoIterator<Item = (S, usize)>>(symbols: I) -> Result<Self> {
        let mut sig = Signature::default();
        for (name, arity) in symbols {
            sig.push(name, arity)?;
        }
        Ok(sig)
    }

    pub fn push(&mut self, name: impl Into<String>, arity: usize) -> Result<OpId> {
        let name = name.into();
        if self.symbols.iter().any(|s| s.name == name) {
            return Err(Error::DuplicateSymbol(name));
        }
        self.symbols.push(Symbol { name, arity });
        Ok(OpId(self.symbols.len() - 1))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, op: OpId) -> &Symbol {
        &self.symbols[op.0]
    }

    pub fn lookup(&self, name: &str) -> Result<OpId> {
        self.symbols
            .iter()
            .position(|s| s.name == name)
            .map(OpId)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// Looks up `name` and insists on the given arity.
    pub fn lookup_arity(&self, name: &str, arity: usize) -> Result<OpId> {
        let op = self.lookup(name)?;
        let found = self.symbols[op.0].arity;
        if found != arity {
            return Err(Error::WrongArity {
                symbol: name.to_string(),
                expected: arity,
                found,
            });
        }
        Ok(op)
    }
}

/// Anything that can act as a finite algebra for closure purposes: a carrier
/// `0..n` with a family of total operations.
///
/// [`FiniteAlgebra`] stores its tables; [`SquareView`] computes the square
/// componentwise on demand, so closures over `A × A` never materialise `n^(2k)` tables.
pub trait Operations {
    fn carrier_size(&self) -> usize;
    fn op_count(&self) -> usize;
    fn arity(&self, op: usize) -> usize;
    fn apply(&self, op: usize, args: &[usize]) -> usize;
}

/// An operation given as a function of its argument tuple.
pub type OpFn<'a> = &'a dyn Fn(&[usize]) -> usize;

/// A finite algebra with validated, immutable operation tables and an optional
/// distinguished element `top`. The top need not be the value of any constant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    sig: Signature,
    size: usize,
    tables: Vec<Vec<usize>>,
    top: Option<usize>,
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base))
}

impl FiniteAlgebra {
    /// Validates and builds an algebra with the default carrier limit.
    pub fn new(sig: Signature, size: usize, tables: Vec<Vec<usize>>, top: Option<usize>) -> Result<Self> {
        Self::with_limit(sig, size, tables, top, DEFAULT_CARRIER_LIMIT)
    }

    pub fn with_limit(
        sig: Signature,
        size: usize,
        tables: Vec<Vec<usize>>,
        top: Option<usize>,
        limit: usize,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if size > limit {
            return Err(Error::SizeOverflow { size, limit });
        }
        if tables.len() != sig.len() {
            return Err(Error::ArityMismatch {
                symbol: "<signature>".into(),
                expected: sig.len(),
                found: tables.len(),
            });
        }
        for (sym, table) in sig.symbols().iter().zip(&tables) {
            let expected = checked_pow(size, sym.arity).ok_or(Error::SizeOverflow {
                size: usize::MAX,
                limit,
            })?;
            if table.len() != expected {
                return Err(Error::ArityMismatch {
                    symbol: sym.name.clone(),
                    expected,
                    found: table.len(),
                });
            }
            if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= size) {
                return Err(Error::ValueOutOfRange {
                    symbol: sym.name.clone(),
                    index,
                    value,
                    size,
                });
            }
        }
        if let Some(t) = top {
            if t >= size {
                return Err(Error::ElementOutOfRange { element: t, size });
            }
        }
        Ok(FiniteAlgebra { sig, size, tables, top })
    }

    /// Builds an algebra by evaluating a closure for every argument tuple of
    /// every symbol. `ops[i]` receives the argument slice for symbol `i`.
    pub fn from_fns(symbols: &[(&str, usize)], size: usize, ops: &[OpFn<'_>], top: Option<usize>) -> Result<Self> {
        let sig = Signature::new(symbols.iter().map(|&(n, a)| (n, a)))?;
        assert_eq!(ops.len(), sig.len(), "one function per symbol");
        let mut tables = Vec::with_capacity(sig.len());
        for (sym, f) in sig.symbols().iter().zip(ops) {
            let mut table = Vec::new();
            for_each_tuple(size, sym.arity, |args| table.push(f(args)));
            tables.push(table);
        }
        Self::new(sig, size, tables, top)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    /// Same tables, different distinguished element.
    pub fn with_top(&self, top: Option<usize>) -> Result<Self> {
        if let Some(t) = top {
            if t >= self.size {
                return Err(Error::ElementOutOfRange {
                    element: t,
                    size: self.size,
                });
            }
        }
        Ok(FiniteAlgebra { top, ..self.clone() })
    }

    /// Resolves the distinguished element: an explicit override wins over the stored top.
    pub fn resolve_top(&self, top: Option<usize>) -> Result<usize> {
        let t = top.or(self.top).ok_or(Error::MissingTop)?;
        self.check_element(t)?;
        Ok(t)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.size {
            return Err(Error::ElementOutOfRange {
                element: x,
                size: self.size,
            });
        }
        Ok(())
    }

    pub fn table(&self, op: OpId) -> &[usize] {
        &self.tables[op.0]
    }

    pub fn tables(&self) -> &[Vec<usize>] {
        &self.tables
    }

    #[inline]
    pub fn apply_op(&self, op: OpId, args: &[usize]) -> usize {
        self.apply(op.0, args)
    }

    /// Values of the nullary operations.
    pub fn constants(&self) -> impl Iterator<Item = usize> + '_ {
        self.sig
            .symbols()
            .iter()
            .zip(&self.tables)
            .filter(|(s, _)| s.arity == 0)
            .map(|(_, t)| t[0])
    }
}

impl Operations for FiniteAlgebra {
    fn carrier_size(&self) -> usize {
        self.size
    }

    fn op_count(&self) -> usize {
        self.sig.len()
    }

    fn arity(&self, op: usize) -> usize {
        self.sig.symbols[op].arity
    }

    #[inline]
    fn apply(&self, op: usize, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.sig.symbols[op].arity);
        let idx = args.iter().fold(0usize, |acc, &a| acc * self.size + a);
        self.tables[op][idx]
    }
}

/// Encodes the pair `(a, b)` of an `n`-element carrier as `a * n + b`.
#[inline]
pub fn encode_pair(n: usize, a: usize, b: usize) -> usize {
    a * n + b
}

#[inline]
pub fn decode_pair(n: usize, e: usize) -> (usize, usize) {
    (e / n, e % n)
}

/// `A × A` computed componentwise without building tables.
#[derive(Debug, Clone, Copy)]
pub struct SquareView<'a> {
    base: &'a FiniteAlgebra,
}

impl<'a> SquareView<'a> {
    pub fn new(base: &'a FiniteAlgebra) -> Self {
        SquareView { base }
    }
}

impl Operations for SquareView<'_> {
    fn carrier_size(&self) -> usize {
        self.base.size * self.base.size
    }

    fn op_count(&self) -> usize {
        self.base.sig.len()
    }

    fn arity(&self, op: usize) -> usize {
        self.base.sig.symbols[op].arity
    }

    #[inline]
    fn apply(&self, op: usize, args: &[usize]) -> usize {
        let n = self.base.size;
        let (mut left, mut right) = (0usize, 0usize);
        for &e in args {
            left = left * n + e / n;
            right = right * n + e % n;
        }
        let table = &self.base.tables[op];
        table[left] * n + table[right]
    }
}

/// Materialises `A × A` with the default carrier limit.
pub fn product_square(a: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    product_square_with_limit(a, DEFAULT_CARRIER_LIMIT)
}

/// Materialises `A × A`. The pair `(a, b)` is element `a * n + b`; every operation
/// acts componentwise; the top, if any, becomes `(top, top)`.
pub fn product_square_with_limit(a: &FiniteAlgebra, limit: usize) -> Result<FiniteAlgebra> {
    let n = a.size;
    let n2 = n.checked_mul(n).ok_or(Error::SizeOverflow {
        size: usize::MAX,
        limit,
    })?;
    if n2 > limit {
        return Err(Error::SizeOverflow { size: n2, limit });
    }
    let view = SquareView::new(a);
    let mut tables = Vec::with_capacity(a.sig.len());
    for (op, sym) in a.sig.symbols().iter().enumerate() {
        let len = checked_pow(n2, sym.arity).ok_or(Error::SizeOverflow {
            size: usize::MAX,
            limit,
        })?;
        let mut table = Vec::with_capacity(len);
        for_each_tuple(n2, sym.arity, |args| table.push(view.apply(op, args)));
        tables.push(table);
    }
    let top = a.top.map(|t| encode_pair(n, t, t));
    FiniteAlgebra::with_limit(a.sig.clone(), n2, tables, top, limit)
}

/// Calls `f` on every tuple in `{0..n}^arity`, in row-major order.
pub(crate) fn for_each_tuple(n: usize, arity: usize, mut f: impl FnMut(&[usize])) {
    let mut args = vec![0usize; arity];
    if arity == 0 {
        f(&args);
        return;
    }
    if n == 0 {
        return;
    }
    loop {
        f(&args);
        let mut pos = arity;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            args[pos] += 1;
            if args[pos] < n {
                break;
            }
            args[pos] = 0;
        }
    }
}

/// Smallest subset of `ops` containing `seed` and every constant, closed under all
/// operations.
///
/// Worklist closure: each round only evaluates argument tuples that use at least
/// one element discovered in the previous round.
pub fn generate_subalgebra<A: Operations + ?Sized>(ops: &A, seed: &ElementSet) -> ElementSet {
    let n = ops.carrier_size();
    assert_eq!(seed.carrier_size(), n, "seed lives in a different carrier");
    let mut set = seed.clone();
    let mut members: Vec<usize> = seed.iter().collect();
    for op in 0..ops.op_count() {
        if ops.arity(op) == 0 {
            let c = ops.apply(op, &[]);
            if set.insert(c) {
                members.push(c);
            }
        }
    }

    let mut args = Vec::new();
    let mut done = 0;
    while done < members.len() {
        let frontier = members.len();
        for op in 0..ops.op_count() {
            let k = ops.arity(op);
            if k == 0 {
                continue;
            }
            args.resize(k, 0);
            // Position `first_new` is the leftmost argument drawn from the frontier.
            for first_new in 0..k {
                if first_new > 0 && done == 0 {
                    break;
                }
                let ranges: Vec<(usize, usize)> = (0..k)
                    .map(|p| match p.cmp(&first_new) {
                        std::cmp::Ordering::Less => (0, done),
                        std::cmp::Ordering::Equal => (done, frontier),
                        std::cmp::Ordering::Greater => (0, frontier),
                    })
                    .collect();
                let mut idx: Vec<usize> = ranges.iter().map(|r| r.0).collect();
                'tuples: loop {
                    for (slot, &i) in args.iter_mut().zip(&idx) {
                        *slot = members[i];
                    }
                    let v = ops.apply(op, &args);
                    if set.insert(v) {
                        members.push(v);
                    }
                    let mut pos = k;
                    loop {
                        if pos == 0 {
                            break 'tuples;
                        }
                        pos -= 1;
                        idx[pos] += 1;
                        if idx[pos] < ranges[pos].1 {
                            break;
                        }
                        idx[pos] = ranges[pos].0;
                    }
                }
            }
        }
        done = frontier;
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn trivial_monoid_builds() {
        let sig = Signature::new([("+", 2), ("0", 0)]).unwrap();
        let a = FiniteAlgebra::new(sig, 1, vec![vec![0], vec![0]], None).unwrap();
        assert_eq!(a.size(), 1);
    }

    #[test]
    fn short_table_is_arity_mismatch() {
        let sig = Signature::new([("+", 2), ("0", 0)]).unwrap();
        let err = FiniteAlgebra::new(sig, 2, vec![vec![0, 1, 1], vec![0]], None).unwrap_err();
        assert_eq!(
            err,
            Error::ArityMismatch {
                symbol: "+".into(),
                expected: 4,
                found: 3
            }
        );
    }

    #[test]
    fn entry_out_of_range_is_reported() {
        let sig = Signature::new([("+", 2)]).unwrap();
        let err = FiniteAlgebra::new(sig, 2, vec![vec![0, 1, 2, 0]], None).unwrap_err();
        assert!(matches!(err, Error::ValueOutOfRange { index: 2, value: 2, .. }));
    }

    #[test]
    fn duplicate_symbols_rejected() {
        assert_eq!(
            Signature::new([("f", 1), ("f", 2)]).unwrap_err(),
            Error::DuplicateSymbol("f".into())
        );
    }

    #[test]
    fn top_must_be_in_carrier() {
        let sig = Signature::new([("0", 0)]).unwrap();
        assert!(FiniteAlgebra::new(sig, 2, vec![vec![0]], Some(2)).is_err());
    }

    #[test]
    fn boolean_semiring_tables() {
        let b = FiniteAlgebra::from_fns(
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
        .unwrap();
        let add = b.signature().lookup("add").unwrap();
        let mul = b.signature().lookup("mul").unwrap();
        assert_eq!(b.table(add), &[0, 1, 1, 1]);
        assert_eq!(b.table(mul), &[0, 0, 0, 1]);
    }

    #[test]
    fn square_of_z2_adds_componentwise() {
        let z2 = zn_monoid(2);
        let sq = product_square(&z2).unwrap();
        let add = sq.signature().lookup("add").unwrap();
        // (1,0) + (1,1) = (0,1)
        assert_eq!(sq.apply_op(add, &[2, 3]), 1);
        assert_eq!(sq.size(), 4);
        assert_eq!(sq.top(), Some(0));
    }

    #[test]
    fn square_constants_are_diagonal() {
        let z3 = zn_monoid(3);
        let sq = product_square(&z3).unwrap();
        assert_eq!(sq.constants().collect::<Vec<_>>(), vec![0]);
        let one = product_square(&zn_monoid(1)).unwrap();
        assert_eq!(one.size(), 1);
    }

    #[test]
    fn square_respects_limit() {
        let z65 = zn_monoid(65);
        assert_eq!(
            product_square(&z65).unwrap_err(),
            Error::SizeOverflow {
                size: 65 * 65,
                limit: DEFAULT_CARRIER_LIMIT
            }
        );
        assert!(product_square_with_limit(&zn_monoid(4), 15).is_err());
    }

    #[test]
    fn subalgebra_generation_in_z4() {
        let z4 = zn_monoid(4);
        assert_eq!(generate_subalgebra(&z4, &set(4, &[1])), ElementSet::full(4));
        assert_eq!(generate_subalgebra(&z4, &set(4, &[])), set(4, &[0]));
        assert_eq!(generate_subalgebra(&z4, &set(4, &[2])), set(4, &[0, 2]));
    }

    #[test]
    fn view_and_materialised_square_agree() {
        let z3 = zn_monoid(3);
        let sq = product_square(&z3).unwrap();
        let view = SquareView::new(&z3);
        for seed in crate::set::subsets_by_size(9).iter().step_by(7) {
            assert_eq!(generate_subalgebra(&sq, seed), generate_subalgebra(&view, seed));
        }
    }

    #[test]
    fn tuple_order_is_row_major() {
        let mut seen = Vec::new();
        for_each_tuple(2, 2, |a| seen.push((a[0], a[1])));
        assert_eq!(seen, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    }
}
