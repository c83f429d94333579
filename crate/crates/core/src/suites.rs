//! Named verification suites. Each runs an exhaustive check over the catalog
//! (plus any caller algebras) and reports every failing case.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::algebra::{generate_subalgebra, FiniteAlgebra};
use crate::catalog::{build_catalog, CatalogEntry, Family};
use crate::closure::{
    check_sandwich, clot_closure, fixpoint, is_top_normal, semicongruence_generated, top_deduction, top_induction,
    top_semicongruence, Mode,
};
use crate::error::{Error, Result};
use crate::oracles::{
    is_jonsson_tarski_term, is_maltsev_term, is_submonoid, is_subtractive, is_subtractive_ideal, is_subtractive_term,
    monoid_ded_formula, nat_chain_closed_form, nat_mult_deduction_chain, semiring_ded_oracle, semiring_ind_oracle,
    submonoid_ded_formula, subsemigroup_generated, SemiringView,
};
use crate::rank::{algebra_rank, Rank, RankResult};
use crate::relation::compose;
use crate::set::{nonempty_subsets, subsets_by_size, ElementSet};
use crate::term::{stable_term_images, term_clot, term_deduction, term_induction, term_pairs};

pub const SUITE_NAMES: [&str; 12] = [
    "theorem-a",
    "theorem-b",
    "theorem-c",
    "clot-idempotent",
    "term-oracle",
    "semiring",
    "comm-monoid",
    "maltsev",
    "subtractive",
    "jonsson-tarski",
    "rank0",
    "nat-chain",
];

/// Largest carrier the term-enumeration comparison runs on.
pub const TERM_ORACLE_LIMIT: usize = 4;

/// Levels checked by the sandwich suite.
pub const SANDWICH_LEVELS: [u32; 4] = [0, 1, 2, 3];

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Largest catalog carrier.
    pub limit: usize,
    /// Primes for the multiplicative chain; the truncation is their count.
    pub primes: Vec<u64>,
    /// Extra algebras run alongside the catalog.
    pub extra: Vec<CatalogEntry>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            limit: 4,
            primes: vec![2, 3, 5, 7, 11],
            extra: Vec::new(),
        }
    }
}

impl SuiteConfig {
    pub fn with_limit(limit: usize) -> Self {
        SuiteConfig {
            limit,
            ..SuiteConfig::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub algebra: String,
    pub top: usize,
    pub subset: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "  {} algebra={} top={} set={} expected={} actual={}",
            self.check, self.algebra, self.top, self.subset, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `PASS name cases failures`, then one indented line per failure.
impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {} {}", self.name, self.cases, self.failures.len())?;
        for failure in &self.failures {
            write!(f, "\n{failure}")?;
        }
        Ok(())
    }
}

/// Cases and failures for one algebra.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.cases += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        check: &str,
        e: &CatalogEntry,
        top: usize,
        subset: &dyn fmt::Display,
        expected: &T,
        actual: &T,
    ) {
        self.check(expected == actual, || Failure {
            check: check.to_string(),
            algebra: e.name.clone(),
            top,
            subset: subset.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn expect(
        &mut self,
        check: &str,
        e: &CatalogEntry,
        top: usize,
        subset: &dyn fmt::Display,
        ok: bool,
        actual: String,
    ) {
        self.check(ok, || Failure {
            check: check.to_string(),
            algebra: e.name.clone(),
            top,
            subset: subset.to_string(),
            expected: "true".to_string(),
            actual,
        });
    }
}

fn show_rank(r: &RankResult) -> String {
    match r.rank {
        Rank::Exact(k) => format!("{k}@{}", r.witness),
        Rank::Exceeded(k) => format!(">{k}@{}", r.witness),
    }
}

/// Rank in `mode` is at most `bound`, with a consistent witness chain.
fn rank_at_most(t: &mut Tally, check: &str, e: &CatalogEntry, top: usize, mode: Mode, bound: usize) -> Result<()> {
    let r = algebra_rank(&e.algebra, top, mode, bound + 1)?;
    let ok = matches!(r.rank, Rank::Exact(k) if k <= bound) && r.is_consistent();
    t.expect(check, e, top, &mode.short_name(), ok, show_rank(&r));
    Ok(())
}

fn theorem_a(e: &CatalogEntry) -> Result<Tally> {
    let a = &e.algebra;
    let mut t = Tally::default();
    for top in 0..a.size() {
        for i in nonempty_subsets(a.size()) {
            let normal = is_top_normal(a, top, &i)?.normal;
            let fixed = top_induction(a, top, &i)? == i && top_deduction(a, top, &i)? == i;
            t.expect_eq("normal-iff-ind-and-ded", e, top, &i, &normal, &fixed);
        }
    }
    Ok(t)
}

/// Both directions of `⟨⊤⟩ ⊆ I ⇔ ⟨I⟩ ⊆ ind I` for non-empty `I`, reported as
/// separate checks. Only the forward direction holds in general: in `(ℤ₂, +, 0)`
/// the set `{1}` misses `⟨0⟩ = {0}` while `ind {1} = ℤ₂`.
fn theorem_b(e: &CatalogEntry) -> Result<Tally> {
    let a = &e.algebra;
    let mut t = Tally::default();
    for top in 0..a.size() {
        let top_sub = generate_subalgebra(a, &ElementSet::singleton(a.size(), top));
        for i in nonempty_subsets(a.size()) {
            let generated = generate_subalgebra(a, &i);
            let ind = top_induction(a, top, &i)?;
            let (left, right) = (top_sub.is_subset(&i), generated.is_subset(&ind));
            let (check, expected) = if left {
                ("top-subalgebra-gives-containment", "ind⊇⟨I⟩")
            } else {
                ("containment-needs-top-subalgebra", "ind⊉⟨I⟩")
            };
            t.check(left == right, || Failure {
                check: check.to_string(),
                algebra: e.name.clone(),
                top,
                subset: i.to_string(),
                expected: format!("{expected}(⟨⊤⟩={top_sub})"),
                actual: format!("ind={ind},⟨I⟩={generated}"),
            });
        }
    }
    Ok(t)
}

fn theorem_c(e: &CatalogEntry) -> Result<Tally> {
    let a = &e.algebra;
    let mut t = Tally::default();
    for top in 0..a.size() {
        for i in nonempty_subsets(a.size()) {
            for n in SANDWICH_LEVELS {
                let r = check_sandwich(a, top, &i, n)?;
                t.expect(&format!("sandwich-n{n}"), e, top, &i, r.holds(), format!("{r:?}"));
            }
        }
    }
    Ok(t)
}

fn clot_idempotent(e: &CatalogEntry) -> Result<Tally> {
    let a = &e.algebra;
    let mut t = Tally::default();
    for top in 0..a.size() {
        for i in subsets_by_size(a.size()) {
            let c = clot_closure(a, top, &i)?;
            t.expect("clot-contains-set", e, top, &i, i.is_subset(&c), c.to_string());
            t.expect_eq("clot-idempotent", e, top, &i, &c, &clot_closure(a, top, &c)?);
        }
    }
    Ok(t)
}

fn term_oracle(e: &CatalogEntry) -> Result<Tally> {
    let a = &e.algebra;
    let mut t = Tally::default();
    if a.size() > TERM_ORACLE_LIMIT {
        return Ok(t);
    }
    let n = a.size();
    for i in subsets_by_size(n) {
        let (terms, _) = stable_term_images(a, &i);
        t.expect_eq("subalgebra-by-terms", e, 0, &i, &terms, &generate_subalgebra(a, &i));
    }
    for top in 0..n {
        for i in subsets_by_size(n) {
            let r = top_semicongruence(a, top, &i)?;
            let from_terms = term_pairs(a, top, &i);
            let engine: std::collections::BTreeSet<(usize, usize)> = r.pairs().collect();
            t.check(engine == from_terms, || Failure {
                check: "semicongruence-by-terms".into(),
                algebra: e.name.clone(),
                top,
                subset: i.to_string(),
                expected: format!("{from_terms:?}"),
                actual: format!("{engine:?}"),
            });
            t.expect_eq(
                "ind-by-terms",
                e,
                top,
                &i,
                &term_induction(a, top, &i),
                &top_induction(a, top, &i)?,
            );
            t.expect_eq(
                "ded-by-terms",
                e,
                top,
                &i,
                &term_deduction(a, top, &i),
                &top_deduction(a, top, &i)?,
            );
            t.expect_eq(
                "clot-by-terms",
                e,
                top,
                &i,
                &term_clot(a, top, &i),
                &clot_closure(a, top, &i)?,
            );
        }
    }
    Ok(t)
}

fn semiring(e: &CatalogEntry) -> Result<Tally> {
    let mut t = Tally::default();
    let Some(sym) = e.semiring else { return Ok(t) };
    let a = &e.algebra;
    let s = SemiringView::new(a, sym.add, sym.mul, sym.zero, sym.one)?;
    let top = s.zero();
    for i in subsets_by_size(a.size()) {
        let ind = top_induction(a, top, &i)?;
        let ded = top_deduction(a, top, &i)?;
        t.expect_eq("ind-is-I+ideal", e, top, &i, &semiring_ind_oracle(&s, &i), &ind);
        t.expect_eq("ded-formula", e, top, &i, &semiring_ded_oracle(&s, &i), &ded);
        t.expect_eq("ind-idempotent", e, top, &i, &ind, &top_induction(a, top, &ind)?);
        t.expect_eq("ded-idempotent", e, top, &i, &ded, &top_deduction(a, top, &ded)?);
        let r = top_semicongruence(a, top, &i)?;
        let rr = compose(&r, &r)?;
        t.expect(
            "relation-transitive",
            e,
            top,
            &i,
            rr == r,
            format!("{} pairs in R·R vs {}", rr.len(), r.len()),
        );
        if !i.is_empty() {
            let normal = is_top_normal(a, top, &i)?.normal;
            t.expect_eq(
                "normal-iff-subtractive-ideal",
                e,
                top,
                &i,
                &is_subtractive_ideal(&s, &i),
                &normal,
            );
        }
    }
    rank_at_most(&mut t, "rank-ind<=1", e, top, Mode::Induction, 1)?;
    rank_at_most(&mut t, "rank-ded<=1", e, top, Mode::Deduction, 1)?;
    Ok(t)
}

fn comm_monoid(e: &CatalogEntry) -> Result<Tally> {
    let mut t = Tally::default();
    let Some(add) = e.monoid_add else { return Ok(t) };
    let a = &e.algebra;
    let top = e.top();
    for i in nonempty_subsets(a.size()) {
        let ind = top_induction(a, top, &i)?;
        let ded = top_deduction(a, top, &i)?;
        t.expect_eq(
            "ind-is-subsemigroup",
            e,
            top,
            &i,
            &subsemigroup_generated(a, add, &i)?,
            &ind,
        );
        t.expect_eq("ind-idempotent", e, top, &i, &ind, &top_induction(a, top, &ind)?);
        t.expect_eq("ded-formula", e, top, &i, &monoid_ded_formula(a, add, &i)?, &ded);
        if is_submonoid(a, add, top, &i)? {
            t.expect_eq(
                "submonoid-ded-formula",
                e,
                top,
                &i,
                &submonoid_ded_formula(a, add, &i)?,
                &ded,
            );
            t.expect_eq(
                "deductive-iff-subtractive",
                e,
                top,
                &i,
                &is_subtractive(a, add, &i)?,
                &(ded == i),
            );
        }
    }
    rank_at_most(&mut t, "rank-ind<=1", e, top, Mode::Induction, 1)?;
    Ok(t)
}

/// Verified condition terms, or `None` when the candidate is absent or fails.
fn verified(e: &CatalogEntry) -> Result<(bool, bool, bool)> {
    let a = &e.algebra;
    let top = e.top();
    let m = match &e.maltsev {
        Some(p) => is_maltsev_term(a, p)?,
        None => false,
    };
    let s = match &e.subtraction {
        Some(s) => is_subtractive_term(a, s, top)?,
        None => false,
    };
    let u = match &e.jonsson_tarski {
        Some(u) => is_jonsson_tarski_term(a, u, top)?,
        None => false,
    };
    Ok((m, s, u))
}

/// All sets of at most `k` pairs over an `n`-element carrier.
fn small_pair_sets(n: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), 0usize)];
    for _ in 0..k {
        let mut next = Vec::new();
        for (set, from) in &frontier {
            for (idx, &p) in pairs.iter().enumerate().skip(*from) {
                let mut grown: Vec<(usize, usize)> = set.clone();
                grown.push(p);
                out.push(grown.clone());
                next.push((grown, idx + 1));
            }
        }
        frontier = next;
    }
    out
}

fn maltsev(e: &CatalogEntry) -> Result<Tally> {
    let mut t = Tally::default();
    if !verified(e)?.0 {
        return Ok(t);
    }
    let a = &e.algebra;
    let top = e.top();
    for i in subsets_by_size(a.size()) {
        t.expect_eq(
            "ind-equals-ded",
            e,
            top,
            &i,
            &top_induction(a, top, &i)?,
            &top_deduction(a, top, &i)?,
        );
    }
    for pairs in small_pair_sets(a.size(), 2) {
        let r = semicongruence_generated(a, pairs.iter().copied())?;
        let shown = format!("{pairs:?}").replace(' ', "");
        t.expect(
            "semicongruence-is-congruence",
            e,
            top,
            &shown,
            r.is_equivalence(),
            format!("{} pairs", r.len()),
        );
    }
    rank_at_most(&mut t, "rank-ind<=1", e, top, Mode::Induction, 1)?;
    rank_at_most(&mut t, "rank-ded<=1", e, top, Mode::Deduction, 1)?;
    Ok(t)
}

fn subtractive(e: &CatalogEntry) -> Result<Tally> {
    let mut t = Tally::default();
    if !verified(e)?.1 {
        return Ok(t);
    }
    let a = &e.algebra;
    let top = e.top();
    for i in nonempty_subsets(a.size()) {
        let ind = fixpoint(a, top, &i, Mode::Induction)?;
        let ded = fixpoint(a, top, &i, Mode::Deduction)?;
        let clot = clot_closure(a, top, &i)?;
        t.expect_eq("ind-fixpoint-is-clot", e, top, &i, &clot, ind.last());
        t.expect_eq("ded-fixpoint-is-clot", e, top, &i, &clot, ded.last());
    }
    rank_at_most(&mut t, "rank-ind<=2", e, top, Mode::Induction, 2)?;
    rank_at_most(&mut t, "rank-ded<=2", e, top, Mode::Deduction, 2)?;
    Ok(t)
}

fn jonsson_tarski(e: &CatalogEntry) -> Result<Tally> {
    let mut t = Tally::default();
    let (_, s, u) = verified(e)?;
    if !(s && u) {
        return Ok(t);
    }
    let top = e.top();
    rank_at_most(&mut t, "rank-ind<=1", e, top, Mode::Induction, 1)?;
    rank_at_most(&mut t, "rank-ded<=1", e, top, Mode::Deduction, 1)?;
    Ok(t)
}

fn rank0(e: &CatalogEntry) -> Result<Tally> {
    let mut t = Tally::default();
    if e.family != Family::PointedSet {
        return Ok(t);
    }
    let a = &e.algebra;
    let top = e.top();
    for i in subsets_by_size(a.size()) {
        t.expect_eq("ind-is-identity", e, top, &i, &i, &top_induction(a, top, &i)?);
        if !i.is_empty() {
            let mut with_top = i.clone();
            with_top.insert(top);
            t.expect_eq("ded-adds-top", e, top, &i, &with_top, &top_deduction(a, top, &i)?);
        }
    }
    let expected_ded = usize::from(a.size() >= 2);
    for (mode, expected) in [(Mode::Induction, 0), (Mode::Deduction, expected_ded)] {
        let r = algebra_rank(a, top, mode, 3)?;
        let ok = r.rank == Rank::Exact(expected) && r.is_consistent();
        t.expect(
            &format!("rank-{}={expected}", mode.short_name()),
            e,
            top,
            &mode.short_name(),
            ok,
            show_rank(&r),
        );
    }
    Ok(t)
}

fn nat_chain(primes: &[u64]) -> Result<Tally> {
    let mut t = Tally::default();
    let m = primes.len();
    let chain = nat_mult_deduction_chain(primes, m, m)?;
    let entry_name = format!("nat-mult{primes:?}").replace(' ', "");
    let fail = |check: &str, n: usize, expected: String, actual: String| Failure {
        check: check.to_string(),
        algebra: entry_name.clone(),
        top: 1,
        subset: format!("stage{n}"),
        expected,
        actual,
    };
    use crate::oracles::format_big_set as show;
    for (n, stage) in chain.iter().enumerate() {
        let expected = nat_chain_closed_form(primes, m, n)?;
        t.check(stage == &expected, || {
            fail("closed-form", n, show(&expected), show(stage))
        });
    }
    for n in 0..m - 1 {
        let (a, b) = (&chain[n], &chain[n + 1]);
        t.check(b.len() > a.len() && a.is_subset(b), || {
            fail("strict-growth", n, format!(">{}", a.len()), b.len().to_string())
        });
    }
    t.check(chain[m] == chain[m - 1], || {
        fail("truncation-fixpoint", m, show(&chain[m - 1]), show(&chain[m]))
    });
    let seed = &chain[0];
    for (n, stage) in chain.iter().enumerate() {
        let confined = stage.iter().all(|x| seed.iter().any(|s| (s % x).bits() == 0));
        t.check(confined, || fail("divides-seed", n, "true".into(), "false".into()));
    }
    Ok(t)
}

type EntryCheck = fn(&CatalogEntry) -> Result<Tally>;

fn entry_check(name: &str) -> Option<EntryCheck> {
    Some(match name {
        "theorem-a" => theorem_a,
        "theorem-b" => theorem_b,
        "theorem-c" => theorem_c,
        "clot-idempotent" => clot_idempotent,
        "term-oracle" => term_oracle,
        "semiring" => semiring,
        "comm-monoid" => comm_monoid,
        "maltsev" => maltsev,
        "subtractive" => subtractive,
        "jonsson-tarski" => jonsson_tarski,
        "rank0" => rank0,
        _ => return None,
    })
}

/// Runs `check` on every entry in parallel; the result keeps entry order.
fn run_entries(entries: &[CatalogEntry], check: EntryCheck) -> Result<Tally> {
    let parts: Vec<Result<Tally>> = entries.par_iter().map(check).collect();
    let mut total = Tally::default();
    for part in parts {
        let part = part?;
        total.cases += part.cases;
        total.failures.extend(part.failures);
    }
    Ok(total)
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let tally = if name == "nat-chain" {
        nat_chain(&config.primes)?
    } else {
        let check = entry_check(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
        let mut entries = build_catalog(config.limit);
        for extra in &config.extra {
            if extra.algebra.size() > crate::rank::DEFAULT_ENUMERATION_LIMIT {
                return Err(Error::CarrierTooLarge {
                    size: extra.algebra.size(),
                    limit: crate::rank::DEFAULT_ENUMERATION_LIMIT,
                });
            }
        }
        entries.extend(config.extra.iter().cloned());
        run_entries(&entries, check)?
    };
    Ok(SuiteReport {
        name: name.to_string(),
        cases: tally.cases,
        failures: tally.failures,
        elapsed: start.elapsed(),
    })
}

/// Every suite in [`SUITE_NAMES`] order.
pub fn run_all(config: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    SUITE_NAMES.iter().map(|name| run_suite(name, config)).collect()
}

/// Wraps a caller algebra for [`SuiteConfig::extra`].
pub fn user_entry(name: &str, algebra: FiniteAlgebra) -> Result<CatalogEntry> {
    CatalogEntry::user(name, algebra)
}
