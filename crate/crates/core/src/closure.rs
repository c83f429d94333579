//! Semicongruence and congruence generation, clots, and the ⊤-induction /
//! ⊤-deduction of sets.
//!
//! For a set `I` and distinguished element `⊤`, `R` is the smallest reflexive
//! compatible relation containing `I × {⊤}`. Then
//!
//! * `clot I = R⊤`,
//! * `ind I = RI = { x : ∃ y ∈ I, x R y }`,
//! * `ded I = IR = { x : ∃ y ∈ I, y R x }`.
//!
//! `I` is ⊤-inductive when `ind I = I` and ⊤-deductive when `ded I = I`.

use crate::algebra::{encode_pair, generate_subalgebra, FiniteAlgebra, SquareView, DEFAULT_CARRIER_LIMIT};
use crate::error::{Error, Result};
use crate::relation::{compose, left_image, opposite, right_image, BinRel};
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Induction,
    Deduction,
}

impl Mode {
    pub fn short_name(self) -> &'static str {
        match self {
            Mode::Induction => "ind",
            Mode::Deduction => "ded",
        }
    }
}

fn check_square(a: &FiniteAlgebra) -> Result<()> {
    let n2 = a.size().saturating_mul(a.size());
    if n2 > DEFAULT_CARRIER_LIMIT {
        return Err(Error::SizeOverflow {
            size: n2,
            limit: DEFAULT_CARRIER_LIMIT,
        });
    }
    Ok(())
}

/// Smallest reflexive relation containing `pairs` that is a subalgebra of `A × A`.
pub fn semicongruence_generated<I>(a: &FiniteAlgebra, pairs: I) -> Result<BinRel>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    check_square(a)?;
    let n = a.size();
    let mut seed = ElementSet::empty(n * n);
    for x in 0..n {
        seed.insert(encode_pair(n, x, x));
    }
    for (x, y) in pairs {
        a.check_element(x)?;
        a.check_element(y)?;
        seed.insert(encode_pair(n, x, y));
    }
    let support = generate_subalgebra(&SquareView::new(a), &seed);
    Ok(BinRel::from_pair_set(n, &support))
}

/// The semicongruence generated by `I × {⊤}`.
pub fn top_semicongruence(a: &FiniteAlgebra, top: usize, set: &ElementSet) -> Result<BinRel> {
    a.check_element(top)?;
    set.check_carrier(a.size())?;
    semicongruence_generated(a, set.iter().map(|y| (y, top)))
}

/// Closes a semicongruence `R` to the congruence `R ∪ R°R ∪ RR°R ∪ R°RR°R ∪ ⋯`.
///
/// Each stage prefixes the previous one with `R°` or `R` alternately. Stages grow
/// because `R` is reflexive; the loop stops once both prefixes leave the stage
/// unchanged, at which point every later stage is equal too.
pub fn congruence_from_semicongruence(r: &BinRel) -> BinRel {
    let ro = opposite(r);
    let mut stage = r.clone();
    let mut use_opposite = true;
    let mut unchanged = 0;
    while unchanged < 2 {
        let prefix = if use_opposite { &ro } else { r };
        let next = compose(prefix, &stage).expect("same carrier");
        if next == stage {
            unchanged += 1;
        } else {
            unchanged = 0;
            stage = next;
        }
        use_opposite = !use_opposite;
    }
    stage
}

/// Smallest congruence containing `pairs`.
pub fn congruence_generated<I>(a: &FiniteAlgebra, pairs: I) -> Result<BinRel>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let r = semicongruence_generated(a, pairs)?;
    Ok(congruence_from_semicongruence(&r))
}

/// Smallest ⊤-clot containing `I`: `R⊤` for `R` generated by `I × {⊤}`.
pub fn clot_closure(a: &FiniteAlgebra, top: usize, set: &ElementSet) -> Result<ElementSet> {
    let r = top_semicongruence(a, top, set)?;
    left_image(&r, &ElementSet::singleton(a.size(), top))
}

/// `ind I = RI`.
pub fn top_induction(a: &FiniteAlgebra, top: usize, set: &ElementSet) -> Result<ElementSet> {
    let r = top_semicongruence(a, top, set)?;
    left_image(&r, set)
}

/// `ded I = IR`.
pub fn top_deduction(a: &FiniteAlgebra, top: usize, set: &ElementSet) -> Result<ElementSet> {
    let r = top_semicongruence(a, top, set)?;
    right_image(&r, set)
}

pub fn apply_mode(a: &FiniteAlgebra, top: usize, set: &ElementSet, mode: Mode) -> Result<ElementSet> {
    match mode {
        Mode::Induction => top_induction(a, top, set),
        Mode::Deduction => top_deduction(a, top, set),
    }
}

/// Trace of `I⁽⁰⁾ ⊆ I⁽¹⁾ ⊆ ⋯` for induction or deduction.
///
/// `chain` holds the distinct stages. When `steps_to_fixpoint` is `Some(k)`,
/// `chain.len() == k + 1` and one more step applied to `chain[k]` returns it unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub mode: Mode,
    pub chain: Vec<ElementSet>,
    pub steps_to_fixpoint: Option<usize>,
    /// The semicongruence generated by the initial `I × {⊤}`.
    pub relation_used: BinRel,
}

impl ClosureReport {
    pub fn last(&self) -> &ElementSet {
        self.chain.last().expect("chain starts with the input set")
    }

    /// The chain with the confirming repeat appended, so that the first repeat sits
    /// at index `steps_to_fixpoint`.
    pub fn chain_with_repeat(&self) -> Vec<ElementSet> {
        let mut c = self.chain.clone();
        if self.steps_to_fixpoint.is_some() {
            c.push(self.last().clone());
        }
        c
    }
}

/// Applies induction or deduction up to `max_steps` times, regenerating `R` from the
/// current set at every step.
pub fn iterate(a: &FiniteAlgebra, top: usize, set: &ElementSet, mode: Mode, max_steps: usize) -> Result<ClosureReport> {
    let relation_used = top_semicongruence(a, top, set)?;
    let mut chain = vec![set.clone()];
    let mut steps_to_fixpoint = None;
    for step in 0..max_steps {
        let current = &chain[step];
        let next = if step == 0 {
            match mode {
                Mode::Induction => left_image(&relation_used, current)?,
                Mode::Deduction => right_image(&relation_used, current)?,
            }
        } else {
            apply_mode(a, top, current, mode)?
        };
        if &next == current {
            steps_to_fixpoint = Some(step);
            break;
        }
        chain.push(next);
    }
    Ok(ClosureReport {
        mode,
        chain,
        steps_to_fixpoint,
        relation_used,
    })
}

/// Iterates until the chain stabilises. A finite carrier of size `n` needs at most
/// `n` growing steps.
pub fn fixpoint(a: &FiniteAlgebra, top: usize, set: &ElementSet, mode: Mode) -> Result<ClosureReport> {
    iterate(a, top, set, mode, a.size() + 1)
}

/// Result of the normality test: whether `I = [⊤]_C` for the congruence `C`
/// generated by `I × {⊤}`, with that class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normality {
    pub normal: bool,
    pub class_of_top: ElementSet,
}

/// `I` is ⊤-normal iff it is the class of ⊤ in the congruence generated by `I × {⊤}`.
/// The empty set is never normal, since the class of ⊤ always contains ⊤.
pub fn is_top_normal(a: &FiniteAlgebra, top: usize, set: &ElementSet) -> Result<Normality> {
    a.check_element(top)?;
    set.check_carrier(a.size())?;
    let c = congruence_generated(a, set.iter().map(|y| (y, top)))?;
    let class_of_top = left_image(&c, &ElementSet::singleton(a.size(), top))?;
    Ok(Normality {
        normal: &class_of_top == set,
        class_of_top,
    })
}

/// Outcome of checking `RⁿI ⊆ ind⁽ⁿ⁾I ⊆ R^(2ⁿ−1)I`, the dual deduction bounds,
/// and the decompositions `ind⁽∞⁾I = ⋃ₖ RᵏI`, `ded⁽∞⁾I = ⋃ₖ IRᵏ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub n: u32,
    pub induction_lower: bool,
    pub induction_upper: bool,
    pub deduction_lower: bool,
    pub deduction_upper: bool,
    pub induction_union: bool,
    pub deduction_union: bool,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.induction_lower
            && self.induction_upper
            && self.deduction_lower
            && self.deduction_upper
            && self.induction_union
            && self.deduction_union
    }
}

/// Powers `R⁰I ⊆ R¹I ⊆ ⋯` (or the right-image dual) until they stop growing.
/// Entry `k` is `RᵏI`; the last entry is the union of all powers.
fn image_powers(r: &BinRel, set: &ElementSet, mode: Mode) -> Result<Vec<ElementSet>> {
    let mut powers = vec![set.clone()];
    loop {
        let last = powers.last().expect("nonempty");
        let next = match mode {
            Mode::Induction => left_image(r, last)?,
            Mode::Deduction => right_image(r, last)?,
        };
        // R is reflexive, so powers grow until they stabilise.
        if &next == last {
            return Ok(powers);
        }
        powers.push(next);
    }
}

fn power(powers: &[ElementSet], k: u64) -> &ElementSet {
    let idx = usize::try_from(k).unwrap_or(usize::MAX).min(powers.len() - 1);
    &powers[idx]
}

/// Checks the sandwich bounds at level `n` with `R` generated once from the original
/// `I × {⊤}`, plus the decomposition of both fixpoints.
pub fn check_sandwich(a: &FiniteAlgebra, top: usize, set: &ElementSet, n: u32) -> Result<SandwichReport> {
    let r = top_semicongruence(a, top, set)?;
    let upper_exp = if n >= 63 { u64::MAX } else { (1u64 << n) - 1 };
    let mut verdicts = [[false; 3]; 2];
    for (slot, mode) in [Mode::Induction, Mode::Deduction].into_iter().enumerate() {
        let powers = image_powers(&r, set, mode)?;
        let staged = iterate(a, top, set, mode, n as usize)?;
        let at_n = staged.last();
        let fix = fixpoint(a, top, set, mode)?;
        verdicts[slot] = [
            power(&powers, n as u64).is_subset(at_n),
            at_n.is_subset(power(&powers, upper_exp)),
            fix.last() == powers.last().expect("nonempty"),
        ];
    }
    Ok(SandwichReport {
        n,
        induction_lower: verdicts[0][0],
        induction_upper: verdicts[0][1],
        induction_union: verdicts[0][2],
        deduction_lower: verdicts[1][0],
        deduction_upper: verdicts[1][1],
        deduction_union: verdicts[1][2],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::is_compatible;

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_elements(n, xs.iter().copied()).unwrap()
    }

    fn zn_monoid(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::from_fns(
            &[("add", 2), ("zero", 0)],
            n,
            &[&|a: &[usize]| (a[0] + a[1]) % n, &|_: &[usize]| 0],
            Some(0),
        )
        .unwrap()
    }

    fn zn_ring(n: usize) -> FiniteAlgebra {
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
        .unwrap()
    }

    fn zn_group(n: usize) -> FiniteAlgebra {
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
        .unwrap()
    }

    fn boolean() -> FiniteAlgebra {
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
        .unwrap()
    }

    fn pointed(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::from_fns(&[("top", 0)], n, &[&|_: &[usize]| 0], Some(0)).unwrap()
    }

    #[test]
    fn empty_seed_gives_diagonal() {
        let z4 = zn_monoid(4);
        assert_eq!(semicongruence_generated(&z4, []).unwrap(), BinRel::diagonal(4));
        assert_eq!(congruence_generated(&z4, []).unwrap(), BinRel::diagonal(4));
        assert_eq!(congruence_generated(&z4, [(2, 2)]).unwrap(), BinRel::diagonal(4));
    }

    #[test]
    fn semicongruence_in_z4() {
        let z4 = zn_monoid(4);
        let r = semicongruence_generated(&z4, [(2, 0)]).unwrap();
        for p in [(2, 0), (3, 1), (0, 2), (1, 3), (0, 0)] {
            assert!(r.contains(p.0, p.1), "{p:?}");
        }
        assert_eq!(left_image(&r, &set(4, &[0])).unwrap(), set(4, &[0, 2]));
        assert!(r.is_reflexive());
        assert!(is_compatible(&z4, &r).unwrap());
    }

    #[test]
    fn pointed_set_semicongruence_is_seed_plus_diagonal() {
        let p = pointed(3);
        let r = semicongruence_generated(&p, [(1, 0)]).unwrap();
        let expected = BinRel::from_pairs(3, [(0, 0), (1, 1), (2, 2), (1, 0)]).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn congruence_classes_in_z4() {
        let z4 = zn_monoid(4);
        let c = congruence_generated(&z4, [(2, 0)]).unwrap();
        assert!(c.is_equivalence());
        assert_eq!(c.classes(), vec![set(4, &[0, 2]), set(4, &[1, 3])]);
    }

    #[test]
    fn clot_examples() {
        let z4 = zn_ring(4);
        assert_eq!(clot_closure(&z4, 0, &set(4, &[])).unwrap(), set(4, &[0]));
        assert_eq!(clot_closure(&z4, 0, &set(4, &[2])).unwrap(), set(4, &[0, 2]));
        assert_eq!(clot_closure(&boolean(), 0, &set(2, &[1])).unwrap(), set(2, &[0, 1]));
    }

    #[test]
    fn induction_examples() {
        let z4 = zn_monoid(4);
        assert_eq!(top_induction(&z4, 0, &set(4, &[0])).unwrap(), set(4, &[0]));
        assert_eq!(
            top_induction(&zn_monoid(3), 0, &set(3, &[1])).unwrap(),
            ElementSet::full(3)
        );
        assert_eq!(top_induction(&boolean(), 0, &set(2, &[1])).unwrap(), set(2, &[1]));
        assert!(top_induction(&z4, 0, &set(4, &[])).unwrap().is_empty());
    }

    #[test]
    fn deduction_examples() {
        let z4 = zn_monoid(4);
        assert_eq!(top_deduction(&z4, 0, &set(4, &[0])).unwrap(), set(4, &[0]));
        assert_eq!(top_deduction(&boolean(), 0, &set(2, &[1])).unwrap(), set(2, &[0, 1]));
        assert_eq!(top_deduction(&zn_group(4), 0, &set(4, &[2])).unwrap(), set(4, &[0, 2]));
        assert!(top_deduction(&z4, 0, &set(4, &[])).unwrap().is_empty());
    }

    #[test]
    fn iterate_reports_fixpoints() {
        let z4 = zn_monoid(4);
        let r = iterate(&z4, 0, &set(4, &[0, 2]), Mode::Induction, 5).unwrap();
        assert_eq!(r.chain, vec![set(4, &[0, 2])]);
        assert_eq!(r.steps_to_fixpoint, Some(0));

        let r = iterate(&z4, 0, &set(4, &[]), Mode::Deduction, 5).unwrap();
        assert_eq!(r.chain, vec![set(4, &[])]);
        assert_eq!(r.steps_to_fixpoint, Some(0));

        let r = iterate(&boolean(), 0, &set(2, &[1]), Mode::Deduction, 5).unwrap();
        assert_eq!(r.chain, vec![set(2, &[1]), set(2, &[0, 1])]);
        assert_eq!(r.steps_to_fixpoint, Some(1));
        assert_eq!(r.chain_with_repeat().len(), 3);
    }

    #[test]
    fn iterate_without_budget_reaches_nothing() {
        let r = iterate(&boolean(), 0, &set(2, &[1]), Mode::Deduction, 0).unwrap();
        assert_eq!(r.chain.len(), 1);
        assert_eq!(r.steps_to_fixpoint, None);
        let r = iterate(&boolean(), 0, &set(2, &[1]), Mode::Deduction, 1).unwrap();
        assert_eq!(r.steps_to_fixpoint, None);
        assert_eq!(r.chain.len(), 2);
    }

    #[test]
    fn normality_examples() {
        let p = pointed(3);
        assert!(is_top_normal(&p, 0, &set(3, &[0])).unwrap().normal);

        let b = is_top_normal(&boolean(), 0, &set(2, &[1])).unwrap();
        assert!(!b.normal);
        assert_eq!(b.class_of_top, set(2, &[0, 1]));

        assert!(is_top_normal(&zn_ring(4), 0, &set(4, &[0, 2])).unwrap().normal);
        let empty = is_top_normal(&zn_ring(4), 0, &set(4, &[])).unwrap();
        assert!(!empty.normal);
        assert_eq!(empty.class_of_top, set(4, &[0]));
    }

    #[test]
    fn sandwich_small_cases() {
        let b = boolean();
        for n in 0..4 {
            assert!(check_sandwich(&b, 0, &set(2, &[1]), n).unwrap().holds(), "n={n}");
        }
        let z4 = zn_monoid(4);
        // At n = 1 both bounds are RI, so ind I must equal it.
        let i = set(4, &[1]);
        let r = top_semicongruence(&z4, 0, &i).unwrap();
        assert_eq!(top_induction(&z4, 0, &i).unwrap(), left_image(&r, &i).unwrap());
        assert!(check_sandwich(&z4, 0, &i, 1).unwrap().holds());
        assert!(check_sandwich(&z4, 0, &i, 40).unwrap().holds());
    }

    #[test]
    fn missing_element_errors() {
        let z4 = zn_monoid(4);
        assert!(top_induction(&z4, 4, &set(4, &[1])).is_err());
        assert!(top_induction(&z4, 0, &set(3, &[1])).is_err());
        assert!(semicongruence_generated(&z4, [(0, 9)]).is_err());
    }

    #[test]
    fn oversized_square_is_rejected() {
        let big = FiniteAlgebra::from_fns(&[("top", 0)], 65, &[&|_: &[usize]| 0], Some(0)).unwrap();
        assert!(matches!(
            semicongruence_generated(&big, []),
            Err(Error::SizeOverflow { .. })
        ));
    }
}
