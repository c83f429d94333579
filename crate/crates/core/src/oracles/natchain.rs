//! Deduction chain in the multiplicative monoid `(ℕ, ·, 1)` with `⊤ = 1`, computed
//! exactly over arbitrary-precision naturals.
//!
//! Seed: `I = { p_k p_{k+1} : 0 ≤ k < m }` with `p_0 = 1`. In a commutative monoid
//!
//! ```text
//! ded J = J ∪ { x : x·s ∈ J, s a product of one or more elements of J }
//! ```
//!
//! Every element produced divides an element of `J`, so every stage stays inside
//! the divisors of the seed and the infinite monoid never has to be enumerated.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A finite set of positive naturals.
pub type BigNaturalSet = BTreeSet<BigUint>;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct primes, checked by trial division.
pub fn validate_primes(primes: &[u64]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &p in primes {
        if !is_prime(p) {
            return Err(Error::InvalidPrimeList(format!("{p} is not prime")));
        }
        if !seen.insert(p) {
            return Err(Error::InvalidPrimeList(format!("{p} appears twice")));
        }
    }
    Ok(())
}

/// `p_0 = 1` followed by the given primes.
fn chain_primes(primes: &[u64]) -> Vec<BigUint> {
    std::iter::once(BigUint::from(1u32))
        .chain(primes.iter().map(|&p| BigUint::from(p)))
        .collect()
}

/// `{ p_0 p_1, …, p_{m-1} p_m }`.
pub fn nat_seed(primes: &[u64], m: usize) -> Result<BigNaturalSet> {
    check_args(primes, m)?;
    let ps = chain_primes(primes);
    Ok((0..m).map(|k| &ps[k] * &ps[k + 1]).collect())
}

fn check_args(primes: &[u64], m: usize) -> Result<()> {
    validate_primes(primes)?;
    if m < 2 {
        return Err(Error::InvalidPrimeList(format!(
            "truncation m = {m} must be at least 2"
        )));
    }
    if primes.len() < m {
        return Err(Error::InvalidPrimeList(format!(
            "truncation m = {m} needs {m} primes, got {}",
            primes.len()
        )));
    }
    Ok(())
}

fn divides(d: &BigUint, x: &BigUint) -> bool {
    (x % d) == BigUint::from(0u32)
}

/// All divisors of the seed elements, found by splitting each into the given primes.
fn divisor_universe(seed: &BigNaturalSet, primes: &[u64]) -> BigNaturalSet {
    let mut out = BigNaturalSet::new();
    for s in seed {
        let mut factors = Vec::new();
        let mut rest = s.clone();
        for &p in primes {
            let p = BigUint::from(p);
            while divides(&p, &rest) {
                factors.push(p.clone());
                rest /= &p;
            }
        }
        debug_assert_eq!(rest, BigUint::from(1u32));
        let mut divs: BTreeSet<BigUint> = [BigUint::from(1u32)].into();
        for f in &factors {
            let more: Vec<BigUint> = divs.iter().map(|d| d * f).collect();
            divs.extend(more);
        }
        out.extend(divs.into_iter().filter(|d| divides(d, s)));
    }
    out
}

/// Products of one or more elements of `set` that still divide some element of `set`.
fn bounded_products(set: &BigNaturalSet) -> BigNaturalSet {
    let mut out = set.clone();
    loop {
        let items: Vec<BigUint> = out.iter().cloned().collect();
        let mut grew = false;
        for a in &items {
            for b in &items {
                let p = a * b;
                if !out.contains(&p) && set.iter().any(|j| divides(&p, j)) {
                    out.insert(p);
                    grew = true;
                }
            }
        }
        if !grew {
            return out;
        }
    }
}

/// One deduction step in `(ℕ, ·, 1)`, with candidates drawn from `universe`.
fn ded_step(set: &BigNaturalSet, universe: &BigNaturalSet) -> BigNaturalSet {
    let products = bounded_products(set);
    let mut out = set.clone();
    for x in universe {
        if products.iter().any(|s| set.contains(&(x * s))) {
            out.insert(x.clone());
        }
    }
    out
}

/// `ded⁽⁰⁾ I ⊆ ded⁽¹⁾ I ⊆ ⋯ ⊆ ded⁽ᵈ⁾ I` for the truncated seed of length `m`.
pub fn nat_mult_deduction_chain(primes: &[u64], m: usize, depth: usize) -> Result<Vec<BigNaturalSet>> {
    let seed = nat_seed(primes, m)?;
    let universe = divisor_universe(&seed, &primes[..m]);
    let mut chain = vec![seed];
    for _ in 0..depth {
        let next = ded_step(chain.last().expect("seeded"), &universe);
        chain.push(next);
    }
    Ok(chain)
}

/// `{ p_0, …, p_{min(n+1, m)} } ∪ I`: the closed form of stage `n ≥ 1`.
///
/// Stage 0 is the seed itself; the closed form would add `p_0 = 1`, which is not
/// in `I`, so `n = 0` returns `I`.
pub fn nat_chain_closed_form(primes: &[u64], m: usize, n: usize) -> Result<BigNaturalSet> {
    let mut out = nat_seed(primes, m)?;
    if n == 0 {
        return Ok(out);
    }
    let ps = chain_primes(primes);
    out.extend(ps.into_iter().take((n + 1).min(m) + 1));
    Ok(out)
}

pub fn format_big_set(set: &BigNaturalSet) -> String {
    let items: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[u64]) -> BigNaturalSet {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    /// Brute force over all naturals up to the largest seed element, straight
    /// from the formula with products of up to `max_factors` elements.
    fn brute_ded(set: &BTreeSet<u64>, bound: u64, max_factors: usize) -> BTreeSet<u64> {
        let mut products: BTreeSet<u64> = set.clone();
        for _ in 1..max_factors {
            let more: Vec<u64> = products
                .iter()
                .flat_map(|a| set.iter().map(move |b| a * b))
                .filter(|&p| p <= bound)
                .collect();
            products.extend(more);
        }
        let mut out = set.clone();
        for x in 1..=bound {
            if products.iter().any(|s| set.contains(&(x * s))) {
                out.insert(x);
            }
        }
        out
    }

    #[test]
    fn four_primes_frozen_stages() {
        let chain = nat_mult_deduction_chain(&[2, 3, 5, 7], 4, 4).unwrap();
        assert_eq!(chain[0], big(&[2, 6, 15, 35]));
        assert_eq!(chain[1], big(&[1, 2, 3, 6, 15, 35]));
        assert_eq!(chain[2], big(&[1, 2, 3, 5, 6, 15, 35]));
        assert_eq!(chain[3], big(&[1, 2, 3, 5, 7, 6, 15, 35]));
        assert_eq!(chain[4], chain[3]);
    }

    #[test]
    fn stages_agree_with_brute_force() {
        let chain = nat_mult_deduction_chain(&[2, 3, 5, 7], 4, 4).unwrap();
        let mut cur: BTreeSet<u64> = [2, 6, 15, 35].into();
        for stage in &chain[1..] {
            cur = brute_ded(&cur, 35, 6);
            let as_big: BigNaturalSet = cur.iter().map(|&x| BigUint::from(x)).collect();
            assert_eq!(&as_big, stage);
        }
    }

    #[test]
    fn closed_form_matches() {
        for n in 0..=4 {
            let chain = nat_mult_deduction_chain(&[2, 3, 5, 7, 11], 5, 4).unwrap();
            assert_eq!(
                chain[n],
                nat_chain_closed_form(&[2, 3, 5, 7, 11], 5, n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn rejects_bad_primes() {
        assert!(matches!(
            nat_mult_deduction_chain(&[2, 4], 2, 1),
            Err(Error::InvalidPrimeList(_))
        ));
        assert!(matches!(
            nat_mult_deduction_chain(&[3, 3], 2, 1),
            Err(Error::InvalidPrimeList(_))
        ));
        assert!(matches!(
            nat_mult_deduction_chain(&[2, 3], 3, 1),
            Err(Error::InvalidPrimeList(_))
        ));
        assert!(matches!(
            nat_mult_deduction_chain(&[2, 3], 1, 1),
            Err(Error::InvalidPrimeList(_))
        ));
    }

    #[test]
    fn large_primes_stay_exact() {
        let primes = [1_000_000_007, 998_244_353, 1_000_000_009];
        let chain = nat_mult_deduction_chain(&primes, 3, 3).unwrap();
        for (n, stage) in chain.iter().enumerate() {
            assert_eq!(stage, &nat_chain_closed_form(&primes, 3, n).unwrap());
        }
    }
}
