//! Per-algebra induction and deduction ranks by exhaustive subset enumeration.
//!
//! The rank of a single algebra is the least `n` with `I⁽ⁿ⁾ = I⁽ⁿ⁺¹⁾` for every
//! non-empty `I`. It bounds the rank of any variety containing the algebra from below.

use std::fmt;

use crate::algebra::FiniteAlgebra;
use crate::closure::{iterate, Mode};
use crate::error::{Error, Result};
use crate::set::{nonempty_subsets, ElementSet};

/// Largest carrier [`algebra_rank`] enumerates by default (65535 non-empty subsets).
pub const DEFAULT_ENUMERATION_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rank {
    Exact(usize),
    /// Some subset had not stabilised after this many steps.
    Exceeded(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub mode: Mode,
    pub rank: Rank,
    /// First subset (in size-then-mask order) attaining the rank, or the first
    /// subset that failed to stabilise.
    pub witness: ElementSet,
    /// `witness⁽⁰⁾, witness⁽¹⁾, …`; for an exact rank `r` it ends with the repeat,
    /// so `chain[r] == chain[r + 1]` is its first repeat.
    pub chain: Vec<ElementSet>,
}

impl RankResult {
    /// Whether the witness chain has its first repeat exactly at the rank.
    pub fn is_consistent(&self) -> bool {
        match self.rank {
            Rank::Exact(r) => {
                self.chain.len() == r + 2
                    && self.chain[r] == self.chain[r + 1]
                    && self.chain.windows(2).take(r).all(|w| w[0] != w[1])
            }
            Rank::Exceeded(k) => self.chain.len() == k + 1 && self.chain.windows(2).all(|w| w[0] != w[1]),
        }
    }
}

impl fmt::Display for RankResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = self.mode.short_name();
        match self.rank {
            Rank::Exact(r) => writeln!(f, "rank {mode} {r} (per-algebra)")?,
            Rank::Exceeded(k) => writeln!(f, "rank {mode} exceeded {k} (per-algebra)")?,
        }
        writeln!(f, "witness {}", self.witness)?;
        write!(f, "chain {}", format_chain(&self.chain))
    }
}

/// Stages joined by ` ⊂ `, capped at 32 with a truncation marker.
pub fn format_chain(chain: &[ElementSet]) -> String {
    const CAP: usize = 32;
    let mut parts: Vec<String> = chain.iter().take(CAP).map(|s| s.to_string()).collect();
    if chain.len() > CAP {
        parts.push(format!("… ({} more stages)", chain.len() - CAP));
    }
    parts.join(" ⊂ ")
}

pub fn algebra_rank(a: &FiniteAlgebra, top: usize, mode: Mode, max_n: usize) -> Result<RankResult> {
    algebra_rank_with_limit(a, top, mode, max_n, DEFAULT_ENUMERATION_LIMIT)
}

/// Maximum over all non-empty subsets of the step at which the chain first repeats.
pub fn algebra_rank_with_limit(
    a: &FiniteAlgebra,
    top: usize,
    mode: Mode,
    max_n: usize,
    enumeration_limit: usize,
) -> Result<RankResult> {
    if a.size() > enumeration_limit {
        return Err(Error::CarrierTooLarge {
            size: a.size(),
            limit: enumeration_limit,
        });
    }
    a.check_element(top)?;
    let mut best: Option<(usize, ElementSet, Vec<ElementSet>)> = None;
    for set in nonempty_subsets(a.size()) {
        let report = iterate(a, top, &set, mode, max_n + 1)?;
        match report.steps_to_fixpoint {
            Some(k) => {
                if best.as_ref().is_none_or(|b| k > b.0) {
                    best = Some((k, set, report.chain_with_repeat()));
                }
            }
            None => {
                return Ok(RankResult {
                    mode,
                    rank: Rank::Exceeded(max_n),
                    witness: set,
                    chain: report.chain[..=max_n].to_vec(),
                });
            }
        }
    }
    let (rank, witness, chain) = best.expect("a carrier has at least one non-empty subset");
    Ok(RankResult {
        mode,
        rank: Rank::Exact(rank),
        witness,
        chain,
    })
}
