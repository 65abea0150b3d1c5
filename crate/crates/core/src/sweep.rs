//! Exhaustive cross-check of the SLP/MRP forcing criterion against rank tests
//! on lex-segment algebras.
//!
//! For every artinian O-sequence `H` in the bounds, the lex-segment algebra is
//! tested under `x_r^d`. That form is general for stable ideals, so the lex
//! algebra has the SLP (equivalently the MRP) exactly when every algebra with
//! Hilbert function `H` does.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classification::forces_slp_mrp;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::lefschetz::{test_property, FormStrategy, Property, Verdict};
use crate::macaulay::{macaulay_next_max, HilbertFunction};
use crate::ring::{lex_segment_ideal, GradedQuotient};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    pub max_r: u64,
    pub max_e: usize,
    pub max_h: u64,
}

/// All artinian O-sequences with `h_1 <= max_r`, socle degree `<= max_e` and
/// every value `<= max_h`, in lexicographic order of their value lists.
///
/// Fails with `ExhaustiveTooLarge` once more than `budget` sequences are found.
pub fn enumerate_o_sequences(bounds: SweepBounds, budget: u64) -> Result<Vec<HilbertFunction>> {
    fn extend(prefix: &mut Vec<u64>, bounds: &SweepBounds, budget: u64, out: &mut Vec<HilbertFunction>) -> Result<()> {
        out.push(HilbertFunction::new(prefix.clone()).expect("h_0 = 1"));
        if out.len() as u64 > budget {
            return Err(Error::ExhaustiveTooLarge { needed: out.len() as u128, budget });
        }
        let degree = prefix.len() - 1;
        if degree == bounds.max_e {
            return Ok(());
        }
        let ceiling = match degree {
            0 => bounds.max_r,
            _ => {
                let growth = macaulay_next_max(prefix[degree], degree);
                if growth < BigUint::from(bounds.max_h) {
                    growth.try_into().expect("below max_h")
                } else {
                    bounds.max_h
                }
            }
        }
        .min(bounds.max_h);
        for next in 1..=ceiling {
            prefix.push(next);
            extend(prefix, bounds, budget, out)?;
            prefix.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    extend(&mut vec![1], &bounds, budget, &mut out)?;
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub hilbert: HilbertFunction,
    pub forces: bool,
    pub wlp: Verdict,
    pub slp: Verdict,
    pub mrp: Verdict,
}

impl SweepRecord {
    /// The criterion, the lex SLP test and the lex MRP test disagree.
    pub fn mismatch(&self) -> bool {
        self.forces != self.slp.holds() || self.forces != self.mrp.holds()
    }

    /// SLP holds without MRP, or MRP holds without WLP.
    pub fn breaks_implication_chain(&self) -> bool {
        (self.slp.holds() && !self.mrp.holds()) || (self.mrp.holds() && !self.wlp.holds())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub bounds: SweepBounds,
    pub sequences: usize,
    pub forcing: usize,
    pub mismatches: usize,
    pub chain_violations: usize,
    pub records: Vec<SweepRecord>,
}

/// Classifies and rank-tests one sequence's lex-segment algebra over `QQ`.
pub fn check_sequence(h: &HilbertFunction) -> Result<SweepRecord> {
    let forces = forces_slp_mrp(h)?.forces;
    let ideal = lex_segment_ideal(h, FieldSpec::Rationals)?;
    let quotient = GradedQuotient::new(ideal, h.socle_degree() + 1)?;
    let strategy = FormStrategy::LastVariablePower;
    let run = |p| test_property(&quotient, p, &strategy).map(|r| r.verdict);
    Ok(SweepRecord {
        hilbert: h.clone(),
        forces,
        wlp: run(Property::Wlp)?,
        slp: run(Property::Slp)?,
        mrp: run(Property::Mrp)?,
    })
}

pub fn run_sweep(bounds: SweepBounds, budget: u64) -> Result<SweepSummary> {
    let sequences = enumerate_o_sequences(bounds, budget)?;
    let records = sequences.par_iter().map(check_sequence).collect::<Result<Vec<_>>>()?;
    Ok(SweepSummary {
        bounds,
        sequences: records.len(),
        forcing: records.iter().filter(|r| r.forces).count(),
        mismatches: records.iter().filter(|r| r.mismatch()).count(),
        chain_violations: records.iter().filter(|r| r.breaks_implication_chain()).count(),
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macaulay::is_o_sequence;

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let bounds = SweepBounds { max_r: 2, max_e: 3, max_h: 3 };
        let all = enumerate_o_sequences(bounds, 1000).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(is_o_sequence));
        assert!(all.iter().any(|h| h.values() == [1, 2, 3, 3]));
        assert!(!all.iter().any(|h| h.values() == [1, 2, 4]));
        assert_eq!(all[0].values(), &[1]);
    }

    #[test]
    fn enumeration_budget() {
        let bounds = SweepBounds { max_r: 3, max_e: 4, max_h: 6 };
        assert!(matches!(enumerate_o_sequences(bounds, 5), Err(Error::ExhaustiveTooLarge { .. })));
    }

    #[test]
    fn codimension_two_always_forces() {
        let summary = run_sweep(SweepBounds { max_r: 2, max_e: 4, max_h: 4 }, 10_000).unwrap();
        assert_eq!(summary.forcing, summary.sequences);
        assert_eq!(summary.mismatches, 0);
    }
}
