//! Hilbert functions that force the weak/strong Lefschetz and maximal rank
//! properties on every artinian algebra realizing them.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::macaulay::{expand, is_o_sequence, shift, t_index, HilbertFunction};

/// Why a Hilbert function fails to force a property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForcingFailure {
    /// First `i` with `h_{i-1} != ((h_i)_(i))^{-1}_{-1}`.
    Index(usize),
    /// `r > 2` and `h_t > 2`.
    SocleWidth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingVerdict {
    pub forces: bool,
    pub failure: Option<ForcingFailure>,
}

impl ForcingVerdict {
    fn holds() -> Self {
        ForcingVerdict { forces: true, failure: None }
    }

    fn fails(failure: ForcingFailure) -> Self {
        ForcingVerdict { forces: false, failure: Some(failure) }
    }
}

fn first_growth_break(h: &HilbertFunction) -> Option<usize> {
    (1..t_index(h)).find(|&i| {
        let expansion = expand(h.at(i), i).expect("h_i > i >= 1 below t");
        shift(&expansion, -1, -1) != BigUint::from(h.at(i - 1))
    })
}

/// Does every artinian algebra with Hilbert function `h` have the WLP?
pub fn forces_wlp(h: &HilbertFunction) -> Result<ForcingVerdict> {
    if !is_o_sequence(h) {
        return Err(Error::NotAnOSequence);
    }
    Ok(match first_growth_break(h) {
        Some(i) => ForcingVerdict::fails(ForcingFailure::Index(i)),
        None => ForcingVerdict::holds(),
    })
}

/// Does every artinian algebra with Hilbert function `h` have the SLP?
///
/// The same condition characterizes forcing the MRP, so one predicate serves
/// both. Codimension one is folded into the `r <= 2` case.
pub fn forces_slp_mrp(h: &HilbertFunction) -> Result<ForcingVerdict> {
    let wlp = forces_wlp(h)?;
    if h.codimension() <= 2 {
        return Ok(ForcingVerdict::holds());
    }
    if !wlp.forces {
        return Ok(wlp);
    }
    if h.at(t_index(h)) > 2 {
        return Ok(ForcingVerdict::fails(ForcingFailure::SocleWidth));
    }
    Ok(ForcingVerdict::holds())
}

/// `q_i = max(h_i - h_{i-d}, 0)` for `0 <= i <= e`: the Hilbert function of
/// `A/(F)` when multiplication by the degree-`d` form `F` has maximal rank.
pub fn expected_quotient_hf(h: &HilbertFunction, d: usize) -> Vec<u64> {
    (0..=h.socle_degree())
        .map(|i| h.at(i).saturating_sub(h.get(i as i64 - d as i64)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(v: &[u64]) -> HilbertFunction {
        HilbertFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn wlp_examples() {
        assert_eq!(forces_wlp(&hf(&[1, 3, 4, 3])).unwrap(), ForcingVerdict::holds());
        assert_eq!(
            forces_wlp(&hf(&[1, 3, 3])).unwrap(),
            ForcingVerdict::fails(ForcingFailure::Index(2))
        );
        assert!(forces_wlp(&hf(&[1])).unwrap().forces);
        assert_eq!(forces_wlp(&hf(&[1, 2, 4])), Err(Error::NotAnOSequence));
    }

    #[test]
    fn slp_mrp_examples() {
        assert!(forces_slp_mrp(&hf(&[1, 2, 3, 2, 1])).unwrap().forces);
        assert_eq!(
            forces_slp_mrp(&hf(&[1, 3, 4, 3])).unwrap(),
            ForcingVerdict::fails(ForcingFailure::SocleWidth)
        );
        assert!(forces_slp_mrp(&hf(&[1, 3, 2, 2, 1])).unwrap().forces);
        assert_eq!(
            forces_slp_mrp(&hf(&[1, 3, 3])).unwrap(),
            ForcingVerdict::fails(ForcingFailure::Index(2))
        );
        assert!(forces_slp_mrp(&hf(&[1, 2, 2])).unwrap().forces);
        assert!(forces_slp_mrp(&hf(&[1, 1, 1])).unwrap().forces);
        assert_eq!(forces_slp_mrp(&hf(&[1, 2, 4])), Err(Error::NotAnOSequence));
    }

    #[test]
    fn expected_quotients() {
        assert_eq!(expected_quotient_hf(&hf(&[1, 3, 4, 3]), 1), vec![1, 2, 1, 0]);
        assert_eq!(expected_quotient_hf(&hf(&[1, 2, 3, 2, 1]), 2), vec![1, 2, 2, 0, 0]);
        assert_eq!(expected_quotient_hf(&hf(&[1, 2, 3, 2, 1]), 5), vec![1, 2, 3, 2, 1]);
    }
}
