//! Upper bound for the Hilbert function of `A/(F)` with `F` a general form of
//! degree `d`:
//!
//! ```text
//! H(A/F, p) <= sum_{0 <= c < d} H(A, p)_((p, c))      for p >= d
//! ```
//!
//! and the vanishing of that sum when `H(A, p) <= 2` and `p > d`, which is what
//! makes `x F` surjective onto small graded pieces.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lefschetz::{general_forms, FormStrategy};
use crate::macaulay::{double_bracket, HilbertFunction};
use crate::ring::{hilbert_function, GradedQuotient};

/// `sum_{c=0}^{d-1} (h_p)_((p, c))`, zero when `h_p = 0`.
pub fn hp_upper_bound(h: &HilbertFunction, p: usize, d: usize) -> Result<BigUint> {
    if d == 0 || p < d {
        return Err(Error::DegreeBelowForm { p, d });
    }
    bracket_sum(h.at(p), p, d)
}

fn bracket_sum(n: u64, p: usize, d: usize) -> Result<BigUint> {
    if n == 0 {
        return Ok(BigUint::zero());
    }
    (0..d).map(|c| double_bracket(n, p, c)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCell {
    pub n: u64,
    pub p: usize,
    pub d: usize,
    pub value: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct KeyIdentityScan {
    /// Cells with `n <= 2`, `1 <= d < p` where the sum is nonzero.
    pub counterexamples: Vec<IdentityCell>,
    /// Cells with `n = 3` where the sum is nonzero (informational).
    pub witnesses: Vec<IdentityCell>,
}

/// Scans `n in 1..=min(n_max, 2)`, `1 <= d < p <= p_max` for nonzero bracket
/// sums, and records the nonzero `n = 3` cells over the same `(p, d)` grid.
pub fn verify_key_identity(n_max: u64, p_max: usize) -> KeyIdentityScan {
    let mut scan = KeyIdentityScan::default();
    for p in 2..=p_max {
        for d in 1..p {
            for n in 1..=n_max.min(2) {
                let value = bracket_sum(n, p, d).expect("c < d <= p");
                if !value.is_zero() {
                    scan.counterexamples.push(IdentityCell { n, p, d, value });
                }
            }
            let value = bracket_sum(3, p, d).expect("c < d <= p");
            if !value.is_zero() {
                scan.witnesses.push(IdentityCell { n: 3, p, d, value });
            }
        }
    }
    scan
}

/// Checks `H(R/(I,F), p) <= hp_upper_bound(H(A), p, d)` for `d <= p <= e` and
/// every strategy-produced degree-`d` form `F`. `R/(I,F)` is computed from its
/// own slice spans.
pub fn verify_hp_theorem(quotient: &GradedQuotient, d: usize, strategy: &FormStrategy) -> Result<bool> {
    let e = quotient.socle_degree();
    if d == 0 || d > e {
        return Err(Error::DegreeBelowForm { p: e, d });
    }
    let h = quotient.hilbert();
    for f in general_forms(quotient, d, strategy)? {
        let cut = hilbert_function(&quotient.ideal().with_generator(f)?, e + 1)?;
        for p in d..=e {
            if BigUint::from(cut.at(p)) > hp_upper_bound(h, p, d)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::GradedIdeal;

    fn single(n: u64, p: usize) -> HilbertFunction {
        let mut v = vec![1; p + 1];
        v[p] = n;
        HilbertFunction::new(v).unwrap()
    }

    #[test]
    fn bound_values() {
        for p in 2..8 {
            for d in 1..p {
                assert_eq!(hp_upper_bound(&single(1, p), p, d).unwrap(), BigUint::zero());
                assert_eq!(hp_upper_bound(&single(2, p), p, d).unwrap(), BigUint::zero());
            }
        }
        assert_eq!(hp_upper_bound(&single(3, 3), 3, 2).unwrap(), BigUint::from(1u32));
        let h = HilbertFunction::new(vec![1, 3, 4, 3]).unwrap();
        assert_eq!(hp_upper_bound(&h, 1, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(hp_upper_bound(&h, 2, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(hp_upper_bound(&h, 5, 2).unwrap(), BigUint::zero());
        assert!(matches!(hp_upper_bound(&h, 1, 2), Err(Error::DegreeBelowForm { p: 1, d: 2 })));
    }

    #[test]
    fn identity_scan() {
        let scan = verify_key_identity(2, 30);
        assert!(scan.counterexamples.is_empty());
        assert!(scan
            .witnesses
            .iter()
            .any(|w| (w.n, w.p, w.d) == (3, 3, 2) && w.value == BigUint::from(1u32)));
    }

    #[test]
    fn theorem_on_small_ideals() {
        let q = FieldSpec::Rationals;
        let ci = GradedQuotient::new(GradedIdeal::parse(2, q, &["x1^2", "x2^2"]).unwrap(), 10).unwrap();
        assert!(verify_hp_theorem(&ci, 1, &FormStrategy::random(3)).unwrap());
        assert!(verify_hp_theorem(&ci, 2, &FormStrategy::random(3)).unwrap());
    }
}
