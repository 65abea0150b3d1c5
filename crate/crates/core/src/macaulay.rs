//! Binomial expansions and Macaulay's growth bound.
//!
//! Every positive integer `n` has a unique `d`-binomial expansion
//!
//! ```text
//! n = C(n_d, d) + C(n_{d-1}, d-1) + ... + C(n_j, j),   n_d > n_{d-1} > ... > n_j >= j >= 1
//! ```
//!
//! and the operators on it ([`shift`], [`double_bracket`]) drive both the
//! O-sequence test and the bounds in [`crate::hp_bounds`]. All values are
//! unbounded integers: `C(n_d, d)` leaves `u64` quickly.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Binomial coefficient with the convention `C(m, n) = 0` whenever `m < n` or `n < 0`.
pub fn binom_ext(m: impl Into<BigInt>, n: i64) -> BigUint {
    let m: BigInt = m.into();
    if n < 0 || m < BigInt::from(n) {
        return BigUint::zero();
    }
    // m >= n >= 0; use the smaller of n and m - n.
    let complement = &m - n;
    let k = match complement.to_i64() {
        Some(c) if c < n => c,
        _ => n,
    };
    let m = m.to_biguint().expect("m >= n >= 0");
    let mut acc = BigUint::one();
    for i in 0..k as u64 {
        acc *= &m - i;
        acc /= i + 1;
    }
    acc
}

/// One summand `C(top, bottom)` of a binomial expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinomialTerm {
    pub top: BigUint,
    pub bottom: usize,
}

/// The `d`-binomial expansion of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinomialExpansion {
    degree: usize,
    terms: Vec<BinomialTerm>,
}

impl BinomialExpansion {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Terms with bottoms `d, d-1, ..., j`.
    pub fn terms(&self) -> &[BinomialTerm] {
        &self.terms
    }

    /// The lowest bottom index `j`.
    pub fn lowest_index(&self) -> usize {
        self.terms.last().map(|t| t.bottom).expect("expansions are non-empty")
    }

    /// The top `n_k` of the term with bottom `k`, if present.
    pub fn top_at(&self, k: usize) -> Option<&BigUint> {
        if k > self.degree {
            return None;
        }
        self.terms.get(self.degree - k).map(|t| &t.top)
    }

    /// The integer this expansion represents.
    pub fn value(&self) -> BigUint {
        shift(self, 0, 0)
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "C({},{})", t.top, t.bottom)?;
        }
        Ok(())
    }
}

/// Greedy `d`-binomial expansion of `n`.
pub fn expand(n: impl Into<BigUint>, d: usize) -> Result<BinomialExpansion> {
    let n: BigUint = n.into();
    if n.is_zero() || d == 0 {
        return Err(Error::InvalidExpansion { n: n.to_string(), d });
    }
    let mut rem = n;
    let mut terms = Vec::new();
    for k in (1..=d).rev() {
        if rem.is_zero() {
            break;
        }
        let top = largest_top(&rem, k);
        rem -= binom_ext(BigInt::from(top.clone()), k as i64);
        terms.push(BinomialTerm { top, bottom: k });
    }
    debug_assert!(rem.is_zero());
    Ok(BinomialExpansion { degree: d, terms })
}

/// Largest `m` with `C(m, k) <= n`, for `n >= 1`.
fn largest_top(n: &BigUint, k: usize) -> BigUint {
    let c = |m: &BigUint| binom_ext(BigInt::from(m.clone()), k as i64);
    let lo_base = BigUint::from(k);
    // C(k + step, k) grows at least linearly in step, so doubling terminates.
    let mut step = BigUint::one();
    while c(&(&lo_base + &step)) <= *n {
        step <<= 1;
    }
    // Invariant: C(lo, k) <= n < C(hi, k).
    let mut lo = lo_base.clone() + (&step >> 1);
    let mut hi = lo_base + step;
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1;
        if c(&mid) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `(n_(d))^a_b = sum over terms of C(n_k + a, k + b)`.
pub fn shift(expansion: &BinomialExpansion, a: i64, b: i64) -> BigUint {
    expansion
        .terms
        .iter()
        .map(|t| binom_ext(BigInt::from(t.top.clone()) + a, t.bottom as i64 + b))
        .sum()
}

/// The operator `n_((d,c))` for `0 <= c < d`.
pub fn double_bracket(n: impl Into<BigUint>, d: usize, c: usize) -> Result<BigUint> {
    if c >= d {
        return Err(Error::InvalidBracketIndex { d, c });
    }
    let expansion = expand(n, d)?;
    let j = expansion.lowest_index();
    let q = if j > c { j } else { c + 1 };
    let c_i = c as i64;
    let mut total: BigUint = (q..=d)
        .map(|k| {
            let top = BigInt::from(expansion.top_at(k).expect("q >= j").clone());
            binom_ext(top - c_i - 1, k as i64 - c_i)
        })
        .sum();
    if c >= j {
        let top = BigInt::from(expansion.top_at(c).expect("c >= j").clone());
        total += binom_ext(top - c_i, 0);
    }
    Ok(total)
}

/// Macaulay's bound `n^<d>`: the largest admissible value in degree `d + 1`
/// after the value `n` in degree `d`.
pub fn macaulay_next_max(n: impl Into<BigUint>, d: usize) -> BigUint {
    let n: BigUint = n.into();
    if n.is_zero() {
        return n;
    }
    let expansion = expand(n, d).expect("n >= 1 and d >= 1");
    shift(&expansion, 1, 1)
}

/// Hilbert function `h_0, ..., h_e` of a graded artinian algebra,
/// with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(mut values: Vec<u64>) -> Result<Self> {
        while values.len() > 1 && *values.last().unwrap() == 0 {
            values.pop();
        }
        match values.first() {
            None => Err(Error::InvalidHilbertFunction("empty sequence".into())),
            Some(&1) => Ok(HilbertFunction { values }),
            Some(&h0) => Err(Error::InvalidHilbertFunction(format!("h_0 = {h0}, expected 1"))),
        }
    }

    /// `h_i`, zero beyond the socle degree and for negative `i`.
    pub fn get(&self, i: i64) -> u64 {
        if i < 0 {
            return 0;
        }
        self.values.get(i as usize).copied().unwrap_or(0)
    }

    pub fn at(&self, i: usize) -> u64 {
        self.values.get(i).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Codimension `r = h_1`.
    pub fn codimension(&self) -> u64 {
        self.at(1)
    }

    /// Socle degree `e`.
    pub fn socle_degree(&self) -> usize {
        self.values.len() - 1
    }
}

impl TryFrom<Vec<u64>> for HilbertFunction {
    type Error = Error;

    fn try_from(values: Vec<u64>) -> Result<Self> {
        HilbertFunction::new(values)
    }
}

impl From<HilbertFunction> for Vec<u64> {
    fn from(h: HilbertFunction) -> Self {
        h.values
    }
}

impl std::str::FromStr for HilbertFunction {
    type Err = Error;

    /// Parses a comma-separated list such as `1,3,4,3`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidHilbertFunction(format!("bad entry {v:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        HilbertFunction::new(values)
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Macaulay's characterization: `h_0 = 1` and `h_{d+1} <= h_d^<d>` for `d >= 1`.
pub fn is_o_sequence(h: &HilbertFunction) -> bool {
    if h.at(0) != 1 {
        return false;
    }
    (1..h.socle_degree()).all(|d| BigUint::from(h.at(d + 1)) <= macaulay_next_max(h.at(d), d))
}

/// Smallest `t >= 1` with `h_t <= t`.
pub fn t_index(h: &HilbertFunction) -> usize {
    (1..)
        .find(|&t| h.at(t) <= t as u64)
        .expect("h vanishes past the socle degree")
}
