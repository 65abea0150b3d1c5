//! Rank tests for multiplication maps `x F : A_i -> A_{i+d}` and the
//! WLP / SLP / MRP verdicts built from them.
//!
//! A "general" form is produced by a [`FormStrategy`]:
//!
//! * `RandomInt` draws integer coefficients in `[-B, B]` (nonzero in the
//!   field). Maximal rank is an open condition, so a random form reaches the
//!   generic rank off a measure-zero set; verdicts are labelled probabilistic.
//! * `LastVariablePower` uses `x_r^d`, which is general for stable monomial
//!   ideals in characteristic zero. Only there are its verdicts certified.
//! * `AllOnesLinear` uses `L = x_1 + ... + x_r` and its powers.
//! * `ExhaustiveFiniteField` enumerates every form over `F_p` up to scalars.
//!
//! Each `(d, i)` cell records the best rank over the candidate forms. Cells are
//! evaluated in parallel; every candidate form is derived from the seed and its
//! `(trial, degree)` index, so the result does not depend on scheduling.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{vanishes, FieldSpec};
use crate::macaulay::HilbertFunction;
use crate::ring::{
    colon_slice_dim, hilbert_function, is_stable, monomials_of_degree, ring_dim, GradedIdeal, GradedQuotient,
    Monomial, Polynomial,
};

pub const DEFAULT_COEFF_BOUND: u64 = 1000;
pub const DEFAULT_TRIALS: u32 = 3;
pub const DEFAULT_EXHAUSTIVE_BUDGET: u64 = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Property {
    Wlp,
    Slp,
    Mrp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FormStrategy {
    RandomInt { coeff_bound: u64, trials: u32, seed: u64 },
    AllOnesLinear,
    LastVariablePower,
    ExhaustiveFiniteField { budget: u64 },
}

impl FormStrategy {
    pub fn random(seed: u64) -> Self {
        FormStrategy::RandomInt { coeff_bound: DEFAULT_COEFF_BOUND, trials: DEFAULT_TRIALS, seed }
    }

    pub fn exhaustive() -> Self {
        FormStrategy::ExhaustiveFiniteField { budget: DEFAULT_EXHAUSTIVE_BUDGET }
    }

    pub fn seed(&self) -> Option<u64> {
        match *self {
            FormStrategy::RandomInt { seed, .. } => Some(seed),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsDeterministic,
    HoldsProbabilistic,
    FailsObserved,
    Inconclusive,
}

impl Verdict {
    pub fn holds(self) -> bool {
        matches!(self, Verdict::HoldsDeterministic | Verdict::HoldsProbabilistic)
    }
}

/// Best rank seen for `x F : A_i -> A_{i+d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankEntry {
    pub d: usize,
    pub i: usize,
    pub max_possible: usize,
    pub best_rank_observed: usize,
    pub trials_used: usize,
}

impl RankEntry {
    pub fn is_maximal(&self) -> bool {
        self.best_rank_observed == self.max_possible
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: Property,
    pub verdict: Verdict,
    /// The forms used are known to be general (exhaustive search, or `x_r^d`
    /// on a stable ideal over `QQ`), so a failure is a refutation.
    pub certified: bool,
    pub hilbert: HilbertFunction,
    pub entries: Vec<RankEntry>,
    pub strategy: FormStrategy,
    pub seed: Option<u64>,
    pub field: FieldSpec,
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn deficits(&self) -> impl Iterator<Item = &RankEntry> {
        self.entries.iter().filter(|e| !e.is_maximal())
    }

    pub fn entry(&self, d: usize, i: usize) -> Option<&RankEntry> {
        self.entries.iter().find(|e| e.d == d && e.i == i)
    }
}

/// Rank of `x f : A_i -> A_{i + deg f}` for `A = R/I`, and `min(h_i, h_{i + deg f})`.
pub fn multiplication_rank(ideal: &GradedIdeal, f: &Polynomial, i: usize) -> Result<(usize, usize)> {
    if f.nvars() != ideal.nvars() || f.field() != ideal.field() {
        return Err(Error::RingMismatch);
    }
    let r = ideal.nvars();
    let target = i + f.degree();
    let h = |d: usize| ring_dim(r, d) - ideal.slice_dim(d);
    let slice = ideal.slice_matrix(target).column_basis();
    let rank = crate::ring::map_rank(&slice, f, i);
    Ok((rank, h(i).min(h(target))))
}

fn mix(mut z: u64) -> u64 {
    // splitmix64 finalizer
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent generator for one `(family, trial, degree)` cell of the seed stream.
fn cell_rng(seed: u64, family: u64, trial: u64, degree: u64) -> ChaCha8Rng {
    let key = mix(mix(mix(seed) ^ family) ^ trial.rotate_left(21) ^ degree.rotate_left(42));
    ChaCha8Rng::seed_from_u64(key)
}

const LINEAR_FAMILY: u64 = 0x4c49_4e45;
const FORM_FAMILY: u64 = 0x464f_524d;

fn random_coefficient(rng: &mut ChaCha8Rng, bound: u64, field: FieldSpec) -> BigInt {
    let bound = bound.clamp(1, i64::MAX as u64) as i64;
    loop {
        let c = BigInt::from(rng.gen_range(-bound..=bound));
        if !vanishes(field, &c) {
            return c;
        }
    }
}

fn random_form(field: FieldSpec, nvars: usize, degree: usize, bound: u64, rng: &mut ChaCha8Rng) -> Polynomial {
    let terms: Vec<(Monomial, BigInt)> = monomials_of_degree(nvars, degree)
        .into_iter()
        .map(|m| (m, random_coefficient(rng, bound, field)))
        .collect();
    Polynomial::new(field, nvars, terms).expect("full support with nonzero coefficients")
}

/// Random full-support form of the given degree drawn from the `(seed, trial)` stream.
pub fn seeded_random_form(field: FieldSpec, nvars: usize, degree: usize, bound: u64, seed: u64, trial: u64) -> Polynomial {
    let mut rng = cell_rng(seed, FORM_FAMILY, trial, degree as u64);
    random_form(field, nvars, degree, bound, &mut rng)
}

fn projective_count(p: u64, n: usize) -> u128 {
    (0..n as u32).map(|k| (p as u128).saturating_pow(k)).fold(0u128, u128::saturating_add)
}

/// Every nonzero vector of length `n` over `F_p` whose first nonzero entry is 1.
fn projective_vectors(p: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    (0..n).flat_map(move |lead| {
        let tail = n - lead - 1;
        (0..(p as u128).pow(tail as u32)).map(move |mut code| {
            let mut v = vec![0u64; n];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = (code % p as u128) as u64;
                code /= p as u128;
            }
            v
        })
    })
}

fn prime_of(field: FieldSpec, strategy: &FormStrategy) -> Result<u64> {
    match field {
        FieldSpec::PrimeField(p) => Ok(p),
        FieldSpec::Rationals => Err(Error::InvalidStrategy(format!("{strategy:?} needs a prime field"))),
    }
}

fn check_budget(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        return Err(Error::ExhaustiveTooLarge { needed, budget });
    }
    Ok(())
}

/// Linear forms standing in for a general `L`.
fn linear_candidates(quotient: &GradedQuotient, strategy: &FormStrategy) -> Result<Vec<Polynomial>> {
    let ideal = quotient.ideal();
    let (field, r) = (ideal.field(), ideal.nvars());
    Ok(match *strategy {
        FormStrategy::RandomInt { coeff_bound, trials, seed } => (0..trials as u64)
            .map(|t| {
                let mut rng = cell_rng(seed, LINEAR_FAMILY, t, 1);
                random_form(field, r, 1, coeff_bound, &mut rng)
            })
            .collect(),
        FormStrategy::AllOnesLinear => vec![Polynomial::linear(field, &vec![BigInt::from(1); r])?],
        FormStrategy::LastVariablePower => vec![Polynomial::monomial(field, Monomial::var(r, r - 1))],
        FormStrategy::ExhaustiveFiniteField { budget } => {
            let p = prime_of(field, strategy)?;
            check_budget(projective_count(p, r), budget)?;
            projective_vectors(p, r)
                .map(|v| Polynomial::linear(field, &v.into_iter().map(BigInt::from).collect::<Vec<_>>()))
                .collect::<Result<_>>()?
        }
    })
}

/// Candidate forms for each degree `1..=max_degree` (index `d - 1`).
fn candidates(
    quotient: &GradedQuotient,
    property: Property,
    strategy: &FormStrategy,
    max_degree: usize,
) -> Result<Vec<Vec<Polynomial>>> {
    let ideal = quotient.ideal();
    let (field, r) = (ideal.field(), ideal.nvars());
    let independent = property == Property::Mrp;
    match (*strategy, independent) {
        (FormStrategy::RandomInt { coeff_bound, trials, seed }, true) => Ok((1..=max_degree)
            .map(|d| {
                (0..trials as u64)
                    .map(|t| seeded_random_form(field, r, d, coeff_bound, seed, t))
                    .collect()
            })
            .collect()),
        (FormStrategy::ExhaustiveFiniteField { budget }, true) => {
            let p = prime_of(field, strategy)?;
            let supports: Vec<Vec<Monomial>> = (1..=max_degree)
                .map(|d| {
                    let all = monomials_of_degree(r, d);
                    if ideal.is_monomial() {
                        // F only matters modulo I, and for monomial I the standard monomials span a complement.
                        all.into_iter().filter(|m| !ideal.contains_monomial(m)).collect()
                    } else {
                        all
                    }
                })
                .collect();
            let needed = supports
                .iter()
                .map(|s| projective_count(p, s.len()))
                .fold(0u128, u128::saturating_add);
            check_budget(needed, budget)?;
            supports
                .into_iter()
                .map(|support| {
                    projective_vectors(p, support.len())
                        .map(|v| {
                            let terms = support.iter().cloned().zip(v.into_iter().map(BigInt::from));
                            Polynomial::new(field, r, terms)
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect()
        }
        _ => {
            // Powers of linear forms: SLP/WLP always, MRP for the single-form strategies.
            let linear = linear_candidates(quotient, strategy)?;
            let mut out: Vec<Vec<Polynomial>> = Vec::with_capacity(max_degree);
            let mut current = linear.clone();
            for d in 1..=max_degree {
                if d > 1 {
                    current = current
                        .iter()
                        .zip(&linear)
                        .map(|(power, l)| power.mul(l))
                        .collect::<Result<_>>()?;
                }
                out.push(current.clone());
            }
            Ok(out)
        }
    }
}

fn is_certified(quotient: &GradedQuotient, strategy: &FormStrategy) -> Result<bool> {
    let ideal = quotient.ideal();
    Ok(match strategy {
        FormStrategy::ExhaustiveFiniteField { .. } => true,
        FormStrategy::LastVariablePower => {
            ideal.field() == FieldSpec::Rationals && ideal.is_monomial() && is_stable(ideal)?
        }
        _ => false,
    })
}

/// Runs the rank test for one property.
///
/// WLP checks `d = 1`; SLP and MRP check `d = 1..=e`; in every case
/// `i = 0..=e-d`. SLP and WLP use powers `L^d` of one linear form per trial,
/// MRP uses an independent form of each degree.
pub fn test_property(quotient: &GradedQuotient, property: Property, strategy: &FormStrategy) -> Result<PropertyReport> {
    let e = quotient.socle_degree();
    let max_degree = match property {
        Property::Wlp => e.min(1),
        Property::Slp | Property::Mrp => e,
    };
    let forms = candidates(quotient, property, strategy, max_degree)?;
    let hilbert = quotient.hilbert().clone();
    let cells: Vec<(usize, usize)> = (1..=max_degree).flat_map(|d| (0..=e - d).map(move |i| (d, i))).collect();

    let entries = cells
        .par_iter()
        .map(|&(d, i)| {
            let max_possible = hilbert.at(i).min(hilbert.at(i + d)) as usize;
            let mut best = 0;
            let mut used = 0;
            for f in &forms[d - 1] {
                used += 1;
                best = best.max(quotient.lifted_rank(f, i)?);
                if best == max_possible {
                    break;
                }
            }
            Ok(RankEntry { d, i, max_possible, best_rank_observed: best, trials_used: used })
        })
        .collect::<Result<Vec<_>>>()?;

    let certified = is_certified(quotient, strategy)?;
    let field = quotient.ideal().field();
    let all_maximal = entries.iter().all(RankEntry::is_maximal);
    let verdict = match (all_maximal, certified, field) {
        (true, true, _) => Verdict::HoldsDeterministic,
        (true, false, _) => Verdict::HoldsProbabilistic,
        (false, true, _) | (false, false, FieldSpec::Rationals) => Verdict::FailsObserved,
        (false, false, FieldSpec::PrimeField(_)) => Verdict::Inconclusive,
    };

    let mut notes = Vec::new();
    if let FieldSpec::PrimeField(p) = field {
        notes.push(format!(
            "finite-field caveat: ranks are attained by forms over GF({p}); a form of maximal rank may exist only over an extension"
        ));
    }
    match strategy {
        FormStrategy::LastVariablePower if !certified => {
            notes.push("x_r^d is only known to be general for stable monomial ideals in characteristic zero".into())
        }
        FormStrategy::AllOnesLinear => notes.push("x_1 + ... + x_r is a specific form, not a certified general one".into()),
        _ => {}
    }

    Ok(PropertyReport {
        property,
        verdict,
        certified,
        hilbert,
        entries,
        strategy: *strategy,
        seed: strategy.seed(),
        field,
        notes,
    })
}

pub fn test_wlp(quotient: &GradedQuotient, strategy: &FormStrategy) -> Result<PropertyReport> {
    test_property(quotient, Property::Wlp, strategy)
}

pub fn test_slp(quotient: &GradedQuotient, strategy: &FormStrategy) -> Result<PropertyReport> {
    test_property(quotient, Property::Slp, strategy)
}

pub fn test_mrp(quotient: &GradedQuotient, strategy: &FormStrategy) -> Result<PropertyReport> {
    test_property(quotient, Property::Mrp, strategy)
}

/// Checks `h_i = dim R/(I:F)_{i-d} + dim R/(I,F)_i` for `0 <= i <= e`, with the
/// colon computed as a kernel and `R/(I,F)` from its own slice spans.
pub fn verify_exact_sequence_decomposition(quotient: &GradedQuotient, f: &Polynomial) -> Result<bool> {
    let ideal = quotient.ideal();
    if quotient.vanishes(f)? {
        return Err(Error::FormInIdeal);
    }
    let e = quotient.socle_degree();
    let d = f.degree();
    let sum_ideal = ideal.with_generator(f.clone())?;
    let cut = hilbert_function(&sum_ideal, e + 1)?;
    for i in 0..=e {
        let colon_part = match i.checked_sub(d) {
            Some(j) => ring_dim(ideal.nvars(), j) - colon_slice_dim(ideal, f, j)?,
            None => 0,
        };
        if quotient.hilbert().at(i) as usize != colon_part + cut.at(i) as usize {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Last degree where `R/(I : f)` is nonzero, or `None` when `f` vanishes in `A`.
pub fn colon_socle_degree(quotient: &GradedQuotient, f: &Polynomial) -> Result<Option<usize>> {
    if quotient.vanishes(f)? {
        return Ok(None);
    }
    let dims = quotient.colon_quotient_dims(f)?;
    Ok(dims.iter().rposition(|&v| v > 0))
}

/// Does `R/(I : L^d)` have socle degree exactly `e - d` for some strategy-produced `L`?
pub fn socle_colon_check(quotient: &GradedQuotient, d: usize, strategy: &FormStrategy) -> Result<bool> {
    let e = quotient.socle_degree();
    if d == 0 || d > e {
        return Err(Error::DegreeBelowForm { p: e, d });
    }
    let forms = candidates(quotient, Property::Slp, strategy, d)?;
    for f in &forms[d - 1] {
        if colon_socle_degree(quotient, f)? == Some(e - d) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Candidate degree-`d` forms as used by the MRP test.
pub fn general_forms(quotient: &GradedQuotient, d: usize, strategy: &FormStrategy) -> Result<Vec<Polynomial>> {
    Ok(candidates(quotient, Property::Mrp, strategy, d)?.pop().unwrap_or_default())
}
