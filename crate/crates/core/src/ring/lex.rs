use std::collections::HashSet;

use super::monomial::{monomials_of_degree, Monomial};
use super::GradedIdeal;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::macaulay::{is_o_sequence, HilbertFunction};

/// The lex-segment ideal with Hilbert function `h`, in `max(h_1, 1)` variables.
///
/// In each degree `d <= e + 1` the ideal is spanned by the first
/// `dim R_d - h_d` monomials in descending lex order. Generators are the
/// lex monomials not already in `R_1 * I_{d-1}`.
pub fn lex_segment_ideal(h: &HilbertFunction, field: FieldSpec) -> Result<GradedIdeal> {
    if !is_o_sequence(h) {
        return Err(Error::NotAnOSequence);
    }
    let r = (h.codimension() as usize).max(1);
    let mut previous: HashSet<Monomial> = HashSet::new();
    let mut generators = Vec::new();
    for d in 1..=h.socle_degree() + 1 {
        let all = monomials_of_degree(r, d);
        let size = all.len() - h.at(d) as usize;
        let segment: HashSet<Monomial> = all.into_iter().take(size).collect();
        let mut fresh: Vec<&Monomial> = segment
            .iter()
            .filter(|m| {
                !(0..r).any(|k| {
                    m.exponents()[k] > 0 && {
                        let mut e = m.exponents().to_vec();
                        e[k] -= 1;
                        previous.contains(&Monomial::new(e))
                    }
                })
            })
            .collect();
        debug_assert!(previous
            .iter()
            .all(|m| (0..r).all(|k| segment.contains(&m.mul(&Monomial::var(r, k))))));
        fresh.sort_by(|a, b| b.cmp(a));
        generators.extend(fresh.into_iter().cloned());
        previous = segment;
    }
    GradedIdeal::monomial(r, field, generators)
}

fn monomial_slices(ideal: &GradedIdeal) -> Result<Vec<Monomial>> {
    if !ideal.is_monomial() {
        return Err(Error::NotMonomialIdeal);
    }
    let top = ideal.generators().iter().map(|g| g.degree()).max().unwrap_or(0);
    Ok((1..=top)
        .flat_map(|d| monomials_of_degree(ideal.nvars(), d))
        .filter(|m| ideal.contains_monomial(m))
        .collect())
}

/// Stable: `m * x_i / x_max(m)` stays in the ideal for every `i < max(m)`.
///
/// Checked on every monomial of the ideal up to the largest generator degree,
/// which covers the minimal generators.
pub fn is_stable(ideal: &GradedIdeal) -> Result<bool> {
    Ok(monomial_slices(ideal)?.iter().all(|m| {
        let top = m.max_var().expect("degree >= 1");
        (0..top).all(|i| ideal.contains_monomial(&m.exchange(top, i).expect("x_top divides m")))
    }))
}

/// Strongly stable: `m * x_i / x_j` stays in the ideal whenever `x_j | m` and `i < j`.
pub fn is_strongly_stable(ideal: &GradedIdeal) -> Result<bool> {
    Ok(monomial_slices(ideal)?.iter().all(|m| {
        (0..ideal.nvars()).all(|j| {
            (0..j).all(|i| m.exchange(j, i).is_none_or(|moved| ideal.contains_monomial(&moved)))
        })
    }))
}
