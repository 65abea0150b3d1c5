//! Polynomial rings `k[x_1, ..., x_r]`, homogeneous ideals and their graded
//! quotients.
//!
//! Everything is computed one degree at a time by linear algebra on the
//! spanning set `{ m * g : g a generator, deg m = d - deg g }` of `I_d`; no
//! Gröbner bases are involved.

mod lex;
mod monomial;
mod parse;
mod polynomial;
mod quotient;

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use self::lex::{is_stable, is_strongly_stable, lex_segment_ideal};
pub use self::monomial::{monomials_of_degree, Monomial};
pub use self::parse::parse_polynomial;
pub use self::polynomial::Polynomial;
pub use self::quotient::GradedQuotient;
pub use crate::field::FieldSpec;

use crate::error::{Error, Result};
use crate::linalg::{rank_of_stacked, ExactMatrix};
use crate::macaulay::HilbertFunction;

/// A homogeneous ideal given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    nvars: usize,
    field: FieldSpec,
    generators: Vec<Polynomial>,
}

impl GradedIdeal {
    pub fn new(nvars: usize, field: FieldSpec, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars || g.field() != field {
                return Err(Error::RingMismatch);
            }
            if g.degree() == 0 {
                return Err(Error::ConstantGenerator);
            }
        }
        Ok(GradedIdeal { nvars, field, generators })
    }

    /// Ideal generated by monomials.
    pub fn monomial(nvars: usize, field: FieldSpec, generators: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens = generators.into_iter().map(|m| Polynomial::monomial(field, m)).collect();
        GradedIdeal::new(nvars, field, gens)
    }

    /// Parses generators in the text grammar of [`parse_polynomial`].
    pub fn parse(nvars: usize, field: FieldSpec, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| parse_polynomial(g, nvars, field))
            .collect::<Result<Vec<_>>>()?;
        GradedIdeal::new(nvars, field, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(Polynomial::is_monomial)
    }

    /// `I + (f)`.
    pub fn with_generator(&self, f: Polynomial) -> Result<GradedIdeal> {
        let mut gens = self.generators.clone();
        gens.push(f);
        GradedIdeal::new(self.nvars, self.field, gens)
    }

    /// Does the monomial lie in this (monomial) ideal?
    pub(crate) fn contains_monomial(&self, m: &Monomial) -> bool {
        self.generators
            .iter()
            .filter_map(Polynomial::as_monomial)
            .any(|g| g.divides(m))
    }

    /// Spanning set of `I_d` (possibly redundant).
    pub fn slice_span(&self, d: usize) -> Vec<Polynomial> {
        let mut out = Vec::new();
        let mut seen_monomials = BTreeSet::new();
        for g in self.generators.iter().filter(|g| g.degree() <= d) {
            for m in monomials_of_degree(self.nvars, d - g.degree()) {
                let product = g.mul_monomial(&m);
                if let Some(single) = product.as_monomial() {
                    if !seen_monomials.insert(single.clone()) {
                        continue;
                    }
                }
                out.push(product);
            }
        }
        out
    }

    /// Matrix whose columns span `I_d`, in the coordinates of
    /// [`monomials_of_degree`]`(r, d)`.
    pub fn slice_matrix(&self, d: usize) -> ExactMatrix {
        let basis = monomials_of_degree(self.nvars, d);
        let index = basis_index(&basis);
        let columns = self
            .slice_span(d)
            .iter()
            .map(|p| p.coordinates(&index, basis.len()))
            .collect();
        ExactMatrix::from_columns(self.field, basis.len(), columns).expect("coordinate vectors have basis length")
    }

    /// `dim_k I_d`.
    pub fn slice_dim(&self, d: usize) -> usize {
        let span = self.slice_span(d);
        if span.iter().all(Polynomial::is_monomial) {
            // slice_span already drops repeated monomials.
            return span.len();
        }
        self.slice_matrix(d).rank()
    }
}

pub(crate) fn basis_index(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect()
}

/// Matrix with columns `f * m` for `m` running over the degree-`i` monomials,
/// in the coordinates of degree `i + deg f`.
pub(crate) fn multiplication_matrix(f: &Polynomial, i: usize) -> ExactMatrix {
    let r = f.nvars();
    let target = monomials_of_degree(r, i + f.degree());
    let index = basis_index(&target);
    let columns = monomials_of_degree(r, i)
        .iter()
        .map(|m| f.mul_monomial(m).coordinates(&index, target.len()))
        .collect();
    ExactMatrix::from_columns(f.field(), target.len(), columns).expect("coordinate vectors have basis length")
}

/// Number of monomials of degree `d` in `r` variables.
pub fn ring_dim(r: usize, d: usize) -> usize {
    monomials_of_degree(r, d).len()
}

/// Hilbert function of `R/I`, computed degree by degree until it vanishes.
pub fn hilbert_function(ideal: &GradedIdeal, cap: usize) -> Result<HilbertFunction> {
    let mut values = Vec::new();
    for d in 0..=cap {
        let h = ring_dim(ideal.nvars, d) - ideal.slice_dim(d);
        if h == 0 {
            return HilbertFunction::new(values);
        }
        values.push(h as u64);
    }
    Err(Error::NotArtinianByCap(cap))
}

fn check_form(ideal: &GradedIdeal, f: &Polynomial) -> Result<()> {
    if f.nvars() != ideal.nvars || f.field() != ideal.field {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Rank of `x f : R_i -> (R/I)_{i + deg f}`; `ideal_basis` holds independent
/// columns spanning `I_{i + deg f}`.
pub(crate) fn map_rank(ideal_basis: &ExactMatrix, f: &Polynomial, i: usize) -> usize {
    let images = multiplication_matrix(f, i);
    rank_of_stacked(&images, ideal_basis).expect("same target degree") - ideal_basis.cols()
}

/// `dim_k (I : f)_i`.
pub fn colon_slice_dim(ideal: &GradedIdeal, f: &Polynomial, i: usize) -> Result<usize> {
    check_form(ideal, f)?;
    let own = ideal.slice_matrix(f.degree()).column_basis();
    if map_rank(&own, f, 0) == 0 {
        return Err(Error::FormInIdeal);
    }
    let slice = ideal.slice_matrix(i + f.degree()).column_basis();
    Ok(ring_dim(ideal.nvars, i) - map_rank(&slice, f, i))
}

/// JSON ideal file: `{"vars": r, "char": 0 or p, "gens": ["<poly>", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub vars: usize,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub gens: Vec<String>,
}

impl IdealFile {
    pub fn to_ideal(&self) -> Result<GradedIdeal> {
        let field = FieldSpec::from_characteristic(self.characteristic)?;
        let gens: Vec<&str> = self.gens.iter().map(String::as_str).collect();
        GradedIdeal::parse(self.vars, field, &gens)
    }
}

impl From<&GradedIdeal> for IdealFile {
    fn from(ideal: &GradedIdeal) -> Self {
        IdealFile {
            vars: ideal.nvars,
            characteristic: ideal.field.characteristic(),
            gens: ideal.generators.iter().map(ToString::to_string).collect(),
        }
    }
}

/// Degree-`degree` form with coefficients listed against [`monomials_of_degree`].
pub fn form_from_coefficients(field: FieldSpec, nvars: usize, degree: usize, coeffs: &[BigInt]) -> Result<Polynomial> {
    let basis = monomials_of_degree(nvars, degree);
    if basis.len() != coeffs.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficients for {} monomials",
            coeffs.len(),
            basis.len()
        )));
    }
    Polynomial::new(field, nvars, basis.into_iter().zip(coeffs.iter().cloned()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn ideal(r: usize, gens: &[&str]) -> GradedIdeal {
        GradedIdeal::parse(r, Q, gens).unwrap()
    }

    #[test]
    fn slices() {
        let i = ideal(2, &["x1^2", "x1*x2"]);
        let two: Vec<String> = i.slice_span(2).iter().map(ToString::to_string).collect();
        assert_eq!(two, ["x1^2", "x1*x2"]);
        assert_eq!(i.slice_dim(3), 3);
        assert!(i.slice_span(0).is_empty());
        assert!(i.slice_span(1).is_empty());
        let j = ideal(2, &["x1^2 + x2^2", "x1^2 - x2^2"]);
        assert_eq!(j.slice_span(3).len(), 4);
        assert_eq!(j.slice_dim(3), 4);
        assert_eq!(j.slice_dim(2), 2);
    }

    #[test]
    fn hilbert_functions() {
        let gotzmann = ideal(3, &["x1^2", "x1*x2", "x2^3", "x2^2*x3", "x1*x3^3", "x2*x3^3", "x3^4"]);
        assert_eq!(hilbert_function(&gotzmann, 50).unwrap().values(), &[1, 3, 4, 3]);
        let maximal = ideal(3, &["x1", "x2", "x3"]);
        assert_eq!(hilbert_function(&maximal, 50).unwrap().values(), &[1]);
        let ci = ideal(2, &["x1^3", "x2^3"]);
        assert_eq!(hilbert_function(&ci, 50).unwrap().values(), &[1, 2, 3, 2, 1]);
        let generic = ideal(2, &["x1^2 + 3*x1*x2", "x2^2 - x1*x2"]);
        assert_eq!(hilbert_function(&generic, 50).unwrap().values(), &[1, 2, 1]);
    }

    #[test]
    fn non_artinian_hits_cap() {
        let line = ideal(2, &["x1"]);
        assert_eq!(hilbert_function(&line, 6), Err(Error::NotArtinianByCap(6)));
    }

    #[test]
    fn colon_dims() {
        let i = ideal(2, &["x1^2", "x2^2"]);
        let xy = parse_polynomial("x1*x2", 2, Q).unwrap();
        assert_eq!(colon_slice_dim(&i, &xy, 1).unwrap(), 2);
        let l = parse_polynomial("x1 + x2", 2, Q).unwrap();
        assert_eq!(colon_slice_dim(&i, &l, 0).unwrap(), 0);
        assert_eq!(colon_slice_dim(&i, &l, 1).unwrap(), 1);
        assert_eq!(colon_slice_dim(&i, &l, 3).unwrap(), 4);
        let x2 = parse_polynomial("x1^2", 2, Q).unwrap();
        assert_eq!(colon_slice_dim(&i, &x2, 0), Err(Error::FormInIdeal));
    }

    #[test]
    fn ideal_file_round_trip() {
        let file = IdealFile { vars: 2, characteristic: 3, gens: vec!["x1^3".into(), "x2^3".into()] };
        let i = file.to_ideal().unwrap();
        assert_eq!(i.field(), FieldSpec::PrimeField(3));
        assert_eq!(IdealFile::from(&i), file);
        let bad = IdealFile { vars: 2, characteristic: 4, gens: vec![] };
        assert_eq!(bad.to_ideal(), Err(Error::InvalidPrime(4)));
        let constant = IdealFile { vars: 2, characteristic: 0, gens: vec!["3".into()] };
        assert_eq!(constant.to_ideal(), Err(Error::ConstantGenerator));
    }
}
