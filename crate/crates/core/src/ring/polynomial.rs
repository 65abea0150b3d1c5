use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::field::{vanishes, FieldSpec};

/// A nonzero homogeneous polynomial with integer coefficients read in `field`.
///
/// Over `F_p` coefficients are stored as residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn new(field: FieldSpec, nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Result<Self> {
        let mut combined: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::RingMismatch);
            }
            *combined.entry(m).or_insert_with(BigInt::zero) += c;
        }
        combined.retain(|_, c| {
            *c = field.normalize(c);
            !vanishes(field, c)
        });
        let mut degrees = combined.keys().map(Monomial::degree);
        let degree = degrees.next().ok_or(Error::ZeroPolynomial)?;
        if degrees.any(|d| d != degree) {
            return Err(Error::NotHomogeneous);
        }
        Ok(Polynomial { field, nvars, degree, terms: combined })
    }

    pub fn monomial(field: FieldSpec, m: Monomial) -> Self {
        let nvars = m.nvars();
        Polynomial::new(field, nvars, [(m, BigInt::one())]).expect("a monomial is nonzero")
    }

    /// `sum_k coeffs[k] * x_{k+1}`.
    pub fn linear(field: FieldSpec, coeffs: &[BigInt]) -> Result<Self> {
        let n = coeffs.len();
        Polynomial::new(field, n, coeffs.iter().enumerate().map(|(k, c)| (Monomial::var(n, k), c.clone())))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The single monomial of a one-term polynomial.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.len() {
            1 => self.terms.keys().next(),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.field != other.field || self.nvars != other.nvars {
            return Err(Error::RingMismatch);
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *acc.entry(a.mul(b)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        Polynomial::new(self.field, self.nvars, acc)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            degree: self.degree + m.degree(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> Result<Polynomial> {
        let mut acc = Polynomial::monomial(self.field, Monomial::one(self.nvars));
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Coefficient vector with respect to a monomial basis of this degree.
    pub(crate) fn coordinates(&self, index: &HashMap<Monomial, usize>, len: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); len];
        for (m, c) in &self.terms {
            v[index[m]] = c.clone();
        }
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}
