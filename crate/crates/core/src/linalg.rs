//! Dense exact matrices over the rationals and prime fields.
//!
//! Rational matrices are held as integer matrices (rows scaled by a common
//! denominator, which preserves rank) and reduced with fraction-free
//! Bareiss elimination. Prime-field matrices hold residues and use ordinary
//! Gaussian elimination. Pivots are the first nonzero entry in column order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{inv_mod, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Entries {
    Integer(Vec<BigInt>),
    Modular(Vec<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Entries,
}

impl ExactMatrix {
    /// Row-major integer entries, read in the given field.
    pub fn from_integers(field: FieldSpec, rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let entries = match field {
            FieldSpec::Rationals => Entries::Integer(entries),
            FieldSpec::PrimeField(p) => {
                Entries::Modular(entries.iter().map(|v| FieldSpec::residue(p, v)).collect())
            }
        };
        Ok(ExactMatrix { field, rows, cols, entries })
    }

    /// Row-major rational entries. Over `F_p` a denominator divisible by `p` is rejected.
    pub fn from_rationals(field: FieldSpec, rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        match field {
            FieldSpec::Rationals => {
                let mut scaled = Vec::with_capacity(entries.len());
                for row in entries.chunks(cols.max(1)) {
                    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                    scaled.extend(row.iter().map(|q| q.numer() * (&lcm / q.denom())));
                }
                ExactMatrix::from_integers(field, rows, cols, scaled)
            }
            FieldSpec::PrimeField(p) => {
                let modulus = BigInt::from(p);
                let mut residues = Vec::with_capacity(entries.len());
                for q in &entries {
                    let den = FieldSpec::residue(p, q.denom());
                    if den == 0 {
                        return Err(Error::DimensionMismatch(format!("denominator {} vanishes mod {p}", q.denom())));
                    }
                    let num = FieldSpec::residue(p, &q.numer().mod_floor(&modulus));
                    residues.push(num * inv_mod(den, p) % p);
                }
                Ok(ExactMatrix { field, rows, cols, entries: Entries::Modular(residues) })
            }
        }
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!("row length differs from {cols}")));
        }
        ExactMatrix::from_integers(field, nrows, cols, rows.into_iter().flatten().collect())
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: Vec<Vec<BigInt>>) -> Result<Self> {
        Ok(ExactMatrix::from_rows(field, rows, columns)?.transpose())
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix::from_integers(field, rows, cols, vec![BigInt::zero(); rows * cols])
            .expect("sizes agree")
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { BigInt::one() } else { BigInt::zero() })
            .collect();
        ExactMatrix::from_integers(field, n, n, entries).expect("sizes agree")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(r, c)` as an integer (a residue in `[0, p)` over `F_p`).
    pub fn get(&self, r: usize, c: usize) -> BigInt {
        let k = r * self.cols + c;
        match &self.entries {
            Entries::Integer(v) => v[k].clone(),
            Entries::Modular(v) => BigInt::from(v[k]),
        }
    }

    pub fn transpose(&self) -> Self {
        let (rows, cols) = (self.rows, self.cols);
        let index = |k: usize| (k % rows) * cols + k / rows;
        let entries = match &self.entries {
            Entries::Integer(v) => Entries::Integer((0..v.len()).map(|k| v[index(k)].clone()).collect()),
            Entries::Modular(v) => Entries::Modular((0..v.len()).map(|k| v[index(k)]).collect()),
        };
        ExactMatrix { field: self.field, rows: cols, cols: rows, entries }
    }

    pub fn rank(&self) -> usize {
        let mut work = self.entries.clone();
        echelon(&mut work, self.rows, self.cols, self.field)
    }

    /// Independent columns spanning the column space.
    pub fn column_basis(&self) -> ExactMatrix {
        let t = self.transpose();
        let mut work = t.entries;
        let rank = echelon(&mut work, t.rows, t.cols, t.field);
        let width = t.cols;
        let entries = match work {
            Entries::Integer(mut v) => {
                v.truncate(rank * width);
                for row in v.chunks_mut(width.max(1)) {
                    remove_content(row);
                }
                Entries::Integer(v)
            }
            Entries::Modular(mut v) => {
                v.truncate(rank * width);
                Entries::Modular(v)
            }
        };
        ExactMatrix { field: self.field, rows: rank, cols: width, entries }.transpose()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "row counts {} and {} differ",
                self.rows, other.rows
            )));
        }
        if self.field != other.field {
            return Err(Error::RingMismatch);
        }
        // Concatenating columns is stacking rows of the transposes.
        let (a, b) = (self.transpose(), other.transpose());
        let entries = match (a.entries, b.entries) {
            (Entries::Integer(mut x), Entries::Integer(y)) => {
                x.extend(y);
                Entries::Integer(x)
            }
            (Entries::Modular(mut x), Entries::Modular(y)) => {
                x.extend(y);
                Entries::Modular(x)
            }
            _ => unreachable!("same field implies same storage"),
        };
        Ok(ExactMatrix { field: self.field, rows: a.rows + b.rows, cols: self.rows, entries }.transpose())
    }
}

/// Rank of `[a | b]`.
pub fn rank_of_stacked(a: &ExactMatrix, b: &ExactMatrix) -> Result<usize> {
    Ok(a.hconcat(b)?.rank())
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v /= &g;
        }
    }
    if let Some(lead) = row.iter().find(|v| !v.is_zero()) {
        if lead.is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
        }
    }
}

/// Row-reduces in place; the first `rank` rows end up spanning the row space.
fn echelon(entries: &mut Entries, rows: usize, cols: usize, field: FieldSpec) -> usize {
    match (entries, field) {
        (Entries::Integer(v), _) => bareiss(v, rows, cols),
        (Entries::Modular(v), FieldSpec::PrimeField(p)) => gauss_mod(v, rows, cols, p),
        (Entries::Modular(_), FieldSpec::Rationals) => unreachable!("modular storage implies a prime field"),
    }
}

fn bareiss(a: &mut [BigInt], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for c in 0..cols {
                a.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let piv = a[rank * cols + col].clone();
        for r in rank + 1..rows {
            let factor = a[r * cols + col].clone();
            for c in col + 1..cols {
                let updated = &piv * &a[r * cols + c] - &factor * &a[rank * cols + c];
                a[r * cols + c] = updated / &prev;
            }
            a[r * cols + col] = BigInt::zero();
        }
        prev = piv;
        rank += 1;
    }
    rank
}

fn gauss_mod(a: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for c in 0..cols {
                a.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let inv = inv_mod(a[rank * cols + col], p);
        for c in col..cols {
            a[rank * cols + c] = a[rank * cols + c] * inv % p;
        }
        for r in rank + 1..rows {
            let factor = a[r * cols + col];
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                let sub = factor * a[rank * cols + c] % p;
                a[r * cols + c] = (a[r * cols + c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}
