use std::fmt;

/// Exponent vector of a monomial in `x_1, ..., x_r`.
///
/// The derived ordering is lexicographic with `x_1 > x_2 > ... > x_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exponents: vec![0; nvars] }
    }

    /// The variable `x_{index + 1}` (zero-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[index] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// `self * x_to / x_from`, or `None` when `x_from` does not divide `self`.
    pub fn exchange(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exponents[from] == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[from] -= 1;
        exponents[to] += 1;
        Some(Monomial { exponents })
    }

    /// Zero-based index of the last variable dividing this monomial.
    pub fn max_var(&self) -> Option<usize> {
        self.exponents.iter().rposition(|&e| e > 0)
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

/// All `C(r + d - 1, d)` monomials of degree `d` in `r` variables, in
/// descending lexicographic order with `x_1` largest.
pub fn monomials_of_degree(r: usize, d: usize) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, remaining: usize, r: usize, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == r {
            prefix.push(remaining as u32);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e as u32);
            fill(prefix, remaining - e, r, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    fill(&mut Vec::with_capacity(r), d, r, &mut out);
    out
}
