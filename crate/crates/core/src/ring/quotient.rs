use super::{map_rank, ring_dim, GradedIdeal, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::macaulay::HilbertFunction;

/// An artinian quotient `A = R/I` with the degree slices of `I` reduced to
/// bases once, so repeated rank computations reuse them.
#[derive(Debug, Clone)]
pub struct GradedQuotient {
    ideal: GradedIdeal,
    hilbert: HilbertFunction,
    slices: Vec<ExactMatrix>,
}

impl GradedQuotient {
    /// Fails with `NotArtinianByCap` if `A` does not vanish by degree `cap`.
    pub fn new(ideal: GradedIdeal, cap: usize) -> Result<Self> {
        let hilbert = super::hilbert_function(&ideal, cap)?;
        let slices = (0..=hilbert.socle_degree())
            .map(|d| ideal.slice_matrix(d).column_basis())
            .collect();
        Ok(GradedQuotient { ideal, hilbert, slices })
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn hilbert(&self) -> &HilbertFunction {
        &self.hilbert
    }

    pub fn socle_degree(&self) -> usize {
        self.hilbert.socle_degree()
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() != self.ideal.nvars() || f.field() != self.ideal.field() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Rank of `x f : R_i -> A_{i + deg f}`; equals the rank of `A_i -> A_{i + deg f}`.
    pub fn lifted_rank(&self, f: &Polynomial, i: usize) -> Result<usize> {
        self.check(f)?;
        let target = i + f.degree();
        Ok(match self.slices.get(target) {
            Some(slice) => map_rank(slice, f, i),
            None => 0,
        })
    }

    /// Rank of `x f : A_i -> A_{i + d}` and the largest rank possible, `min(h_i, h_{i+d})`.
    pub fn multiplication_rank(&self, f: &Polynomial, i: usize) -> Result<(usize, usize)> {
        let rank = self.lifted_rank(f, i)?;
        let max = self.hilbert.at(i).min(self.hilbert.at(i + f.degree())) as usize;
        Ok((rank, max))
    }

    /// Is `f` zero in `A`?
    pub fn vanishes(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.lifted_rank(f, 0)? == 0)
    }

    /// `dim_k (I : f)_i`.
    pub fn colon_slice_dim(&self, f: &Polynomial, i: usize) -> Result<usize> {
        if self.vanishes(f)? {
            return Err(Error::FormInIdeal);
        }
        Ok(ring_dim(self.ideal.nvars(), i) - self.lifted_rank(f, i)?)
    }

    /// Hilbert function of `R/(I : f)`, as `dim R_j - dim (I:f)_j` for `j = 0..=e`
    /// (trailing zeros kept).
    pub fn colon_quotient_dims(&self, f: &Polynomial) -> Result<Vec<usize>> {
        if self.vanishes(f)? {
            return Err(Error::FormInIdeal);
        }
        (0..=self.socle_degree()).map(|j| self.lifted_rank(f, j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::{colon_slice_dim, parse_polynomial};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn ranks_in_complete_intersection() {
        let i = GradedIdeal::parse(2, Q, &["x1^2", "x2^2"]).unwrap();
        let a = GradedQuotient::new(i.clone(), 10).unwrap();
        assert_eq!(a.hilbert().values(), &[1, 2, 1]);
        let l = parse_polynomial("x1 + x2", 2, Q).unwrap();
        assert_eq!(a.multiplication_rank(&l, 1).unwrap(), (1, 1));
        assert_eq!(a.multiplication_rank(&l, 0).unwrap(), (1, 1));
        assert_eq!(a.multiplication_rank(&l, 2).unwrap(), (0, 0));
        let x1 = parse_polynomial("x1^2", 2, Q).unwrap();
        assert_eq!(a.multiplication_rank(&x1, 0).unwrap(), (0, 1));
        for k in 0..4 {
            assert_eq!(a.colon_slice_dim(&l, k).unwrap(), colon_slice_dim(&i, &l, k).unwrap());
        }
        assert_eq!(a.colon_quotient_dims(&l).unwrap(), vec![1, 1, 0]);
        assert_eq!(a.colon_slice_dim(&x1, 0), Err(Error::FormInIdeal));
    }

    #[test]
    fn rejects_foreign_forms() {
        let a = GradedQuotient::new(GradedIdeal::parse(2, Q, &["x1^2", "x2^2"]).unwrap(), 10).unwrap();
        let other = parse_polynomial("x1", 3, Q).unwrap();
        assert_eq!(a.lifted_rank(&other, 0), Err(Error::RingMismatch));
    }
}
