//! Sublattices of `Z^n` given by generating vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::snf::smith_normal_form;
use super::{group_from_presentation, AbelianError, FinGenAbGroup, IntegerMatrix};

/// A basis of the integer kernel `{x : m x = 0}`.
pub(crate) fn integer_kernel(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let s = smith_normal_form(m);
    let rank =
        s.d.diagonal_entries()
            .iter()
            .filter(|x| !x.is_zero())
            .count();
    // u m v = d, so the columns of v beyond the rank span the kernel.
    (rank..m.cols()).map(|j| s.v.column(j)).collect()
}

/// `span(upper) / span(lower)` inside `Z^dim`; `lower` must lie in `span(upper)`.
pub(crate) fn lattice_quotient(
    dim: usize,
    upper: &[Vec<BigInt>],
    lower: &[Vec<BigInt>],
) -> Result<FinGenAbGroup, AbelianError> {
    let k = IntegerMatrix::from_columns(dim, upper);
    let s = smith_normal_form(&k);
    let diag: Vec<BigInt> =
        s.d.diagonal_entries()
            .into_iter()
            .take_while(|x| !x.is_zero())
            .collect();
    let h = diag.len();
    // span(upper) has basis u^{-1}[:, i] * d_i for i < h, so a vector r of the
    // span has coordinates (u r)_i / d_i and (u r)_i = 0 beyond h.
    let mut rows = Vec::with_capacity(lower.len() * h);
    for r in lower {
        let y = s.u.mul_vector(r);
        if y[h..].iter().any(|x| !x.is_zero()) {
            return Err(AbelianError::NotContained);
        }
        for (yi, di) in y[..h].iter().zip(&diag) {
            if !yi.is_multiple_of(di) {
                return Err(AbelianError::NotContained);
            }
            rows.push(yi / di);
        }
    }
    let rel = IntegerMatrix::new(lower.len(), h, rows)?;
    group_from_presentation(h, &rel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| a.into()).collect()
    }

    #[test]
    fn kernel_of_row() {
        let m = IntegerMatrix::from_rows(3, vec![vec![1, 2, 3]]).unwrap();
        let ker = integer_kernel(&m);
        assert_eq!(ker.len(), 2);
        for x in &ker {
            assert!(m.mul_vector(x).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn quotient_of_lattices() {
        // 2Z^2 inside span{(1,1), (0,2)}: index 2
        let q = lattice_quotient(2, &[v(&[1, 1]), v(&[0, 2])], &[v(&[2, 0]), v(&[0, 2])]).unwrap();
        assert_eq!(q, FinGenAbGroup::cyclic(2));
        // Z^2 / 0 is free of rank 2
        let q = lattice_quotient(2, &[v(&[1, 0]), v(&[0, 1])], &[]).unwrap();
        assert_eq!(q, FinGenAbGroup::free(2));
        assert_eq!(
            lattice_quotient(2, &[v(&[2, 0])], &[v(&[1, 0])]),
            Err(AbelianError::NotContained)
        );
    }
}
