use num_bigint::BigInt;
use num_traits::Zero;

use super::lattice::{integer_kernel, lattice_quotient};
use super::{group_from_presentation, AbelianError, FinGenAbGroup, IntegerMatrix};

/// A homomorphism between canonical groups. Column `i` of the matrix is the
/// image of source generator `i` in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FinGenAbGroup,
    target: FinGenAbGroup,
    matrix: IntegerMatrix,
}

impl GroupHom {
    /// Checks shape and well-definedness; torsion coordinates of the images
    /// are reduced into `[0, e_j)`.
    pub fn new(
        source: FinGenAbGroup,
        target: FinGenAbGroup,
        matrix: IntegerMatrix,
    ) -> Result<Self, AbelianError> {
        let (rows, cols) = (target.generator_count(), source.generator_count());
        if matrix.rows() != rows || matrix.cols() != cols {
            return Err(AbelianError::HomShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: rows,
                expected_cols: cols,
            });
        }
        let mut reduced = matrix;
        for j in 0..cols {
            let image = target.reduce(&reduced.column(j));
            let d = source.generator_order(j);
            if !d.is_zero() {
                let scaled: Vec<BigInt> = image.iter().map(|x| x * &d).collect();
                if !target.is_zero_element(&scaled) {
                    return Err(AbelianError::NotWellDefined {
                        generator: j,
                        order: d.to_string(),
                    });
                }
            }
            for (i, x) in image.into_iter().enumerate() {
                reduced.set(i, j, x);
            }
        }
        Ok(Self {
            source,
            target,
            matrix: reduced,
        })
    }

    pub fn identity(a: &FinGenAbGroup) -> Self {
        Self::scalar(a, 1)
    }

    pub fn zero(source: &FinGenAbGroup, target: &FinGenAbGroup) -> Self {
        Self::new(
            source.clone(),
            target.clone(),
            IntegerMatrix::zeros(target.generator_count(), source.generator_count()),
        )
        .expect("zero map is well defined")
    }

    /// Multiplication by `k` on `a`.
    pub fn scalar(a: &FinGenAbGroup, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        let n = a.generator_count();
        let m = IntegerMatrix::diagonal(std::iter::repeat_n(k, n));
        Self::new(a.clone(), a.clone(), m).expect("scalar map is well defined")
    }

    pub fn source(&self) -> &FinGenAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinGenAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.target.reduce(&self.matrix.mul_vector(x))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom, AbelianError> {
        if inner.target != self.source {
            return Err(AbelianError::NotComposable {
                target: inner.target.to_string(),
                source_group: self.source.to_string(),
            });
        }
        GroupHom::new(
            inner.source.clone(),
            self.target.clone(),
            &self.matrix * &inner.matrix,
        )
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.cols()).all(|j| self.target.is_zero_element(&self.matrix.column(j)))
    }

    /// Lattice in `Z^{source gens}` of vectors mapping to zero; it contains
    /// the source relations.
    pub(crate) fn lifted_kernel(&self) -> Vec<Vec<BigInt>> {
        let s = self.source.generator_count();
        let t = self.target.generator_count();
        let factors = self.target.invariant_factors();
        // [M | -diag(e)] (x, y) = 0  <=>  M x lies in the target relations
        let mut rel = IntegerMatrix::zeros(t, factors.len());
        for (j, e) in factors.iter().enumerate() {
            rel.set(j, j, -e);
        }
        let big = self.matrix.hstack(&rel);
        integer_kernel(&big)
            .into_iter()
            .map(|mut v| {
                v.truncate(s);
                v
            })
            .collect()
    }

    pub(crate) fn source_relations(&self) -> Vec<Vec<BigInt>> {
        relation_vectors(&self.source)
    }

    pub fn kernel(&self) -> FinGenAbGroup {
        lattice_quotient(
            self.source.generator_count(),
            &self.lifted_kernel(),
            &self.source_relations(),
        )
        .expect("source relations lie in the lifted kernel")
    }

    pub fn image(&self) -> FinGenAbGroup {
        // image ≅ source / kernel = Z^s / lifted kernel
        let s = self.source.generator_count();
        let ker = self.lifted_kernel();
        let rel = IntegerMatrix::from_columns(s, &ker).transpose();
        group_from_presentation(s, &rel).expect("dimensions agree")
    }

    pub fn cokernel(&self) -> FinGenAbGroup {
        let t = self.target.generator_count();
        let (_, own) = self.target.presentation();
        let rel = self.matrix.transpose().vstack(&own);
        group_from_presentation(t, &rel).expect("dimensions agree")
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }
}

pub(crate) fn relation_vectors(a: &FinGenAbGroup) -> Vec<Vec<BigInt>> {
    let n = a.generator_count();
    a.invariant_factors()
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let mut v = vec![BigInt::zero(); n];
            v[i] = d.clone();
            v
        })
        .collect()
}
