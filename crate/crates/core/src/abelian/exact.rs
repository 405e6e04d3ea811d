use num_bigint::BigInt;

use super::hom::relation_vectors;
use super::lattice::lattice_quotient;
use super::{AbelianError, GroupHom};

/// Outcome of checking `0 → A →f B →g C → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessCertificate {
    pub injective: bool,
    pub surjective: bool,
    pub composite_zero: bool,
    /// `image(f) = kernel(g)`.
    pub exact_at_middle: bool,
    /// `(|A|, |B|, |C|)` when all three are finite.
    pub orders: Option<(BigInt, BigInt, BigInt)>,
    /// `|A| · |C| = |B|`, when all three are finite.
    pub cardinality_identity: Option<bool>,
}

impl ExactnessCertificate {
    pub fn is_exact(&self) -> bool {
        self.injective
            && self.surjective
            && self.exact_at_middle
            && self.cardinality_identity.unwrap_or(true)
    }
}

pub fn verify_short_exact(
    f: &GroupHom,
    g: &GroupHom,
) -> Result<ExactnessCertificate, AbelianError> {
    if f.target() != g.source() {
        return Err(AbelianError::NotComposable {
            target: f.target().to_string(),
            source_group: g.source().to_string(),
        });
    }
    let composite_zero = g.compose(f)?.is_zero();
    let exact_at_middle = composite_zero && {
        // kernel(g) / image(f), both lifted to Z^{middle gens}
        let dim = g.source().generator_count();
        let upper = g.lifted_kernel();
        let mut lower = relation_vectors(g.source());
        lower.extend((0..f.matrix().cols()).map(|j| f.matrix().column(j)));
        lattice_quotient(dim, &upper, &lower)?.is_trivial()
    };
    let orders = match (f.source().order(), f.target().order(), g.target().order()) {
        (Some(a), Some(b), Some(c)) => Some((a, b, c)),
        _ => None,
    };
    let cardinality_identity = orders.as_ref().map(|(a, b, c)| a * c == *b);
    Ok(ExactnessCertificate {
        injective: f.is_injective(),
        surjective: g.is_surjective(),
        composite_zero,
        exact_at_middle,
        orders,
        cardinality_identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{direct_sum, FinGenAbGroup, IntegerMatrix};

    fn cyc(n: i64) -> FinGenAbGroup {
        FinGenAbGroup::cyclic(n)
    }

    #[test]
    fn z2_z4_z2() {
        let f = GroupHom::new(cyc(2), cyc(4), IntegerMatrix::diagonal([2])).unwrap();
        let g = GroupHom::new(cyc(4), cyc(2), IntegerMatrix::diagonal([1])).unwrap();
        let c = verify_short_exact(&f, &g).unwrap();
        assert!(c.is_exact(), "{c:?}");
        assert_eq!(c.cardinality_identity, Some(true));
    }

    #[test]
    fn split_sequence() {
        let mid = direct_sum(&cyc(2), &cyc(2));
        let f = GroupHom::new(
            cyc(2),
            mid.clone(),
            IntegerMatrix::from_rows(1, vec![vec![1], vec![0]]).unwrap(),
        )
        .unwrap();
        let g = GroupHom::new(
            mid,
            cyc(2),
            IntegerMatrix::from_rows(2, vec![vec![0, 1]]).unwrap(),
        )
        .unwrap();
        assert!(verify_short_exact(&f, &g).unwrap().is_exact());
    }

    #[test]
    fn zero_maps_not_exact() {
        let z = GroupHom::zero(&cyc(2), &cyc(2));
        let c = verify_short_exact(&z, &z).unwrap();
        assert!(!c.surjective);
        assert!(!c.injective);
        assert!(!c.is_exact());
    }

    #[test]
    fn not_exact_in_middle() {
        // 0 -> Z/2 -> Z/2 ⊕ Z/2 -> Z/2 with g killing the wrong factor
        let mid = direct_sum(&cyc(2), &cyc(2));
        let f = GroupHom::new(
            cyc(2),
            mid.clone(),
            IntegerMatrix::from_rows(1, vec![vec![1], vec![0]]).unwrap(),
        )
        .unwrap();
        let g = GroupHom::new(
            mid,
            cyc(2),
            IntegerMatrix::from_rows(2, vec![vec![1, 0]]).unwrap(),
        )
        .unwrap();
        let c = verify_short_exact(&f, &g).unwrap();
        assert!(c.injective && c.surjective);
        assert!(!c.composite_zero && !c.exact_at_middle);
    }

    #[test]
    fn composability() {
        let f = GroupHom::identity(&cyc(2));
        let g = GroupHom::identity(&cyc(3));
        assert!(matches!(
            verify_short_exact(&f, &g),
            Err(AbelianError::NotComposable { .. })
        ));
    }

    #[test]
    fn infinite_sequence() {
        // 0 -> Z -2-> Z -> Z/2 -> 0
        let z = FinGenAbGroup::free(1);
        let f = GroupHom::scalar(&z, 2);
        let g = GroupHom::new(z, cyc(2), IntegerMatrix::diagonal([1])).unwrap();
        let c = verify_short_exact(&f, &g).unwrap();
        assert!(c.is_exact());
        assert_eq!(c.orders, None);
    }
}
