use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{group_from_presentation, AbelianError, FinGenAbGroup, IntegerMatrix};

/// Cyclic summands of `a`, with 0 standing for `Z`.
fn cyclic_summands(a: &FinGenAbGroup) -> impl Iterator<Item = BigInt> + '_ {
    a.invariant_factors()
        .iter()
        .cloned()
        .chain(std::iter::repeat_n(BigInt::zero(), a.free_rank()))
}

/// `Hom(A, B)`, extended biadditively from `Hom(Z/a, Z/b) = Z/gcd(a, b)`,
/// `Hom(Z, Z/b) = Z/b` and `Hom(Z/a, Z) = 0`. At least one side must be
/// finite.
pub fn hom_group(a: &FinGenAbGroup, b: &FinGenAbGroup) -> Result<FinGenAbGroup, AbelianError> {
    if !a.is_finite() && !b.is_finite() {
        return Err(AbelianError::BothInfinite);
    }
    let mut orders = Vec::new();
    for x in cyclic_summands(a) {
        for y in cyclic_summands(b) {
            orders.push(match (x.is_zero(), y.is_zero()) {
                (_, false) => x.gcd(&y),
                (false, true) => BigInt::from(1),
                (true, true) => unreachable!("one side is finite"),
            });
        }
    }
    Ok(FinGenAbGroup::from_cyclic_orders(0, orders))
}

/// `A ⊗ B`, extended biadditively from `Z/a ⊗ Z/b = Z/gcd(a, b)` and
/// `Z ⊗ B = B`.
pub fn tensor_product(a: &FinGenAbGroup, b: &FinGenAbGroup) -> FinGenAbGroup {
    // gcd(0, y) = y and gcd(0, 0) = 0 cover the free cases uniformly.
    let orders: Vec<BigInt> = cyclic_summands(a)
        .flat_map(|x| cyclic_summands(b).map(move |y| x.gcd(&y)))
        .collect();
    FinGenAbGroup::from_cyclic_orders(0, orders)
}

/// `Λ²A` for finite `A`, from the presentation on `e_i ∧ e_j` (`i < j`) with
/// relations `d_i (e_i ∧ e_j)` and `d_j (e_i ∧ e_j)`. For a chain
/// `d_1 | … | d_k` this is `⊕_{i<j} Z/d_i`.
pub fn exterior_square(a: &FinGenAbGroup) -> Result<FinGenAbGroup, AbelianError> {
    if !a.is_finite() {
        return Err(AbelianError::InfiniteExterior(a.to_string()));
    }
    let d = a.invariant_factors();
    let k = d.len();
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    let mut rel = IntegerMatrix::zeros(2 * pairs.len(), pairs.len());
    for (col, &(i, j)) in pairs.iter().enumerate() {
        rel.set(2 * col, col, d[i].clone());
        rel.set(2 * col + 1, col, d[j].clone());
    }
    group_from_presentation(pairs.len(), &rel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(free: usize, f: &[i64]) -> FinGenAbGroup {
        FinGenAbGroup::from_invariants(free, f.iter().copied()).unwrap()
    }

    #[test]
    fn hom_examples() {
        assert_eq!(hom_group(&g(0, &[6]), &g(0, &[4])).unwrap(), g(0, &[2]));
        assert!(hom_group(&FinGenAbGroup::trivial(), &g(2, &[3]))
            .unwrap()
            .is_trivial());
        assert_eq!(
            hom_group(&g(0, &[4, 4, 4]), &g(0, &[4])).unwrap(),
            g(0, &[4, 4, 4])
        );
        assert_eq!(hom_group(&g(2, &[]), &g(0, &[3])).unwrap(), g(0, &[3, 3]));
        assert!(hom_group(&g(0, &[5]), &g(1, &[])).unwrap().is_trivial());
        assert_eq!(
            hom_group(&g(1, &[]), &g(1, &[])),
            Err(AbelianError::BothInfinite)
        );
    }

    #[test]
    fn tensor_examples() {
        assert!(tensor_product(&g(0, &[2]), &g(0, &[3])).is_trivial());
        assert_eq!(tensor_product(&g(0, &[4]), &g(0, &[6])), g(0, &[2]));
        let a = g(1, &[2, 6]);
        assert_eq!(tensor_product(&g(1, &[]), &a), a);
        assert_eq!(tensor_product(&g(2, &[]), &g(3, &[])), g(6, &[]));
    }

    #[test]
    fn exterior_examples() {
        assert_eq!(
            exterior_square(&g(0, &[5, 5, 5])).unwrap(),
            g(0, &[5, 5, 5])
        );
        assert_eq!(exterior_square(&g(0, &[2, 4])).unwrap(), g(0, &[2]));
        assert!(exterior_square(&g(0, &[7])).unwrap().is_trivial());
        assert!(exterior_square(&FinGenAbGroup::trivial())
            .unwrap()
            .is_trivial());
        assert!(exterior_square(&g(1, &[2])).is_err());
        // (2, 6, 12): pairs give 2, 2, 6
        assert_eq!(
            exterior_square(&g(0, &[2, 6, 12])).unwrap(),
            g(0, &[2, 2, 6])
        );
    }
}
