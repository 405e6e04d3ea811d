//! Enumeration-based recomputations of abelian-core results.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::OracleError;
use crate::abelian::{group_from_presentation, FinGenAbGroup, IntegerMatrix};

/// Default size guard for the exterior-square oracle.
pub const MAX_WEDGE_ORDER: u64 = 256;
/// Size guard for the Hom-count oracle.
pub const MAX_HOM_ORDER: u64 = 64;

/// Invariant factors of a finite group as machine integers, checking the
/// order against `limit`.
fn small_factors(
    a: &FinGenAbGroup,
    limit: u64,
    what: &'static str,
) -> Result<Vec<u64>, OracleError> {
    if !a.is_finite() {
        return Err(OracleError::Infinite(a.to_string()));
    }
    let order = a.order().expect("finite");
    if order > BigInt::from(limit) {
        return Err(OracleError::TooLarge {
            what,
            size: order.to_usize().unwrap_or(usize::MAX),
            limit: limit as usize,
        });
    }
    Ok(a.invariant_factors()
        .iter()
        .map(|d| d.to_u64().expect("bounded by limit"))
        .collect())
}

/// All elements of `⊕ Z/d_i` as coordinate vectors, in mixed-radix order.
pub fn elements(orders: &[u64]) -> Vec<Vec<u64>> {
    let total: u64 = orders.iter().product();
    (0..total)
        .map(|mut k| {
            orders
                .iter()
                .map(|&d| {
                    let x = k % d;
                    k /= d;
                    x
                })
                .collect()
        })
        .collect()
}

/// `Λ²A = (A ⊗ A) / ⟨a ⊗ a : a ∈ A⟩`, with `A ⊗ A` presented on all
/// `e_i ⊗ e_j` and every element `a` contributing its diagonal tensor.
pub fn exterior_square_bruteforce(a: &FinGenAbGroup) -> Result<FinGenAbGroup, OracleError> {
    exterior_square_bruteforce_with_limit(a, MAX_WEDGE_ORDER)
}

pub fn exterior_square_bruteforce_with_limit(
    a: &FinGenAbGroup,
    limit: u64,
) -> Result<FinGenAbGroup, OracleError> {
    let d = small_factors(a, limit, "exterior square oracle")?;
    let k = d.len();
    let gens = k * k;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for order in [d[i], d[j]] {
                let mut r = vec![0i64; gens];
                r[i * k + j] = order as i64;
                rows.push(r);
            }
        }
    }
    for x in elements(&d) {
        let mut r = vec![0i64; gens];
        for i in 0..k {
            for j in 0..k {
                r[i * k + j] = (x[i] * x[j]) as i64;
            }
        }
        if r.iter().any(|&v| v != 0) {
            rows.push(r);
        }
    }
    rows.sort();
    rows.dedup();
    let rel = IntegerMatrix::from_rows(gens, rows).expect("rows have gens entries");
    Ok(group_from_presentation(gens, &rel).expect("dimensions agree"))
}

/// Counts homomorphisms `A → B` by enumerating candidate images of each
/// canonical generator of `A` and keeping those killed by its order.
pub fn hom_count_bruteforce(a: &FinGenAbGroup, b: &FinGenAbGroup) -> Result<u64, OracleError> {
    let da = small_factors(a, MAX_HOM_ORDER, "Hom count oracle")?;
    let db = small_factors(b, MAX_HOM_ORDER, "Hom count oracle")?;
    let elems = elements(&db);
    let mut count = 1u64;
    for &order in &da {
        let valid = elems
            .iter()
            .filter(|y| y.iter().zip(&db).all(|(&c, &e)| (c * order) % e == 0))
            .count() as u64;
        count *= valid;
    }
    Ok(count)
}

/// Every canonical group of order exactly `n`: all chains `d_1 | … | d_k`
/// with product `n`.
pub fn groups_of_order(n: u64) -> Vec<FinGenAbGroup> {
    fn go(remaining: u64, last: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 1 {
            out.push(acc.clone());
            return;
        }
        // next factor is a multiple of `last` dividing `remaining`, and the
        // rest of the chain must still be divisible by it
        let mut d = last.max(2);
        while d <= remaining {
            if d.is_multiple_of(last) && remaining.is_multiple_of(d) {
                let rest = remaining / d;
                if rest == 1 || rest.is_multiple_of(d) {
                    acc.push(d);
                    go(rest, d, acc, out);
                    acc.pop();
                }
            }
            d += 1;
        }
    }
    let mut chains = Vec::new();
    go(n, 1, &mut Vec::new(), &mut chains);
    chains
        .into_iter()
        .map(|c| FinGenAbGroup::from_invariants(0, c).expect("chain"))
        .collect()
}

pub fn groups_up_to(max_order: u64) -> Vec<FinGenAbGroup> {
    (1..=max_order).flat_map(groups_of_order).collect()
}

/// Subgroup of elements killed by `n`, found by enumeration.
pub fn n_torsion_count(a: &FinGenAbGroup, n: u64) -> Result<u64, OracleError> {
    let d = small_factors(a, MAX_WEDGE_ORDER, "torsion count")?;
    Ok(elements(&d)
        .iter()
        .filter(|x| x.iter().zip(&d).all(|(&c, &e)| (c * n).is_multiple_of(e)))
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: &[i64]) -> FinGenAbGroup {
        FinGenAbGroup::from_invariants(0, f.iter().copied()).unwrap()
    }

    #[test]
    fn wedge_oracle_examples() {
        assert_eq!(exterior_square_bruteforce(&g(&[2, 2])).unwrap(), g(&[2]));
        assert!(exterior_square_bruteforce(&g(&[5])).unwrap().is_trivial());
        assert_eq!(exterior_square_bruteforce(&g(&[2, 6])).unwrap(), g(&[2]));
        assert_eq!(
            exterior_square_bruteforce(&g(&[2, 2, 2])).unwrap(),
            g(&[2, 2, 2])
        );
    }

    #[test]
    fn wedge_oracle_guards() {
        assert!(matches!(
            exterior_square_bruteforce(&g(&[2, 2, 2, 2, 2, 2, 2, 2, 2])),
            Err(OracleError::TooLarge { .. })
        ));
        assert!(exterior_square_bruteforce(&FinGenAbGroup::free(1)).is_err());
    }

    #[test]
    fn hom_counts() {
        assert_eq!(hom_count_bruteforce(&g(&[6]), &g(&[4])).unwrap(), 2);
        assert_eq!(
            hom_count_bruteforce(&FinGenAbGroup::trivial(), &g(&[7])).unwrap(),
            1
        );
        for a in 1..=8i64 {
            for b in 1..=8i64 {
                let expected = num_integer::gcd(a, b) as u64;
                let got =
                    hom_count_bruteforce(&FinGenAbGroup::cyclic(a), &FinGenAbGroup::cyclic(b))
                        .unwrap();
                assert_eq!(got, expected, "Hom(Z/{a}, Z/{b})");
            }
        }
    }

    #[test]
    fn group_enumeration() {
        // abelian groups of order 1..=16: 1,1,1,2,1,1,1,3,2,1,1,2,1,1,1,5
        let counts: Vec<usize> = (1..=16).map(|n| groups_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
        assert_eq!(groups_of_order(64).len(), 11);
    }

    #[test]
    fn torsion_by_enumeration() {
        assert_eq!(n_torsion_count(&g(&[12]), 4).unwrap(), 4);
        assert_eq!(n_torsion_count(&g(&[2, 4]), 2).unwrap(), 4);
    }
}
