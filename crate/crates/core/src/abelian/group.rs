use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::snf::smith_diagonal;
use super::{AbelianError, IntegerMatrix};

/// A finitely generated abelian group `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` in
/// canonical form: each `d_i ≥ 2` and `d_i | d_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FinGenAbGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FinGenAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// `Z/n`, with `n = 0` meaning `Z` and `n = ±1` the trivial group.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        Self::from_cyclic_orders(0, [n.into()])
    }

    /// `(Z/n)^k`.
    pub fn elementary(n: impl Into<BigInt>, k: usize) -> Self {
        let n = n.into();
        Self::from_cyclic_orders(0, std::iter::repeat_n(n, k))
    }

    /// Builds a group from an already canonical chain; rejects anything else.
    pub fn from_invariants<I>(free_rank: usize, factors: I) -> Result<Self, AbelianError>
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let invariant_factors: Vec<BigInt> = factors.into_iter().map(Into::into).collect();
        let two = BigInt::from(2);
        let ok = invariant_factors.iter().all(|d| *d >= two)
            && invariant_factors
                .windows(2)
                .all(|w| w[1].is_multiple_of(&w[0]));
        if !ok {
            return Err(AbelianError::NotCanonical(format!(
                "{:?}",
                invariant_factors
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            )));
        }
        Ok(Self {
            free_rank,
            invariant_factors,
        })
    }

    /// Canonical form of `Z^free_rank ⊕ ⊕_i Z/c_i` for arbitrary cyclic
    /// orders `c_i` (sign ignored, 0 counts as a free summand, 1 vanishes).
    pub fn from_cyclic_orders<I>(free_rank: usize, orders: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let mut free_rank = free_rank;
        let mut ds: Vec<BigInt> = Vec::new();
        for c in orders {
            let c = c.into().abs();
            if c.is_zero() {
                free_rank += 1;
            } else if !c.is_one() {
                ds.push(c);
            }
        }
        // Pairwise (gcd, lcm) replacement leaves a divisibility chain and
        // preserves the isomorphism type (Z/a ⊕ Z/b ≅ Z/gcd ⊕ Z/lcm).
        let n = ds.len();
        for i in 0..n {
            for j in i + 1..n {
                if ds[j].is_multiple_of(&ds[i]) {
                    continue;
                }
                let g = ds[i].gcd(&ds[j]);
                let l = &ds[i] / &g * &ds[j];
                ds[i] = g;
                ds[j] = l;
            }
        }
        ds.retain(|d| !d.is_one());
        Self {
            free_rank,
            invariant_factors: ds,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Number of canonical generators: torsion generators first, then free.
    pub fn generator_count(&self) -> usize {
        self.invariant_factors.len() + self.free_rank
    }

    /// Order of canonical generator `i`, 0 for free generators.
    pub fn generator_order(&self, i: usize) -> BigInt {
        self.invariant_factors
            .get(i)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product())
    }

    /// Exponent of the torsion subgroup (1 when torsion-free).
    pub fn torsion_exponent(&self) -> BigInt {
        self.invariant_factors
            .last()
            .cloned()
            .unwrap_or_else(BigInt::one)
    }

    pub fn torsion_subgroup(&self) -> Self {
        Self {
            free_rank: 0,
            invariant_factors: self.invariant_factors.clone(),
        }
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.generator_count()
    }

    /// Relation matrix of the canonical presentation: one row `d_i e_i` per
    /// invariant factor, over `generator_count()` columns.
    pub fn presentation(&self) -> (usize, IntegerMatrix) {
        let n = self.generator_count();
        let mut m = IntegerMatrix::zeros(self.invariant_factors.len(), n);
        for (i, d) in self.invariant_factors.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        (n, m)
    }

    /// Prime-power cyclic summands, sorted by prime then exponent.
    pub fn elementary_divisors(&self) -> Vec<(BigInt, u32)> {
        let mut out = Vec::new();
        for d in &self.invariant_factors {
            for (p, e) in factorize(d) {
                out.push((p, e));
            }
        }
        out.sort();
        out
    }

    /// Reduces a coordinate vector on the canonical generators to normal form
    /// (torsion coordinates into `[0, d_i)`).
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        x.iter()
            .enumerate()
            .map(|(i, v)| match self.invariant_factors.get(i) {
                Some(d) => v.mod_floor(d),
                None => v.clone(),
            })
            .collect()
    }

    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        self.reduce(x).iter().all(Zero::is_zero)
    }
}

/// Trial-division factorization; fine for the moduli this crate deals with.
pub(crate) fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// Cokernel of the relation matrix (rows are relations) in canonical form.
pub fn group_from_presentation(
    generators: usize,
    relations: &IntegerMatrix,
) -> Result<FinGenAbGroup, AbelianError> {
    if relations.cols() != generators {
        return Err(AbelianError::DimensionMismatch {
            generators,
            found: relations.cols(),
        });
    }
    if let Some(per_gen) = monomial_orders(relations) {
        return Ok(FinGenAbGroup::from_cyclic_orders(0, per_gen));
    }
    let diag = smith_diagonal(relations);
    let zeros_beyond = generators - diag.len();
    Ok(FinGenAbGroup::from_cyclic_orders(zeros_beyond, diag))
}

/// When every relation touches a single generator the cokernel splits as
/// `⊕ Z/gcd(relations on e_j)`; returns those gcds.
fn monomial_orders(relations: &IntegerMatrix) -> Option<Vec<BigInt>> {
    let mut orders = vec![BigInt::zero(); relations.cols()];
    for row in relations.row_vectors() {
        let mut nz = row.iter().enumerate().filter(|(_, x)| !x.is_zero());
        let Some((j, x)) = nz.next() else { continue };
        if nz.next().is_some() {
            return None;
        }
        orders[j] = orders[j].gcd(x);
    }
    Some(orders)
}

pub fn direct_sum(a: &FinGenAbGroup, b: &FinGenAbGroup) -> FinGenAbGroup {
    FinGenAbGroup::from_cyclic_orders(
        a.free_rank + b.free_rank,
        a.invariant_factors
            .iter()
            .chain(&b.invariant_factors)
            .cloned(),
    )
}

/// Elements killed by `n`: `⊕ Z/gcd(d_i, n) ⊕ (Z/n)^free_rank`.
pub fn n_torsion(a: &FinGenAbGroup, n: &BigInt) -> Result<FinGenAbGroup, AbelianError> {
    if !n.is_positive() {
        return Err(AbelianError::NonPositive);
    }
    let orders = a
        .invariant_factors
        .iter()
        .map(|d| d.gcd(n))
        .chain(std::iter::repeat_n(n.clone(), a.free_rank));
    Ok(FinGenAbGroup::from_cyclic_orders(0, orders))
}

impl fmt::Display for FinGenAbGroup {
    /// `0`, `Z^2`, `(Z/2)^3 ⊕ Z/4`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.invariant_factors.len() {
            let d = &self.invariant_factors[i];
            let run = self.invariant_factors[i..]
                .iter()
                .take_while(|x| *x == d)
                .count();
            parts.push(if run == 1 {
                format!("Z/{d}")
            } else {
                format!("(Z/{d})^{run}")
            });
            i += run;
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    free_rank: usize,
    invariant_factors: Vec<serde_json::Number>,
}

impl Serialize for FinGenAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let invariant_factors = self
            .invariant_factors
            .iter()
            .map(|d| d.to_string().parse().expect("decimal integer"))
            .collect();
        GroupRepr {
            free_rank: self.free_rank,
            invariant_factors,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinGenAbGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = GroupRepr::deserialize(d)?;
        let factors = repr
            .invariant_factors
            .iter()
            .map(|n| {
                n.as_str().parse::<BigInt>().map_err(|_| {
                    D::Error::custom(format!("invariant factor {n} is not an integer"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        FinGenAbGroup::from_invariants(repr.free_rank, factors).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(free: usize, f: &[i64]) -> FinGenAbGroup {
        FinGenAbGroup::from_invariants(free, f.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_chain_enforced() {
        assert!(FinGenAbGroup::from_invariants(0, [2, 3]).is_err());
        assert!(FinGenAbGroup::from_invariants(0, [1, 2]).is_err());
        assert!(FinGenAbGroup::from_invariants(0, [2, 6, 12]).is_ok());
    }

    #[test]
    fn presentations() {
        let rel = IntegerMatrix::from_rows(2, vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(group_from_presentation(2, &rel).unwrap(), g(0, &[6]));
        let none = IntegerMatrix::zeros(0, 1);
        assert_eq!(group_from_presentation(1, &none).unwrap(), g(1, &[]));
        let id = IntegerMatrix::identity(2);
        assert!(group_from_presentation(2, &id).unwrap().is_trivial());
        assert!(matches!(
            group_from_presentation(3, &id),
            Err(AbelianError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn non_monomial_presentation() {
        // <a, b | 2a + 4b, 6a + 8b> ≅ Z/2 ⊕ Z/4
        let rel = IntegerMatrix::from_rows(2, vec![vec![2, 4], vec![6, 8]]).unwrap();
        assert_eq!(group_from_presentation(2, &rel).unwrap(), g(0, &[2, 4]));
        // <a, b, c | a - b> ≅ Z^2
        let rel = IntegerMatrix::from_rows(3, vec![vec![1, -1, 0]]).unwrap();
        assert_eq!(group_from_presentation(3, &rel).unwrap(), g(2, &[]));
    }

    #[test]
    fn sums() {
        assert_eq!(direct_sum(&g(0, &[2]), &g(0, &[4])), g(0, &[2, 4]));
        assert_eq!(direct_sum(&g(0, &[2]), &g(0, &[3])), g(0, &[6]));
        let a = g(1, &[2, 6]);
        assert_eq!(direct_sum(&a, &FinGenAbGroup::trivial()), a);
        assert_eq!(
            direct_sum(&g(0, &[4]), &g(0, &[6])).order(),
            Some(BigInt::from(24))
        );
    }

    #[test]
    fn torsion_parts() {
        assert_eq!(n_torsion(&g(0, &[12]), &4.into()).unwrap(), g(0, &[4]));
        assert!(n_torsion(&g(2, &[6]), &1.into()).unwrap().is_trivial());
        assert_eq!(n_torsion(&g(3, &[]), &5.into()).unwrap(), g(0, &[5, 5, 5]));
        assert!(n_torsion(&g(0, &[2]), &0.into()).is_err());
    }

    #[test]
    fn display_and_orders() {
        assert_eq!(FinGenAbGroup::trivial().to_string(), "0");
        assert_eq!(g(2, &[2, 2, 4]).to_string(), "Z^2 ⊕ (Z/2)^2 ⊕ Z/4");
        assert_eq!(g(1, &[]).order(), None);
        assert_eq!(FinGenAbGroup::trivial().order(), Some(BigInt::one()));
        assert_eq!(FinGenAbGroup::cyclic(0), g(1, &[]));
        assert_eq!(FinGenAbGroup::cyclic(-6), g(0, &[6]));
    }

    #[test]
    fn elementary_divisors_of_z12() {
        let e = g(0, &[12]).elementary_divisors();
        assert_eq!(e, vec![(BigInt::from(2), 2), (BigInt::from(3), 1)]);
    }

    #[test]
    fn serde_shape() {
        let a = g(1, &[2, 4]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"free_rank":1,"invariant_factors":[2,4]}"#);
        assert_eq!(serde_json::from_str::<FinGenAbGroup>(&s).unwrap(), a);
        assert!(serde_json::from_str::<FinGenAbGroup>(
            r#"{"free_rank":0,"invariant_factors":[3,2]}"#
        )
        .is_err());
        let big = FinGenAbGroup::elementary(BigInt::from(10).pow(30), 1);
        let s = serde_json::to_string(&big).unwrap();
        assert!(s.contains("1000000000000000000000000000000"));
        assert_eq!(serde_json::from_str::<FinGenAbGroup>(&s).unwrap(), big);
    }
}
