//! Invariants of a connected algebraic group `G` with abelian variety
//! quotient of dimension `g`, affine part of rank `r` and Néron–Severi rank
//! `ρ`, for coefficients `n` prime to the characteristic.
//!
//! Writing `m = 2g + r`:
//!
//! * `π₁^(p')(G)` is abelian and a quotient of `Z_(p')^m`; free of rank `m`
//!   when `G` is commutative.
//! * `ₙG ≅ (Z/n)^m`, `H¹(G, μₙ) ≅ Hom(ₙG, μₙ)` and `H*(G, Z/n)` is the
//!   exterior algebra on `H¹`, so degree `i` has rank `C(m, i)`.
//! * `0 → Pic G/n → Hom(Λ²(ₙG), μₙ) → ₙBr G → 0` is exact with
//!   `Pic G/n ≅ (Z/n)^ρ`, and the ℓ-primary Brauer group has corank
//!   `C(m, 2) − ρ`.
//!
//! `μₙ` is identified with `Z/n` throughout.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{
    direct_sum, exterior_square, hom_group, tensor_product, verify_short_exact, AbelianError,
    ExactnessCertificate, FinGenAbGroup, GroupHom, IntegerMatrix,
};
use crate::descriptors::{
    coprimality_guard, is_prime, CoprimalityError, GroupDescriptor, HomSpaceDescriptor,
    ValidationError,
};

/// Largest number of cyclic summands any operation here will materialise.
pub const MAX_MATERIALIZED_RANK: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Coprimality(#[from] CoprimalityError),
    #[error(
        "{operation} needs a commutative group; only the generator bound is available otherwise"
    )]
    NonCommutative { operation: &'static str },
    #[error("ℓ = {ell} equals the characteristic")]
    ExcludedPrime { ell: u64 },
    #[error("ℓ = {0} is not a prime")]
    NotPrime(u64),
    #[error("n must be positive")]
    NonPositive,
    #[error("result would have {0} cyclic summands, above the limit of {MAX_MATERIALIZED_RANK}")]
    TooLarge(u128),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl From<AbelianError> for InvariantError {
    fn from(e: AbelianError) -> Self {
        InvariantError::Internal(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    Exact,
    BoundOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Report {
    /// Always true: prime-to-p covers of a connected group are central
    /// isogenies, so the group is abelian.
    pub abelian: bool,
    pub exactness: Exactness,
    /// Rank over `Z_(p')`; present only when exact.
    pub free_rank: Option<u64>,
    pub generator_bound: u64,
    /// 0 in characteristic 0.
    pub excluded_prime: u64,
    pub torsion_possible: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopySequenceRanks {
    /// `π₁` of the affine part surjects onto a quotient of `Z_(p')^r`.
    pub affine_part_bound: u64,
    /// `π₁^(p')(A) ≅ Z_(p')^{2g}`.
    pub abelian_part_rank: u64,
}

impl HomotopySequenceRanks {
    pub fn total(&self) -> u64 {
        self.affine_part_bound + self.abelian_part_rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyProfile {
    pub n: u64,
    pub m: u64,
    /// `betti[i]` is the Z/n-rank of `H^i(G, Z/n)`.
    pub betti: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BerkovichReport {
    pub n: u64,
    /// `Pic G / n`.
    pub left: FinGenAbGroup,
    /// `Hom(Λ²(ₙG), μₙ)`.
    pub middle: FinGenAbGroup,
    /// `ₙBr G`.
    pub right: FinGenAbGroup,
    pub certificate: ExactnessCertificate,
}

impl BerkovichReport {
    pub fn is_exact(&self) -> bool {
        self.certificate.is_exact()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSpaceBound {
    /// `π₁^(p')(G/H)` is a quotient of `Z_(p')^bound`.
    pub bound: u64,
    pub abelian: bool,
}

fn checked(d: &GroupDescriptor) -> Result<(), InvariantError> {
    d.validate()?;
    Ok(())
}

fn commutative(d: &GroupDescriptor, operation: &'static str) -> Result<(), InvariantError> {
    checked(d)?;
    if !d.commutative {
        return Err(InvariantError::NonCommutative { operation });
    }
    Ok(())
}

fn coefficients(
    d: &GroupDescriptor,
    n: u64,
    operation: &'static str,
) -> Result<(), InvariantError> {
    commutative(d, operation)?;
    if n == 0 {
        return Err(InvariantError::NonPositive);
    }
    coprimality_guard(d, n)?;
    Ok(())
}

fn ell_ok(d: &GroupDescriptor, ell: u64) -> Result<(), InvariantError> {
    if !is_prime(ell) {
        return Err(InvariantError::NotPrime(ell));
    }
    if ell == d.char_p {
        return Err(InvariantError::ExcludedPrime { ell });
    }
    Ok(())
}

fn materialised(count: u128) -> Result<usize, InvariantError> {
    if count > u128::from(MAX_MATERIALIZED_RANK) {
        return Err(InvariantError::TooLarge(count));
    }
    Ok(count as usize)
}

/// `C(m, 2)`.
fn pairs(m: u64) -> u128 {
    let m = u128::from(m);
    m * m.saturating_sub(1) / 2
}

pub fn pi1_report(d: &GroupDescriptor) -> Result<Pi1Report, InvariantError> {
    checked(d)?;
    let m = d.m();
    Ok(if d.commutative {
        // π₁/n has rank m for every n prime to p and the group is free.
        Pi1Report {
            abelian: true,
            exactness: Exactness::Exact,
            free_rank: Some(m),
            generator_bound: m,
            excluded_prime: d.char_p,
            torsion_possible: false,
        }
    } else {
        Pi1Report {
            abelian: true,
            exactness: Exactness::BoundOnly,
            free_rank: None,
            generator_bound: m,
            excluded_prime: d.char_p,
            torsion_possible: true,
        }
    })
}

pub fn homotopy_sequence_ranks(
    d: &GroupDescriptor,
) -> Result<HomotopySequenceRanks, InvariantError> {
    checked(d)?;
    Ok(HomotopySequenceRanks {
        affine_part_bound: u64::from(d.r),
        abelian_part_rank: 2 * u64::from(d.g),
    })
}

/// `ₙG ≅ (Z/n)^{2g+r}`.
pub fn n_torsion_group(d: &GroupDescriptor, n: u64) -> Result<FinGenAbGroup, InvariantError> {
    coefficients(d, n, "n-torsion")?;
    let k = materialised(u128::from(d.m()))?;
    Ok(FinGenAbGroup::elementary(n, k))
}

/// Z_ℓ-rank of the Tate module.
pub fn tate_rank(d: &GroupDescriptor, ell: u64) -> Result<u64, InvariantError> {
    commutative(d, "Tate module rank")?;
    ell_ok(d, ell)?;
    Ok(d.m())
}

/// Ranks of `H^i(G, Z/n)`, `0 ≤ i ≤ 2g + r`.
pub fn cohomology_profile(
    d: &GroupDescriptor,
    n: u64,
) -> Result<CohomologyProfile, InvariantError> {
    coefficients(d, n, "cohomology profile")?;
    let m = d.m();
    // C(64, 32) is the largest central binomial that fits in u64.
    if m > 64 {
        return Err(InvariantError::TooLarge(u128::from(m)));
    }
    let mut betti = Vec::with_capacity(m as usize + 1);
    let mut c: u128 = 1;
    for i in 0..=m {
        betti.push(u64::try_from(c).map_err(|_| InvariantError::TooLarge(c))?);
        c = c * u128::from(m - i) / u128::from(i + 1);
    }
    Ok(CohomologyProfile { n, m, betti })
}

/// `H¹(G, μₙ) ≅ Hom(ₙG, μₙ)`.
pub fn h1_mu_n(d: &GroupDescriptor, n: u64) -> Result<FinGenAbGroup, InvariantError> {
    let torsion = n_torsion_group(d, n)?;
    Ok(hom_group(&torsion, &FinGenAbGroup::cyclic(n))?)
}

/// `Pic G / n ≅ NS(A) ⊗ Z/n = (Z/n)^ρ`: the divisible part of `Pic G` dies
/// mod n and `NS(A) ≅ Z^ρ` is torsion free.
pub fn picard_mod_n(d: &GroupDescriptor, n: u64) -> Result<FinGenAbGroup, InvariantError> {
    coefficients(d, n, "Pic mod n")?;
    let rho = materialised(u128::from(d.rho))?;
    Ok(tensor_product(
        &FinGenAbGroup::free(rho),
        &FinGenAbGroup::cyclic(n),
    ))
}

/// Prime-power factorisation of a machine integer.
fn prime_powers(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn berkovich_sequence(d: &GroupDescriptor, n: u64) -> Result<BerkovichReport, InvariantError> {
    let left = picard_mod_n(d, n)?;
    let torsion = n_torsion_group(d, n)?;
    let c = materialised(pairs(d.m()))?;
    let middle = hom_group(&exterior_square(&torsion)?, &FinGenAbGroup::cyclic(n))?;
    let rho = d.rho as usize;

    // ₙBr G, assembled one prime power of n at a time.
    let right = prime_powers(n)
        .into_iter()
        .map(|q| FinGenAbGroup::elementary(q, c - rho))
        .fold(FinGenAbGroup::trivial(), |acc, x| direct_sum(&acc, &x));

    let expected_middle = FinGenAbGroup::elementary(n, c);
    if middle != expected_middle {
        return Err(InvariantError::Internal(format!(
            "Hom(Λ²(ₙG), μₙ) came out as {middle}, expected {expected_middle}"
        )));
    }

    // Model sequence: (Z/n)^ρ onto the first ρ coordinates of (Z/n)^C, then
    // projection onto the remaining C − ρ.
    let mut inc = IntegerMatrix::zeros(middle.generator_count(), left.generator_count());
    for i in 0..left.generator_count() {
        inc.set(i, i, BigInt::from(1));
    }
    let mut proj = IntegerMatrix::zeros(right.generator_count(), middle.generator_count());
    let offset = middle.generator_count() - right.generator_count();
    for i in 0..right.generator_count() {
        proj.set(i, offset + i, BigInt::from(1));
    }
    let f = GroupHom::new(left.clone(), middle.clone(), inc)?;
    let g = GroupHom::new(middle.clone(), right.clone(), proj)?;
    let certificate = verify_short_exact(&f, &g)?;
    if !certificate.is_exact() {
        return Err(InvariantError::Internal(format!(
            "sequence {left} → {middle} → {right} failed its exactness check: {certificate:?}"
        )));
    }
    Ok(BerkovichReport {
        n,
        left,
        middle,
        right,
        certificate,
    })
}

/// Corank of the ℓ-primary part of `Br G`: `(2g+r)(2g+r−1)/2 − ρ`.
pub fn brauer_ell_corank(d: &GroupDescriptor, ell: u64) -> Result<u64, InvariantError> {
    commutative(d, "Brauer corank")?;
    ell_ok(d, ell)?;
    let c = pairs(d.m()) - u128::from(d.rho);
    u64::try_from(c).map_err(|_| InvariantError::TooLarge(c))
}

/// `π₁^(p')(G/H)` for connected `H` is abelian and a quotient of
/// `Z_(p')^{2(g − g_H) + r − r_H}`.
pub fn homspace_pi1_bound(x: &HomSpaceDescriptor) -> Result<HomSpaceBound, InvariantError> {
    x.validate()?;
    let bound = 2 * u64::from(x.group.g - x.g_h) + u64::from(x.group.r - x.r_h);
    Ok(HomSpaceBound {
        bound,
        abelian: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comm(p: u64, g: u32, r: u32, rho: u64) -> GroupDescriptor {
        GroupDescriptor::new(p, g, r, rho, true)
    }

    #[test]
    fn pi1_exact_cases() {
        let e = pi1_report(&comm(0, 1, 0, 1)).unwrap();
        assert_eq!(e.exactness, Exactness::Exact);
        assert_eq!(e.free_rank, Some(2));
        assert!(!e.torsion_possible);
        assert_eq!(pi1_report(&comm(0, 0, 3, 0)).unwrap().free_rank, Some(3));
    }

    #[test]
    fn pi1_bound_only_for_so5() {
        let so5 = GroupDescriptor::new(0, 0, 2, 0, false);
        let rep = pi1_report(&so5).unwrap();
        assert_eq!(rep.exactness, Exactness::BoundOnly);
        assert_eq!(rep.generator_bound, 2);
        assert!(rep.torsion_possible && rep.abelian);
        assert_eq!(rep.free_rank, None);
    }

    #[test]
    fn homotopy_ranks() {
        let h = homotopy_sequence_ranks(&comm(0, 2, 3, 1)).unwrap();
        assert_eq!(
            (h.affine_part_bound, h.abelian_part_rank, h.total()),
            (3, 4, 7)
        );
        let h = homotopy_sequence_ranks(&comm(0, 0, 0, 0)).unwrap();
        assert_eq!(h.total(), 0);
        let h = homotopy_sequence_ranks(&comm(0, 1, 0, 1)).unwrap();
        assert_eq!((h.affine_part_bound, h.abelian_part_rank), (0, 2));
    }

    #[test]
    fn torsion_and_guards() {
        assert_eq!(
            n_torsion_group(&comm(0, 1, 1, 1), 3).unwrap(),
            FinGenAbGroup::elementary(3, 3)
        );
        assert!(n_torsion_group(&comm(0, 2, 2, 1), 1).unwrap().is_trivial());
        assert!(matches!(
            n_torsion_group(&comm(5, 0, 1, 0), 10),
            Err(InvariantError::Coprimality(_))
        ));
        assert!(matches!(
            n_torsion_group(&GroupDescriptor::new(0, 0, 1, 0, false), 2),
            Err(InvariantError::NonCommutative { .. })
        ));
        assert_eq!(
            n_torsion_group(&comm(0, 0, 1, 0), 0),
            Err(InvariantError::NonPositive)
        );
    }

    #[test]
    fn tate() {
        assert_eq!(tate_rank(&comm(0, 1, 0, 1), 2), Ok(2));
        assert_eq!(tate_rank(&comm(0, 0, 0, 0), 2), Ok(0));
        assert_eq!(
            tate_rank(&comm(3, 0, 1, 0), 3),
            Err(InvariantError::ExcludedPrime { ell: 3 })
        );
        assert_eq!(
            tate_rank(&comm(0, 0, 1, 0), 4),
            Err(InvariantError::NotPrime(4))
        );
    }

    #[test]
    fn profiles() {
        assert_eq!(
            cohomology_profile(&comm(0, 1, 1, 1), 2).unwrap().betti,
            vec![1, 3, 3, 1]
        );
        assert_eq!(
            cohomology_profile(&comm(0, 0, 0, 0), 7).unwrap().betti,
            vec![1]
        );
        assert_eq!(
            cohomology_profile(&comm(0, 3, 0, 1), 2).unwrap().betti[1],
            6
        );
        let big = cohomology_profile(&comm(0, 0, 64, 0), 2).unwrap();
        assert_eq!(big.betti[32], 1_832_624_140_942_590_534);
        assert!(cohomology_profile(&comm(0, 0, 65, 0), 2).is_err());
    }

    #[test]
    fn h1() {
        assert_eq!(
            h1_mu_n(&comm(0, 1, 0, 1), 5).unwrap(),
            FinGenAbGroup::elementary(5, 2)
        );
        assert!(h1_mu_n(&comm(0, 0, 0, 0), 5).unwrap().is_trivial());
        assert_eq!(
            h1_mu_n(&comm(0, 0, 2, 0), 4).unwrap(),
            FinGenAbGroup::elementary(4, 2)
        );
    }

    #[test]
    fn picard() {
        assert!(picard_mod_n(&comm(0, 0, 3, 0), 6).unwrap().is_trivial());
        assert_eq!(
            picard_mod_n(&comm(0, 1, 0, 1), 4).unwrap(),
            FinGenAbGroup::cyclic(4)
        );
        assert_eq!(
            picard_mod_n(&comm(0, 2, 0, 3), 5).unwrap(),
            FinGenAbGroup::elementary(5, 3)
        );
    }

    #[test]
    fn berkovich_examples() {
        let b = berkovich_sequence(&comm(0, 1, 0, 1), 3).unwrap();
        assert_eq!(b.left, FinGenAbGroup::cyclic(3));
        assert_eq!(b.middle, FinGenAbGroup::cyclic(3));
        assert!(b.right.is_trivial());
        assert!(b.is_exact());

        let b = berkovich_sequence(&comm(0, 0, 1, 0), 6).unwrap();
        assert!(b.left.is_trivial() && b.middle.is_trivial() && b.right.is_trivial());

        let b = berkovich_sequence(&comm(0, 1, 1, 1), 2).unwrap();
        assert_eq!(b.left, FinGenAbGroup::cyclic(2));
        assert_eq!(b.middle, FinGenAbGroup::elementary(2, 3));
        assert_eq!(b.right, FinGenAbGroup::elementary(2, 2));
        assert_eq!(b.certificate.orders, Some((2.into(), 8.into(), 4.into())));
    }

    #[test]
    fn berkovich_composite_n() {
        let b = berkovich_sequence(&comm(0, 2, 0, 2), 12).unwrap();
        assert_eq!(b.right, FinGenAbGroup::elementary(12, 4));
        assert!(b.is_exact());
    }

    #[test]
    fn coranks() {
        assert_eq!(brauer_ell_corank(&comm(0, 1, 0, 1), 2), Ok(0));
        assert_eq!(brauer_ell_corank(&comm(0, 2, 0, 1), 3), Ok(5));
        assert_eq!(brauer_ell_corank(&comm(0, 0, 1, 0), 5), Ok(0));
        assert!(brauer_ell_corank(&comm(2, 1, 0, 1), 2).is_err());
    }

    #[test]
    fn homspace_bounds() {
        let flag = HomSpaceDescriptor {
            group: GroupDescriptor::new(0, 0, 3, 0, false),
            g_h: 0,
            r_h: 3,
            stabilizer_connected: true,
        };
        assert_eq!(homspace_pi1_bound(&flag).unwrap().bound, 0);
        let x = HomSpaceDescriptor {
            group: GroupDescriptor::new(0, 1, 2, 1, false),
            g_h: 0,
            r_h: 1,
            stabilizer_connected: true,
        };
        assert_eq!(homspace_pi1_bound(&x).unwrap().bound, 3);
        let bad = HomSpaceDescriptor {
            stabilizer_connected: false,
            ..x
        };
        let err = homspace_pi1_bound(&bad).unwrap_err();
        assert!(err.to_string().contains("is just Γ"));
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_powers(12), vec![4, 3]);
        assert_eq!(prime_powers(1), Vec::<u64>::new());
        assert_eq!(prime_powers(49), vec![49]);
    }
}
