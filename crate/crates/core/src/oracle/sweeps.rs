use std::fmt;

use num_bigint::BigInt;
use num_traits::Pow;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::brute::{exterior_square_bruteforce, groups_up_to, hom_count_bruteforce, MAX_HOM_ORDER};
use super::eh::{eckmann_hilton_search, MAX_EH_ORDER};
use super::table::catalog;
use super::OracleError;
use crate::abelian::{exterior_square, hom_group, FinGenAbGroup};
use crate::descriptors::{gcd, GroupDescriptor};
use crate::invariants::{berkovich_sequence, cohomology_profile, h1_mu_n, n_torsion_group};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub suite: String,
    pub cases_run: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleVerdict {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn from_cases(suite: &str, results: Vec<Option<Mismatch>>) -> Self {
        Self {
            suite: suite.into(),
            cases_run: results.len(),
            mismatches: results.into_iter().flatten().collect(),
        }
    }
}

impl fmt::Display for OracleVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {}: {} ({} cases, {} mismatches)",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.cases_run,
            self.mismatches.len()
        )?;
        for m in &self.mismatches {
            write!(f, "\n  {}: expected {}, got {}", m.input, m.expected, m.got)?;
        }
        Ok(())
    }
}

fn mismatch(
    input: impl fmt::Display,
    expected: impl fmt::Display,
    got: impl fmt::Display,
) -> Option<Mismatch> {
    Some(Mismatch {
        input: input.to_string(),
        expected: expected.to_string(),
        got: got.to_string(),
    })
}

/// Closed-form `Λ²` against the enumeration oracle on every finite abelian
/// group of order at most `max_order`.
pub fn wedge_sweep(max_order: u64) -> Result<OracleVerdict, OracleError> {
    let groups = groups_up_to(max_order);
    let results = groups
        .par_iter()
        .map(|a| {
            let oracle = exterior_square_bruteforce(a)?;
            Ok(match exterior_square(a) {
                Ok(closed) if closed == oracle => None,
                Ok(closed) => mismatch(format!("Λ²({a})"), oracle, closed),
                Err(e) => mismatch(format!("Λ²({a})"), oracle, e),
            })
        })
        .collect::<Result<Vec<_>, OracleError>>()?;
    Ok(OracleVerdict::from_cases("wedge", results))
}

/// `|Hom(A, B)|` against generator-image enumeration for all pairs of
/// orders at most `max_order`.
pub fn hom_sweep(max_order: u64) -> Result<OracleVerdict, OracleError> {
    if max_order > MAX_HOM_ORDER {
        return Err(OracleError::TooLarge {
            what: "Hom sweep",
            size: max_order as usize,
            limit: MAX_HOM_ORDER as usize,
        });
    }
    let groups = groups_up_to(max_order);
    let pairs: Vec<(&FinGenAbGroup, &FinGenAbGroup)> = groups
        .iter()
        .flat_map(|a| groups.iter().map(move |b| (a, b)))
        .collect();
    let results = pairs
        .par_iter()
        .map(|&(a, b)| {
            let count = BigInt::from(hom_count_bruteforce(a, b)?);
            let closed = hom_group(a, b).expect("finite groups");
            let order = closed.order().expect("finite");
            Ok((order != count).then(|| Mismatch {
                input: format!("|Hom({a}, {b})|"),
                expected: count.to_string(),
                got: order.to_string(),
            }))
        })
        .collect::<Result<Vec<_>, OracleError>>()?;
    Ok(OracleVerdict::from_cases("hom", results))
}

/// Eckmann–Hilton search over the catalog groups of order at most
/// `max_order`: abelian groups admit exactly their own law, non-abelian
/// groups none.
pub fn eh_sweep(max_order: usize) -> Result<OracleVerdict, OracleError> {
    if max_order > MAX_EH_ORDER {
        return Err(OracleError::TooLarge {
            what: "Eckmann–Hilton sweep",
            size: max_order,
            limit: MAX_EH_ORDER,
        });
    }
    let entries: Vec<_> = catalog()
        .into_iter()
        .filter(|e| e.table.order() <= max_order)
        .collect();
    let results = entries
        .par_iter()
        .map(|e| {
            let found = eckmann_hilton_search(&e.table)?;
            let expected: Vec<Vec<usize>> = if e.abelian {
                vec![e.table.table().to_vec()]
            } else {
                Vec::new()
            };
            Ok((found != expected).then(|| Mismatch {
                input: format!("second laws on {}", e.table.name()),
                expected: format!("{} operation(s)", expected.len()),
                got: format!("{} operation(s)", found.len()),
            }))
        })
        .collect::<Result<Vec<_>, OracleError>>()?;
    Ok(OracleVerdict::from_cases("eh", results))
}

/// Descriptor ranges for the exactness sweep. Every valid ρ is visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescriptorGrid {
    pub g_max: u32,
    pub r_max: u32,
    pub chars: Vec<u64>,
    pub n_values: Vec<u64>,
}

impl DescriptorGrid {
    pub fn empty() -> Self {
        Self {
            g_max: 0,
            r_max: 0,
            chars: Vec::new(),
            n_values: Vec::new(),
        }
    }

    /// All `(descriptor, n)` pairs with `n` prime to the characteristic.
    pub fn points(&self) -> Vec<(GroupDescriptor, u64)> {
        let mut out = Vec::new();
        for &p in &self.chars {
            for g in 0..=self.g_max {
                for r in 0..=self.r_max {
                    let m = 2 * u64::from(g) + u64::from(r);
                    let rhos: Vec<u64> = if g == 0 {
                        vec![0]
                    } else {
                        (1..=m * (m - 1) / 2).collect()
                    };
                    for rho in rhos {
                        for &n in &self.n_values {
                            if p == 0 || gcd(n, p) == 1 {
                                out.push((GroupDescriptor::new(p, g, r, rho, true), n));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl Default for DescriptorGrid {
    /// `g ≤ 3`, `r ≤ 3`, `p ∈ {0, 5}`, `n ∈ {2, …, 12}`.
    fn default() -> Self {
        Self {
            g_max: 3,
            r_max: 3,
            chars: vec![0, 5],
            n_values: (2..=12).collect(),
        }
    }
}

fn describe(d: &GroupDescriptor, n: u64) -> String {
    format!("p={} g={} r={} rho={} n={}", d.char_p, d.g, d.r, d.rho, n)
}

fn check_berkovich(d: &GroupDescriptor, n: u64) -> Option<Mismatch> {
    let m = d.m();
    let c = m * m.saturating_sub(1) / 2;
    let nn = BigInt::from(n);
    let left = Pow::pow(&nn, d.rho);
    let middle = Pow::pow(&nn, c);
    let right = Pow::pow(&nn, c - d.rho);
    let input = describe(d, n);
    if &left * &right != middle {
        return mismatch(
            &input,
            "|left|·|right| = |middle|",
            format!("{left}·{right} vs {middle}"),
        );
    }
    let report = match berkovich_sequence(d, n) {
        Ok(r) => r,
        Err(e) => return mismatch(&input, "a sequence", e),
    };
    let got = (
        report.left.order().unwrap_or_default(),
        report.middle.order().unwrap_or_default(),
        report.right.order().unwrap_or_default(),
    );
    if got != (left.clone(), middle.clone(), right.clone()) {
        return mismatch(
            &input,
            format!("orders ({left}, {middle}, {right})"),
            format!("orders ({}, {}, {})", got.0, got.1, got.2),
        );
    }
    if !report.is_exact() {
        return mismatch(
            &input,
            "exactness certificate",
            format!("{:?}", report.certificate),
        );
    }
    if Pow::pow(&nn, m) <= BigInt::from(256u32) {
        let ngroup = FinGenAbGroup::elementary(n, m as usize);
        match exterior_square_bruteforce(&ngroup) {
            Ok(wedge) if wedge.generator_count() as u64 == c && wedge == report.middle => {}
            Ok(wedge) => {
                return mismatch(
                    &input,
                    format!("middle {}", report.middle),
                    format!("oracle Λ² {wedge}"),
                )
            }
            Err(e) => return mismatch(&input, "oracle Λ²", e),
        }
    }
    None
}

/// Recomputes the three orders of `0 → Pic G/n → Hom(Λ²(ₙG), μₙ) → ₙBr G → 0`
/// from ρ and binomials, compares them with the sequence, and checks the
/// middle term against the Λ² oracle when `|(Z/n)^{2g+r}| ≤ 256`.
pub fn berkovich_cardinality_sweep(grid: &DescriptorGrid) -> OracleVerdict {
    let results: Vec<Option<Mismatch>> = grid
        .points()
        .par_iter()
        .map(|(d, n)| check_berkovich(d, *n))
        .collect();
    OracleVerdict::from_cases("exactness", results)
}

/// Largest `m` accepted by [`betti_sum_check`].
pub const MAX_BETTI_M: u64 = 12;

/// Counts subsets of an `m`-element set by size and compares with the
/// cohomology profile of every commutative `(g, r)` with `2g + r = m`.
pub fn betti_sum_check(ms: impl IntoIterator<Item = u64>) -> Result<OracleVerdict, OracleError> {
    let mut results = Vec::new();
    for m in ms {
        if m > MAX_BETTI_M {
            return Err(OracleError::TooLarge {
                what: "Betti check",
                size: m as usize,
                limit: MAX_BETTI_M as usize,
            });
        }
        let mut counts = vec![0u64; m as usize + 1];
        for mask in 0u32..(1 << m) {
            counts[mask.count_ones() as usize] += 1;
        }
        let sum: u64 = counts.iter().sum();
        let symmetric = (0..counts.len()).all(|i| counts[i] == counts[counts.len() - 1 - i]);
        results.push(if sum != 1 << m || !symmetric {
            mismatch(
                format!("m={m}"),
                format!("sum 2^{m}, symmetric"),
                format!("{counts:?}"),
            )
        } else {
            None
        });
        for g in 0..=(m / 2) as u32 {
            let r = (m - 2 * u64::from(g)) as u32;
            let rho = u64::from(g > 0);
            let d = GroupDescriptor::new(0, g, r, rho, true);
            for n in [2u64, 3, 6] {
                results.push(check_profile(&d, n, &counts));
            }
        }
    }
    Ok(OracleVerdict::from_cases("betti", results))
}

fn check_profile(d: &GroupDescriptor, n: u64, counts: &[u64]) -> Option<Mismatch> {
    let input = describe(d, n);
    let profile = match cohomology_profile(d, n) {
        Ok(p) => p,
        Err(e) => return mismatch(&input, format!("{counts:?}"), e),
    };
    if profile.betti != counts {
        return mismatch(
            &input,
            format!("{counts:?}"),
            format!("{:?}", profile.betti),
        );
    }
    let h1 = h1_mu_n(d, n).map(|g| g.generator_count() as u64);
    let tor = n_torsion_group(d, n).map(|g| g.generator_count() as u64);
    let b1 = profile.betti.get(1).copied().unwrap_or(0);
    let cyclic_rank = |k: u64| if n == 1 { 0 } else { k };
    match (h1, tor) {
        (Ok(h), Ok(t)) if h == cyclic_rank(b1) && t == h => None,
        (h, t) => mismatch(
            &input,
            format!("betti[1] = rank H¹ = rank ₙG = {b1}"),
            format!("H¹ {h:?}, ₙG {t:?}"),
        ),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Wedge,
    Hom,
    Eh,
    Exactness,
    Betti,
}

/// Default order bound per suite.
pub fn default_max_order(suite: Suite) -> u64 {
    match suite {
        Suite::Wedge => 64,
        Suite::Hom => 32,
        Suite::Eh => 8,
        _ => 0,
    }
}

/// Runs one suite, or every suite for [`Suite::All`]. `max_order` overrides
/// the order bound of the wedge, hom and eh suites.
pub fn run_suite(suite: Suite, max_order: Option<u64>) -> Result<Vec<OracleVerdict>, OracleError> {
    let bound = |s: Suite| max_order.unwrap_or_else(|| default_max_order(s));
    let one = |s: Suite| -> Result<OracleVerdict, OracleError> {
        match s {
            Suite::Wedge => wedge_sweep(bound(s)),
            Suite::Hom => hom_sweep(bound(s)),
            Suite::Eh => eh_sweep(bound(s) as usize),
            Suite::Exactness => Ok(berkovich_cardinality_sweep(&DescriptorGrid::default())),
            Suite::Betti => betti_sum_check(0..=MAX_BETTI_M),
            Suite::All => unreachable!(),
        }
    };
    match suite {
        Suite::All => [
            Suite::Wedge,
            Suite::Hom,
            Suite::Eh,
            Suite::Exactness,
            Suite::Betti,
        ]
        .into_iter()
        .map(one)
        .collect(),
        s => Ok(vec![one(s)?]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_passes_vacuously() {
        let v = berkovich_cardinality_sweep(&DescriptorGrid::empty());
        assert!(v.passed());
        assert_eq!(v.cases_run, 0);
    }

    #[test]
    fn single_point() {
        let grid = DescriptorGrid {
            g_max: 1,
            r_max: 0,
            chars: vec![0],
            n_values: vec![2],
        };
        // g = 0, r = 0 and g = 1, r = 0, rho = 1
        assert_eq!(grid.points().len(), 2);
        let v = berkovich_cardinality_sweep(&grid);
        assert!(v.passed(), "{v}");
    }

    #[test]
    fn coprime_points_only() {
        let grid = DescriptorGrid {
            g_max: 0,
            r_max: 1,
            chars: vec![5],
            n_values: vec![5, 10, 3],
        };
        assert!(grid.points().iter().all(|(_, n)| *n == 3));
    }

    #[test]
    fn betti_small() {
        let v = betti_sum_check([0, 3, 4]).unwrap();
        assert!(v.passed(), "{v}");
        assert!(betti_sum_check([13]).is_err());
    }

    #[test]
    fn verdict_display() {
        let v = OracleVerdict {
            suite: "x".into(),
            cases_run: 2,
            mismatches: vec![Mismatch {
                input: "a".into(),
                expected: "1".into(),
                got: "2".into(),
            }],
        };
        assert!(!v.passed());
        assert!(v.to_string().contains("FAIL"));
    }
}
