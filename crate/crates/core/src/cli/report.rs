//! Reports produced by the `invariants` and `homspace` commands.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::abelian::FinGenAbGroup;
use crate::descriptors::{
    Descriptor, DescriptorFields, DescriptorKind, GroupDescriptor, HomSpaceDescriptor, Strictness,
    ValidationError, Violation,
};
use crate::invariants::{
    berkovich_sequence, brauer_ell_corank, cohomology_profile, homspace_pi1_bound, n_torsion_group,
    pi1_report, Exactness, InvariantError, Pi1Report,
};

/// The descriptor as echoed in a report, keyed like the file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorEcho {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(rename = "char")]
    pub char_p: u64,
    pub g: u32,
    pub r: u32,
    pub u: u32,
    pub rho: u64,
    pub commutative: bool,
    #[serde(rename = "g_H", default, skip_serializing_if = "Option::is_none")]
    pub g_h: Option<u32>,
    #[serde(rename = "r_H", default, skip_serializing_if = "Option::is_none")]
    pub r_h: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilizer_connected: Option<bool>,
}

impl From<&Descriptor> for DescriptorEcho {
    fn from(d: &Descriptor) -> Self {
        let f = d.to_fields();
        let g = d.group();
        DescriptorEcho {
            kind: match d {
                Descriptor::Group(_) => "group".into(),
                Descriptor::HomSpace(_) => "homspace".into(),
            },
            label: g.label.clone(),
            char_p: g.char_p,
            g: g.g,
            r: g.r,
            u: g.u,
            rho: g.rho,
            commutative: g.commutative,
            g_h: f.g_h,
            r_h: f.r_h,
            stabilizer_connected: f.stabilizer_connected,
        }
    }
}

impl DescriptorEcho {
    /// Validates the echo back into a descriptor.
    pub fn to_descriptor(&self) -> Result<Descriptor, ValidationError> {
        let kind = match self.kind.as_str() {
            "group" => DescriptorKind::Group,
            "homspace" => DescriptorKind::HomSpace,
            other => {
                return Err(ValidationError {
                    violations: vec![Violation {
                        field: "kind",
                        message: format!("expected `group` or `homspace`, got `{other}`"),
                    }],
                })
            }
        };
        DescriptorFields {
            kind: Some(kind),
            label: self.label.clone(),
            char_p: Some(self.char_p),
            g: Some(self.g),
            r: Some(self.r),
            u: Some(self.u),
            rho: Some(self.rho),
            commutative: Some(self.commutative),
            g_h: self.g_h,
            r_h: self.r_h,
            stabilizer_connected: self.stabilizer_connected,
        }
        .validate(Strictness::Lenient)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BerkovichEntry {
    pub n: u64,
    pub left: FinGenAbGroup,
    pub middle: FinGenAbGroup,
    pub right: FinGenAbGroup,
    pub exact: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorankEntry {
    pub ell: u64,
    pub corank: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Generators needed for `π₁^(p')` of the described variety.
    pub pi1_generators: u64,
    /// For a homogeneous space `G/H`, the same bound for `G`.
    pub ambient_pi1_generators: Option<u64>,
}

/// Everything computed for one descriptor. `torsion`, `betti` and
/// `berkovich` are filled when a coefficient `n` was requested,
/// `brauer_corank` when a prime `ℓ` was.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub descriptor: DescriptorEcho,
    pub pi1: Option<Pi1Report>,
    pub torsion: Option<FinGenAbGroup>,
    pub betti: Option<Vec<u64>>,
    pub berkovich: Option<BerkovichEntry>,
    pub brauer_corank: Option<CorankEntry>,
    pub bounds: Bounds,
    /// Human-readable remarks; rendered in text output only.
    #[serde(skip)]
    pub notes: Vec<String>,
}

pub fn invariants_report(
    d: &GroupDescriptor,
    n: Option<u64>,
    ell: Option<u64>,
) -> Result<Report, InvariantError> {
    let d = d.validate()?;
    let m = d.m();
    let pi1 = pi1_report(&d)?;
    let mut notes: Vec<String> = d
        .warnings()
        .iter()
        .map(|w| format!("warning: {w}"))
        .collect();
    notes.push(match pi1.exactness {
        Exactness::Exact => {
            format!("G is commutative, so π₁^(p') is free over Z_(p') of rank 2g + r = {m}")
        }
        Exactness::BoundOnly => format!(
            "G is not commutative: π₁^(p') is abelian and generated by at most 2g + r = {m} \
             elements, and may have torsion"
        ),
    });
    if d.char_p != 0 {
        notes.push(format!("only primes different from {} are seen", d.char_p));
    }

    let (mut torsion, mut betti, mut berkovich) = (None, None, None);
    if let Some(n) = n {
        torsion = Some(n_torsion_group(&d, n)?);
        betti = Some(cohomology_profile(&d, n)?.betti);
        let b = berkovich_sequence(&d, n)?;
        notes.push(format!(
            "H*(G, Z/{n}) is the exterior algebra on H¹, so degree i has rank C({m}, i)"
        ));
        notes.push(format!(
            "0 → Pic G/{n} → Hom(Λ²(ₙG), μₙ) → ₙBr G → 0 with orders {} · {} = {}",
            order(&b.left),
            order(&b.right),
            order(&b.middle)
        ));
        berkovich = Some(BerkovichEntry {
            n,
            exact: b.is_exact(),
            left: b.left,
            middle: b.middle,
            right: b.right,
        });
    }
    let brauer_corank = match ell {
        Some(ell) => {
            let corank = brauer_ell_corank(&d, ell)?;
            notes.push(format!(
                "corank of Br G{{{ell}}} is C(2g + r, 2) − ρ = {} − {}",
                u128::from(corank) + u128::from(d.rho),
                d.rho
            ));
            Some(CorankEntry { ell, corank })
        }
        None => None,
    };
    Ok(Report {
        descriptor: DescriptorEcho::from(&Descriptor::Group(d)),
        pi1: Some(pi1),
        torsion,
        betti,
        berkovich,
        brauer_corank,
        bounds: Bounds {
            pi1_generators: m,
            ambient_pi1_generators: None,
        },
        notes,
    })
}

pub fn homspace_report(x: &HomSpaceDescriptor) -> Result<Report, InvariantError> {
    let x = x.validate()?;
    let b = homspace_pi1_bound(&x)?;
    let mut notes: Vec<String> = x
        .warnings()
        .iter()
        .map(|w| format!("warning: {w}"))
        .collect();
    notes.push(format!(
        "the stabilizer is connected, so π₁^(p')(G/H) is abelian and a quotient of \
         Z_(p')^(2(g − g_H) + r − r_H) = Z_(p')^{}",
        b.bound
    ));
    if b.bound == 0 {
        notes.push("G/H is simply connected in the prime-to-p sense".into());
    }
    Ok(Report {
        descriptor: DescriptorEcho::from(&Descriptor::HomSpace(x.clone())),
        pi1: None,
        torsion: None,
        betti: None,
        berkovich: None,
        brauer_corank: None,
        bounds: Bounds {
            pi1_generators: b.bound,
            ambient_pi1_generators: Some(x.group.m()),
        },
        notes,
    })
}

fn order(a: &FinGenAbGroup) -> String {
    a.order().map_or_else(|| "∞".to_string(), |o| o.to_string())
}

impl Report {
    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.descriptor;
        let mut head = String::new();
        let _ = write!(head, "descriptor ({})", d.kind);
        if let Some(l) = &d.label {
            let _ = write!(head, ": {l}");
        }
        writeln!(f, "{head}")?;
        writeln!(
            f,
            "  char = {}, g = {}, r = {}, u = {}, rho = {}, commutative = {}",
            d.char_p, d.g, d.r, d.u, d.rho, d.commutative
        )?;
        if let (Some(gh), Some(rh), Some(sc)) = (d.g_h, d.r_h, d.stabilizer_connected) {
            writeln!(f, "  g_H = {gh}, r_H = {rh}, stabilizer_connected = {sc}")?;
        }
        if let Some(p) = &self.pi1 {
            let kind = match p.exactness {
                Exactness::Exact => "exact",
                Exactness::BoundOnly => "bound-only",
            };
            writeln!(f, "pi1: {kind}")?;
            match p.free_rank {
                Some(k) => writeln!(f, "  free rank: {k}")?,
                None => writeln!(f, "  free rank: unknown")?,
            }
            writeln!(f, "  generator bound: {}", p.generator_bound)?;
            writeln!(f, "  excluded prime: {}", p.excluded_prime)?;
            writeln!(f, "  torsion possible: {}", p.torsion_possible)?;
        }
        if let Some(t) = &self.torsion {
            writeln!(f, "torsion: {t}")?;
        }
        if let Some(b) = &self.betti {
            let list: Vec<String> = b.iter().map(u64::to_string).collect();
            writeln!(f, "betti: {}", list.join(" "))?;
        }
        if let Some(b) = &self.berkovich {
            writeln!(f, "berkovich (n = {}):", b.n)?;
            writeln!(f, "  left: {}", b.left)?;
            writeln!(f, "  middle: {}", b.middle)?;
            writeln!(f, "  right: {}", b.right)?;
            writeln!(f, "  exact: {}", b.exact)?;
        }
        if let Some(c) = &self.brauer_corank {
            writeln!(f, "brauer corank (ell = {}): {}", c.ell, c.corank)?;
        }
        writeln!(f, "bounds:")?;
        writeln!(f, "  pi1 generators: {}", self.bounds.pi1_generators)?;
        if let Some(a) = self.bounds.ambient_pi1_generators {
            writeln!(f, "  ambient pi1 generators: {a}")?;
        }
        if !self.notes.is_empty() {
            writeln!(f, "notes:")?;
            for n in &self.notes {
                writeln!(f, "  - {n}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elliptic_curve_at_two() {
        let e = GroupDescriptor::new(0, 1, 0, 1, true);
        let r = invariants_report(&e, Some(2), Some(2)).unwrap();
        assert_eq!(r.torsion, Some(FinGenAbGroup::elementary(2, 2)));
        assert_eq!(r.betti, Some(vec![1, 2, 1]));
        let b = r.berkovich.as_ref().unwrap();
        assert_eq!(b.left, FinGenAbGroup::cyclic(2));
        assert!(b.right.is_trivial());
        assert!(b.exact);
        assert_eq!(r.brauer_corank, Some(CorankEntry { ell: 2, corank: 0 }));
    }

    #[test]
    fn json_round_trip() {
        let e = GroupDescriptor::new(5, 2, 1, 3, true).with_label("j");
        let r = invariants_report(&e, Some(6), Some(3)).unwrap();
        let json = r.to_json();
        let back = Report::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(
            back.descriptor.to_descriptor().unwrap(),
            Descriptor::Group(e)
        );
    }

    #[test]
    fn no_coefficients_no_torsion() {
        let t = GroupDescriptor::new(0, 0, 3, 0, true);
        let r = invariants_report(&t, None, None).unwrap();
        assert_eq!(r.pi1.unwrap().free_rank, Some(3));
        assert!(r.torsion.is_none() && r.betti.is_none() && r.berkovich.is_none());
    }

    #[test]
    fn homspace_echo() {
        let h = HomSpaceDescriptor {
            group: GroupDescriptor::new(0, 0, 3, 0, false),
            g_h: 0,
            r_h: 3,
            stabilizer_connected: true,
        };
        let r = homspace_report(&h).unwrap();
        assert_eq!(r.bounds.pi1_generators, 0);
        assert_eq!(
            r.descriptor.to_descriptor().unwrap(),
            Descriptor::HomSpace(h)
        );
    }
}
