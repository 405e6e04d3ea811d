//! Numerical descriptions of connected algebraic groups and their
//! homogeneous spaces.
//!
//! A group is described by its Chevalley data: the dimension `g` of the
//! abelian variety quotient `A`, the rank `r` of the affine part, the
//! Néron–Severi rank `rho` of `A`, and the characteristic of the base field.
//! Commutativity is supplied by the caller; numerical data cannot determine
//! the group law.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// How out-of-range-but-harmless values are treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strictness {
    /// Soft bounds produce warnings.
    #[default]
    Lenient,
    /// Soft bounds are errors too.
    Strict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub field: &'static str,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid descriptor")?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

impl ValidationError {
    pub fn fields(&self) -> Vec<&'static str> {
        self.violations.iter().map(|v| v.field).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("n = {n} is divisible by the characteristic {p}; only n prime to p is supported")]
pub struct CoprimalityError {
    pub n: u64,
    pub p: u64,
}

/// Message used whenever a non-connected stabilizer is rejected.
pub const NON_CONNECTED_STABILIZER: &str =
    "the stabilizer must be connected: for a finite group Γ of order prime to p \
embedded in GL(n), π₁^(p')(GL(n)/Γ) is just Γ, so no bound in terms of g and r can hold";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub label: Option<String>,
    /// 0 or a prime.
    pub char_p: u64,
    pub g: u32,
    pub r: u32,
    /// Unipotent dimension; carried for documentation, never used in formulas.
    pub u: u32,
    pub rho: u64,
    pub commutative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSpaceDescriptor {
    pub group: GroupDescriptor,
    pub g_h: u32,
    pub r_h: u32,
    pub stabilizer_connected: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescriptorKind {
    Group,
    HomSpace,
}

/// Possibly incomplete descriptor fields, as read from a file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DescriptorFields {
    pub kind: Option<DescriptorKind>,
    pub label: Option<String>,
    pub char_p: Option<u64>,
    pub g: Option<u32>,
    pub r: Option<u32>,
    pub u: Option<u32>,
    pub rho: Option<u64>,
    pub commutative: Option<bool>,
    pub g_h: Option<u32>,
    pub r_h: Option<u32>,
    pub stabilizer_connected: Option<bool>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl GroupDescriptor {
    /// Descriptor with `u = 0` and the given data; not yet validated.
    pub fn new(char_p: u64, g: u32, r: u32, rho: u64, commutative: bool) -> Self {
        Self {
            label: None,
            char_p,
            g,
            r,
            u: 0,
            rho,
            commutative,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// `2g + r`, the rank of the n-torsion and of the Tate module.
    pub fn m(&self) -> u64 {
        2 * u64::from(self.g) + u64::from(self.r)
    }

    /// Largest admissible ρ: `C(2g+r, 2)`, keeping the Brauer corank
    /// non-negative.
    pub fn rho_hard_bound(&self) -> u128 {
        let m = u128::from(self.m());
        m * m.saturating_sub(1) / 2
    }

    /// `g(2g − 1) = C(2g, 2)`, the rank of degree-2 cohomology of `A`.
    pub fn rho_soft_bound(&self) -> u128 {
        let g = u128::from(self.g);
        g * (2 * g).saturating_sub(1)
    }

    fn hard_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.char_p != 0 && !is_prime(self.char_p) {
            out.push(Violation {
                field: "char",
                message: format!("characteristic must be 0 or a prime, got {}", self.char_p),
            });
        }
        if self.g == 0 && self.rho != 0 {
            out.push(Violation {
                field: "rho",
                message: format!("rho must be 0 when g = 0, got {}", self.rho),
            });
        }
        if self.g > 0 && self.rho == 0 {
            out.push(Violation {
                field: "rho",
                message: "rho must be at least 1 when g >= 1".into(),
            });
        }
        if u128::from(self.rho) > self.rho_hard_bound() {
            out.push(Violation {
                field: "rho",
                message: format!(
                    "rho = {} exceeds (2g+r)(2g+r-1)/2 = {}, which would make the Brauer corank negative",
                    self.rho,
                    self.rho_hard_bound()
                ),
            });
        }
        out
    }

    /// Soft-bound violations (ρ above `g(2g−1)`).
    pub fn warnings(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.g > 0 && u128::from(self.rho) > self.rho_soft_bound() {
            out.push(Violation {
                field: "rho",
                message: format!(
                    "rho = {} exceeds g(2g-1) = {}, the rank of H^2 of an abelian variety of dimension {}",
                    self.rho,
                    self.rho_soft_bound(),
                    self.g
                ),
            });
        }
        out
    }

    pub fn validate(&self) -> Result<Self, ValidationError> {
        self.validate_with(Strictness::Lenient)
    }

    pub fn validate_with(&self, strictness: Strictness) -> Result<Self, ValidationError> {
        let mut violations = self.hard_violations();
        if strictness == Strictness::Strict {
            violations.extend(self.warnings());
        }
        if violations.is_empty() {
            Ok(self.clone())
        } else {
            Err(ValidationError { violations })
        }
    }
}

impl HomSpaceDescriptor {
    pub fn validate(&self) -> Result<Self, ValidationError> {
        self.validate_with(Strictness::Lenient)
    }

    pub fn validate_with(&self, strictness: Strictness) -> Result<Self, ValidationError> {
        let mut violations = match self.group.validate_with(strictness) {
            Ok(_) => Vec::new(),
            Err(e) => e.violations,
        };
        if self.g_h > self.group.g {
            violations.push(Violation {
                field: "g_H",
                message: format!("g_H = {} exceeds g = {}", self.g_h, self.group.g),
            });
        }
        if self.r_h > self.group.r {
            violations.push(Violation {
                field: "r_H",
                message: format!("r_H = {} exceeds r = {}", self.r_h, self.group.r),
            });
        }
        if !self.stabilizer_connected {
            violations.push(Violation {
                field: "stabilizer_connected",
                message: NON_CONNECTED_STABILIZER.into(),
            });
        }
        if violations.is_empty() {
            Ok(self.clone())
        } else {
            Err(ValidationError { violations })
        }
    }

    pub fn warnings(&self) -> Vec<Violation> {
        self.group.warnings()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Descriptor {
    Group(GroupDescriptor),
    HomSpace(HomSpaceDescriptor),
}

impl Descriptor {
    pub fn group(&self) -> &GroupDescriptor {
        match self {
            Descriptor::Group(g) => g,
            Descriptor::HomSpace(h) => &h.group,
        }
    }

    pub fn label(&self) -> Option<&str> {
        self.group().label.as_deref()
    }

    pub fn validate(&self) -> Result<Self, ValidationError> {
        self.validate_with(Strictness::Lenient)
    }

    pub fn validate_with(&self, strictness: Strictness) -> Result<Self, ValidationError> {
        match self {
            Descriptor::Group(g) => g.validate_with(strictness).map(Descriptor::Group),
            Descriptor::HomSpace(h) => h.validate_with(strictness).map(Descriptor::HomSpace),
        }
    }

    pub fn warnings(&self) -> Vec<Violation> {
        self.group().warnings()
    }

    pub fn to_fields(&self) -> DescriptorFields {
        let g = self.group();
        let mut f = DescriptorFields {
            kind: Some(match self {
                Descriptor::Group(_) => DescriptorKind::Group,
                Descriptor::HomSpace(_) => DescriptorKind::HomSpace,
            }),
            label: g.label.clone(),
            char_p: Some(g.char_p),
            g: Some(g.g),
            r: Some(g.r),
            u: Some(g.u),
            rho: Some(g.rho),
            commutative: Some(g.commutative),
            ..Default::default()
        };
        if let Descriptor::HomSpace(h) = self {
            f.g_h = Some(h.g_h);
            f.r_h = Some(h.r_h);
            f.stabilizer_connected = Some(h.stabilizer_connected);
        }
        f
    }
}

impl DescriptorFields {
    fn has_stabilizer_fields(&self) -> bool {
        self.g_h.is_some() || self.r_h.is_some() || self.stabilizer_connected.is_some()
    }

    fn is_homspace(&self) -> bool {
        match self.kind {
            Some(k) => k == DescriptorKind::HomSpace,
            None => self.has_stabilizer_fields(),
        }
    }

    /// Fills defaults (`u = 0`, `commutative = false`) and checks every
    /// invariant. A homogeneous space is recognised by any of its stabilizer
    /// fields being present when no kind is given.
    pub fn validate(&self, strictness: Strictness) -> Result<Descriptor, ValidationError> {
        let mut missing = Vec::new();
        if self.kind == Some(DescriptorKind::Group) && self.has_stabilizer_fields() {
            missing.push(Violation {
                field: "kind",
                message: "g_H, r_H and stabilizer_connected only apply to kind = homspace".into(),
            });
        }
        let mut req = |field: &'static str, present: bool| {
            if !present {
                missing.push(Violation {
                    field,
                    message: "required field is missing".into(),
                });
            }
        };
        req("char", self.char_p.is_some());
        req("g", self.g.is_some());
        req("r", self.r.is_some());
        if self.is_homspace() {
            req("g_H", self.g_h.is_some());
            req("r_H", self.r_h.is_some());
            req("stabilizer_connected", self.stabilizer_connected.is_some());
        }
        if !missing.is_empty() {
            return Err(ValidationError {
                violations: missing,
            });
        }
        let group = GroupDescriptor {
            label: self.label.clone(),
            char_p: self.char_p.unwrap_or_default(),
            g: self.g.unwrap_or_default(),
            r: self.r.unwrap_or_default(),
            u: self.u.unwrap_or(0),
            // rho may be omitted for g = 0, where it is forced to be 0
            rho: self.rho.unwrap_or(0),
            commutative: self.commutative.unwrap_or(false),
        };
        let d = if self.is_homspace() {
            Descriptor::HomSpace(HomSpaceDescriptor {
                group,
                g_h: self.g_h.unwrap_or_default(),
                r_h: self.r_h.unwrap_or_default(),
                stabilizer_connected: self.stabilizer_connected.unwrap_or_default(),
            })
        } else {
            Descriptor::Group(group)
        };
        d.validate_with(strictness)
    }
}

/// Succeeds iff `p = 0` or `gcd(n, p) = 1`.
pub fn coprimality_guard(d: &GroupDescriptor, n: u64) -> Result<(), CoprimalityError> {
    if d.char_p == 0 || gcd(n, d.char_p) == 1 {
        Ok(())
    } else {
        Err(CoprimalityError { n, p: d.char_p })
    }
}
