//! Invariants of connected algebraic groups over a field, computed from
//! numerical data, on top of an engine for finitely generated abelian groups.
//!
//! * [`abelian`]: integer matrices, Smith normal form, abelian groups,
//!   homomorphisms, Hom, ⊗, Λ² and exactness checks.
//! * [`descriptors`]: the numerical description of a group or homogeneous
//!   space and its validation.
//! * [`invariants`]: fundamental group, torsion, cohomology, Picard and
//!   Brauer data of a described group.
//! * [`oracle`]: brute-force recomputations used to check the above.
//! * [`cli`]: descriptor files, reports and the `algroup` command.

pub mod abelian;
pub mod cli;
pub mod descriptors;
pub mod invariants;
pub mod oracle;
