//! Finitely generated abelian groups.
//!
//! Groups are kept in invariant-factor form `Z^r ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with
//! `d_1 | d_2 | … | d_k` and every `d_i ≥ 2`. Everything else (presentations,
//! homomorphisms, Hom, ⊗, Λ²) reduces to that form through the Smith normal
//! form in [`snf`].

mod exact;
mod functors;
mod group;
mod hom;
mod lattice;
mod matrix;
pub mod snf;

pub use exact::{verify_short_exact, ExactnessCertificate};
pub use functors::{exterior_square, hom_group, tensor_product};
pub use group::{direct_sum, group_from_presentation, n_torsion, FinGenAbGroup};
pub use hom::GroupHom;
pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithDecomposition};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("a {rows}x{cols} matrix needs {} entries, got {len}", rows * cols)]
    EntryCount {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error(
        "relation matrix has {found} columns but the presentation has {generators} generators"
    )]
    DimensionMismatch { generators: usize, found: usize },
    #[error("invariant factors {0} do not form a divisibility chain of integers >= 2")]
    NotCanonical(String),
    #[error("n must be positive")]
    NonPositive,
    #[error("Hom between two infinite groups is not supported")]
    BothInfinite,
    #[error("exterior square requires a finite group, got {0}")]
    InfiniteExterior(String),
    #[error("homomorphism matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    HomShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("generator {generator} has order {order} but its image is not killed by {order}")]
    NotWellDefined { generator: usize, order: String },
    #[error("maps are not composable: target {target} differs from source {source_group}")]
    NotComposable {
        target: String,
        source_group: String,
    },
    #[error("sublattice is not contained in the ambient lattice")]
    NotContained,
}
