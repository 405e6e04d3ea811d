//! Brute-force verifiers, independent of the closed forms they check.
//!
//! Everything here works by enumeration on small inputs: elements of finite
//! abelian groups, generator images, subsets, and multiplication tables. The
//! one shared piece with the abelian engine is the final reduction of a
//! relation matrix to invariant factors.

mod brute;
mod eh;
mod sweeps;
mod table;

pub use brute::{
    elements, exterior_square_bruteforce, exterior_square_bruteforce_with_limit, groups_of_order,
    groups_up_to, hom_count_bruteforce, n_torsion_count, MAX_HOM_ORDER, MAX_WEDGE_ORDER,
};
pub use eh::{eckmann_hilton_search, MAX_EH_ORDER};
pub use sweeps::{
    berkovich_cardinality_sweep, betti_sum_check, default_max_order, eh_sweep, hom_sweep,
    run_suite, wedge_sweep, DescriptorGrid, Mismatch, OracleVerdict, Suite, MAX_BETTI_M,
};
pub use table::{catalog, CatalogEntry, FiniteGroupTable};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what}: size {size} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("oracle needs a finite group, got {0}")]
    Infinite(String),
    #[error("table {name} is not a group: {why}")]
    NotAGroup { name: String, why: String },
}
