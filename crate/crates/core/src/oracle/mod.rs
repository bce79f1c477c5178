//! Brute-force checks of the closed forms: sublattice and ideal enumeration,
//! elementary-divisor censuses and congruence indices.

pub mod census;
pub mod congruence;
pub mod hnf;
pub mod ideals;
pub mod snf;
pub mod verify;

pub use census::{census_expected, check_census, maximal_lattice_census, Census, LatticeType};
pub use congruence::{
    congruence_index, congruence_index_check, congruence_index_formula, congruence_trials, random_type,
    rep_matrix_check, AntidiagonalRep,
};
pub use hnf::{enumeration_estimate, hnf_count, hnf_count_where, hnf_enumerate, hnf_with_diagonal, HnfBasis};
pub use ideals::{count_graded_ideals, count_graded_ideals_naive, count_ideals, count_ideals_naive};
pub use snf::{snf_valuations, SnfValuations};
pub use verify::{formula_counts, verify_dirichlet, verify_estimate, VerifyRecord, DEFAULT_CEILING};
