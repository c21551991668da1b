//! Exact combinatorics of conjugacy-class codes in symmetric groups.
//!
//! A subset B of a finite group is a code with respect to A when every
//! group element has the same number r of factorizations g = a*b with
//! a in A and b in B. This crate decides, constructs and verifies such
//! codes for A a conjugacy class of S_n and B the two-block Young
//! subgroup S_k x S_{n-k}, three independent ways:
//!
//! * [`code_criterion::theorem_classify`] applies a closed condition on
//!   the cycle type of the class;
//! * [`code_criterion::char_criterion`] tests vanishing of the two-row
//!   characters on the class, themselves computed along two independent
//!   routes ([`characters::two_row_char`] and
//!   [`characters::mn_character`]);
//! * [`oracle::verify_tiling`] multiplies the sets out element by
//!   element and counts.
//!
//! Everything is exact integer (or rational) arithmetic; all enumeration
//! orders are deterministic. With the default `parallel` feature the
//! oracle's product loop and the classification sweep fan out over a
//! rayon pool; disabling the feature leaves bit-identical sequential
//! fallbacks.

pub mod characters;
pub mod code_criterion;
pub mod cycle_type;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod young;

pub use characters::{
    class_sum_eigenvalue, decompose_young_module, dimension, frobenius_poly, kostka, mn_character,
    two_row_char, two_row_char_pruned, ModuleDecomposition,
};
pub use code_criterion::{
    char_criterion, compute_r, first_failing_m, induction_step, search_codes, theorem_classify,
    verdict, young_criterion_general, CodeQuery, CodeVerdict,
};
pub use cycle_type::CycleType;
pub use error::{Error, Result};
#[cfg(feature = "parallel")]
pub use oracle::product_counts_parallel;
pub use oracle::{
    perfect_code_check, product_counts, product_counts_sequential, total_perfect_code_check,
    validate_connection_set, verify_tiling, CountTable, OracleLimits, TilingReport,
};
pub use partition::{partitions_of, Partition};
pub use perm::{Permutation, MAX_RANK_DEGREE};
pub use poly::SparseBivariatePoly;
pub use young::YoungSubgroupSpec;

/// Default cap for full-class and subgroup enumeration (10! elements).
pub const DEFAULT_MAX_DEGREE: usize = 10;
