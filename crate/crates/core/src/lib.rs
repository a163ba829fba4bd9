//! Simultaneous core partitions with distinct parts.
//!
//! The crate covers the beta-set (abacus) description of partitions and
//! `t`-cores, the encoding of `(t, mt ± 1)`-core partitions with distinct
//! parts as constrained sequences, closed forms for their largest size and
//! number of maximizers, and brute-force enumerators that check all of it.
//!
//! ```
//! use core_partitions::{extremal_plus, Partition};
//!
//! let report = extremal_plus(7, 3).unwrap();
//! assert_eq!(report.largest_size, 63);
//! assert_eq!(report.maximizers, vec!["12,11,10,8,7,6,4,3,2".parse::<Partition>().unwrap()]);
//! ```
//!
//! A longer walk through the concepts lives in the guide under `book/`.

pub mod abacus;
pub mod bijection;
pub mod enumeration;
mod error;
pub mod extremal;
pub mod partition;
pub mod verify;

pub use abacus::{
    has_distinct_parts_by_beta, is_simultaneous_core, is_t_core, is_t_core_by_hooks, ResidueProfile,
};
pub use bijection::{
    from_sequence, is_member, phi, phi_inverse, psi, psi_inverse, to_sequence, CoreSequence, Family,
};
pub use enumeration::{
    anderson_count, count_distinct_core, enumerate_core_betasets, enumerate_sequences, family_stats,
    CoreBetaSets, Emit, EnumerationQuery, FamilyStats, ResourceGuard, Sequences,
};
pub use error::{Error, Result};
pub use extremal::{
    alpha, build_lambda_r, build_mu_s, corollary_t_t_plus_1, extremal, extremal_minus, extremal_plus,
    knife_edge, size_lambda_r, size_mu_s, Alpha, ExtremalReport,
};
pub use partition::{BetaSet, Partition};

// Code blocks in the guide are compiled and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/beta-sets.md")]
    mod beta_sets {}
    #[doc = include_str!("../../../book/src/cores.md")]
    mod cores {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/largest-sizes.md")]
    mod largest_sizes {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
