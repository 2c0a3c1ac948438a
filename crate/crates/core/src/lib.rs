//! Power-subgroup analysis for finite groups.
//!
//! For a finite group `G` and a non-negative integer `m`, the *power
//! subgroup* `G^m` is the subgroup generated by all `m`-th powers,
//! `⟨g^m | g ∈ G⟩`. These form a small, fully invariant family inside the
//! subgroup lattice, and the gap between the two — the subgroups that are
//! *not* of this form — carries structural information: the count `k` of
//! non-power subgroups is zero exactly for cyclic groups, and the values
//! `k = 1` and `k = 2` never occur.
//!
//! This crate provides:
//!
//! - dense Cayley-table groups for the classic families and their direct
//!   products ([`GroupTable`]),
//! - full subgroup-lattice enumeration, normality tests and quotients
//!   ([`subgroup`]),
//! - power-subgroup computation and power/non-power classification
//!   ([`power`]),
//! - machine checks of the structural claims above on concrete catalogs
//!   ([`checks`]),
//! - a parser/catalog/CLI layer for driving everything from group
//!   descriptions like `"Q8xC3"` ([`spec`], [`catalog`], [`cli`]).
//!
//! ```
//! use powersub::{analyze, GroupTable};
//!
//! let q8 = GroupTable::generalized_quaternion(8).unwrap();
//! let report = analyze(&q8).unwrap();
//! assert_eq!(report.k, 3); // the three cyclic subgroups of order 4
//! ```

pub mod catalog;
pub mod checks;
pub mod cli;
pub mod group;
pub mod power;
pub mod report;
pub mod spec;
pub mod subgroup;

pub use group::{order_cap, set_order_cap, AxiomViolation, GroupTable, DEFAULT_ORDER_CAP};
pub use power::{analyze, AnalysisReport, GroupAnalysis, PowerSubgroup, SubgroupRecord};
pub use spec::{parse_group_spec, GroupSpec};
pub use subgroup::ElementSet;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A constructor was asked for a group larger than the configured cap.
    #[error("requested group order {requested} exceeds the cap of {cap}")]
    OrderCapExceeded { requested: u128, cap: usize },
    /// A family parameter was out of range (e.g. a non-prime base).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// An element index at or above the group order.
    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    /// A set that was expected to be closed under the group operation.
    #[error("the given element set is not a subgroup")]
    NotASubgroup,
    /// A quotient was requested by a subgroup that is not normal.
    #[error("the given subgroup is not normal")]
    NotNormal,
    /// An [`ElementSet`] used with a group of a different order.
    #[error("element set over a universe of {set} does not match group order {order}")]
    UniverseMismatch { set: usize, order: usize },
}
