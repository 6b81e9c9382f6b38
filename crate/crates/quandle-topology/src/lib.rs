//! Finite quandles, their inner symmetry, and the order-theoretic
//! topologies under which quandle multiplication stays continuous.
//!
//! The crate is organized bottom-up:
//!
//! - [`perm`]: permutations and groups generated by closure;
//! - [`quandle`]: Cayley-table quandles, orbit structure, enumeration up to
//!   isomorphism;
//! - [`poset`]: strict partial orders on finite point sets;
//! - [`topology`]: finite topologies where arbitrary intersections of opens
//!   are open, and their equivalence with preorders;
//! - [`continuity`]: the search for orders making right (or left)
//!   multiplication continuous, plus structural consequences;
//! - [`dihedral`]: the closed-form order families carried by even dihedral
//!   quandles;
//! - [`tables`]: a built-in catalogue of worked examples with expected
//!   results, and the machinery to re-derive and diff them;
//! - [`verify`]: one-call checks bundling the re-derivations.

pub mod continuity;
pub mod dihedral;
pub mod perm;
pub mod poset;
pub mod quandle;
pub mod tables;
pub mod topology;
pub mod verify;

pub use continuity::{
    complete_npartite_order, dedup_orders, enumerate_left_orders, enumerate_right_orders,
    is_left_continuous,
    is_right_continuous, left_collapse_check, pair_orbits, single_extra_orbit_order,
    verify_quandle_theorems, ContinuityError, ContinuityReport, DedupMode, PairOrbit, Side,
};
pub use dihedral::{
    affine_iso_check, chi_order, count_classes_formula, dihedral_report, distinct_chi_orders,
    ChiOrder, DihedralError, DihedralReport,
};
pub use perm::{all_permutations, PermGroup, Permutation};
pub use poset::{
    enumerate_orders, is_crosspartite, poset_isomorphic, HasseDiagram, PosetError, StrictOrder,
};
pub use quandle::{enumerate_quandles, OrbitPartition, ParseError, Quandle, QuandleError};
pub use tables::{
    allowlist, catalogue, reproduce_tables, reproduce_tables_capped, AllowRule, EntryDiff,
    PrintedQuandle, RowDiff, RowStatus, TableDiffReport,
};
pub use topology::{
    enumerate_t0, order_to_topology, topology_to_order, FiniteTopology, TopologyError,
};
pub use verify::{
    run_full_verification, SuiteCheck, VerifyError, VerifySuite, FULL_DIHEDRAL_HALF,
    FULL_SWEEP_ORDER,
};
