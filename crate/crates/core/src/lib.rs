//! Brauer relations of finite groups in positive characteristic.
//!
//! Everything is exact: groups are enumerated permutation groups, the
//! Burnside ring lives over arbitrary-precision integers, and kernels,
//! saturations and quotient invariants come from integer normal forms.

pub mod axioms;
pub mod burnside;
pub mod catalog;
pub mod error;
pub mod group;
pub mod lattice;
pub mod matrix;
pub mod modular;
pub mod perm;
pub mod primitivity;
pub mod subgroups;

pub use burnside::{induce, inflate, restrict, BurnsideElement, BurnsideRing};
pub use catalog::{
    build, build_default, parse_group_spec, verification_catalog, ActionCertificate,
    CatalogEntry, GroupSpec,
};
pub use error::{Error, Result};
pub use group::{Group, GroupHom, StructuralFlags, Subgroup, DEFAULT_ORDER_BOUND};
pub use lattice::{quotient_invariants, AbelianInvariants, IntegerLattice};
pub use matrix::IntMatrix;
pub use modular::{
    artin_coefficients, brauer_matrix, brauer_vector, is_coprimordial, is_primordial,
    kernel_lattice, kernel_lattice_char0, mobius_witness,
    quasi_elementary_integral_coefficients, BrauerVector, RelationLattice,
};
pub use perm::Perm;
pub use primitivity::{
    analyze, expected_prim, explicit_generator, imprim_lattice, noprimss_sublattice,
    prim_quotient, unit_coefficient_relation, ImprimMode, PrimReport, Verdict,
};
pub use subgroups::{subgroup_classes, SubgroupTable};
