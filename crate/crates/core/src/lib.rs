//! Finite residuated lattices and the semiring structures they correspond to.
//!
//! Algebras are stored as Cayley tables over element indices. The crate
//! checks every axiom system exhaustively, converts between residuated
//! lattices with the double negation law and general coupled semirings,
//! builds tied semirings from suitable subuniverses, and enumerates small
//! algebras up to isomorphism.

pub mod coupled;
pub mod error;
pub mod fixtures;
pub mod lattice;
pub mod lemmas;
pub mod report;
pub mod residuated;
pub mod search;
pub mod subuniverse;
pub mod table;

pub use coupled::{
    check_general_coupled, check_semiring, check_tied, couple, decouple, roundtrip_coupled,
    roundtrip_lattice, tie, untie, CoupledKind, CoupledStructure, RoleMappedSemiring,
};
pub use error::{Error, Result};
pub use lattice::{BoundedLattice, InducedOrder};
pub use lemmas::verify_lemma_suite;
pub use report::{Check, CheckReport, Status, Summary, Witness};
pub use residuated::{
    check_adjointness, check_commutative_monoid, check_divisibility, check_double_negation,
    check_monotone, check_mv, check_prelinearity, derive_arrow, derive_negation_ops,
    ResiduatedLattice,
};
pub use subuniverse::Subuniverse;
pub use table::{BinOpTable, ElementId};
