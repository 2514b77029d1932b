use crate::report::CheckReport;
use crate::table::ElementId;

/// Everything that can go wrong when building or transforming an algebra.
///
/// Structural problems (shapes, indices) are kept apart from axiom
/// failures: only the latter carry a [`CheckReport`] with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),

    #[error("axioms violated: {}", .0.failed_names().join(", "))]
    Axioms(Box<CheckReport>),

    #[error("no residuum for ({y}, {z}): the set {{x : x*y <= z}} has no greatest element")]
    NoResiduum { y: ElementId, z: ElementId },

    #[error("double negation law fails at element {witness}")]
    DnlRequired { witness: ElementId },

    #[error("not a general coupled semiring: {}", .0.failed_names().join(", "))]
    InvalidCoupled(Box<CheckReport>),

    #[error("not a tied semiring: {}", .0.failed_names().join(", "))]
    InvalidTied(Box<CheckReport>),

    #[error("carrier not closed under {op} at ({x}, {y})")]
    ClosureFails {
        op: &'static str,
        x: ElementId,
        y: ElementId,
    },

    #[error("{0:?} is not a subuniverse")]
    NotSubuniverse(Vec<ElementId>),

    #[error("the negation image of {0:?} is not a subuniverse")]
    NegNotSubuniverse(Vec<ElementId>),

    #[error("negation does not turn * into (+) at ({x}, {y})")]
    DeMorganFails { x: ElementId, y: ElementId },

    #[error("carrier size {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("size {0} is outside the supported range 2..=6")]
    SizeOutOfRange(usize),

    #[error("negation image differs from the double-negation fixed points at {0}")]
    NegImageMismatch(ElementId),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
