use thiserror::Error;

use crate::Subset;

/// Which circuit axiom a family failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// The empty set is not a circuit.
    C1,
    /// No circuit properly contains another.
    C2,
    /// Finite circuit elimination.
    C3,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("circuit axiom {axiom:?} violated by {circuits:?}")]
    AxiomViolation { axiom: Axiom, circuits: Vec<Subset> },
    #[error("duplicate element label {0:?}")]
    DuplicateElement(String),
    #[error("unknown element label {0:?}")]
    UnknownElement(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("input set is dependent")]
    DependentInput,
    #[error("element does not close a circuit with the given independent set")]
    NotDependent,
    #[error("ground set of {size} elements exceeds the enumeration cap of {cap}")]
    GroundSetTooLarge { size: usize, cap: usize },
    #[error("separations are over different ground sets")]
    GroundSetMismatch,
    #[error("separations do not cross")]
    NotCrossing,
    #[error("corner quadrant or its complement has fewer than two elements")]
    QuadrantTooSmall,
    #[error("{0:?} is not a circuit")]
    NotACircuit(Subset),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("lemma failure: {0}")]
    LemmaFailure(String),
    #[error("family member {0} is not a side of a 2-separation")]
    NotA2Separation(usize),
    #[error("family members overlap")]
    FamilyNotDisjoint,
    #[error("matroid is not connected")]
    Disconnected,
    #[error("bad shared element: {0}")]
    BadSharedElement(String),
    #[error("matroid has fewer than three elements")]
    TooSmall,
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("parts do not partition the ground set")]
    NotAPartition,
    #[error("separations {0:?} and {1:?} cross")]
    NotNested(Subset, Subset),
    #[error("oriented separation {0:?} has no inverse in the set")]
    NotSymmetric(Subset),
    #[error("torso is neither 3-connected, a circuit, nor a cocircuit")]
    Unclassifiable,
}

pub type Result<T> = std::result::Result<T, Error>;
