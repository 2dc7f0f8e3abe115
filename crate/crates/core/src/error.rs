//! Domain errors shared across the geometry modules.

use thiserror::Error;

/// Why a candidate triple fails validation.
#[derive(Clone, Debug, PartialEq, Error)]
pub enum TripleViolation {
    #[error("entry {index} is the zero vector")]
    Zero { index: usize },
    #[error("entry {index} is not null (Q = {q})")]
    NotNull { index: usize, q: String },
    #[error("entries {i} and {j} are not orthogonal (dot = {dot})")]
    NotOrthogonal { i: usize, j: usize, dot: String },
    #[error("normalization (x \u{d7} y) \u{b7} z = {value}, expected 1/2")]
    Normalization { value: String },
}

/// Domain error: input is outside an operation's precondition.
#[derive(Clone, Debug, PartialEq, Error)]
pub enum GeomError {
    #[error("zero vector does not define a projective point")]
    ZeroVector,
    #[error("vector is not null (Q = {q})")]
    NotNull { q: String },
    #[error("points coincide")]
    SamePoint,
    #[error("points are not collinear (roll distance {distance})")]
    NotCollinear { distance: u8 },
    #[error("points are not two rolls apart (roll distance {distance})")]
    NotTwoRolls { distance: u8 },
    #[error("extension case {case} expects roll distance {expected}, found {found}")]
    WrongDistance { case: u8, expected: u8, found: u8 },
    #[error("pairs lie in different orbits ({left} vs {right})")]
    DifferentOrbits { left: String, right: String },
    #[error("invalid null triple: {0}")]
    InvalidTriple(#[from] TripleViolation),
    #[error("invalid kinematic parameter: {0}")]
    Kinematics(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl GeomError {
    /// Stable machine-readable code for the structured CLI error output.
    pub fn code(&self) -> &'static str {
        match self {
            GeomError::ZeroVector => "ZeroVector",
            GeomError::NotNull { .. } => "NotNull",
            GeomError::SamePoint => "SamePoint",
            GeomError::NotCollinear { .. } => "NotCollinear",
            GeomError::NotTwoRolls { .. } => "NotTwoRolls",
            GeomError::WrongDistance { .. } => "WrongDistance",
            GeomError::DifferentOrbits { .. } => "DifferentOrbits",
            GeomError::InvalidTriple(_) => "InvalidTriple",
            GeomError::Kinematics(_) => "Kinematics",
            GeomError::InvalidInput(_) => "InvalidInput",
        }
    }
}
