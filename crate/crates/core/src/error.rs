use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("level must be at least {min}, got {got}")]
    InvalidLevel { min: usize, got: usize },
    #[error("algebra fails its axioms: {0}")]
    InvalidAlgebra(String),
    #[error("representation fails its conditions: {0}")]
    InvalidRepresentation(String),
    #[error("pair is not a (2,3)-cocycle: {0}")]
    NotCocycle(String),
    #[error("cochain is not a valid cochain: {0}")]
    InvalidCochain(String),
    #[error("map does not intertwine the twists (f∘α ≠ β∘f)")]
    NotEquivariant,
    #[error("operator is not Nijenhuis: {0}")]
    NotNijenhuis(String),
    #[error("operator does not commute with the twist map")]
    NotTwistCompatible,
    #[error("deformed algebra fails its axioms: {0}")]
    DeformationInvalid(String),
    #[error("no section is both a right inverse of the projection and twist-compatible")]
    NoCompatibleSection,
    #[error("section is invalid: {0}")]
    InvalidSection(String),
    #[error("bracket value lies outside the image of the module: {0}")]
    OutsideModule(String),
    #[error("extension data is invalid: {0}")]
    InvalidExtension(String),
    #[error("extensions are not comparable: {0}")]
    MismatchedExtensions(String),
    #[error("constructed equivalence failed verification: {0}")]
    EquivalenceVerification(String),
    #[error("problem size {size} exceeds limit {limit}")]
    SizeGuard { size: u128, limit: u128 },
}

impl Error {
    /// Stable identifier used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::InvalidLevel { .. } => "InvalidLevel",
            Error::InvalidAlgebra(_) => "InvalidAlgebra",
            Error::InvalidRepresentation(_) => "InvalidRepresentation",
            Error::NotCocycle(_) => "NotCocycle",
            Error::InvalidCochain(_) => "InvalidCochain",
            Error::NotEquivariant => "NotEquivariant",
            Error::NotNijenhuis(_) => "NotNijenhuis",
            Error::NotTwistCompatible => "NotTwistCompatible",
            Error::DeformationInvalid(_) => "DeformationInvalid",
            Error::NoCompatibleSection => "NoCompatibleSection",
            Error::InvalidSection(_) => "InvalidSection",
            Error::OutsideModule(_) => "OutsideModule",
            Error::InvalidExtension(_) => "InvalidExtension",
            Error::MismatchedExtensions(_) => "MismatchedExtensions",
            Error::EquivalenceVerification(_) => "EquivalenceVerification",
            Error::SizeGuard { .. } => "SizeGuard",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
