use thiserror::Error;

use crate::linalg::ParseScalarError;

/// Errors raised by constructors and operations. Mathematical check
/// failures are not errors; they come back as data in the reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimMismatch { context: &'static str, expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("composition of differentials is not zero")]
    CompositionNotZero,

    #[error("{what} is not antisymmetric at basis tuple {tuple:?}")]
    NotAntisymmetric { what: &'static str, tuple: Vec<usize> },

    #[error("not a Lie algebra: {0}")]
    NotLieAlgebra(String),

    #[error("not a left Leibniz algebra: {0}")]
    NotLeibniz(String),

    #[error("not a reductive splitting: {0}")]
    NotReductive(String),

    #[error("operator is not a Reynolds operator of the given weight: {0}")]
    InvalidReynolds(String),

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("map is not a derivation: {0}")]
    NotDerivation(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("representation has no module operator")]
    MissingModuleOp,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("representations are over different algebras or operators")]
    MixedAlgebras,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("degree {degree} out of range (must be between 1 and {max})")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("deformation order {0} is too low")]
    OrderTooLow(usize),

    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("cochain is not a coboundary")]
    NotCoboundary,

    #[error("cochain is not a cocycle")]
    NotCocycle,

    #[error("cocycle fails the cyclic LY3 condition, so it defines no Lie-Yamaguti algebra on L ⊕ V")]
    CyclicConditionFails,

    #[error("map is not a section of the projection")]
    NotSection,

    #[error("incompatible data: {0}")]
    IncompatibleData(String),

    #[error(transparent)]
    Parse(#[from] ParseScalarError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
