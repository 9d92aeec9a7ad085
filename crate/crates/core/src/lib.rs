//! Exact computations for Lie-Yamaguti algebras equipped with Reynolds
//! operators of arbitrary weight: axiom checks, representations, the three
//! cochain complexes and their cohomology, formal deformations and abelian
//! extensions.
//!
//! Everything is over the rationals with arbitrary-precision integers, so
//! every identity check, rank and cohomology dimension is exact.

pub mod algebra;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod extension;
pub mod linalg;
pub mod random;
pub mod report;
pub mod representation;
pub mod reynolds;
pub mod samples;
pub mod tensor;

pub use algebra::LyAlgebra;
pub use cohomology::{Cochain, CohomologyContext, ComplexKind, ComplexReport, RlyCochain};
pub use deformation::{FormalIsomorphism, OrderReport, TruncatedDeformation};
pub use error::{Error, Result};
pub use extension::{AbelianExtension, ExtensionCocycle, ExtensionIsomorphism, Section};
pub use linalg::{Matrix, Scalar, SubspaceBasis};
pub use report::{AxiomReport, Check, Witness};
pub use representation::Representation;
pub use reynolds::ReynoldsOperator;
pub use tensor::{Bilinear, Trilinear};
