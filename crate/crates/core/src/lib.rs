//! Exact cohomology and deformations of finite-dimensional Lie and Leibniz
//! algebras given by structure constants over the rationals.

pub mod algebra;
pub mod catalogue;
pub mod classify;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod differential;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod linalg;
pub mod poly;
pub mod render;
pub mod scalar;

pub use algebra::{AlgebraSpec, IdentityReport};
pub use cochain::{Cochain, Theory};
pub use error::{Error, Result};
pub use linalg::{MatrixQ, SubspaceBasis};
pub use scalar::Scalar;
