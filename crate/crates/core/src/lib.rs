//! Exact diagonal reduction of matrices over commutative Bezout domains.
//!
//! Three rings are supported: the integers, ℚ[x], and the Henriksen ring
//! ℤ + xℚ[x]. Reduction goes through the Gelfand-range-1 construction for
//! 2×2 triangular matrices: shift the lower-left entry to a Gelfand element,
//! factor it against the diagonal, and complete Kaplansky's unimodular row.
//! Every result carries a certificate that can be re-checked independently.

pub mod error;
pub mod format;
pub mod gelfand;
pub mod henriksen;
pub mod matrix;
pub mod numeric;
pub mod oracle;
pub mod ring;
pub mod sample;

pub use error::{Error, Result};
pub use matrix::{MatrixR, SnfCertificate};
pub use ring::{GcdCertificate, RingElement, RingId};
