//! Exact integer group determinants of `C4 x C4`.
//!
//! The crate evaluates the 16-variable group determinant three independent
//! ways, decides whether an integer is attainable as such a determinant
//! (returning a checkable certificate), and synthesizes coefficient vectors
//! realizing every attainable value.
//!
//! Everything is exact. Coefficients are `i64`; derived quantities and
//! determinants are `i128` with checked arithmetic, so overflow surfaces as
//! [`Error::Overflow`] instead of wrapping.

mod arith;
pub mod classifier;
pub mod document;
mod error;
pub mod gauss;
pub mod gdet;
pub mod numtheory;
pub mod spectra;
pub mod verification;
pub mod witness;

pub use classifier::{a_decompose, classify, classify_factored, ACertificate, Rejection, SClassification};
pub use document::CertificateDocument;
pub use error::{Error, Result};
pub use gauss::GaussInt;
pub use gdet::{
    beta_gamma_norms, beta_gamma_norms_alt, det16_direct, det16_factored, det16_pieces,
    det16_spectral, det2, det4, det4_gauss, BetaGammaNorms,
};
pub use numtheory::{Factorization, TwoSquaresRep, ENVELOPE};
pub use spectra::{derive, CoeffVec16, DerivedSpectra};
pub use witness::{emit, plan, witness, WitnessPlan};
