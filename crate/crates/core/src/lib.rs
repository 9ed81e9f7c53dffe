//! Computations with smooth plane quartic curves over the rationals:
//! the 28 bitangents, the 36 symmetric determinantal representations,
//! Cayley octads, the 63 rank-3 Gram matrices (sums of three squares),
//! spectrahedral forms of Vinnikov quartics, and semidefinite
//! optimization over Gram spectrahedra.
//!
//! All numerical work runs in certified high-precision complex
//! arithmetic ([`num::Real`], [`num::Cplx`]) with residual checks at
//! every stage, and exact rational reconstruction where the underlying
//! objects are rational.

pub mod bitangents;
pub mod classify;
pub mod dixon;
pub mod error;
pub mod linalg;
pub mod num;
pub mod octad;
pub mod poly;
pub mod proj;
pub mod quartic;
pub mod roots;
pub mod spectra;
pub mod steiner;
pub mod vinnikov;

pub use error::Error;
pub use num::{Cplx, Real, ToleranceProfile};
pub use quartic::TernaryQuartic;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
