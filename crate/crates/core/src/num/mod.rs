//! Arbitrary-precision scalars and tolerance bookkeeping.
//!
//! [`Real`] wraps a binary floating-point number of explicit precision;
//! [`Cplx`] is the complex layer on top of it. Every arithmetic result
//! carries the minimum precision of its operands, so a value's stated
//! precision is always a sound bound on its relative rounding error
//! (one half-ulp per operation).

mod complex;
mod rational;
mod real;
mod tolerance;

pub use complex::Cplx;
pub use rational::{rat_from_decimal_str, rat_to_string, rationalize, rationalize_cplx};
pub use real::Real;
pub use tolerance::ToleranceProfile;
