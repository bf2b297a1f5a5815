//! Identity-verification engine for a nonstandard gamma-matrix representation.
//!
//! The crate builds every concrete object of the construction — the gamma
//! matrices, plane-wave Dirac solutions, the antilinear discrete-symmetry
//! operators, bilinear four-currents, the derived Proca/Maxwell potentials and
//! spin fields, and an abstract 12-dimensional bracket table — and mechanically
//! checks every identity they are claimed to satisfy. Results are collected in
//! a claim registry and emitted as a machine-readable report (see [`claims`]).
//!
//! Momentum-independent operator identities run in exact Gaussian-rational
//! arithmetic (zero residuals); field identities run in IEEE double precision
//! over randomized momenta and sample points.

pub mod algebra;
pub mod antilinear;
pub mod boson;
pub mod claims;
pub mod currents;
mod error;
pub mod exec;
pub mod fields;
pub mod fourvec;
pub mod gamma;
pub mod matrix;
pub mod momentum;
pub mod scalar;
pub mod solutions;
pub mod structure;

pub use error::Error;
pub use fourvec::{minkowski_dot, FourVector};
pub use gamma::GammaRep;
pub use matrix::{Matrix4, Spinor};
pub use momentum::Momentum;
pub use scalar::{C64, Exact};

pub type Result<T> = std::result::Result<T, Error>;
