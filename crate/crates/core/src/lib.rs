//! Exact computation of the trace functions of generalized Kloosterman
//! local systems attached to classical groups, together with the
//! combinatorial data (regular elliptic numbers, unipotent monodromy
//! classes, Springer fiber dimensions) and numerical verification
//! routines built around them.
//!
//! The crate is organized around five layers:
//!
//! * [`cyclofield`] — finite fields `F_q` (odd characteristic, table
//!   driven), additive/multiplicative characters and exact sums in
//!   `Z[zeta_p]`.
//! * [`quadform`] — graded quadratic and symplectic spaces, pencils of
//!   quadrics and the stability test for functionals.
//! * [`weylcomb`] — regular elliptic numbers, unipotent classes,
//!   Springer fiber dimensions and the integer consistency identities.
//! * [`sum_engine`] — enumeration of the explicit domains and exact
//!   accumulation of the character sums `S(t)`.
//! * [`verify`] — span tests, purity bounds, Euler characteristic
//!   estimation by Hankel rank, and the matrix reconstruction oracle.

pub mod cyclofield;
pub mod error;
pub mod quadform;
pub mod sum_engine;
pub mod verify;
pub mod weylcomb;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
