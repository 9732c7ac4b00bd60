//! Mod-`l^v` algebraic K-theory of Leavitt path algebras computed from quiver data, with a
//! symbolic Leavitt path algebra engine used to cross-check the combinatorics.
//!
//! * [`quiver`] parses and orders quivers and builds incidence matrices.
//! * [`linalg`] is the exact integer linear algebra underneath everything.
//! * [`ktheory`] computes K-group tables, long exact sequences and divisibility reports.
//! * [`algebra`] is the Cuntz-Krieger rewriting engine and the corner-skew structure.
//! * [`filtration`] checks the length filtration of the degree-zero part symbolically.
//! * [`cli`] backs the `lkmod` binary.

pub mod algebra;
pub mod cli;
pub mod filtration;
pub mod ktheory;
pub mod linalg;
pub mod quiver;

pub use algebra::{Element, LeavittPathAlgebra};
pub use linalg::{FinAbGroup, IntMatrix, Modulus};
pub use quiver::{OrderedQuiver, Quiver, QuiverError};
