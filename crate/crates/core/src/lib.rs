//! Exact computations on finite root systems and Coxeter groups: full
//! reflections, root-poset antichains, cluster complexes, Orlik-Solomon
//! characters and power-sum symmetric functions.

pub mod arith;
pub mod characters;
pub mod cluster;
pub mod error;
pub mod perm;
pub mod root_poset;
pub mod root_system;
pub mod symfunc;
pub mod verify;

pub use arith::{BiPoly, GoldenNumber, Partition, Rational, UniPoly};
pub use error::{CoxError, Result};
pub use perm::GroupElement;
pub use root_system::{CoxeterType, Family, RootSystem};
pub use symfunc::SymFunc;
pub use verify::{Check, Status, VerificationReport, VerifyOptions};
