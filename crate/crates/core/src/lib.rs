//! Exact computations with the Witt, Virasoro and Heisenberg Lie algebras.
//!
//! All arithmetic is over the rationals. The crate covers
//!
//! * the Witt algebra and its degree-2 cohomology, including the reduction of
//!   an arbitrary 2-cocycle to a multiple of the Virasoro cocycle;
//! * central extensions by a cocycle, with the Virasoro and Heisenberg
//!   algebras as instances;
//! * the charged Fock spaces of the Heisenberg algebra and the Sugawara
//!   operators on them;
//! * Virasoro Verma modules and their map into Fock space.
//!
//! Identities are exposed as `check_*` sweeps returning a [`VerificationReport`].

pub mod cohomology;
pub mod error;
pub mod extension;
pub mod fock;
pub mod free;
pub mod partition;
pub mod report;
pub mod scalar;
pub mod verma;
pub mod witt;

pub use error::{Error, ParseScalarError, Result};
pub use free::FreeVector;
pub use partition::Partition;
pub use report::{Counterexample, Status, VerificationReport};
pub use scalar::Scalar;
