//! Distances on the graph of invertible symmetric binary matrices, and the
//! self-dual codes it encodes.

pub mod codes;
pub mod gamma;
pub mod gf2;
pub mod verify;

pub use codes::{CodeBasis, CodeFamily, CodesError, LinearCode, SelfDualCode};
pub use gamma::{GammaError, GraphConfig, PairClass};
pub use gf2::{BitMatrix, BitVector, Gf2Error, SymMatrix, Vertex};
pub use verify::{run_suite, Suite, SuiteReport, VerifyError, VerifyOptions};
