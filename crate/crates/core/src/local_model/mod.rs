//! Exact computation in the local model of the Frobenius pull-back of a
//! pushforward: the truncated ring k[t] ⊗_{k[s]} k[t] with s = t^p, its
//! nilpotent generator α = 1⊗t − t⊗1, the canonical connection, the
//! filtration by α-powers, the factor swap, and the wedge-kernel
//! certificate for modules with several symbols.
//!
//! The default s-truncation order is 2: every product of two filtration
//! basis monomials t^k α^m carries at most one factor of s, so order 2 is
//! exact for all the shipped checks; higher orders are accepted for
//! experiments.

mod bitensor;
mod linalg;
mod paired;
mod spoly;
mod symmetry;
mod wedge;

pub use bitensor::{BiTensorElement, FiltrationCoordinates};
pub use paired::PairedModuleElement;
pub use spoly::SPoly;
pub use symmetry::{classify_symmetry, SymmetryReport, SymmetryRow};
pub use wedge::{wedge_kernel_check, WedgeKernelReport};

/// Default s-adic truncation order of the local ring.
pub const DEFAULT_TRUNCATION: usize = 2;
