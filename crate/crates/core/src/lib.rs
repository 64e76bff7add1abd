//! Exact-arithmetic verification that exterior squares of iterated
//! Frobenius pushforwards destabilize on curves of genus ≥ 2 in positive
//! characteristic.
//!
//! Three engines, all over exact arithmetic (F_p[s] tables locally,
//! arbitrary-precision rationals globally; no floating point anywhere):
//!
//! * [`modp`] — binomial coefficients mod p by Lucas decomposition and the
//!   alternating-sign congruences the local expansions rest on;
//! * [`local_model`] — the truncated ring k[t] ⊗_{k[s]} k[t] with s = t^p:
//!   the nilpotent α = 1⊗t − t⊗1, the canonical connection and its
//!   filtration, the factor swap with its symmetry classification, and the
//!   wedge-kernel certificate for several symbols;
//! * [`slope`] / [`destab`] — exact rank/degree classes, slope gaps of the
//!   canonical destabilizing sub-bundles, grid sweeps of the verdict
//!   predicate, and the degree certificate for the cohomological-stability
//!   counterexample.

pub mod destab;
pub mod error;
pub mod local_model;
pub mod modp;
pub mod slope;

pub use destab::{
    closed_form_gap, cohom_certificate, subbundle_class, verdict, verdict_sweep, CaseTag,
    CohomCertificate, DestabilizationVerdict, SweepBounds, SweepFailure, SweepPoint, SweepReport,
};
pub use error::{Error, Result};
pub use local_model::{
    classify_symmetry, wedge_kernel_check, BiTensorElement, FiltrationCoordinates,
    PairedModuleElement, SPoly, SymmetryReport, SymmetryRow, WedgeKernelReport,
    DEFAULT_TRUNCATION,
};
pub use modp::{binom_mod, check_binomial_congruences, primes_up_to, PrimeChar};
pub use slope::{BundleClass, CurveContext, FiltrationReport};
