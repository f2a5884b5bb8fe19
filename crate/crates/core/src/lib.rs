//! Exact analysis of quaternary sequences over Z4 built from generalized
//! cyclotomic classes modulo a product of two odd primes.
//!
//! The pipeline runs entirely in exact modular arithmetic: a
//! [`cyclotomy::CyclotomicSystem`] fixes the class structure modulo `pq`,
//! [`galois`] provides the Galois ring `GR(4, 4^r)` the discrete Fourier
//! transform lives in, [`spectra`] computes the transform together with
//! closed-form coefficient assemblies and trace-sum evaluations, and
//! [`lc_oracle`] independently measures linear complexity from the
//! recurrence definition so the two routes can be checked against each
//! other. [`checks`] bundles the named verification suites used by both
//! the CLI selftest and the acceptance tests.

pub mod checks;
pub mod cyclotomy;
pub mod galois;
pub mod lc_oracle;
pub mod numth;
pub mod spectra;

pub use cyclotomy::{ClassLabel, CyclotomicSystem, QuatSequence};
pub use galois::{GaloisRing, GrElement};
pub use lc_oracle::ConnectionPoly;
pub use numth::CaseTag;
pub use spectra::{ClosedFormReport, Spectrum};
