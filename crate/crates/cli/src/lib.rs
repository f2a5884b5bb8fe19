//! Library side of the `quatseq` binary: the analysis pipeline, report
//! serialization, and the selftest runner. Kept as a lib target so
//! integration tests can drive the pieces directly.

pub mod pipeline;
pub mod report;
pub mod selftest;
