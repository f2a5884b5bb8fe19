//! The end-to-end analysis for one parameter pair: build the class
//! system, the Galois ring of degree ord_2(pq) and a primitive pq-th
//! root, transform the sequence, and compare every requested
//! linear-complexity route.

use std::time::Instant;

use quatseq_core::cyclotomy::CyclotomicSystem;
use quatseq_core::galois::GaloisRing;
use quatseq_core::lc_oracle;
use quatseq_core::spectra;

use crate::report::AnalysisReport;

/// Guard against accidentally enormous rings; analysis cost grows with
/// pq squared and with the ring degree.
pub const MAX_PERIOD: u64 = 100_000;

/// Ring degrees above 63 would need exponents beyond u64 range.
pub const MAX_DEGREE: u64 = 63;

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub oracle: bool,
    pub verify_trace: bool,
    pub emit_spectrum: bool,
}

pub fn analyze_pair(p: u64, q: u64, opts: AnalyzeOptions) -> Result<AnalysisReport, String> {
    let started = Instant::now();
    let period = p
        .checked_mul(q)
        .filter(|&t| t <= MAX_PERIOD)
        .ok_or_else(|| format!("pq = {p} * {q} exceeds the supported cap {MAX_PERIOD}"))?;
    let sys = CyclotomicSystem::build(p, q).map_err(|e| e.to_string())?;
    if sys.ord2() > MAX_DEGREE {
        return Err(format!(
            "the order of 2 modulo {period} is {}, above the supported ring degree {MAX_DEGREE}",
            sys.ord2()
        ));
    }
    let ring = GaloisRing::new(sys.ord2() as usize).map_err(|e| e.to_string())?;
    let beta = ring.primitive_nth_root(period).map_err(|e| e.to_string())?;
    let seq = sys.build_sequence();

    let spectrum = spectra::dft(&seq, &ring, &beta).map_err(|e| e.to_string())?;
    let lc_spectrum = spectra::linear_complexity_from_spectrum(&spectrum);
    let assembled = spectra::ms_closed_form(&sys, &ring, &beta).map_err(|e| e.to_string())?;
    let closed_form_matches_dft = assembled.coeffs() == spectrum.coeffs();
    let closed = spectra::lc_closed_form(&sys, &ring, &beta).map_err(|e| e.to_string())?;

    let lc_oracle = opts.oracle.then(|| lc_oracle::minimal_connection(&seq).0);
    let trace_verified = opts.verify_trace.then(|| {
        (0..period)
            .all(|u| spectra::trace_representation(&sys, &ring, &beta, u).ok() == Some(seq.get(u)))
    });

    Ok(AnalysisReport {
        p,
        q,
        case: sys.case().to_string(),
        g: sys.g(),
        h: sys.h(),
        e: sys.class_size(),
        ell: sys.ord2(),
        ell_p: sys.ord2_p(),
        ell_q: sys.ord2_q(),
        two_class_index: sys.two_class(),
        modulus: ring.modulus().to_vec(),
        lc_spectrum,
        lc_closed_form: closed.lc_predicted,
        lc_oracle,
        zero_branch: closed.zero_branch,
        rho: closed.rho.coeffs().to_vec(),
        trace_verified,
        closed_form_matches_dft,
        elapsed_ms: started.elapsed().as_millis() as u64,
        spectrum: opts.emit_spectrum.then(|| spectrum.coeff_lists()),
    })
}
