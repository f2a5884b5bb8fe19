//! Built-in verification: the identity suites on three fixed parameter
//! sets, modulus provenance for each ring degree in play, and the
//! recurrence-vs-spectrum equivalence on seeded random short sequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use quatseq_core::checks;
use quatseq_core::cyclotomy::{CyclotomicSystem, QuatSequence};
use quatseq_core::galois::GaloisRing;

pub const BUILTIN_PAIRS: [(u64, u64); 3] = [(5, 13), (17, 5), (5, 17)];

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn record(name: String, result: Result<(), String>) -> Self {
        match result {
            Ok(()) => Self {
                name,
                passed: true,
                detail: String::new(),
            },
            Err(detail) => Self {
                name,
                passed: false,
                detail,
            },
        }
    }
}

pub fn exit_code(outcomes: &[CheckOutcome]) -> i32 {
    if outcomes.iter().all(|o| o.passed) {
        0
    } else {
        3
    }
}

pub fn run(seed: u64) -> Vec<CheckOutcome> {
    run_with_modulus_override(seed, None)
}

/// Selftest with an optional replacement modulus for one ring degree,
/// standing in for a corrupted modulus table. Provenance is checked
/// first; when it fails, the ring-based checks for that degree are
/// skipped rather than run on a broken ring.
pub fn run_with_modulus_override(
    seed: u64,
    override_modulus: Option<(usize, Vec<u8>)>,
) -> Vec<CheckOutcome> {
    let mut outcomes = Vec::new();

    for (p, q) in BUILTIN_PAIRS {
        let tag = format!("{p}-{q}");
        let sys = match CyclotomicSystem::build(p, q) {
            Ok(sys) => sys,
            Err(e) => {
                outcomes.push(CheckOutcome::record(
                    format!("build-system-{tag}"),
                    Err(e.to_string()),
                ));
                continue;
            }
        };
        outcomes.push(CheckOutcome::record(format!("build-system-{tag}"), Ok(())));
        outcomes.push(CheckOutcome::record(
            format!("class-hit-counts-{tag}"),
            checks::d0_hit_counts(&sys),
        ));
        outcomes.push(CheckOutcome::record(
            format!("two-class-parity-{tag}"),
            checks::two_class_parity(&sys),
        ));
        outcomes.push(CheckOutcome::record(
            format!("order-divisibility-{tag}"),
            checks::order_divisibility(&sys),
        ));

        let degree = sys.ord2() as usize;
        let canonical = GaloisRing::new(degree).expect("supported degree");
        let ring = match &override_modulus {
            Some((d, modulus)) if *d == degree => {
                GaloisRing::from_modulus_unchecked(modulus.clone())
            }
            _ => canonical.clone(),
        };
        let provenance = if ring.modulus() == canonical.modulus() {
            Ok(())
        } else {
            Err(format!(
                "modulus for degree {degree} does not match its canonical construction"
            ))
        };
        let provenance_ok = provenance.is_ok();
        outcomes.push(CheckOutcome::record(
            format!("modulus-provenance-deg{degree}"),
            provenance,
        ));
        if !provenance_ok {
            // ring-based identities would be meaningless on this ring
            continue;
        }

        let beta = match ring.primitive_nth_root(sys.modulus()) {
            Ok(beta) => beta,
            Err(e) => {
                outcomes.push(CheckOutcome::record(
                    format!("primitive-root-{tag}"),
                    Err(e.to_string()),
                ));
                continue;
            }
        };
        outcomes.push(CheckOutcome::record(
            format!("root-sums-{tag}"),
            checks::root_sum_identities(&sys, &ring, &beta),
        ));
        outcomes.push(CheckOutcome::record(
            format!("class-eval-table-{tag}"),
            checks::class_eval_table(&sys, &ring, &beta),
        ));
        outcomes.push(CheckOutcome::record(
            format!("inner-product-table-{tag}"),
            checks::inner_product_table(&sys, &ring, &beta),
        ));
    }

    for (period, degree) in [(7u64, 3usize), (15, 4)] {
        let name = format!("oracle-spectrum-equivalence-T{period}");
        let result = (|| -> Result<(), String> {
            let ring = GaloisRing::new(degree).map_err(|e| e.to_string())?;
            let beta = ring.primitive_nth_root(period).map_err(|e| e.to_string())?;
            let mut rng = ChaCha12Rng::seed_from_u64(seed ^ period);
            for _ in 0..50 {
                let values: Vec<u8> = (0..period).map(|_| rng.random_range(0..4)).collect();
                let seq = QuatSequence::new(values);
                checks::oracle_matches_spectrum(&seq, &ring, &beta)?;
            }
            Ok(())
        })();
        outcomes.push(CheckOutcome::record(name, result));
    }

    outcomes
}
