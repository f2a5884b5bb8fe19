//! Named verification suites shared by the CLI selftest and the
//! acceptance tests. Each check re-derives one identity from scratch and
//! reports the first violation as a readable message.

use crate::cyclotomy::{CyclotomicSystem, QuatSequence};
use crate::galois::{GaloisRing, GrElement};
use crate::lc_oracle;
use crate::numth::{self, CaseTag};
use crate::spectra;

type Check = Result<(), String>;

fn fail(msg: String) -> Check {
    Err(msg)
}

/// Geometric sums of a primitive pq-th root: the proper multiples of p
/// (and of q) sum to 3, and the sum over all units is 1, which is also
/// the total of the four class sums.
pub fn root_sum_identities(sys: &CyclotomicSystem, ring: &GaloisRing, beta: &GrElement) -> Check {
    let m = sys.modulus();
    let powers = spectra::power_table(ring, beta, m);
    let three = ring.scalar(3);
    let sum_over = |idx: &mut dyn Iterator<Item = u64>| {
        idx.fold(ring.zero(), |acc, u| ring.add(&acc, &powers[u as usize]))
    };

    let p_sum = sum_over(&mut sys.multiples_of_p().iter().copied());
    if p_sum != three {
        return fail(format!("sum over multiples of p is {p_sum}, expected 3"));
    }
    let q_sum = sum_over(&mut sys.multiples_of_q().iter().copied());
    if q_sum != three {
        return fail(format!("sum over multiples of q is {q_sum}, expected 3"));
    }
    let unit_sum = sum_over(&mut (1..m).filter(|&u| numth::gcd(u, m) == 1));
    if unit_sum != ring.one() {
        return fail(format!("sum over units is {unit_sum}, expected 1"));
    }
    let class_total = (0..4u8).fold(ring.zero(), |acc, i| {
        ring.add(&acc, &spectra::class_poly_eval(sys, i, ring, beta))
    });
    if class_total != ring.one() {
        return fail(format!("class sums total {class_total}, expected 1"));
    }
    Ok(())
}

/// Class-sum evaluations at 1 and at every point of order p or q:
/// D_i(1) = 0, D_i(beta^(kq)) = 3(q-1)/4 and D_i(beta^(kp)) = 3(p-1)/4.
pub fn class_eval_table(sys: &CyclotomicSystem, ring: &GaloisRing, beta: &GrElement) -> Check {
    let (p, q) = (sys.p(), sys.q());
    for i in 0..4u8 {
        let at_one = spectra::class_poly_eval(sys, i, ring, &ring.one());
        if !at_one.is_zero() {
            return fail(format!("D_{i}(1) = {at_one}, expected 0"));
        }
    }
    let expect_q = ring.scalar((3 * (q - 1) / 4 % 4) as u8);
    for k in 1..p {
        let point = ring.pow(beta, (k * q) as u128);
        for i in 0..4u8 {
            let val = spectra::class_poly_eval(sys, i, ring, &point);
            if val != expect_q {
                return fail(format!("D_{i}(beta^({k}q)) = {val}, expected {expect_q}"));
            }
        }
    }
    let expect_p = ring.scalar((3 * (p - 1) / 4 % 4) as u8);
    for k in 1..q {
        let point = ring.pow(beta, (k * p) as u128);
        for i in 0..4u8 {
            let val = spectra::class_poly_eval(sys, i, ring, &point);
            if val != expect_p {
                return fail(format!("D_{i}(beta^({k}p)) = {val}, expected {expect_p}"));
            }
        }
    }
    Ok(())
}

/// Counting solutions of h^a + w = 0 against D_0: exactly (q-1)/4 hits
/// mod p, exactly (p-1)/4 hits mod q, and a unique simultaneous hit
/// exactly when 4 divides (p-1)/2 + a - (q-1)/2.
pub fn d0_hit_counts(sys: &CyclotomicSystem) -> Check {
    let (p, q, m) = (sys.p(), sys.q(), sys.modulus());
    for a in 0..4u64 {
        let ha = numth::mod_pow(sys.h(), a, m);
        let mut hits_p = 0u64;
        let mut hits_q = 0u64;
        let mut hits_both = 0u64;
        for &w in sys.class(0) {
            let s = (ha + w) % m;
            let dp = s % p == 0;
            let dq = s % q == 0;
            hits_p += u64::from(dp);
            hits_q += u64::from(dq);
            hits_both += u64::from(dp && dq);
        }
        if hits_p != (q - 1) / 4 {
            return fail(format!(
                "a={a}: {hits_p} elements of D_0 hit -h^a mod p, expected {}",
                (q - 1) / 4
            ));
        }
        if hits_q != (p - 1) / 4 {
            return fail(format!(
                "a={a}: {hits_q} elements of D_0 hit -h^a mod q, expected {}",
                (p - 1) / 4
            ));
        }
        let cond = ((p - 1) / 2 + a + 4 * m - (q - 1) / 2) % 4 == 0;
        if hits_both != u64::from(cond) {
            return fail(format!(
                "a={a}: {hits_both} simultaneous hits, expected {}",
                u64::from(cond)
            ));
        }
    }
    Ok(())
}

/// The 16-entry table of shifted-class inner products: adding
/// (q-1)/4 + (p-1)/4 yields 1 on the diagonal (or on the pairs with
/// i - j = 2 outside the 5,5 case) and 0 elsewhere.
pub fn inner_product_table(sys: &CyclotomicSystem, ring: &GaloisRing, beta: &GrElement) -> Check {
    let offset = ring.scalar((((sys.q() - 1) / 4 + (sys.p() - 1) / 4) % 4) as u8);
    for i in 0..4u8 {
        for j in 0..4u8 {
            let raw =
                spectra::tuple_inner_product(sys, ring, beta, i, j).map_err(|e| e.to_string())?;
            let got = ring.add(&raw, &offset);
            let hit = match sys.case() {
                CaseTag::Case55 => i == j,
                _ => (i + 4 - j) % 4 == 2,
            };
            let expect = ring.scalar(u8::from(hit));
            if got != expect {
                return fail(format!(
                    "inner product ({i},{j}) + offset = {got}, expected {expect}"
                ));
            }
        }
    }
    Ok(())
}

/// 2 lands in an even class exactly in the 5,5 case, odd otherwise.
pub fn two_class_parity(sys: &CyclotomicSystem) -> Check {
    let tc = sys.two_class();
    let want_even = sys.case() == CaseTag::Case55;
    if (tc % 2 == 0) != want_even {
        return fail(format!(
            "2 lies in D_{tc}, which contradicts {}",
            sys.case()
        ));
    }
    Ok(())
}

/// Divisibility of the order of 2 forced by the class of 2: 2 | ord when
/// 2 is in D_2, and 4 | ord when 2 is in an odd class.
pub fn order_divisibility(sys: &CyclotomicSystem) -> Check {
    let l = sys.ord2();
    match sys.two_class() {
        2 if l % 2 != 0 => fail(format!("2 in D_2 but ord2 = {l} is odd")),
        1 | 3 if l % 4 != 0 => fail(format!(
            "2 in D_{} but ord2 = {l} is not divisible by 4",
            sys.two_class()
        )),
        _ => Ok(()),
    }
}

/// The assembled closed-form spectrum must equal the transform of the
/// sequence coefficient by coefficient.
pub fn closed_form_matches_dft(
    sys: &CyclotomicSystem,
    ring: &GaloisRing,
    beta: &GrElement,
) -> Check {
    let seq = sys.build_sequence();
    let direct = spectra::dft(&seq, ring, beta).map_err(|e| e.to_string())?;
    let assembled = spectra::ms_closed_form(sys, ring, beta).map_err(|e| e.to_string())?;
    for (i, (a, b)) in direct.coeffs().iter().zip(assembled.coeffs()).enumerate() {
        if a != b {
            return fail(format!(
                "coefficient {i} differs: transform {a}, closed form {b}"
            ));
        }
    }
    Ok(())
}

/// All requested linear-complexity routes must agree; returns the common
/// value.
pub fn lc_routes_agree(
    sys: &CyclotomicSystem,
    ring: &GaloisRing,
    beta: &GrElement,
    include_oracle: bool,
) -> Result<u64, String> {
    let seq = sys.build_sequence();
    let spec = spectra::dft(&seq, ring, beta).map_err(|e| e.to_string())?;
    let from_spectrum = spectra::linear_complexity_from_spectrum(&spec);
    let report = spectra::lc_closed_form(sys, ring, beta).map_err(|e| e.to_string())?;
    if report.lc_predicted != from_spectrum {
        return Err(format!(
            "spectrum count {from_spectrum} != closed form {}",
            report.lc_predicted
        ));
    }
    if include_oracle {
        let (l, _) = lc_oracle::minimal_connection(&seq);
        if l != from_spectrum {
            return Err(format!(
                "recurrence oracle {l} != spectrum count {from_spectrum}"
            ));
        }
    }
    Ok(from_spectrum)
}

/// The trace-sum evaluation must reproduce the sequence at every index.
pub fn trace_matches_sequence(
    sys: &CyclotomicSystem,
    ring: &GaloisRing,
    beta: &GrElement,
) -> Check {
    let seq = sys.build_sequence();
    for u in 0..sys.modulus() {
        let got = spectra::trace_representation(sys, ring, beta, u).map_err(|e| e.to_string())?;
        if got != seq.get(u) {
            return fail(format!(
                "trace form gives {got} at u = {u}, sequence has {}",
                seq.get(u)
            ));
        }
    }
    Ok(())
}

/// Transforming and evaluating back must reproduce the sequence.
pub fn dft_roundtrip(seq: &QuatSequence, ring: &GaloisRing, beta: &GrElement) -> Check {
    let spec = spectra::dft(seq, ring, beta).map_err(|e| e.to_string())?;
    for u in 0..seq.period() as u64 {
        let got = spectra::reconstruct(&spec, u).map_err(|e| e.to_string())?;
        if got != seq.get(u) {
            return fail(format!(
                "roundtrip gives {got} at u = {u}, sequence has {}",
                seq.get(u)
            ));
        }
    }
    Ok(())
}

/// The recurrence-based order must equal the spectrum nonzero count.
pub fn oracle_matches_spectrum(seq: &QuatSequence, ring: &GaloisRing, beta: &GrElement) -> Check {
    let spec = spectra::dft(seq, ring, beta).map_err(|e| e.to_string())?;
    let from_spectrum = spectra::linear_complexity_from_spectrum(&spec);
    let (l, witness) = lc_oracle::minimal_connection(seq);
    if !lc_oracle::check_connection(seq, &witness) {
        return fail("returned witness fails its own connection check".into());
    }
    if l != from_spectrum {
        return fail(format!(
            "recurrence order {l} != spectrum count {from_spectrum} for {:?}",
            seq.values()
        ));
    }
    Ok(())
}
