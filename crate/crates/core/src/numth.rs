//! Integer and modular number theory: multiplicative orders, primitive
//! roots, CRT, and validation of the parameter constraints on (p, q).
//!
//! Everything here is deterministic trial-division arithmetic on 64-bit
//! words; the parameter sets this library targets are small enough that
//! nothing fancier pays off.

use std::fmt;

use thiserror::Error;

/// Errors from modular-arithmetic preconditions and parameter validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumthError {
    #[error("expected coprime arguments, but gcd({a}, {m}) = {g}")]
    NotCoprime { a: u64, m: u64, g: u64 },
    #[error("no valid parameters: {0}")]
    NoParameters(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple; `lcm(0, _) = 0`.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// `base^exp mod m` by binary exponentiation with 128-bit intermediates.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut acc: u128 = 1;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Deterministic primality test by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n` in ascending order, by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least `n >= 1` with `a^n = 1 (mod m)`. Requires `m >= 2`.
pub fn mul_order(a: u64, m: u64) -> Result<u64, NumthError> {
    assert!(m >= 2, "modulus must be at least 2");
    let g = gcd(a, m);
    if g != 1 {
        return Err(NumthError::NotCoprime { a, m, g });
    }
    let a = (a % m) as u128;
    let m128 = m as u128;
    let mut cur = a;
    let mut n = 1u64;
    while cur != 1 {
        cur = cur * a % m128;
        n += 1;
    }
    Ok(n)
}

/// True when `g` generates the multiplicative group modulo the prime `p`.
pub fn is_primitive_root(g: u64, p: u64) -> bool {
    debug_assert!(is_prime(p));
    if g % p == 0 {
        return false;
    }
    prime_factors(p - 1)
        .iter()
        .all(|&f| mod_pow(g, (p - 1) / f, p) != 1)
}

/// Smallest `g >= 2` that is a primitive root modulo both `p` and `q`.
pub fn common_primitive_root(p: u64, q: u64) -> Result<u64, NumthError> {
    if p == q {
        return Err(NumthError::NoParameters(format!(
            "p and q must be distinct, got {p} twice"
        )));
    }
    for n in [p, q] {
        if !is_prime(n) {
            return Err(NumthError::NoParameters(format!("{n} is not prime")));
        }
    }
    // A common primitive root always exists among the residues mod pq.
    (2..p * q)
        .find(|&g| is_primitive_root(g, p) && is_primitive_root(g, q))
        .ok_or_else(|| NumthError::NoParameters("no common primitive root found".into()))
}

/// The unique `x` in `[0, pq)` with `x = a (mod p)` and `x = b (mod q)`.
pub fn crt_pair(a: u64, b: u64, p: u64, q: u64) -> Result<u64, NumthError> {
    let g = gcd(p, q);
    if g != 1 {
        return Err(NumthError::NotCoprime { a: p, m: q, g });
    }
    let a = a % p;
    let b = b % q;
    let p_inv = mod_inv(p % q, q).expect("moduli are coprime");
    let diff = (b + q - a % q) % q;
    let k = (diff as u128 * p_inv as u128 % q as u128) as u64;
    Ok(a + p * k)
}

/// Residue pattern of (p mod 8, q mod 8) for a valid parameter pair.
///
/// `gcd(p-1, q-1) = 4` forces both primes into residue 1 or 5 mod 8 and
/// rules out both being 1, so exactly one variant applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// p = 1 (mod 8) and q = 5 (mod 8).
    Case15,
    /// p = 5 (mod 8) and q = 1 (mod 8).
    Case51,
    /// p = 5 (mod 8) and q = 5 (mod 8).
    Case55,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Case15 => "Case15",
            CaseTag::Case51 => "Case51",
            CaseTag::Case55 => "Case55",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Checks that p and q are distinct odd primes with `gcd(p-1, q-1) = 4`
/// and classifies the pair by its residues mod 8.
pub fn validate_params(p: u64, q: u64) -> Result<CaseTag, NumthError> {
    for (name, n) in [("p", p), ("q", q)] {
        if !is_prime(n) || n == 2 {
            return Err(NumthError::InvalidParameters(format!(
                "{name} = {n} is not an odd prime"
            )));
        }
    }
    if p == q {
        return Err(NumthError::InvalidParameters(format!(
            "p and q must be distinct, got {p} twice"
        )));
    }
    let g = gcd(p - 1, q - 1);
    if g != 4 {
        return Err(NumthError::InvalidParameters(format!(
            "gcd(p-1, q-1) = {g}, expected 4"
        )));
    }
    match (p % 8, q % 8) {
        (1, 5) => Ok(CaseTag::Case15),
        (5, 1) => Ok(CaseTag::Case51),
        (5, 5) => Ok(CaseTag::Case55),
        // gcd = 4 forces residues 1 or 5, and (1, 1) would make gcd a
        // multiple of 8.
        _ => unreachable!("residues mod 8 incompatible with gcd(p-1, q-1) = 4"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_by_repeated_multiplication() {
        assert_eq!(mul_order(2, 65).unwrap(), 12);
        assert_eq!(mul_order(1, 7).unwrap(), 1);
        assert_eq!(mul_order(2, 5).unwrap(), 4);
    }

    #[test]
    fn order_requires_coprime_base() {
        assert_eq!(
            mul_order(6, 9),
            Err(NumthError::NotCoprime { a: 6, m: 9, g: 3 })
        );
    }

    #[test]
    fn orders_divide_group_size() {
        for p in [5u64, 13, 17, 29, 53] {
            for a in 2..p {
                assert_eq!((p - 1) % mul_order(a, p).unwrap(), 0, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn common_roots_are_smallest() {
        assert_eq!(common_primitive_root(5, 13).unwrap(), 2);
        assert_eq!(common_primitive_root(17, 5).unwrap(), 3);
        assert!(matches!(
            common_primitive_root(5, 5),
            Err(NumthError::NoParameters(_))
        ));
    }

    #[test]
    fn crt_matches_hand_values() {
        assert_eq!(crt_pair(2, 1, 5, 13).unwrap(), 27);
        assert_eq!(crt_pair(3, 1, 17, 5).unwrap(), 71);
        assert_eq!(crt_pair(0, 0, 5, 13).unwrap(), 0);
        assert!(matches!(
            crt_pair(1, 1, 6, 9),
            Err(NumthError::NotCoprime { .. })
        ));
    }

    #[test]
    fn crt_is_a_bijection_at_small_moduli() {
        for (p, q) in [(5u64, 13u64), (7, 9), (4, 25)] {
            let mut seen = vec![false; (p * q) as usize];
            for a in 0..p {
                for b in 0..q {
                    let x = crt_pair(a, b, p, q).unwrap();
                    assert_eq!(x % p, a);
                    assert_eq!(x % q, b);
                    assert!(!seen[x as usize], "duplicate image {x}");
                    seen[x as usize] = true;
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn parameter_validation_classifies_pairs() {
        assert_eq!(validate_params(5, 13).unwrap(), CaseTag::Case55);
        assert_eq!(validate_params(17, 5).unwrap(), CaseTag::Case15);
        assert_eq!(validate_params(5, 17).unwrap(), CaseTag::Case51);
        assert!(matches!(
            validate_params(3, 7),
            Err(NumthError::InvalidParameters(_))
        ));
        assert!(matches!(
            validate_params(5, 15),
            Err(NumthError::InvalidParameters(_))
        ));
        assert!(matches!(
            validate_params(13, 13),
            Err(NumthError::InvalidParameters(_))
        ));
    }

    #[test]
    fn common_root_has_order_e_mod_pq() {
        for (p, q) in [(5u64, 13u64), (17, 5), (5, 17)] {
            let g = common_primitive_root(p, q).unwrap();
            let e = (p - 1) * (q - 1) / 4;
            assert_eq!(mul_order(g, p * q).unwrap(), e);
        }
    }

    #[test]
    fn prime_factor_lists() {
        assert_eq!(prime_factors(4095), vec![3, 5, 7, 13]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(64), vec![2]);
    }
}
