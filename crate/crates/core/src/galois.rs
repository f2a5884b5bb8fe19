//! Exact arithmetic in the Galois ring GR(4, 4^r): modulus construction
//! by Graeffe lifting, element operations, Teichmuller decomposition,
//! Frobenius maps, traces, and roots of unity.
//!
//! The ring is Z4[X]/(f(X)) for a monic f whose mod-2 reduction is
//! irreducible over F2 (a basic irreducible). Elements are canonical
//! coefficient vectors of length r with entries in 0..4; the ring object
//! owns the modulus and performs all operations, so element values stay
//! plain data that can move freely between threads.

use std::fmt;

use thiserror::Error;

use crate::numth;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("polynomial is not irreducible over F2")]
    NotIrreducible,
    #[error("ring degree {0} is outside the supported range 1..=63")]
    UnsupportedDegree(usize),
    #[error("{s} does not divide {r}")]
    NotADivisor { s: usize, r: usize },
    #[error("no element of multiplicative order {0}: it must be an odd divisor of 2^r - 1")]
    OrderUnavailable(u64),
}

/// Binary polynomials packed into words: bit i is the coefficient of x^i.
mod f2 {
    use crate::numth;

    pub fn degree(poly: u64) -> usize {
        debug_assert!(poly != 0);
        63 - poly.leading_zeros() as usize
    }

    /// Carry-less product.
    pub fn mul(a: u64, mut b: u64) -> u128 {
        let a = a as u128;
        let mut acc = 0u128;
        while b != 0 {
            acc ^= a << b.trailing_zeros();
            b &= b - 1;
        }
        acc
    }

    pub fn rem(mut a: u128, m: u64) -> u64 {
        let dm = degree(m);
        let m128 = m as u128;
        while a >> dm != 0 {
            let da = 127 - a.leading_zeros() as usize;
            a ^= m128 << (da - dm);
        }
        a as u64
    }

    pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
        rem(mul(a, b), m)
    }

    pub fn powmod(a: u64, mut e: u64, m: u64) -> u64 {
        let mut base = rem(a as u128, m);
        let mut acc = rem(1, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base, m);
            }
            base = mulmod(base, base, m);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = rem(a as u128, b);
            a = b;
            b = t;
        }
        a
    }

    /// Irreducibility over F2: x^(2^r) = x mod poly, and x^(2^(r/t)) - x
    /// shares no factor with poly for any prime t dividing r.
    pub fn is_irreducible(poly: u64, r: usize) -> bool {
        if poly < 2 || degree(poly) != r {
            return false;
        }
        let x = rem(2, poly);
        let checkpoints: Vec<usize> = numth::prime_factors(r as u64)
            .iter()
            .map(|&t| r / t as usize)
            .collect();
        let mut cur = x;
        for k in 1..=r {
            cur = mulmod(cur, cur, poly);
            if checkpoints.contains(&k) && gcd(cur ^ x, poly) != 1 {
                return false;
            }
        }
        cur == x
    }

    /// The irreducible of degree r with the smallest bit encoding.
    pub fn smallest_irreducible(r: usize) -> u64 {
        let base = 1u64 << r;
        (0..base)
            .map(|k| base | k)
            .find(|&cand| is_irreducible(cand, r))
            .expect("irreducible binary polynomials exist in every degree")
    }
}

/// An element of GR(4, 4^r): r coefficients in 0..4, constant term first,
/// in canonical reduced form for the owning ring's modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrElement {
    coeffs: Vec<u8>,
}

impl GrElement {
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The ring GR(4, 4^r) as Z4[X]/(f(X)) for a basic irreducible f.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisRing {
    degree: usize,
    modulus: Vec<u8>,
}

impl GaloisRing {
    /// The ring of the given degree over the canonical modulus: the
    /// smallest binary irreducible of that degree, Graeffe-lifted.
    pub fn new(degree: usize) -> Result<Self, GaloisError> {
        if degree == 0 || degree > 63 {
            return Err(GaloisError::UnsupportedDegree(degree));
        }
        Self::lift_binary_irreducible(f2::smallest_irreducible(degree))
    }

    /// Lifts a binary irreducible b to the basic irreducible f over Z4
    /// with f(X^2) = ±b(X)b(-X), the sign chosen to keep f monic. The
    /// lift reduces back to b mod 2.
    pub fn lift_binary_irreducible(bin: u64) -> Result<Self, GaloisError> {
        if bin < 2 {
            return Err(GaloisError::UnsupportedDegree(0));
        }
        let r = f2::degree(bin);
        if !f2::is_irreducible(bin, r) {
            return Err(GaloisError::NotIrreducible);
        }
        let b: Vec<u8> = (0..=r).map(|i| ((bin >> i) & 1) as u8).collect();
        let b_neg: Vec<u8> = b
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { (4 - c) & 3 } else { c })
            .collect();
        let mut prod = vec![0u8; 2 * r + 1];
        for (i, &bi) in b.iter().enumerate() {
            if bi == 0 {
                continue;
            }
            for (j, &cj) in b_neg.iter().enumerate() {
                prod[i + j] = (prod[i + j] + bi * cj) & 3;
            }
        }
        debug_assert!(
            prod.iter().skip(1).step_by(2).all(|&c| c == 0),
            "b(X)b(-X) must be even"
        );
        let mut modulus: Vec<u8> = (0..=r).map(|i| prod[2 * i]).collect();
        if r % 2 == 1 {
            for c in &mut modulus {
                *c = (4 - *c) & 3;
            }
        }
        debug_assert_eq!(modulus[r], 1, "lift must be monic");
        debug_assert!(
            modulus.iter().zip(&b).all(|(&f, &bc)| f & 1 == bc),
            "lift must reduce to b mod 2"
        );
        Ok(Self { degree: r, modulus })
    }

    /// Wraps an arbitrary monic modulus without checking the basic
    /// irreducibility invariant. Intended for fault-injection tests.
    pub fn from_modulus_unchecked(modulus: Vec<u8>) -> Self {
        assert!(
            modulus.len() >= 2 && modulus.last() == Some(&1),
            "modulus must be monic of degree >= 1"
        );
        let modulus: Vec<u8> = modulus.iter().map(|&c| c & 3).collect();
        Self {
            degree: modulus.len() - 1,
            modulus,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The modulus coefficients, constant term first, length degree + 1.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// Size of the cyclic unit factor, 2^r - 1.
    pub fn unit_group_order(&self) -> u64 {
        (1u64 << self.degree) - 1
    }

    fn binary_modulus(&self) -> u64 {
        self.modulus
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &c)| acc | (((c & 1) as u64) << i))
    }

    fn check_member(&self, a: &GrElement) {
        assert_eq!(
            a.coeffs.len(),
            self.degree,
            "element does not belong to this ring"
        );
    }

    pub fn zero(&self) -> GrElement {
        GrElement {
            coeffs: vec![0; self.degree],
        }
    }

    pub fn one(&self) -> GrElement {
        self.scalar(1)
    }

    pub fn scalar(&self, c: u8) -> GrElement {
        let mut coeffs = vec![0; self.degree];
        coeffs[0] = c & 3;
        GrElement { coeffs }
    }

    /// Builds an element from arbitrary coefficients, reducing mod 4 and
    /// mod the ring modulus.
    pub fn element(&self, coeffs: &[u8]) -> GrElement {
        let mut work: Vec<u8> = coeffs.iter().map(|&c| c & 3).collect();
        self.reduce(&mut work);
        GrElement { coeffs: work }
    }

    fn reduce(&self, work: &mut Vec<u8>) {
        let r = self.degree;
        let mut top = work.len();
        while top > r {
            top -= 1;
            let c = work[top];
            if c != 0 {
                let base = top - r;
                for (k, &mk) in self.modulus.iter().enumerate() {
                    let sub = (c * mk) & 3;
                    work[base + k] = (work[base + k] + 4 - sub) & 3;
                }
            }
        }
        work.truncate(r);
        work.resize(r, 0);
    }

    pub fn add(&self, a: &GrElement, b: &GrElement) -> GrElement {
        self.check_member(a);
        self.check_member(b);
        GrElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + y) & 3)
                .collect(),
        }
    }

    pub fn sub(&self, a: &GrElement, b: &GrElement) -> GrElement {
        self.check_member(a);
        self.check_member(b);
        GrElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + 4 - y) & 3)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GrElement) -> GrElement {
        self.check_member(a);
        GrElement {
            coeffs: a.coeffs.iter().map(|&x| (4 - x) & 3).collect(),
        }
    }

    /// Scalar multiple by a residue mod 4.
    pub fn scale(&self, a: &GrElement, c: u8) -> GrElement {
        self.check_member(a);
        let c = c & 3;
        GrElement {
            coeffs: a.coeffs.iter().map(|&x| (x * c) & 3).collect(),
        }
    }

    pub fn mul(&self, a: &GrElement, b: &GrElement) -> GrElement {
        self.check_member(a);
        self.check_member(b);
        let r = self.degree;
        let mut work = vec![0u8; 2 * r.max(1)];
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                work[i + j] = (work[i + j] + ai * bj) & 3;
            }
        }
        self.reduce(&mut work);
        GrElement { coeffs: work }
    }

    /// `a^n` by binary exponentiation; `a^0 = 1`.
    pub fn pow(&self, a: &GrElement, mut n: u128) -> GrElement {
        self.check_member(a);
        let mut acc = self.one();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// Splits `a = a1 + 2*a2` with both parts in the Teichmuller set.
    ///
    /// Squaring kills the 2-torsion part, so a^(2^r) recovers a1 directly;
    /// the halved difference is then canonicalized by the same map.
    pub fn teichmuller_decompose(&self, a: &GrElement) -> (GrElement, GrElement) {
        self.check_member(a);
        let two_r = 1u128 << self.degree;
        let a1 = self.pow(a, two_r);
        let half: Vec<u8> = a
            .coeffs
            .iter()
            .zip(&a1.coeffs)
            .map(|(&x, &y)| {
                let d = (x + 4 - y) & 3;
                assert!(
                    d % 2 == 0,
                    "non-Teichmuller residual; modulus is not basic irreducible"
                );
                d >> 1
            })
            .collect();
        let a2 = self.pow(&GrElement { coeffs: half }, two_r);
        (a1, a2)
    }

    /// The Frobenius automorphism a1 + 2*a2 -> a1^2 + 2*a2^2.
    pub fn frobenius(&self, a: &GrElement) -> GrElement {
        let (a1, a2) = self.teichmuller_decompose(a);
        self.add(&self.mul(&a1, &a1), &self.scale(&self.mul(&a2, &a2), 2))
    }

    /// The s-fold Frobenius a1 + 2*a2 -> a1^(2^s) + 2*a2^(2^s); requires
    /// s to divide the ring degree.
    pub fn generalized_frobenius(&self, a: &GrElement, s: usize) -> Result<GrElement, GaloisError> {
        if s == 0 || self.degree % s != 0 {
            return Err(GaloisError::NotADivisor { s, r: self.degree });
        }
        let (a1, a2) = self.teichmuller_decompose(a);
        let e = 1u128 << s;
        Ok(self.add(&self.pow(&a1, e), &self.scale(&self.pow(&a2, e), 2)))
    }

    /// Sum of the s-step Frobenius orbit of `a` through a virtual subring
    /// of degree `r`: the r/s terms a1^(2^(s*i)) + 2*a2^(2^(s*i)).
    ///
    /// `a` must be fixed by the r-fold Frobenius (it lies in the degree-r
    /// subring); the result then lies in the degree-s subring.
    pub fn trace(&self, a: &GrElement, s: usize, r: usize) -> Result<GrElement, GaloisError> {
        if s == 0 || r % s != 0 {
            return Err(GaloisError::NotADivisor { s, r });
        }
        debug_assert!(
            r >= 1 && self.degree % r == 0,
            "r must divide the ring degree"
        );
        let (mut t1, mut t2) = self.teichmuller_decompose(a);
        debug_assert!(
            self.pow(&t1, 1u128 << r) == t1 && self.pow(&t2, 1u128 << r) == t2,
            "argument lies outside the degree-{r} subring"
        );
        let step = 1u128 << s;
        let mut acc = self.zero();
        for i in 0..r / s {
            if i > 0 {
                t1 = self.pow(&t1, step);
                t2 = self.pow(&t2, step);
            }
            acc = self.add(&acc, &self.add(&t1, &self.scale(&t2, 2)));
        }
        Ok(acc)
    }

    /// A unit of multiplicative order exactly 2^r - 1: the Teichmuller
    /// lift of the first primitive element of the residue field, with the
    /// order certified against every prime divisor of 2^r - 1.
    pub fn find_group_generator(&self) -> GrElement {
        let n = self.unit_group_order();
        let primes = numth::prime_factors(n);
        let bin = self.binary_modulus();
        for enc in 1..=n {
            let one = f2::rem(1, bin);
            if f2::powmod(enc, n, bin) != one
                || primes.iter().any(|&m| f2::powmod(enc, n / m, bin) == one)
            {
                continue;
            }
            let lift = GrElement {
                coeffs: (0..self.degree).map(|i| ((enc >> i) & 1) as u8).collect(),
            };
            let xi = self.pow(&lift, 1u128 << self.degree);
            assert!(
                self.pow(&xi, n as u128) == self.one()
                    && primes
                        .iter()
                        .all(|&m| self.pow(&xi, (n / m) as u128) != self.one()),
                "generator certification failed; modulus is not basic irreducible"
            );
            return xi;
        }
        panic!("no multiplicative generator found; modulus is not basic irreducible")
    }

    /// An element of multiplicative order exactly `n`, for odd `n`
    /// dividing 2^r - 1.
    pub fn primitive_nth_root(&self, n: u64) -> Result<GrElement, GaloisError> {
        let total = self.unit_group_order();
        if n == 0 || total % n != 0 {
            return Err(GaloisError::OrderUnavailable(n));
        }
        let xi = self.find_group_generator();
        Ok(self.pow(&xi, (total / n) as u128))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr2() -> GaloisRing {
        GaloisRing::new(2).unwrap()
    }

    fn x(ring: &GaloisRing) -> GrElement {
        ring.element(&[0, 1])
    }

    #[test]
    fn smallest_binary_irreducibles() {
        assert_eq!(f2::smallest_irreducible(1), 0b10); // x
        assert_eq!(f2::smallest_irreducible(2), 0b111); // x^2 + x + 1
        assert_eq!(f2::smallest_irreducible(3), 0b1011); // x^3 + x + 1
        assert_eq!(f2::smallest_irreducible(4), 0b10011); // x^4 + x + 1
    }

    #[test]
    fn graeffe_lift_hand_values() {
        let r2 = GaloisRing::lift_binary_irreducible(0b111).unwrap();
        assert_eq!(r2.modulus(), &[1, 1, 1]); // X^2 + X + 1
        let r3 = GaloisRing::lift_binary_irreducible(0b1011).unwrap();
        assert_eq!(r3.modulus(), &[3, 1, 2, 1]); // X^3 + 2X^2 + X + 3
        let r1 = GaloisRing::lift_binary_irreducible(0b10).unwrap();
        assert_eq!(r1.modulus(), &[0, 1]); // X
    }

    #[test]
    fn graeffe_lift_rejects_reducibles() {
        assert_eq!(
            GaloisRing::lift_binary_irreducible(0b101), // x^2 + 1 = (x+1)^2
            Err(GaloisError::NotIrreducible)
        );
    }

    #[test]
    fn lift_reduces_to_source_mod_two() {
        for r in 1..=10 {
            let bin = f2::smallest_irreducible(r);
            let ring = GaloisRing::lift_binary_irreducible(bin).unwrap();
            let back = ring
                .modulus()
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | (((c & 1) as u64) << i));
            assert_eq!(back, bin, "degree {r}");
        }
    }

    #[test]
    fn basic_arithmetic_in_degree_two() {
        let ring = gr2();
        let x = x(&ring);
        assert_eq!(ring.mul(&x, &x), ring.element(&[3, 3])); // X^2 = 3X + 3
        assert_eq!(ring.pow(&x, 3), ring.one());
        let a = ring.element(&[1, 2]);
        assert_eq!(ring.mul(&a, &a), ring.one()); // (1 + 2X)^2 = 1
        assert_eq!(ring.add(&a, &ring.zero()), a);
    }

    #[test]
    #[should_panic(expected = "does not belong")]
    fn foreign_elements_are_rejected() {
        let ring = gr2();
        let other = GaloisRing::new(3).unwrap();
        let _ = ring.add(&ring.one(), &other.one());
    }

    #[test]
    fn teichmuller_decomposition_hand_values() {
        let ring = gr2();
        let x = x(&ring);
        let a = ring.element(&[1, 2]); // 1 + 2X
        let (a1, a2) = ring.teichmuller_decompose(&a);
        assert_eq!(a1, ring.one());
        assert_eq!(a2, x);

        let (z1, z2) = ring.teichmuller_decompose(&ring.zero());
        assert!(z1.is_zero() && z2.is_zero());

        let (t1, t2) = ring.teichmuller_decompose(&ring.scalar(3));
        assert_eq!(t1, ring.one());
        assert_eq!(t2, ring.one());
    }

    #[test]
    fn decomposition_reassembles() {
        let ring = GaloisRing::new(3).unwrap();
        for value in 0..64u32 {
            let coeffs: Vec<u8> = (0..3).map(|i| ((value >> (2 * i)) & 3) as u8).collect();
            let a = ring.element(&coeffs);
            let (a1, a2) = ring.teichmuller_decompose(&a);
            // both parts satisfy t^(2^r) = t
            assert_eq!(ring.pow(&a1, 8), a1);
            assert_eq!(ring.pow(&a2, 8), a2);
            assert_eq!(ring.add(&a1, &ring.scale(&a2, 2)), a);
        }
    }

    #[test]
    fn frobenius_hand_values() {
        let ring = gr2();
        let x = x(&ring);
        assert_eq!(ring.frobenius(&x), ring.element(&[3, 3]));
        assert_eq!(ring.frobenius(&ring.one()), ring.one());
        let a = ring.element(&[1, 2]);
        assert_eq!(ring.frobenius(&ring.frobenius(&a)), a);
    }

    #[test]
    fn frobenius_power_is_identity() {
        let ring = GaloisRing::new(3).unwrap();
        for value in 0..64u32 {
            let coeffs: Vec<u8> = (0..3).map(|i| ((value >> (2 * i)) & 3) as u8).collect();
            let a = ring.element(&coeffs);
            let mut cur = a.clone();
            for _ in 0..3 {
                cur = ring.frobenius(&cur);
            }
            assert_eq!(cur, a);
        }
        assert!(matches!(
            ring.generalized_frobenius(&ring.one(), 2),
            Err(GaloisError::NotADivisor { s: 2, r: 3 })
        ));
    }

    #[test]
    fn trace_hand_values() {
        let ring = gr2();
        let x = x(&ring);
        assert_eq!(ring.trace(&x, 1, 2).unwrap(), ring.scalar(3));
        assert_eq!(ring.trace(&ring.one(), 1, 2).unwrap(), ring.scalar(2));
        let a = ring.element(&[2, 1]);
        assert_eq!(ring.trace(&a, 2, 2).unwrap(), a);
        assert!(ring.trace(&a, 3, 2).is_err());
    }

    #[test]
    fn trace_of_one_counts_the_orbit() {
        for r in [2usize, 3, 4, 6] {
            let ring = GaloisRing::new(r).unwrap();
            let got = ring.trace(&ring.one(), 1, r).unwrap();
            assert_eq!(got, ring.scalar((r % 4) as u8), "degree {r}");
        }
    }

    #[test]
    fn trace_is_linear_and_onto_z4() {
        for degree in [2usize, 3] {
            let ring = GaloisRing::new(degree).unwrap();
            let count = 4u32.pow(degree as u32);
            let elements: Vec<GrElement> = (0..count)
                .map(|v| {
                    let coeffs: Vec<u8> = (0..degree).map(|i| ((v >> (2 * i)) & 3) as u8).collect();
                    ring.element(&coeffs)
                })
                .collect();
            let mut image = [false; 4];
            for a in &elements {
                let ta = ring.trace(a, 1, degree).unwrap();
                assert!(ta.coeffs()[1..].iter().all(|&c| c == 0), "trace not scalar");
                image[ta.coeffs()[0] as usize] = true;
                // additivity against a fixed probe element
                let probe = ring.element(&[3, 1]);
                let lhs = ring.trace(&ring.add(a, &probe), 1, degree).unwrap();
                let rhs = ring.add(&ta, &ring.trace(&probe, 1, degree).unwrap());
                assert_eq!(lhs, rhs);
                // Z4-homogeneity
                for c in 0..4u8 {
                    let lhs = ring.trace(&ring.scale(a, c), 1, degree).unwrap();
                    assert_eq!(lhs, ring.scale(&ta, c));
                }
            }
            assert_eq!(image, [true; 4], "trace must be onto Z4");
        }
    }

    #[test]
    fn group_generator_degree_two() {
        let ring = gr2();
        let xi = ring.find_group_generator();
        assert_eq!(xi, x(&ring));
        assert_eq!(ring.pow(&xi, 3), ring.one());
        assert_ne!(ring.pow(&xi, 1), ring.one());
    }

    #[test]
    fn group_generator_has_full_order() {
        for degree in [3usize, 4, 6] {
            let ring = GaloisRing::new(degree).unwrap();
            let n = ring.unit_group_order();
            let xi = ring.find_group_generator();
            assert_eq!(ring.pow(&xi, n as u128), ring.one());
            for m in numth::prime_factors(n) {
                assert_ne!(ring.pow(&xi, (n / m) as u128), ring.one());
            }
        }
    }

    #[test]
    fn nth_roots_of_unity() {
        let ring = gr2();
        assert_eq!(ring.primitive_nth_root(3).unwrap(), x(&ring));
        assert_eq!(ring.primitive_nth_root(1).unwrap(), ring.one());
        assert_eq!(
            ring.primitive_nth_root(5),
            Err(GaloisError::OrderUnavailable(5))
        );
    }

    #[test]
    fn geometric_sums_of_roots_vanish() {
        for (degree, t) in [(2usize, 3u64), (3, 7), (4, 15)] {
            let ring = GaloisRing::new(degree).unwrap();
            let beta = ring.primitive_nth_root(t).unwrap();
            for d in 1..t {
                let mut acc = ring.zero();
                for i in 0..t {
                    acc = ring.add(&acc, &ring.pow(&beta, (i * d % t) as u128));
                }
                assert!(acc.is_zero(), "degree {degree}, t {t}, d {d}");
            }
        }
    }

    #[test]
    fn squaring_kills_the_two_part() {
        let ring = GaloisRing::new(3).unwrap();
        for value in 0..64u32 {
            let coeffs: Vec<u8> = (0..3).map(|i| ((value >> (2 * i)) & 3) as u8).collect();
            let a = ring.element(&coeffs);
            let (a1, _) = ring.teichmuller_decompose(&a);
            assert_eq!(ring.mul(&a, &a), ring.mul(&a1, &a1));
        }
    }
}
