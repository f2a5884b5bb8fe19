//! Generalized cyclotomic classes of order 4 modulo pq, and the
//! quaternary sequence they define.
//!
//! For a valid pair (p, q) the units of Z_pq split into four classes
//! `D_0..D_3`, where `D_i` collects `g^s * h^i` for the common primitive
//! root `g` and the CRT element `h` (h = g mod p, h = 1 mod q). Together
//! with the multiples of p, the multiples of q, and zero, this labels
//! every residue exactly once; the sequence reads the label.

use thiserror::Error;

use crate::numth::{self, CaseTag, NumthError};

/// Label of a residue modulo pq: one of the four unit classes, a proper
/// multiple of p, a proper multiple of q, or zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassLabel {
    D(u8),
    P,
    Q,
    R,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomyError {
    #[error(transparent)]
    Params(#[from] NumthError),
    #[error("{0} is not a unit modulo {1}")]
    NotAUnit(u64, u64),
}

/// The full arithmetic context for one parameter pair: classes, labels,
/// and the orders of 2 that fix the Galois-ring degree downstream.
///
/// Immutable after construction; all accessors are cheap.
#[derive(Debug, Clone)]
pub struct CyclotomicSystem {
    p: u64,
    q: u64,
    g: u64,
    h: u64,
    class_size: u64,
    case: CaseTag,
    two_class: u8,
    ord2: u64,
    ord2_p: u64,
    ord2_q: u64,
    classes: [Vec<u64>; 4],
    multiples_p: Vec<u64>,
    multiples_q: Vec<u64>,
    labels: Vec<ClassLabel>,
}

impl CyclotomicSystem {
    /// Builds and cross-checks the class structure for a valid pair.
    pub fn build(p: u64, q: u64) -> Result<Self, CyclotomyError> {
        let case = numth::validate_params(p, q)?;
        let g = numth::common_primitive_root(p, q)?;
        let h = numth::crt_pair(g % p, 1, p, q)?;
        let m = p * q;
        let class_size = (p - 1) * (q - 1) / 4;

        let mut slots: Vec<Option<ClassLabel>> = vec![None; m as usize];
        slots[0] = Some(ClassLabel::R);
        let multiples_p: Vec<u64> = (1..q).map(|j| j * p).collect();
        let multiples_q: Vec<u64> = (1..p).map(|j| j * q).collect();
        for &u in &multiples_p {
            slots[u as usize] = Some(ClassLabel::P);
        }
        for &u in &multiples_q {
            slots[u as usize] = Some(ClassLabel::Q);
        }

        let mut classes: [Vec<u64>; 4] = Default::default();
        for (i, class) in classes.iter_mut().enumerate() {
            let mut cur = numth::mod_pow(h, i as u64, m);
            for _ in 0..class_size {
                class.push(cur);
                let slot = &mut slots[cur as usize];
                assert!(slot.is_none(), "residue {cur} labelled twice");
                *slot = Some(ClassLabel::D(i as u8));
                cur = (cur as u128 * g as u128 % m as u128) as u64;
            }
            class.sort_unstable();
        }
        let labels: Vec<ClassLabel> = slots
            .into_iter()
            .map(|s| s.expect("classes, P, Q and 0 must cover every residue"))
            .collect();

        // h^4 lands back in D_0, otherwise the class indexing would drift.
        let h4 = numth::mod_pow(h, 4, m);
        assert_eq!(labels[h4 as usize], ClassLabel::D(0), "h^4 not in D_0");

        let ord2 = numth::mul_order(2, m).expect("pq is odd");
        let ord2_p = numth::mul_order(2, p).expect("p is odd");
        let ord2_q = numth::mul_order(2, q).expect("q is odd");
        assert_eq!(ord2, numth::lcm(ord2_p, ord2_q));

        let two_class = match labels[2] {
            ClassLabel::D(i) => i,
            _ => unreachable!("2 is a unit modulo pq"),
        };

        Ok(Self {
            p,
            q,
            g,
            h,
            class_size,
            case,
            two_class,
            ord2,
            ord2_p,
            ord2_q,
            classes,
            multiples_p,
            multiples_q,
            labels,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The common primitive root of p and q used to enumerate the classes.
    pub fn g(&self) -> u64 {
        self.g
    }

    /// The CRT element with h = g (mod p), h = 1 (mod q).
    pub fn h(&self) -> u64 {
        self.h
    }

    /// Size of each class, (p-1)(q-1)/4.
    pub fn class_size(&self) -> u64 {
        self.class_size
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    /// Index i with 2 in D_i.
    pub fn two_class(&self) -> u8 {
        self.two_class
    }

    /// Order of 2 modulo pq.
    pub fn ord2(&self) -> u64 {
        self.ord2
    }

    /// Order of 2 modulo p.
    pub fn ord2_p(&self) -> u64 {
        self.ord2_p
    }

    /// Order of 2 modulo q.
    pub fn ord2_q(&self) -> u64 {
        self.ord2_q
    }

    /// The period pq.
    pub fn modulus(&self) -> u64 {
        self.p * self.q
    }

    /// Sorted elements of `D_i`; the index wraps mod 4.
    pub fn class(&self, i: u8) -> &[u64] {
        &self.classes[(i & 3) as usize]
    }

    /// The proper multiples of p, ascending.
    pub fn multiples_of_p(&self) -> &[u64] {
        &self.multiples_p
    }

    /// The proper multiples of q, ascending.
    pub fn multiples_of_q(&self) -> &[u64] {
        &self.multiples_q
    }

    /// The unique label of `u mod pq`.
    pub fn class_of(&self, u: u64) -> ClassLabel {
        self.labels[(u % self.modulus()) as usize]
    }

    /// Index j with `u` in `D_j`, so that `u * D_i = D_{i+j}` for all i.
    pub fn class_shift(&self, u: u64) -> Result<u8, CyclotomyError> {
        let m = self.modulus();
        if numth::gcd(u % m, m) != 1 {
            return Err(CyclotomyError::NotAUnit(u, m));
        }
        match self.class_of(u) {
            ClassLabel::D(j) => Ok(j),
            _ => unreachable!("units always carry a class label"),
        }
    }

    /// The quaternary sequence: 2 on Q and at 0, 0 on P, and i on D_i.
    pub fn build_sequence(&self) -> QuatSequence {
        let values = self
            .labels
            .iter()
            .map(|label| match label {
                ClassLabel::Q | ClassLabel::R => 2,
                ClassLabel::P => 0,
                ClassLabel::D(i) => *i,
            })
            .collect();
        QuatSequence::new(values)
    }
}

/// One period of a sequence with entries in Z4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatSequence {
    values: Vec<u8>,
}

impl QuatSequence {
    pub fn new(values: Vec<u8>) -> Self {
        assert!(!values.is_empty(), "period must be at least 1");
        assert!(
            values.iter().all(|&v| v < 4),
            "sequence values must lie in 0..4"
        );
        Self { values }
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Periodic access: the value at index `u mod T`.
    pub fn get(&self, u: u64) -> u8 {
        self.values[(u % self.values.len() as u64) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}
