//! Linear complexity over Z4 straight from the recurrence definition: a
//! degree-ascending search for the minimal connection polynomial,
//! certified by exact linear solving modulo 4.
//!
//! This route never looks at a spectrum, so it serves as the independent
//! cross-check for the transform-based count.

use thiserror::Error;

use crate::cyclotomy::QuatSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("matrix has {rows} rows but the right-hand side has {rhs}")]
    DimensionMismatch { rows: usize, rhs: usize },
    #[error("ragged matrix: row {row} has {len} entries, expected {cols}")]
    RaggedMatrix { row: usize, len: usize, cols: usize },
    #[error("connection polynomial must have constant term 1, got {0}")]
    BadConstantTerm(u8),
}

/// C(X) = 1 + c_1 X + ... + c_L X^L over Z4, witnessing the recurrence
/// s_{u+L} + c_1 s_{u+L-1} + ... + c_L s_u = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionPoly {
    coeffs: Vec<u8>,
}

impl ConnectionPoly {
    pub fn new(coeffs: Vec<u8>) -> Result<Self, OracleError> {
        assert!(!coeffs.is_empty(), "connection polynomial cannot be empty");
        let coeffs: Vec<u8> = coeffs.iter().map(|&c| c & 3).collect();
        if coeffs[0] != 1 {
            return Err(OracleError::BadConstantTerm(coeffs[0]));
        }
        Ok(Self { coeffs })
    }

    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0).unwrap_or(0)
    }
}

/// S(X) = s_0 + s_1 X + ... + s_{T-1} X^{T-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingPoly {
    coeffs: Vec<u8>,
}

impl GeneratingPoly {
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }
}

impl From<&QuatSequence> for GeneratingPoly {
    fn from(seq: &QuatSequence) -> Self {
        Self {
            coeffs: seq.values().to_vec(),
        }
    }
}

/// True iff S(X) C(X) = 0 (mod X^T - 1), all coefficients mod 4.
pub fn check_connection(seq: &QuatSequence, c: &ConnectionPoly) -> bool {
    let s = GeneratingPoly::from(seq);
    let t = s.coeffs.len();
    (0..t).all(|m| {
        let total: u32 = c
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &ck)| ck as u32 * s.coeffs[(m + t - k % t) % t] as u32)
            .sum();
        total % 4 == 0
    })
}

/// Solves A x = b over Z4 if possible.
///
/// Unit pivots are eliminated first (ordinary Gauss-Jordan steps). What
/// remains among the untouched rows has every entry in {0, 2}, so those
/// rows are cleared against 2-pivots; a 2-pivot equation is solvable
/// exactly when its reduced right-hand side is even, and an annihilated
/// row demands a zero right-hand side. Free variables are set to 0, which
/// makes the returned witness canonical for a fixed scan order.
pub fn solve_mod4(a: &[Vec<u8>], b: &[u8]) -> Result<Option<Vec<u8>>, OracleError> {
    let rows = a.len();
    if rows != b.len() {
        return Err(OracleError::DimensionMismatch { rows, rhs: b.len() });
    }
    let cols = a.first().map_or(0, |row| row.len());
    for (i, row) in a.iter().enumerate() {
        if row.len() != cols {
            return Err(OracleError::RaggedMatrix {
                row: i,
                len: row.len(),
                cols,
            });
        }
    }
    let mut m: Vec<Vec<u8>> = a
        .iter()
        .map(|row| row.iter().map(|&v| v & 3).collect())
        .collect();
    let mut rhs: Vec<u8> = b.iter().map(|&v| v & 3).collect();
    let mut row_used = vec![false; rows];
    let mut col_used = vec![false; cols];
    let mut unit_pivots: Vec<(usize, usize)> = Vec::new();
    let mut two_pivots: Vec<(usize, usize)> = Vec::new();

    let find_pivot =
        |m: &Vec<Vec<u8>>, row_used: &Vec<bool>, col_used: &Vec<bool>, want: fn(u8) -> bool| {
            (0..m.len()).find_map(|i| {
                if row_used[i] {
                    return None;
                }
                (0..m[i].len())
                    .find(|&j| !col_used[j] && want(m[i][j]))
                    .map(|j| (i, j))
            })
        };

    while let Some((i, j)) = find_pivot(&m, &row_used, &col_used, |v| v == 1 || v == 3) {
        if m[i][j] == 3 {
            for v in &mut m[i] {
                *v = (*v * 3) & 3;
            }
            rhs[i] = (rhs[i] * 3) & 3;
        }
        for k in 0..rows {
            if k == i || m[k][j] == 0 {
                continue;
            }
            let f = m[k][j];
            for col in 0..cols {
                let sub = (f * m[i][col]) & 3;
                m[k][col] = (m[k][col] + 4 - sub) & 3;
            }
            rhs[k] = (rhs[k] + 4 - ((f * rhs[i]) & 3)) & 3;
        }
        row_used[i] = true;
        col_used[j] = true;
        unit_pivots.push((i, j));
    }

    // every entry left in the unused rows is now 0 or 2
    while let Some((i, j)) = find_pivot(&m, &row_used, &col_used, |v| v == 2) {
        for k in 0..rows {
            if k == i || row_used[k] || m[k][j] != 2 {
                continue;
            }
            for col in 0..cols {
                let sub = m[i][col];
                m[k][col] = (m[k][col] + 4 - sub) & 3;
            }
            rhs[k] = (rhs[k] + 4 - rhs[i]) & 3;
        }
        row_used[i] = true;
        col_used[j] = true;
        two_pivots.push((i, j));
    }

    for i in 0..rows {
        if !row_used[i] {
            debug_assert!(m[i].iter().all(|&v| v == 0));
            if rhs[i] != 0 {
                return Ok(None);
            }
        }
    }

    let mut x = vec![0u8; cols];
    let residual = |m: &Vec<Vec<u8>>, rhs: &Vec<u8>, x: &Vec<u8>, i: usize, j: usize| -> u8 {
        let sum: u32 = (0..cols)
            .filter(|&col| col != j)
            .map(|col| m[i][col] as u32 * x[col] as u32)
            .sum();
        ((rhs[i] as u32 + 4 - (sum % 4)) % 4) as u8
    };
    // A 2-pivot row may still mention columns of pivots chosen after it
    // (their eliminations skipped rows already used), so resolve those
    // rows latest-first; each reads 2 x_j + (known terms) = rhs and is
    // solvable exactly when the residual is even.
    for &(i, j) in two_pivots.iter().rev() {
        let r = residual(&m, &rhs, &x, i, j);
        if r % 2 != 0 {
            return Ok(None);
        }
        x[j] = r >> 1;
    }
    for &(i, j) in &unit_pivots {
        x[j] = residual(&m, &rhs, &x, i, j);
    }

    debug_assert!(
        a.iter().zip(b).all(|(row, &bi)| {
            let lhs: u32 = row
                .iter()
                .zip(&x)
                .map(|(&r, &xi)| r as u32 * xi as u32)
                .sum();
            lhs % 4 == (bi & 3) as u32
        }),
        "solver produced a non-solution"
    );
    Ok(Some(x))
}

/// The least recurrence order L, found by ascending search, together
/// with a witnessing connection polynomial. The all-zero sequence alone
/// yields L = 0 with C = 1.
pub fn minimal_connection(seq: &QuatSequence) -> (u64, ConnectionPoly) {
    let t = seq.period();
    let s = seq.values();
    if seq.is_zero() {
        return (0, ConnectionPoly::new(vec![1]).unwrap());
    }
    for l in 1..=t {
        let a: Vec<Vec<u8>> = (0..t)
            .map(|m| (1..=l).map(|k| s[(m + t - k) % t]).collect())
            .collect();
        let b: Vec<u8> = (0..t).map(|m| (4 - s[m]) & 3).collect();
        if let Some(taps) = solve_mod4(&a, &b).expect("system dimensions agree") {
            let mut coeffs = vec![1u8];
            coeffs.extend(taps);
            let c = ConnectionPoly::new(coeffs).unwrap();
            debug_assert!(check_connection(seq, &c));
            return (l as u64, c);
        }
    }
    unreachable!("C = 1 - X^T always annihilates S mod X^T - 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force minimum over every candidate of degree at most
    /// `max_deg`; only usable for short periods.
    fn exhaustive_min_connection(seq: &QuatSequence, max_deg: usize) -> Option<u64> {
        for l in 0..=max_deg {
            let count = 4u64.pow(l as u32);
            for mut code in 0..count {
                let mut coeffs = vec![1u8];
                for _ in 0..l {
                    coeffs.push((code % 4) as u8);
                    code /= 4;
                }
                let c = ConnectionPoly::new(coeffs).unwrap();
                if check_connection(seq, &c) {
                    return Some(l as u64);
                }
            }
        }
        None
    }

    #[test]
    fn hand_values() {
        let ones = QuatSequence::new(vec![1, 1, 1]);
        let (l, c) = minimal_connection(&ones);
        assert_eq!(l, 1);
        assert_eq!(c.coeffs(), &[1, 3]);
        assert!(check_connection(&ones, &c));
        assert!(!check_connection(
            &ones,
            &ConnectionPoly::new(vec![1]).unwrap()
        ));

        let zeros = QuatSequence::new(vec![0, 0, 0]);
        let (l0, c0) = minimal_connection(&zeros);
        assert_eq!((l0, c0.coeffs()), (0, &[1u8][..]));
        assert!(check_connection(&zeros, &c0));

        let spike = QuatSequence::new(vec![2, 0, 0]);
        let (l2, c2) = minimal_connection(&spike);
        assert_eq!(l2, 3);
        assert!(check_connection(&spike, &c2));
        assert_eq!(exhaustive_min_connection(&spike, 3), Some(3));
    }

    #[test]
    fn solver_hand_values() {
        assert_eq!(solve_mod4(&[vec![2]], &[2]).unwrap(), Some(vec![1]));
        assert_eq!(solve_mod4(&[vec![2]], &[1]).unwrap(), None);
        let identity: Vec<Vec<u8>> = (0..3)
            .map(|i| (0..3).map(|j| u8::from(i == j)).collect())
            .collect();
        assert_eq!(
            solve_mod4(&identity, &[3, 0, 2]).unwrap(),
            Some(vec![3, 0, 2])
        );
        assert!(matches!(
            solve_mod4(&[vec![1, 2]], &[1, 0]),
            Err(OracleError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn solver_handles_mixed_pivots() {
        // 2x + y = 1 is solvable (x = 0, y = 1): the unit pivot on y must
        // win before the 2-pivot on x is attempted.
        assert_eq!(solve_mod4(&[vec![2, 1]], &[1]).unwrap(), Some(vec![0, 1]));
        // 2x = 2 and 2x + 2y = 0 force y odd.
        let sol = solve_mod4(&[vec![2, 0], vec![2, 2]], &[2, 0])
            .unwrap()
            .unwrap();
        assert_eq!((2 * sol[0]) % 4, 2);
        assert_eq!((2 * sol[0] + 2 * sol[1]) % 4, 0);
    }

    #[test]
    fn solver_exhaustive_against_brute_force() {
        // every 2x2 system over Z4: the solver finds a solution exactly
        // when one exists
        for code in 0..4u32.pow(6) {
            let v: Vec<u8> = (0..6).map(|i| ((code >> (2 * i)) & 3) as u8).collect();
            let a = vec![vec![v[0], v[1]], vec![v[2], v[3]]];
            let b = [v[4], v[5]];
            let found = solve_mod4(&a, &b).unwrap();
            let exists = (0..16u8).any(|xy| {
                let (x, y) = (xy & 3, xy >> 2);
                (v[0] * x + v[1] * y) % 4 == v[4] && (v[2] * x + v[3] * y) % 4 == v[5]
            });
            assert_eq!(found.is_some(), exists, "system {v:?}");
            if let Some(x) = found {
                assert_eq!((v[0] * x[0] + v[1] * x[1]) % 4, v[4]);
                assert_eq!((v[2] * x[0] + v[3] * x[1]) % 4, v[5]);
            }
        }
    }

    #[test]
    fn minimal_matches_exhaustive_on_short_periods() {
        // deterministic sweep over all period-4 sequences
        for code in 0..256u32 {
            let values: Vec<u8> = (0..4).map(|i| ((code >> (2 * i)) & 3) as u8).collect();
            let seq = QuatSequence::new(values);
            let (l, c) = minimal_connection(&seq);
            assert!(check_connection(&seq, &c));
            assert_eq!(Some(l), exhaustive_min_connection(&seq, 4), "{seq:?}");
        }
    }

    #[test]
    fn shifts_and_unit_scalings_preserve_order() {
        let seq = QuatSequence::new(vec![1, 3, 0, 2, 2, 1, 0]);
        let (l, _) = minimal_connection(&seq);
        for shift in 1..7 {
            let rotated: Vec<u8> = (0..7).map(|i| seq.get((i + shift) as u64)).collect();
            let (lr, _) = minimal_connection(&QuatSequence::new(rotated));
            assert_eq!(lr, l, "shift {shift}");
        }
        let tripled: Vec<u8> = seq.values().iter().map(|&v| (v * 3) & 3).collect();
        let (lt, _) = minimal_connection(&QuatSequence::new(tripled));
        assert_eq!(lt, l);
        let doubled: Vec<u8> = seq.values().iter().map(|&v| (v * 2) & 3).collect();
        let (ld, _) = minimal_connection(&QuatSequence::new(doubled));
        assert!(ld <= l);
    }
}
