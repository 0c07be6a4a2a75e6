//! Dense exact linear algebra over the rationals.
//!
//! Rank and determinant use fraction-free (Bareiss) elimination on integer
//! rows; nullspaces use rational Gauss-Jordan reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::Scalar;

pub type QMatrix = Vec<Vec<Scalar>>;

/// Scales each row by the lcm of its denominators. Row scaling by a nonzero
/// constant preserves rank.
fn integer_rows(m: &[Vec<Scalar>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Fraction-free elimination; returns the rank and the last pivot.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> (usize, BigInt, bool) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swaps_odd = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            swaps_odd = !swaps_odd;
        }
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = &a[i][j] * &a[rank][c] - &a[i][c] * &a[rank][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    (rank, prev, swaps_odd)
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    bareiss(integer_rows(m)).0
}

/// Determinant of a square rational matrix.
pub fn determinant(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of non-square matrix");
    let mut scale = Scalar::one();
    for row in m {
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        scale = &scale * &Scalar::from(l);
    }
    let (r, last, odd) = bareiss(integer_rows(m));
    if r < n {
        return Scalar::zero();
    }
    let det = &Scalar::from(last) / &scale;
    if odd {
        -det
    } else {
        det
    }
}

/// Reduced row echelon form; returns pivot columns.
pub fn rref(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{v : m v = 0}`.
pub fn nullspace(m: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[r][f];
            }
            v
        })
        .collect()
}

pub fn transpose(m: &[Vec<Scalar>]) -> QMatrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> QMatrix {
    let k = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Scalar::zero();
                    for t in 0..k {
                        if !row[t].is_zero() && !b[t][j].is_zero() {
                            acc += &(&row[t] * &b[t][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

pub fn zeros(r: usize, c: usize) -> QMatrix {
    vec![vec![Scalar::zero(); c]; r]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> QMatrix {
        rows.iter().map(|r| r.iter().map(|&x| Scalar::from(x)).collect()).collect()
    }

    #[test]
    fn rank_with_skipped_columns() {
        let m = q(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&q(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn determinant_signs_and_fractions() {
        assert_eq!(determinant(&q(&[&[0, 1], &[1, 0]])), Scalar::from(-1));
        let m = vec![
            vec![Scalar::ratio(1, 2), Scalar::ratio(1, 3)],
            vec![Scalar::from(3), Scalar::from(4)],
        ];
        assert_eq!(determinant(&m), Scalar::from(1));
        assert_eq!(determinant(&q(&[&[1, 2], &[2, 4]])), Scalar::zero());
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = q(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0]]);
        let ns = nullspace(&m, 4);
        assert_eq!(ns.len(), 4 - rank(&m));
        for v in &ns {
            for row in &m {
                let dot = row.iter().zip(v).fold(Scalar::zero(), |a, (x, y)| a + x * y);
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn bareiss_rank_matches_rref_rank() {
        // Deterministic pseudo-random small matrices, some rank-deficient.
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for _ in 0..200 {
            let r = 1 + (next().unsigned_abs() as usize % 5);
            let c = 1 + (next().unsigned_abs() as usize % 5);
            let mut m: QMatrix = (0..r).map(|_| (0..c).map(|_| Scalar::from(next())).collect()).collect();
            if r > 1 {
                m[r - 1] = m[0].iter().map(|x| x * &Scalar::ratio(2, 3)).collect();
            }
            let mut copy = m.clone();
            assert_eq!(rank(&m), rref(&mut copy).len());
        }
    }
}
