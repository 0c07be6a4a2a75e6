use std::fmt;
use std::time::Instant;

use serde_json::json;

use crate::error::{Error, Result};
use crate::exactpoly::{linalg, Scalar};
use crate::invariants::VerificationReport;
use crate::liealg::{build_classical_with_cap, Family};

/// Nonincreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn dual_partition(p: &Partition) -> Partition {
    let first = p.parts.first().copied().unwrap_or(0);
    Partition {
        parts: (1..=first).map(|i| p.parts.iter().filter(|&&x| x >= i).count()).collect(),
    }
}

/// `sum η̂_i²`: dimension of the centralizer in `gl_N` of a nilpotent with
/// Jordan blocks `p`.
pub fn centralizer_dim_from_partition(p: &Partition) -> usize {
    dual_partition(p).parts.iter().map(|x| x * x).sum()
}

/// Nilpotent matrix in Jordan form with blocks given by `p`.
pub fn nilpotent_of(p: &Partition) -> Vec<Vec<Scalar>> {
    let n = p.total();
    let mut m = linalg::zeros(n, n);
    let mut off = 0;
    for &b in &p.parts {
        for i in 0..b.saturating_sub(1) {
            m[off + i][off + i + 1] = Scalar::one();
        }
        off += b;
    }
    m
}

/// Dimension of the centralizer of `x` in `gl_N` by an exact nullspace of `ad x`.
pub fn centralizer_dim_in_gl(x: &[Vec<Scalar>]) -> Result<usize> {
    let n = x.len();
    let g = build_classical_with_cap(Family::Gl, n, n.max(1))?;
    let coords: Vec<Scalar> = x.iter().flatten().cloned().collect();
    Ok(g.dim() - linalg::rank(&ad_matrix(&g, &coords)))
}

/// Matrix of `ad(v)` on the basis: column `j` holds `[v, x_j]`.
pub(crate) fn ad_matrix(g: &crate::liealg::LieAlgebra, v: &[Scalar]) -> Vec<Vec<Scalar>> {
    let n = g.dim();
    let mut m = linalg::zeros(n, n);
    for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for j in 0..n {
            for (k, c) in g.bracket(i, j) {
                m[*k][j] += &(vi * c);
            }
        }
    }
    m
}

/// Both expressions of the nonnegativity computation for a partition of `2n`:
/// `½·sum η̂_i² + ⌊(η_1-1)/2⌋ - 2n + 1` and
/// `½·sum (η̂_i-1)² + (⌊(s+1)/2⌋ - s/2)` with `s = η_1` parts in the dual.
pub fn uslovie_check(p: &Partition) -> Result<VerificationReport> {
    let start = Instant::now();
    let total = p.total();
    if total % 2 == 1 {
        return Err(Error::Dimension(format!("partition {p} of odd total {total}")));
    }
    let dual = dual_partition(p);
    let s = dual.len() as i64;
    let eta1 = p.parts.first().copied().unwrap_or(0) as i64;
    let half = Scalar::ratio(1, 2);
    let sq: i64 = dual.parts.iter().map(|&x| (x * x) as i64).sum();
    let sq1: i64 = dual.parts.iter().map(|&x| (x as i64 - 1).pow(2)).sum();
    let first = &(&half * &Scalar::from(sq)) + &Scalar::from((eta1 - 1).div_euclid(2) - total as i64 + 1);
    let closed = &(&half * &Scalar::from(sq1)) + &(&Scalar::from((s + 1).div_euclid(2)) - &Scalar::ratio(s, 2));
    let ok = !closed.is_negative() && closed == first;
    Ok(VerificationReport::new(
        format!("uslovie/{p}"),
        ok,
        json!({ "nonnegative": true, "expressions_agree": true }),
        json!({
            "dual": dual.to_string(),
            "first_expression": first.to_string(),
            "closed_form": closed.to_string(),
        }),
    )
    .timed(start))
}
