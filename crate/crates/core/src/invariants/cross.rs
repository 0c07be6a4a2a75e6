use std::time::Instant;

use serde_json::json;

use super::report::{format_point, VerificationReport};
use crate::exactpoly::{jacobian_at, linalg, scalar_pfaffian, Poly, Sampler, Scalar};
use crate::liealg::LieAlgebra;

/// Sign of the permutation listing `first` then `second`.
fn shuffle_sign(first: &[usize], second: &[usize]) -> bool {
    let seq: Vec<usize> = first.iter().chain(second).copied().collect();
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// `ε(I)·D_I·Π_J = ε(J)·D_J·Π_I` for `#I = #J = n - l`, where `Π_I` is the
/// Pfaffian of the principal submatrix of `Π` on `I`, `D_I` the maximal
/// minor of the Jacobian on the complementary columns, and `ε(I)` the
/// sign of the shuffle `(Ī, I)`.
pub fn minor_cross_identity_check(
    l: &LieAlgebra,
    name: &str,
    fs: &[Poly],
    points: usize,
    pairs: usize,
    seed: u64,
) -> VerificationReport {
    let start = Instant::now();
    let id = format!("minor-cross/{name}");
    let n = l.dim();
    if fs.is_empty() || fs.len() > n || (n - fs.len()) % 2 == 1 {
        return VerificationReport::skipped(id, format!("{} invariants on a space of dimension {n}", fs.len()));
    }
    let k = n - fs.len();
    let mut sampler = Sampler::new(seed);
    let mut checked = 0usize;
    let mut nonzero = 0usize;
    for _ in 0..points {
        let pt = sampler.point(n);
        let pi = l.poisson_at(&pt);
        let d = match jacobian_at(fs, &pt) {
            Ok(d) => d,
            Err(e) => return VerificationReport::skipped(id, e.to_string()),
        };
        let side = |set: &[usize]| -> (Scalar, Scalar) {
            let comp: Vec<usize> = (0..n).filter(|c| !set.contains(c)).collect();
            let minor: Vec<Vec<Scalar>> = d.iter().map(|row| comp.iter().map(|&c| row[c].clone()).collect()).collect();
            let mut dm = linalg::determinant(&minor);
            if shuffle_sign(&comp, set) {
                dm = -dm;
            }
            (dm, scalar_pfaffian(&pi, set))
        };
        for _ in 0..pairs {
            let i = sampler.subset(n, k);
            let j = sampler.subset(n, k);
            let (di, pii) = side(&i);
            let (dj, pij) = side(&j);
            let lhs = &di * &pij;
            let rhs = &dj * &pii;
            checked += 1;
            if !lhs.is_zero() {
                nonzero += 1;
            }
            if lhs != rhs {
                return VerificationReport::new(
                    id,
                    false,
                    json!({ "identity": "holds" }),
                    json!({ "I": i, "J": j, "lhs": lhs.to_string(), "rhs": rhs.to_string() }),
                )
                .with_witness(format_point(l.space().names(), &pt))
                .timed(start);
            }
        }
    }
    VerificationReport::new(
        id,
        true,
        json!({ "identity": "holds" }),
        json!({ "pairs_checked": checked, "nonzero_pairs": nonzero }),
    )
    .timed(start)
}
