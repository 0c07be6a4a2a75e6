use std::time::Instant;

use serde_json::json;

use super::partition::ad_matrix;
use crate::error::{Error, Result};
use crate::exactpoly::{linalg, linalg::QMatrix, Part, Poly, PolyMatrix, Sampler, Scalar};
use crate::invariants::{format_point, VerificationReport};
use crate::liealg::{first_non_annihilating, Contraction, Family, Representation, SymmetricPair};

/// Largest `n` for which the symbolic generators are built.
pub const NREGULAR_CAP: usize = 3;

/// Free generators of `k[k*]^K` for the pair `(gl_{2n}, gl_n ⊕ gl_n)`:
/// `f̄_i = tr ξ1^{2i}` and `F̂_i = tr(ξ0 ξ1^{2i-2})`, `i = 1..n`.
#[derive(Clone, Debug)]
pub struct NRegularSystem {
    pub contraction: Contraction,
    pub barred: Vec<Poly>,
    pub hatted: Vec<Poly>,
}

impl NRegularSystem {
    pub fn pair(&self) -> &SymmetricPair {
        self.contraction.pair()
    }

    pub fn generators(&self) -> Vec<Poly> {
        self.barred.iter().chain(&self.hatted).cloned().collect()
    }

    /// Per generator, the first basis element whose coadjoint derivation
    /// does not kill it.
    pub fn invariance_failures(&self) -> Result<Vec<Option<usize>>> {
        self.generators()
            .iter()
            .map(|f| first_non_annihilating(self.contraction.algebra(), f, Representation::Coadjoint))
            .collect()
    }
}

fn check_pair(pair: &SymmetricPair) -> Result<usize> {
    if pair.family() != Family::Gl || pair.n() != pair.m() || pair.n() == 0 {
        return Err(Error::Unsupported(format!(
            "N-regular generators need GL(n,n), got {}",
            pair.name()
        )));
    }
    Ok(pair.n())
}

fn split(x: &PolyMatrix, pair: &SymmetricPair) -> (PolyMatrix, PolyMatrix) {
    let space = pair.space();
    let mut x0 = x.clone();
    let mut x1 = x.clone();
    for k in 0..pair.dim() {
        let (r, c) = pair.model().entry(k);
        let zero = Poly::zero(space);
        match space.part(k) {
            Part::Zero => x1.set(r, c, zero),
            Part::One => x0.set(r, c, zero),
        }
    }
    (x0, x1)
}

pub fn nregular_generators(pair: &SymmetricPair) -> Result<NRegularSystem> {
    let n = check_pair(pair)?;
    if n > NREGULAR_CAP {
        return Err(Error::CapExceeded {
            what: "N-regular size n",
            value: n,
            cap: NREGULAR_CAP,
        });
    }
    let (x0, x1) = split(&pair.generic_matrix(), pair);
    let sq = x1.checked_mul(&x1)?;
    let mut barred = Vec::new();
    let mut hatted = Vec::new();
    let mut pw = PolyMatrix::identity(pair.space(), 2 * n);
    for _ in 1..=n {
        hatted.push(x0.checked_mul(&pw)?.trace()?);
        pw = pw.checked_mul(&sq)?;
        barred.push(pw.trace()?);
    }
    Ok(NRegularSystem {
        contraction: pair.contract(),
        barred,
        hatted,
    })
}

/// Element of `g1` with `B = I_n` and `A` a single nilpotent Jordan block,
/// as coordinates of the pair. Errors if it is not regular in `g`.
pub fn regular_nilpotent_in_g1(pair: &SymmetricPair) -> Result<Vec<Scalar>> {
    let n = check_pair(pair)?;
    let mut x = linalg::zeros(2 * n, 2 * n);
    for i in 0..n {
        x[n + i][i] = Scalar::one();
        if i + 1 < n {
            x[i][n + i + 1] = Scalar::one();
        }
    }
    let v = pair.model().coords(&x);
    let cdim = centralizer_dim(pair, &v);
    if cdim != pair.rank_l() {
        return Err(Error::Dimension(format!(
            "nilpotent point has centralizer of dimension {cdim}, expected {}",
            pair.rank_l()
        )));
    }
    Ok(v)
}

/// `dim g_x` for `x` given in the pair's coordinates.
pub fn centralizer_dim(pair: &SymmetricPair, v: &[Scalar]) -> usize {
    pair.dim() - linalg::rank(&ad_matrix(pair.algebra(), v))
}

/// Random element of `g1` that is regular in `g`, within a few resamples.
pub fn random_regular_in_g1(pair: &SymmetricPair, sampler: &mut Sampler) -> Option<Vec<Scalar>> {
    let g1 = pair.space().indices_of(Part::One);
    for _ in 0..crate::exactpoly::MAX_RESAMPLES {
        let mut v = vec![Scalar::zero(); pair.dim()];
        for &j in &g1 {
            v[j] = sampler.integer();
        }
        if centralizer_dim(pair, &v) == pair.rank_l() {
            return Some(v);
        }
    }
    None
}

/// `F_i(ξ1) = ξ1^{2i-2}`, `i = 1..n`, span `g_{0,ξ1}`.
pub fn centralizer_span_check(pair: &SymmetricPair, xi1: &[Scalar]) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = check_pair(pair)?;
    let id = format!("centralizer-span/{}", pair.name());
    let space = pair.space();
    let g0 = space.indices_of(Part::Zero);
    let g1 = space.indices_of(Part::One);
    if g0.iter().any(|&i| !xi1[i].is_zero()) {
        return Err(Error::Dimension("point is not in g1".into()));
    }
    let witness = format_point(space.names(), xi1);
    if centralizer_dim(pair, xi1) != pair.rank_l() {
        return Ok(VerificationReport::skipped(id, "point is not regular in g")
            .with_witness(witness)
            .timed(start));
    }
    // Rows: g1 coordinates of [y, ξ1] for y running over the g0 basis.
    let ad = ad_matrix(pair.algebra(), xi1);
    let map: QMatrix = g1.iter().map(|&k| g0.iter().map(|&j| -&ad[k][j]).collect()).collect();
    let kernel = linalg::nullspace(&map, g0.len());

    let x = pair.model().matrix_of(xi1);
    let sq = linalg::mat_mul(&x, &x);
    let mut pw = linalg::identity(2 * n);
    let mut covariants = Vec::new();
    for _ in 0..n {
        let c = pair.model().coords(&pw);
        covariants.push(g0.iter().map(|&j| c[j].clone()).collect::<Vec<_>>());
        pw = linalg::mat_mul(&pw, &sq);
    }
    let span = linalg::rank(&covariants);
    let mut joint = kernel.clone();
    joint.extend(covariants.iter().cloned());
    let contained = linalg::rank(&joint) == kernel.len();
    let ok = contained && span == kernel.len();
    Ok(VerificationReport::new(
        id,
        ok,
        json!({ "centralizer_dim": kernel.len() }),
        json!({ "span_dim": span, "covariants_in_centralizer": contained }),
    )
    .with_witness(witness)
    .timed(start))
}
