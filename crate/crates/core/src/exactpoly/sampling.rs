use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg;
use super::poly::Poly;
use super::scalar::Scalar;
use super::varspace::{same_space, Space};
use crate::error::{Error, Result};

/// Half-width of the integer sampling box `[-B, B]`.
pub const SAMPLE_BOUND: i64 = 10_000;

/// Resamples allowed before a rank deficiency is reported as dependence.
pub const MAX_RESAMPLES: usize = 5;

/// Seeded source of integer sample points.
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler::with_bound(seed, SAMPLE_BOUND)
    }

    pub fn with_bound(seed: u64, bound: i64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound,
        }
    }

    pub fn integer(&mut self) -> Scalar {
        Scalar::from(self.rng.random_range(-self.bound..=self.bound))
    }

    pub fn point(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.integer()).collect()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    /// Uniform `k`-subset of `0..n`, sorted.
    pub fn subset(&mut self, n: usize, k: usize) -> Vec<usize> {
        let mut all: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = self.rng.random_range(i..n);
            all.swap(i, j);
        }
        let mut s = all[..k].to_vec();
        s.sort_unstable();
        s
    }
}

/// Upper bound on the probability that one sample point falls on the zero set
/// of a nonzero polynomial of degree `degree` (Schwartz-Zippel).
pub fn schwartz_zippel_bound(degree: u32, bound: i64) -> f64 {
    degree as f64 / (2 * bound + 1) as f64
}

/// Complete assignment from a name map; every variable must be present.
pub fn point_from_map(space: &Space, assignment: &BTreeMap<String, Scalar>) -> Result<Vec<Scalar>> {
    for name in assignment.keys() {
        space.index_of(name)?;
    }
    space
        .names()
        .iter()
        .map(|n| {
            assignment
                .get(n)
                .cloned()
                .ok_or_else(|| Error::IncompletePoint(n.clone()))
        })
        .collect()
}

/// Rows of the Jacobian `(df_i/dx_j)(point)`.
pub fn jacobian_at(fs: &[Poly], point: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
    let Some(first) = fs.first() else {
        return Err(Error::Dimension("empty polynomial list".into()));
    };
    if fs.iter().any(|f| !same_space(f.space(), first.space())) {
        return Err(Error::VarSpaceMismatch);
    }
    if point.len() != first.space().len() {
        return Err(Error::IncompletePoint(format!(
            "{} of {} coordinates given",
            point.len(),
            first.space().len()
        )));
    }
    Ok(fs.iter().map(|f| f.gradient_at(point)).collect())
}

/// Rank over the rationals of the Jacobian matrix at `point`.
pub fn jacobian_rank_at(fs: &[Poly], point: &[Scalar]) -> Result<usize> {
    Ok(linalg::rank(&jacobian_at(fs, point)?))
}

pub fn jacobian_rank_at_map(fs: &[Poly], point: &BTreeMap<String, Scalar>) -> Result<usize> {
    let first = fs.first().ok_or_else(|| Error::Dimension("empty polynomial list".into()))?;
    jacobian_rank_at(fs, &point_from_map(first.space(), point)?)
}

/// Outcome of randomized independence testing.
#[derive(Debug, Clone)]
pub struct IndependenceVerdict {
    pub independent: bool,
    pub best_rank: usize,
    pub samples: usize,
    /// Full-rank point when independent, last tried point otherwise.
    pub witness: Vec<Scalar>,
}

/// Full rank at one sample certifies independence; `MAX_RESAMPLES`
/// consecutive deficient samples are reported as dependence.
pub fn independence_test(fs: &[Poly], sampler: &mut Sampler) -> Result<IndependenceVerdict> {
    let first = fs.first().ok_or_else(|| Error::Dimension("empty polynomial list".into()))?;
    let n = first.space().len();
    let mut best = 0;
    let mut witness = Vec::new();
    for k in 1..=MAX_RESAMPLES {
        let pt = sampler.point(n);
        let r = jacobian_rank_at(fs, &pt)?;
        best = best.max(r);
        witness = pt;
        if r == fs.len() {
            return Ok(IndependenceVerdict {
                independent: true,
                best_rank: r,
                samples: k,
                witness,
            });
        }
    }
    Ok(IndependenceVerdict {
        independent: false,
        best_rank: best,
        samples: MAX_RESAMPLES,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::VarSpace;

    #[test]
    fn coordinate_functions_have_full_rank() {
        let s = VarSpace::ungraded(["x", "y"]).unwrap();
        let fs = [Poly::var(&s, 0), Poly::var(&s, 1)];
        let mut smp = Sampler::new(1);
        for _ in 0..5 {
            assert_eq!(jacobian_rank_at(&fs, &smp.point(2)).unwrap(), 2);
        }
    }

    #[test]
    fn proportional_gradients() {
        let s = VarSpace::ungraded(["x", "y"]).unwrap();
        let x = Poly::var(&s, 0);
        let fs = [x.pow(2), x.pow(4)];
        let mut smp = Sampler::new(2);
        assert_eq!(jacobian_rank_at(&fs, &smp.point(2)).unwrap(), 1);
        assert!(!independence_test(&fs, &mut smp).unwrap().independent);
    }

    #[test]
    fn incomplete_point_rejected() {
        let s = VarSpace::ungraded(["x", "y"]).unwrap();
        let fs = [Poly::var(&s, 0)];
        let mut m = BTreeMap::new();
        m.insert("x".to_string(), Scalar::one());
        assert!(matches!(
            jacobian_rank_at_map(&fs, &m),
            Err(Error::IncompletePoint(_))
        ));
    }

    #[test]
    fn sampling_is_seeded() {
        let a = Sampler::new(7).point(10);
        let b = Sampler::new(7).point(10);
        assert_eq!(a, b);
        assert!(a.iter().all(|x| x.abs() <= Scalar::from(SAMPLE_BOUND)));
    }
}
