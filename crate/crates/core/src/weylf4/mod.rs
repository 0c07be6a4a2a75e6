//! Weyl group computation for the pair `(F4, B4)`: simple reflections,
//! `W(D4)` basic invariants, the corrected `W(F4)` invariants and their
//! highest components with respect to the Cartan subspace `c = kε1`.

use std::collections::HashSet;
use std::time::Instant;

use serde_json::json;

use crate::error::Result;
use crate::exactpoly::{independence_test, linalg, linalg::QMatrix, BiDegree, Part, Poly, Sampler, Scalar, Space, VarSpace};
use crate::invariants::{bidegree_bound_report, format_point, table_expected, VerificationReport};
use crate::liealg::Family;

/// `(dim s, rk s)` for `s = so_7` and `dim g1` of the pair `(F4, B4)`.
pub const F4_STABILIZER: (usize, usize) = (21, 3);
pub const F4_DIM_G1: usize = 16;

/// Coordinates `e1` (spanning `c`, graded ONE) and `e2, e3, e4` (the
/// Cartan of `s`, graded ZERO).
pub fn f4_space() -> Space {
    VarSpace::new([
        ("e1", Part::One),
        ("e2", Part::Zero),
        ("e3", Part::Zero),
        ("e4", Part::Zero),
    ])
    .expect("valid labels")
}

/// Orthogonal reflection of `Q^4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReflectionMap {
    matrix: QMatrix,
}

impl ReflectionMap {
    /// `v -> v - 2 (v, α)/(α, α) α`.
    pub fn from_root(alpha: &[Scalar]) -> Self {
        let norm = alpha.iter().fold(Scalar::zero(), |acc, a| acc + a * a);
        let f = &Scalar::from(2) / &norm;
        let matrix = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let delta = if i == j { Scalar::one() } else { Scalar::zero() };
                        delta - &(&f * &(&alpha[i] * &alpha[j]))
                    })
                    .collect()
            })
            .collect();
        ReflectionMap { matrix }
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    /// `p ∘ s`, i.e. `(s·p)(v) = p(s v)` for a polynomial on `f4_space()`.
    pub fn act(&self, p: &Poly) -> Result<Poly> {
        act_by_matrix(&self.matrix, p)
    }

    pub fn is_involution(&self) -> bool {
        linalg::mat_mul(&self.matrix, &self.matrix) == linalg::identity(4)
    }

    pub fn is_orthogonal(&self) -> bool {
        linalg::mat_mul(&linalg::transpose(&self.matrix), &self.matrix) == linalg::identity(4)
    }
}

fn act_by_matrix(m: &QMatrix, p: &Poly) -> Result<Poly> {
    let s = p.space();
    let images: Vec<Poly> = m
        .iter()
        .map(|row| {
            let mut q = Poly::zero(s);
            for (j, c) in row.iter().enumerate() {
                q = &q + &Poly::var(s, j).scale(c);
            }
            q
        })
        .collect();
    p.substitute(&images, s)
}

fn q(v: [(i64, i64); 4]) -> Vec<Scalar> {
    v.iter().map(|&(a, b)| Scalar::ratio(a, b)).collect()
}

/// Reflections in `α1 = ½(ε1-ε2-ε3-ε4)`, `α2 = ε4`, `α3 = ε3-ε4`, `α4 = ε2-ε3`.
pub fn f4_simple_reflections() -> Vec<ReflectionMap> {
    [
        q([(1, 2), (-1, 2), (-1, 2), (-1, 2)]),
        q([(0, 1), (0, 1), (0, 1), (1, 1)]),
        q([(0, 1), (0, 1), (1, 1), (-1, 1)]),
        q([(0, 1), (1, 1), (-1, 1), (0, 1)]),
    ]
    .iter()
    .map(|a| ReflectionMap::from_root(a))
    .collect()
}

/// All elements of `W(F4)` as matrices, by closure under the simple reflections.
pub fn f4_weyl_group() -> Vec<QMatrix> {
    let gens: Vec<QMatrix> = f4_simple_reflections().into_iter().map(|r| r.matrix).collect();
    let mut seen: HashSet<QMatrix> = HashSet::new();
    let mut frontier = vec![linalg::identity(4)];
    seen.insert(linalg::identity(4));
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let x = linalg::mat_mul(g, &w);
            if seen.insert(x.clone()) {
                frontier.push(x);
            }
        }
    }
    seen.into_iter().collect()
}

/// `(f2, f4', f4, f6)`.
pub fn d4_basic_invariants() -> (Poly, Poly, Poly, Poly) {
    let s = f4_space();
    let sq: Vec<Poly> = (0..4).map(|i| Poly::var(&s, i).pow(2)).collect();
    let mut f2 = Poly::zero(&s);
    let mut f4 = Poly::zero(&s);
    let mut f6 = Poly::zero(&s);
    for i in 0..4 {
        f2 = &f2 + &sq[i];
        for j in i + 1..4 {
            f4 = &f4 + &(&sq[i] * &sq[j]);
            for k in j + 1..4 {
                f6 = &f6 + &(&(&sq[i] * &sq[j]) * &sq[k]);
            }
        }
    }
    let f4p = (0..4).fold(Poly::one(&s), |acc, i| &acc * &Poly::var(&s, i));
    (f2, f4p, f4, f6)
}

/// `(g2, g6, g8, g12)` built from the `W(D4)` invariants.
pub fn f4_good_generators() -> (Poly, Poly, Poly, Poly) {
    let (f2, f4p, f4, f6) = d4_basic_invariants();
    let r = Scalar::ratio;
    let f4p2 = f4p.pow(2);
    let g2 = f2.clone();
    let g6 = &f6 - &(&f2 * &f4).scale(&r(1, 6));
    let g8 = &(&f4p2 + &f4.pow(2).scale(&r(1, 12))) - &(&f2 * &f6).scale(&r(1, 4));
    let g12 = {
        let t1 = (&f4p2 * &f4).scale(&r(4, 1));
        let t2 = f6.pow(2).scale(&r(3, 2));
        let t3 = (&f4p2 * &f2.pow(2)).scale(&r(3, 2));
        let t4 = f4.pow(3).scale(&r(1, 9));
        let t5 = (&(&f2 * &f4) * &f6).scale(&r(1, 2));
        &(&(&(&t1 - &t2) - &t3) - &t4) + &t5
    };
    (g2, g6, g8, g12)
}

/// The displayed highest components `g2•, g6•, g8•, g12•`.
pub fn f4_displayed_highest_components() -> Vec<Poly> {
    let s = f4_space();
    let e1 = Poly::var(&s, 0);
    let sq: Vec<Poly> = (1..4).map(|i| Poly::var(&s, i).pow(2)).collect();
    let sum = &(&sq[0] + &sq[1]) + &sq[2];
    let sig2 = &(&(&sq[0] * &sq[1]) + &(&sq[0] * &sq[2])) + &(&sq[1] * &sq[2]);
    let sig3 = &(&sq[0] * &sq[1]) * &sq[2];
    let r = Scalar::ratio;
    let g2 = e1.pow(2);
    let g6 = &e1.pow(4) * &sum;
    let g8 = &e1.pow(4) * &(&sum.pow(2).scale(&r(1, 12)) - &sig2.scale(&r(1, 4)));
    let g12 = &e1.pow(6)
        * &(&(&sig3.scale(&r(-3, 2)) - &sum.pow(3).scale(&r(1, 9))) + &(&sum * &sig2).scale(&r(1, 2)));
    vec![g2, g6, g8, g12]
}

fn generators_vec() -> Vec<Poly> {
    let (a, b, c, d) = f4_good_generators();
    vec![a, b, c, d]
}

const NAMES: [&str; 4] = ["g2", "g6", "g8", "g12"];

/// Proportionality factor `q` with `p = q·r`, if any.
fn ratio(p: &Poly, r: &Poly) -> Option<Scalar> {
    let (m, c) = r.terms().next()?;
    let q = &p.coefficient(m) / c;
    if q.is_zero() || *p != r.scale(&q) {
        return None;
    }
    Some(q)
}

/// The four sub-checks: invariance under the simple reflections, exact match
/// of the displayed highest components, independence of the computed
/// highest components, and their bi-degrees `(deg in e2..e4, deg in e1)`.
pub fn f4_verify(seed: u64) -> Result<Vec<VerificationReport>> {
    let gens = generators_vec();
    let refl = f4_simple_reflections();
    let mut out = Vec::new();

    let start = Instant::now();
    let mut broken = Vec::new();
    for (g, name) in gens.iter().zip(NAMES) {
        for (k, s) in refl.iter().enumerate() {
            if s.act(g)? != *g {
                broken.push(format!("{name} under s_alpha{}", k + 1));
            }
        }
    }
    out.push(
        VerificationReport::new(
            "f4/invariance",
            broken.is_empty(),
            json!({ "fixed_by_all_simple_reflections": NAMES }),
            json!({ "not_fixed": broken }),
        )
        .timed(start),
    );

    let start = Instant::now();
    let tops = gens.iter().map(Poly::top_component).collect::<Result<Vec<_>>>()?;
    let displayed = f4_displayed_highest_components();
    let mut mismatches = Vec::new();
    let mut witness = Vec::new();
    for ((t, d), name) in tops.iter().zip(&displayed).zip(NAMES) {
        if t != d {
            let factor = ratio(t, d).map_or("none".to_string(), |q| q.to_string());
            mismatches.push(json!({ "generator": name, "computed": t.to_string(), "displayed": d.to_string(), "factor": factor }));
            witness.push(format!("{name}• = {t} (displayed {d}, factor {factor})"));
        }
    }
    let mut r = VerificationReport::new(
        "f4/highest-components",
        mismatches.is_empty(),
        json!(displayed.iter().map(Poly::to_string).collect::<Vec<_>>()),
        json!(tops.iter().map(Poly::to_string).collect::<Vec<_>>()),
    );
    if !witness.is_empty() {
        r = r.with_witness(witness.join("; "));
    }
    out.push(r.timed(start));

    let start = Instant::now();
    let verdict = independence_test(&tops, &mut Sampler::new(seed))?;
    out.push(
        VerificationReport::new(
            "f4/independence",
            verdict.independent,
            json!({ "jacobian_rank": 4 }),
            json!({ "jacobian_rank": verdict.best_rank, "samples": verdict.samples }),
        )
        .with_witness(format_point(f4_space().names(), &verdict.witness))
        .timed(start),
    );

    let start = Instant::now();
    let bds: Vec<BiDegree> = tops.iter().filter_map(Poly::bidegree).collect();
    let expected = table_expected(Family::F4, 0, 0)?;
    out.push(
        VerificationReport::new(
            "f4/bidegrees",
            bds == expected,
            json!(expected.iter().map(BiDegree::to_string).collect::<Vec<_>>()),
            json!(bds.iter().map(BiDegree::to_string).collect::<Vec<_>>()),
        )
        .timed(start),
    );
    Ok(out)
}

/// Bi-degree bound for the computed highest components of the `F4` system.
pub fn f4_bidegree_bound_check() -> Result<VerificationReport> {
    let start = Instant::now();
    let bds = generators_vec()
        .iter()
        .map(|g| g.top_component().map(|t| t.bidegree().unwrap_or_default()))
        .collect::<Result<Vec<_>>>()?;
    Ok(bidegree_bound_report("bidegree-bound/F4(B4)".into(), &bds, F4_STABILIZER, F4_DIM_G1).timed(start))
}

/// `g(w v) = g(v)` for every `w` in `W(F4)` and every generator, exactly at
/// `points` sampled rational points. Symbolic invariance already follows
/// from the simple reflections; this is a redundant sweep over the group.
pub fn f4_full_group_check(points: usize, seed: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let group = f4_weyl_group();
    let gens = generators_vec();
    let mut sampler = Sampler::new(seed);
    let mut bad = 0usize;
    for _ in 0..points {
        let v = sampler.point(4);
        let values: Vec<Scalar> = gens.iter().map(|g| g.eval(&v)).collect();
        for w in &group {
            let wv = ReflectionMap { matrix: w.clone() }.apply(&v);
            bad += gens.iter().zip(&values).filter(|(g, val)| g.eval(&wv) != **val).count();
        }
    }
    Ok(VerificationReport::new(
        "f4/full-group",
        bad == 0 && group.len() == 1152,
        json!({ "group_order": 1152, "violations": 0 }),
        json!({ "group_order": group.len(), "violations": bad, "points": points }),
    )
    .timed(start))
}
