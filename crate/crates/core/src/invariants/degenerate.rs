use std::collections::BTreeSet;
use std::time::Instant;

use serde_json::json;

use super::basic::{basic_invariants, GeneratingSystem, SystemKind};
use super::report::{format_point, VerificationReport};
use crate::error::{Error, Result};
use crate::exactpoly::{independence_test, same_space, BiDegree, Poly, Sampler, Scalar};
use crate::liealg::{first_non_annihilating, index_estimate, Contraction, LieAlgebra, Representation, SymmetricPair};

/// Z2-degenerations of a generating system, as polynomials on `k*`.
#[derive(Clone, Debug)]
pub struct DegenerationResult {
    pub originals: GeneratingSystem,
    pub contraction: Contraction,
    pub degenerated: Vec<Poly>,
    pub bidegrees: Vec<BiDegree>,
    /// Per generator: the first contraction basis element whose coadjoint
    /// derivation does not kill `f•`, if any.
    pub invariance_failures: Vec<Option<usize>>,
    pub independent: bool,
    pub best_rank: usize,
    pub witness_point: Option<Vec<Scalar>>,
}

impl DegenerationResult {
    pub fn all_invariant(&self) -> bool {
        self.invariance_failures.iter().all(Option::is_none)
    }

    pub fn degree_sum(&self) -> u32 {
        Poly::degree_sum(&self.degenerated)
    }

    pub fn bidegree_sum(&self) -> BiDegree {
        self.bidegrees.iter().copied().sum()
    }
}

/// Takes `f•` for every generator, checks `K`-invariance symbolically and
/// decides independence by sampling.
pub fn z2_degenerate(sys: &GeneratingSystem, sampler: &mut Sampler) -> Result<DegenerationResult> {
    let contraction = sys.pair().contract();
    let degenerated = sys
        .generators()
        .iter()
        .map(Poly::top_component)
        .collect::<Result<Vec<_>>>()?;
    let bidegrees = degenerated
        .iter()
        .map(|f| f.bidegree().ok_or(Error::NotHomogeneous))
        .collect::<Result<Vec<_>>>()?;
    let invariance_failures = degenerated
        .iter()
        .map(|f| first_non_annihilating(contraction.algebra(), f, Representation::Coadjoint))
        .collect::<Result<Vec<_>>>()?;
    let verdict = independence_test(&degenerated, sampler)?;
    Ok(DegenerationResult {
        originals: sys.clone(),
        contraction,
        degenerated,
        bidegrees,
        invariance_failures,
        independent: verdict.independent,
        best_rank: verdict.best_rank,
        witness_point: Some(verdict.witness),
    })
}

/// Substitutes the slice parameterization `M̃` into a polynomial on `g`.
pub fn restrict_to_slice(p: &Poly, pair: &SymmetricPair) -> Result<Poly> {
    if !same_space(p.space(), pair.space()) {
        return Err(Error::VarSpaceMismatch);
    }
    let slice = pair.slice();
    p.substitute(slice.images(), slice.space())
}

/// Symbolic dependence certificate: if the restrictions of the `f•` to the
/// slice involve fewer than `l` variables they are algebraically dependent,
/// and since `K·(c ⊕ s)` is dense in `k*` so are the `f•`.
pub fn slice_dependence_witness(res: &DegenerationResult) -> Result<Option<String>> {
    let pair = res.originals.pair();
    let restricted = res
        .degenerated
        .iter()
        .map(|f| restrict_to_slice(f, pair))
        .collect::<Result<Vec<_>>>()?;
    let vars: BTreeSet<usize> = restricted.iter().flat_map(|f| f.variables()).collect();
    if vars.len() >= restricted.len() {
        return Ok(None);
    }
    let names: Vec<&str> = vars.iter().map(|&v| pair.slice().space().name(v)).collect();
    let list: Vec<String> = restricted.iter().map(|f| f.to_string()).collect();
    Ok(Some(format!(
        "restricted tops [{}] involve only {{{}}}",
        list.join("; "),
        names.join(", ")
    )))
}

fn bidegree_strings(bs: &[BiDegree]) -> Vec<String> {
    bs.iter().map(BiDegree::to_string).collect()
}

/// Free generation certificate: invariant, independent degenerations whose
/// degree sum equals `(dim g + rk g)/2`.
pub fn good_gensystem_check(pair: &SymmetricPair, kind: SystemKind, seed: u64) -> Result<(VerificationReport, DegenerationResult)> {
    let start = Instant::now();
    let sys = basic_invariants(pair, kind)?;
    let mut sampler = Sampler::new(seed);
    let res = z2_degenerate(&sys, &mut sampler)?;
    Ok((good_gensystem_report(&res).timed(start), res))
}

pub fn good_gensystem_report(res: &DegenerationResult) -> VerificationReport {
    let pair = res.originals.pair();
    let id = format!("good-gens/{}/{}", pair.name(), res.originals.kind());
    let target2 = (pair.dim() + pair.rank_l()) as u32;
    let sum = res.degree_sum();
    let ok = res.all_invariant() && res.independent && 2 * sum == target2;
    let failures: Vec<String> = res
        .invariance_failures
        .iter()
        .enumerate()
        .filter_map(|(i, f)| f.map(|k| format!("f{}• not killed by {}", i + 1, res.contraction.algebra().label(k))))
        .collect();
    let report = VerificationReport::new(
        id,
        ok,
        json!({
            "invariant": true,
            "independent": true,
            "degree_sum": format_half(target2),
        }),
        json!({
            "invariant": res.all_invariant(),
            "independent": res.independent,
            "jacobian_rank": res.best_rank,
            "degree_sum": sum,
            "degrees": res.originals.degrees(),
            "bidegrees": bidegree_strings(&res.bidegrees),
            "invariance_failures": failures,
        }),
    );
    let names = res.contraction.space().names();
    match (&res.witness_point, res.independent) {
        (Some(p), true) => report.with_witness(format_point(names, p)),
        _ => match slice_dependence_witness(res) {
            Ok(Some(w)) => report.with_witness(w),
            _ => match &res.witness_point {
                Some(p) => report.with_witness(format!("rank-deficient at {}", format_point(names, p))),
                None => report,
            },
        },
    }
}

fn format_half(twice: u32) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

/// `sum deg f_i >= (dim q + ind q)/2` for `ind q` invariants; equality
/// certifies free generation.
pub fn degree_sum_check(l: &LieAlgebra, name: &str, fs: &[Poly], seed: u64) -> VerificationReport {
    let start = Instant::now();
    let id = format!("degree-sum/{name}");
    let ind = index_estimate(l, 10, seed);
    if fs.len() != ind {
        return VerificationReport::skipped(id, format!("{} invariants given, index is {ind}", fs.len())).timed(start);
    }
    let sum = Poly::degree_sum(fs);
    let rhs2 = (l.dim() + ind) as u32;
    let holds = 2 * sum >= rhs2;
    let equality = 2 * sum == rhs2;
    let mut computed = json!({
        "index": ind,
        "degree_sum": sum,
        "equality": equality,
    });
    if !holds {
        computed["note"] = json!("degree-sum bound violated: codim-2 property absent");
    } else if equality {
        computed["note"] = json!("equality: the invariants generate freely");
    }
    VerificationReport::new(id, holds, json!({ "degree_sum_at_least": format_half(rhs2) }), computed).timed(start)
}

/// `sum bideg f_i >= ((dim s + rk s)/2, dim g1)` componentwise.
pub fn bidegree_bound_report(
    id: String,
    bidegrees: &[BiDegree],
    stabilizer: (usize, usize),
    dim_g1: usize,
) -> VerificationReport {
    let sum: BiDegree = bidegrees.iter().copied().sum();
    let (ds, rs) = stabilizer;
    let a2 = (ds + rs) as u32;
    let ok = 2 * sum.a >= a2 && sum.b >= dim_g1 as u32;
    let equality = 2 * sum.a == a2 && sum.b == dim_g1 as u32;
    VerificationReport::new(
        id,
        ok,
        json!({
            "a_at_least": format_half(a2),
            "b_at_least": dim_g1,
        }),
        json!({
            "bidegree_sum": sum.to_string(),
            "dim_s": ds,
            "rk_s": rs,
            "equality": equality,
        }),
    )
}

pub fn bidegree_bound_check(pair: &SymmetricPair, res: &DegenerationResult) -> VerificationReport {
    let start = Instant::now();
    let id = format!("bidegree-bound/{}", pair.name());
    if !res.independent {
        return VerificationReport::skipped(id, "degenerations are not independent");
    }
    bidegree_bound_report(id, &res.bidegrees, pair.generic_stabilizer(), pair.dim_g1()).timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Family;

    #[test]
    fn so41_good_system() {
        let p = SymmetricPair::new(Family::So, 4, 1).unwrap();
        let (r, res) = good_gensystem_check(&p, SystemKind::EvenCoeffsPlusPfaffian, 0).unwrap();
        assert!(r.passed(), "{}", r.summary_line());
        assert_eq!(res.bidegrees, vec![BiDegree::new(0, 2), BiDegree::new(2, 2)]);
        assert_eq!(res.degree_sum(), 6);
        assert!(bidegree_bound_check(&p, &res).passed());
    }

    #[test]
    fn gl21_good_system() {
        let p = SymmetricPair::new(Family::Gl, 2, 1).unwrap();
        let (r, res) = good_gensystem_check(&p, SystemKind::CharpolyCoeffs, 0).unwrap();
        assert!(r.passed(), "{}", r.summary_line());
        assert_eq!(
            res.bidegrees,
            vec![BiDegree::new(1, 0), BiDegree::new(0, 2), BiDegree::new(1, 2)]
        );
        let b = bidegree_bound_check(&p, &res);
        assert!(b.passed());
        assert_eq!(b.computed["equality"], json!(true));
    }

    #[test]
    fn power_traces_are_not_good() {
        let p = SymmetricPair::new(Family::So, 4, 1).unwrap();
        let (r, res) = good_gensystem_check(&p, SystemKind::PowerTraces, 0).unwrap();
        assert!(r.failed());
        assert!(!res.independent);
        let w = slice_dependence_witness(&res).unwrap().expect("slice witness");
        assert!(w.contains("{d1}"), "{w}");
    }

    #[test]
    fn gl11_determinant_on_slice() {
        let p = SymmetricPair::new(Family::Gl, 1, 1).unwrap();
        let sys = basic_invariants(&p, SystemKind::CharpolyCoeffs).unwrap();
        let r = restrict_to_slice(&sys.generators()[1], &p).unwrap();
        assert_eq!(r, Poly::parse(p.slice().space(), "a1^2 + b1^2").unwrap());
        assert!(restrict_to_slice(&Poly::zero(p.space()), &p).unwrap().is_zero());
    }

    #[test]
    fn heisenberg_degree_sum_fails() {
        let h = LieAlgebra::heisenberg();
        let r = degree_sum_check(&h, "heisenberg", &[Poly::var(h.space(), 2)], 0);
        assert!(r.failed());
        assert_eq!(r.computed["index"], json!(1));
    }
}
