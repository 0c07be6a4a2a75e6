use std::time::Instant;

use serde_json::json;
use z2inv::exactpoly::{BiDegree, Sampler};
use z2inv::invariants::{
    bidegree_bound_check, degree_sum_check, good_gensystem_check, minor_cross_identity_check, table_expected,
    theorem_bidegrees, SystemKind, VerificationReport,
};
use z2inv::liealg::{dim_stab_formula_check, index_estimate, Family, LieAlgebra, SymmetricPair};
use z2inv::nregular::{
    centralizer_span_check, nregular_generators, random_regular_in_g1, regular_nilpotent_in_g1, uslovie_check,
    Partition,
};
use z2inv::weylf4::{f4_bidegree_bound_check, f4_verify};
use z2inv::{Error, Poly, Result};

pub const GL_CASES: [(usize, usize); 5] = [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)];
pub const SO_CASES: [(usize, usize); 9] = [(2, 1), (3, 2), (4, 1), (4, 3), (5, 2), (6, 3), (3, 1), (2, 2), (4, 2)];
pub const DIMSTAB_CASES: [(Family, usize, usize); 4] =
    [(Family::Gl, 2, 1), (Family::Gl, 2, 2), (Family::So, 4, 1), (Family::So, 4, 3)];
pub const DIMSTAB_POINTS: usize = 10;
pub const SPAN_POINTS: usize = 5;
/// Largest contraction dimension for the minor cross-identity.
pub const CROSS_DIM: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    GoodGens,
    Index,
    Nregular,
    F4,
    Dimstab,
    Uslovie,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Family(Family),
    Heisenberg,
}

#[derive(Clone, Debug)]
pub struct Caps {
    pub order: usize,
    pub gl: usize,
    pub so: usize,
    pub nregular: usize,
    pub uslovie: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order: z2inv::liealg::DEFAULT_ORDER_CAP,
            gl: 3,
            so: 6,
            nregular: z2inv::nregular::NREGULAR_CAP,
            uslovie: 12,
        }
    }
}

impl Caps {
    pub fn set(&mut self, key: &str, value: usize) -> std::result::Result<(), String> {
        let slot = match key {
            "order" => &mut self.order,
            "gl" => &mut self.gl,
            "so" => &mut self.so,
            "nregular" => &mut self.nregular,
            "uslovie" => &mut self.uslovie,
            _ => return Err(format!("unknown cap `{key}` (expected order, gl, so, nregular or uslovie)")),
        };
        *slot = value;
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub suite: Suite,
    pub target: Option<Target>,
    pub size: Option<(usize, usize)>,
    pub seed: u64,
    pub kind: Option<SystemKind>,
    pub caps: Caps,
}

pub type Job = Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>;

pub struct Case {
    pub label: String,
    pub job: Job,
}

fn case(label: String, job: impl Fn() -> Result<Vec<VerificationReport>> + Send + Sync + 'static) -> Case {
    Case {
        label,
        job: Box::new(job),
    }
}

fn pair_with_caps(family: Family, n: usize, m: usize, caps: &Caps) -> Result<SymmetricPair> {
    SymmetricPair::with_cap(family, n, m, caps.order)
}

/// Pairs selected by family and size, or the default sweep under the caps.
fn pairs(spec: &CaseSpec) -> Result<Vec<(Family, usize, usize)>> {
    let family = match spec.target {
        Some(Target::Family(f)) => Some(f),
        Some(Target::Heisenberg) => return Ok(Vec::new()),
        None => None,
    };
    if let Some(Family::Sp) = family {
        return Err(Error::Conjectural(
            "no proved generating system or table row exists for the Sp family".into(),
        ));
    }
    if let Some((n, m)) = spec.size {
        let f = family.ok_or_else(|| Error::Unsupported("--n/--m need --family".into()))?;
        return Ok(vec![(f, n, m)]);
    }
    let mut out = Vec::new();
    if family.map_or(true, |f| f == Family::Gl) {
        out.extend(GL_CASES.iter().filter(|c| c.0 <= spec.caps.gl).map(|&(n, m)| (Family::Gl, n, m)));
    }
    if family.map_or(true, |f| f == Family::So) {
        out.extend(SO_CASES.iter().filter(|c| c.0 <= spec.caps.so).map(|&(n, m)| (Family::So, n, m)));
    }
    Ok(out)
}

fn wants_f4(spec: &CaseSpec) -> bool {
    spec.size.is_none() && matches!(spec.target, None | Some(Target::Family(Family::F4)))
}

fn sorted(mut v: Vec<BiDegree>) -> Vec<String> {
    v.sort();
    v.iter().map(BiDegree::to_string).collect()
}

fn table_case(family: Family, n: usize, m: usize, spec: &CaseSpec) -> Case {
    let caps = spec.caps.clone();
    let seed = spec.seed;
    case(format!("table {family}({n},{m})"), move || {
        let start = Instant::now();
        let pair = pair_with_caps(family, n, m, &caps)?;
        let (expected, id) = match table_expected(family, n, m) {
            Ok(row) => (row, format!("table/{}", pair.name())),
            Err(Error::NotTabulated(_)) => (theorem_bidegrees(family, n, m)?, format!("theorem-bidegrees/{}", pair.name())),
            Err(e) => return Err(e),
        };
        let (gens, res) = good_gensystem_check(&pair, SystemKind::default_for(family)?, seed)?;
        let expected = sorted(expected);
        let computed = sorted(res.bidegrees.clone());
        let ok = gens.passed() && expected == computed;
        Ok(vec![VerificationReport::new(
            id,
            ok,
            json!({ "bidegrees": expected }),
            json!({ "bidegrees": computed, "good_generating_system": gens.status }),
        )
        .timed(start)])
    })
}

fn good_gens_case(family: Family, n: usize, m: usize, spec: &CaseSpec) -> Case {
    let caps = spec.caps.clone();
    let seed = spec.seed;
    let kind = spec.kind;
    case(format!("good-gens {family}({n},{m})"), move || {
        let pair = pair_with_caps(family, n, m, &caps)?;
        let kind = match kind {
            Some(k) => k,
            None => SystemKind::default_for(family)?,
        };
        let (report, res) = good_gensystem_check(&pair, kind, seed)?;
        let mut out = vec![report.clone()];
        if report.passed() {
            out.push(bidegree_bound_check(&pair, &res));
            if pair.dim() <= CROSS_DIM {
                let l = res.contraction.algebra();
                out.push(minor_cross_identity_check(l, &pair.name(), &res.degenerated, 10, 10, seed));
            }
        }
        Ok(out)
    })
}

fn index_case(family: Family, n: usize, m: usize, spec: &CaseSpec) -> Case {
    let caps = spec.caps.clone();
    let seed = spec.seed;
    case(format!("index {family}({n},{m})"), move || {
        let start = Instant::now();
        let pair = pair_with_caps(family, n, m, &caps)?;
        let c = pair.contract();
        let ind = index_estimate(c.algebra(), 10, seed);
        Ok(vec![VerificationReport::new(
            format!("index/{}", pair.name()),
            ind == pair.rank_l(),
            json!({ "index": pair.rank_l() }),
            json!({ "index": ind }),
        )
        .timed(start)])
    })
}

fn heisenberg_case(seed: u64) -> Case {
    case("index heisenberg".into(), move || {
        let start = Instant::now();
        let h = LieAlgebra::heisenberg();
        let ind = index_estimate(&h, 10, seed);
        let index = VerificationReport::new("index/heisenberg", ind == 1, json!({ "index": 1 }), json!({ "index": ind }))
            .timed(start);
        let z = Poly::var(h.space(), 2);
        Ok(vec![index, degree_sum_check(&h, "heisenberg", &[z], seed)])
    })
}

fn dimstab_case(family: Family, n: usize, m: usize, spec: &CaseSpec) -> Case {
    let caps = spec.caps.clone();
    let seed = spec.seed;
    case(format!("dimstab {family}({n},{m})"), move || {
        let c = pair_with_caps(family, n, m, &caps)?.contract();
        let mut sampler = Sampler::new(seed);
        Ok((0..DIMSTAB_POINTS)
            .map(|k| {
                let mut r = dim_stab_formula_check(&c, &sampler.point(c.dim()));
                r.check_id = format!("{}#{}", r.check_id, k + 1);
                r
            })
            .collect())
    })
}

fn nregular_case(n: usize, spec: &CaseSpec) -> Case {
    let caps = spec.caps.clone();
    let seed = spec.seed;
    case(format!("nregular n={n}"), move || {
        if n > caps.nregular {
            return Err(Error::CapExceeded {
                what: "N-regular size n",
                value: n,
                cap: caps.nregular,
            });
        }
        let start = Instant::now();
        let pair = pair_with_caps(Family::Gl, n, n, &caps)?;
        let sys = nregular_generators(&pair)?;
        let failures: Vec<String> = sys
            .invariance_failures()?
            .iter()
            .enumerate()
            .filter_map(|(i, f)| f.map(|k| format!("generator {} not killed by {}", i + 1, sys.contraction.algebra().label(k))))
            .collect();
        let gens = sys.generators();
        let mut out = vec![VerificationReport::new(
            format!("nregular-invariance/{}", pair.name()),
            failures.is_empty(),
            json!({ "generators": 2 * n, "invariant": true }),
            json!({
                "generators": gens.len(),
                "degrees": gens.iter().filter_map(Poly::total_degree).collect::<Vec<_>>(),
                "failures": failures,
            }),
        )
        .timed(start)];
        out.push(degree_sum_check(sys.contraction.algebra(), &pair.name(), &gens, seed));
        let mut points = vec![regular_nilpotent_in_g1(&pair)?];
        let mut sampler = Sampler::new(seed);
        for _ in 0..SPAN_POINTS {
            if let Some(p) = random_regular_in_g1(&pair, &mut sampler) {
                points.push(p);
            }
        }
        for (k, p) in points.iter().enumerate() {
            let mut r = centralizer_span_check(&pair, p)?;
            r.check_id = format!("{}#{}", r.check_id, if k == 0 { "nilpotent".to_string() } else { k.to_string() });
            out.push(r);
        }
        Ok(out)
    })
}

fn uslovie_case(total: usize) -> Case {
    case(format!("uslovie {total}"), move || {
        Partition::all(total).iter().map(uslovie_check).collect()
    })
}

fn f4_case(seed: u64) -> Case {
    case("f4".into(), move || f4_verify(seed))
}

fn f4_bound_case() -> Case {
    case("bidegree-bound F4".into(), || Ok(vec![f4_bidegree_bound_check()?]))
}

fn f4_table_case(seed: u64) -> Case {
    case("table F4".into(), move || {
        let mut r = f4_verify(seed)?.into_iter().find(|r| r.check_id == "f4/bidegrees").unwrap();
        r.check_id = "table/F4(B4)".into();
        Ok(vec![r])
    })
}

/// Cases of one suite, in a fixed order.
pub fn build(spec: &CaseSpec) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    match spec.suite {
        Suite::Tables => {
            for (f, n, m) in pairs(spec)? {
                out.push(table_case(f, n, m, spec));
            }
            if wants_f4(spec) {
                out.push(f4_table_case(spec.seed));
            }
        }
        Suite::GoodGens => {
            for (f, n, m) in pairs(spec)? {
                out.push(good_gens_case(f, n, m, spec));
            }
            if wants_f4(spec) {
                out.push(f4_bound_case());
            }
        }
        Suite::Index => {
            for (f, n, m) in pairs(spec)? {
                out.push(index_case(f, n, m, spec));
            }
            if spec.target == Some(Target::Heisenberg) {
                out.push(heisenberg_case(spec.seed));
            }
        }
        Suite::Dimstab => {
            let list: Vec<(Family, usize, usize)> = match (spec.target, spec.size) {
                (Some(Target::Family(f)), Some((n, m))) => vec![(f, n, m)],
                (Some(Target::Family(f)), None) => DIMSTAB_CASES.iter().copied().filter(|c| c.0 == f).collect(),
                _ => DIMSTAB_CASES.to_vec(),
            };
            for (f, n, m) in list {
                out.push(dimstab_case(f, n, m, spec));
            }
        }
        Suite::Nregular => {
            let sizes: Vec<usize> = match spec.size {
                Some((n, _)) => vec![n],
                None => (1..=spec.caps.nregular).collect(),
            };
            for n in sizes {
                out.push(nregular_case(n, spec));
            }
        }
        Suite::F4 => out.push(f4_case(spec.seed)),
        Suite::Uslovie => {
            let totals: Vec<usize> = match spec.size {
                Some((n, _)) => vec![2 * n],
                None => (1..=spec.caps.uslovie / 2).map(|n| 2 * n).collect(),
            };
            for t in totals {
                out.push(uslovie_case(t));
            }
        }
    }
    Ok(out)
}
