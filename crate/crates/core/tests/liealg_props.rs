mod common;

use std::sync::OnceLock;

use common::*;
use proptest::prelude::*;
use z2inv::exactpoly::{Part, Poly, Sampler, Scalar};
use z2inv::invariants::{good_gensystem_check, SystemKind};
use z2inv::liealg::{
    adjoint_derivation, build_classical, coadjoint_derivation, index_estimate, is_invariant, stabilizer_dim_at, Family,
    LieAlgebra, Representation, SymmetricPair,
};

const PAIRS: [(Family, usize, usize); 7] = [
    (Family::Gl, 1, 1),
    (Family::Gl, 2, 1),
    (Family::Gl, 2, 2),
    (Family::So, 2, 1),
    (Family::So, 3, 1),
    (Family::So, 4, 1),
    (Family::So, 3, 2),
];

fn contraction(i: usize) -> LieAlgebra {
    let (f, n, m) = PAIRS[i];
    SymmetricPair::new(f, n, m).unwrap().contract().algebra().clone()
}

fn verified_invariants(i: usize) -> (LieAlgebra, Vec<Poly>) {
    static CACHE: OnceLock<Vec<(LieAlgebra, Vec<Poly>)>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            PAIRS
                .iter()
                .map(|&(f, n, m)| {
                    let pair = SymmetricPair::new(f, n, m).unwrap();
                    let (report, res) = good_gensystem_check(&pair, SystemKind::default_for(f).unwrap(), 3).unwrap();
                    assert!(report.passed(), "{}", report.summary_line());
                    (res.contraction.algebra().clone(), res.degenerated)
                })
                .collect()
        })[i]
        .clone()
}

#[test]
fn jacobi_for_models_and_contractions() {
    for n in 1..=4 {
        assert!(build_classical(Family::Gl, n).unwrap().check_jacobi(), "gl{n}");
    }
    for n in 2..=6 {
        assert!(build_classical(Family::So, n).unwrap().check_jacobi(), "so{n}");
    }
    for (f, n, m) in PAIRS {
        let pair = SymmetricPair::new(f, n, m).unwrap();
        assert!(pair.algebra().respects_grading(), "{}", pair.name());
        let c = pair.contract();
        assert!(c.algebra().check_jacobi(), "contraction of {}", pair.name());
        assert!(c.algebra().respects_grading());
    }
    assert!(LieAlgebra::heisenberg().check_jacobi());
}

#[test]
fn contraction_kills_g1_brackets() {
    for (f, n, m) in PAIRS {
        let c = SymmetricPair::new(f, n, m).unwrap().contract();
        let g1 = c.space().indices_of(Part::One);
        for &i in &g1 {
            for &j in &g1 {
                assert!(c.algebra().bracket(i, j).is_empty());
            }
        }
    }
}

#[test]
fn export_round_trip() {
    for (f, n, m) in PAIRS {
        let c = SymmetricPair::new(f, n, m).unwrap().contract();
        let text = c.algebra().export();
        let back = LieAlgebra::from_export(c.space().clone(), &text).unwrap();
        assert_eq!(back.export(), text);
    }
}

#[test]
fn index_equals_rank_for_symmetric_pairs() {
    for (f, n, m) in PAIRS {
        let pair = SymmetricPair::new(f, n, m).unwrap();
        assert_eq!(index_estimate(pair.contract().algebra(), 10, 5), pair.rank_l(), "{}", pair.name());
        assert_eq!(index_estimate(pair.algebra(), 10, 5), pair.rank_l(), "{} itself", pair.name());
    }
}

#[test]
fn regular_points_have_full_jacobian_rank() {
    for i in 0..PAIRS.len() {
        let (l, fs) = verified_invariants(i);
        let mut sampler = Sampler::new(9);
        for _ in 0..5 {
            let pt = sampler.point(l.dim());
            let rank = z2inv::exactpoly::jacobian_rank_at(&fs, &pt).unwrap();
            if rank == fs.len() {
                assert_eq!(stabilizer_dim_at(&l, &pt), fs.len());
            }
        }
    }
}

proptest! {
    #![proptest_config(config(21))]

    #[test]
    fn coadjoint_and_adjoint_shift_bidegrees(
        (case, a, b, p) in (0..PAIRS.len(), 0usize..=3, 0usize..=3).prop_flat_map(|(case, a, b)| {
            (Just(case), Just(a), Just(b), arb_bihomogeneous(contraction(case).space().clone(), a, b, 5))
        })
    ) {
        let l = contraction(case);
        for i in 0..l.dim() {
            let s = i64::from(l.part(i) == Part::One);
            let co = coadjoint_derivation(&l, i, &p).unwrap();
            match co.bidegree() {
                Some(bd) => prop_assert_eq!((i64::from(bd.a), i64::from(bd.b)), (a as i64 - s, b as i64 + s)),
                None => prop_assert!(co.is_zero()),
            }
            let ad = adjoint_derivation(&l, i, &p).unwrap();
            match ad.bidegree() {
                Some(bd) => prop_assert_eq!((i64::from(bd.a), i64::from(bd.b)), (a as i64 + s, b as i64 - s)),
                None => prop_assert!(ad.is_zero()),
            }
        }
    }

    #[test]
    fn derivations_are_derivations(
        (case, p, q) in (0..3usize).prop_flat_map(|case| {
            let s = contraction(case).space().clone();
            (Just(case), arb_poly(s.clone(), 2, 4), arb_poly(s, 2, 4))
        }),
        i in 0usize..4,
    ) {
        let l = contraction(case);
        let i = i % l.dim();
        for rep in [Representation::Coadjoint, Representation::Adjoint] {
            let d = |x: &Poly| z2inv::liealg::derivation(&l, rep, i, x).unwrap();
            prop_assert_eq!(d(&(&p * &q)), &(&d(&p) * &q) + &(&p * &d(&q)));
        }
    }

    #[test]
    fn bigrading_closure_and_restriction(case in 0..PAIRS.len(), cs in prop::collection::vec(-4i64..=4, 1 + 3 + 9)) {
        let (l, fs) = verified_invariants(case);
        let space = l.space().clone();
        let mut p = Poly::constant(&space, Scalar::from(cs[0]));
        for (i, f) in fs.iter().enumerate().take(3) {
            p = &p + &f.scale(&Scalar::from(cs[1 + i]));
            for (j, g) in fs.iter().enumerate().take(3) {
                p = &p + &(f * g).scale(&Scalar::from(cs[4 + 3 * i + j]));
            }
        }
        prop_assert!(is_invariant(&l, &p, Representation::Coadjoint).unwrap());
        for (_, c) in p.bihomogeneous_components() {
            prop_assert!(is_invariant(&l, &c, Representation::Coadjoint).unwrap());
        }
        let images: Vec<Poly> = (0..l.dim())
            .map(|k| if l.part(k) == Part::Zero { Poly::zero(&space) } else { Poly::var(&space, k) })
            .collect();
        let restricted = p.substitute(&images, &space).unwrap();
        for i in space.indices_of(Part::Zero) {
            prop_assert!(coadjoint_derivation(&l, i, &restricted).unwrap().is_zero());
        }
    }
}
