#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, RngSeed, TestRng, TestRunner};
use z2inv::exactpoly::{Monomial, Part, Poly, PolyMatrix, Scalar, Space, VarSpace};

pub const TRIALS: u32 = 100;

/// `proptest!` configuration with a fixed seed.
pub fn config(seed: u64) -> Config {
    Config {
        cases: TRIALS,
        failure_persistence: None,
        rng_seed: RngSeed::Fixed(seed),
        ..Config::default()
    }
}

/// Runner with a fixed seed and no failure persistence.
pub fn runner(cases: u32, seed: u8) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

pub fn monomial_from_indices(nvars: usize, idx: &[usize]) -> Monomial {
    let mut e = vec![0u16; nvars];
    for &i in idx {
        e[i] += 1;
    }
    Monomial::from_exponents(e)
}

/// Sparse polynomial with up to `terms` monomials of degree <= `max_deg`.
pub fn arb_poly(space: Space, max_deg: usize, terms: usize) -> impl Strategy<Value = Poly> {
    let n = space.len();
    prop::collection::vec((prop::collection::vec(0..n, 0..=max_deg), -9i64..=9), 0..=terms).prop_map(move |ts| {
        Poly::from_terms(
            &space,
            ts.into_iter().map(|(idx, c)| (monomial_from_indices(n, &idx), Scalar::from(c))),
        )
    })
}

/// Homogeneous polynomial of total degree `deg`; never zero.
pub fn arb_homogeneous(space: Space, deg: usize, terms: usize) -> impl Strategy<Value = Poly> {
    let n = space.len();
    prop::collection::vec((prop::collection::vec(0..n, deg), 1i64..=9), 1..=terms).prop_map(move |ts| {
        let mut p = Poly::zero(&space);
        for (idx, c) in ts {
            p.add_term(monomial_from_indices(n, &idx), Scalar::from(c));
        }
        if p.is_zero() {
            p = Poly::var(&space, 0).pow(deg as u32);
        }
        p
    })
}

/// Bihomogeneous polynomial of bidegree `(a, b)`, possibly zero.
pub fn arb_bihomogeneous(space: Space, a: usize, b: usize, terms: usize) -> impl Strategy<Value = Poly> {
    let g0 = space.indices_of(Part::Zero);
    let g1 = space.indices_of(Part::One);
    let n = space.len();
    let (n0, n1) = (g0.len().max(1), g1.len().max(1));
    prop::collection::vec(
        (prop::collection::vec(0..n0, a), prop::collection::vec(0..n1, b), -9i64..=9),
        1..=terms,
    )
    .prop_map(move |ts| {
        let mut p = Poly::zero(&space);
        for (i0, i1, c) in ts {
            let idx: Vec<usize> = i0.iter().map(|&i| g0[i]).chain(i1.iter().map(|&i| g1[i])).collect();
            p.add_term(monomial_from_indices(n, &idx), Scalar::from(c));
        }
        p
    })
}

/// Skew matrix of order `order` whose upper entries are linear forms in
/// `t1..t_nvars` with small integer coefficients.
pub fn skew_linear(space: &Space, order: usize, coeffs: &[Vec<i64>]) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(space, order, order);
    let mut k = 0;
    for i in 0..order {
        for j in i + 1..order {
            let mut e = Poly::zero(space);
            for (v, &c) in coeffs[k].iter().enumerate() {
                e = &e + &Poly::var(space, v).scale(&Scalar::from(c));
            }
            m.set(j, i, -&e);
            m.set(i, j, e);
            k += 1;
        }
    }
    m
}

pub fn arb_skew_coeffs(order: usize, nvars: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, nvars), order * (order - 1) / 2)
}

pub fn t_space(nvars: usize) -> Space {
    VarSpace::ungraded((1..=nvars).map(|i| format!("t{i}"))).unwrap()
}
