use criterion::{black_box, criterion_group, criterion_main, Criterion};
use z2inv::exactpoly::{Poly, PolyMatrix, VarSpace};
use z2inv::invariants::{good_gensystem_check, SystemKind};
use z2inv::liealg::{Family, SymmetricPair};
use z2inv::weylf4::f4_verify;

/// Generic skew matrix: one variable per upper entry.
fn generic_skew(order: usize) -> PolyMatrix {
    let n = order * (order - 1) / 2;
    let space = VarSpace::ungraded((0..n).map(|k| format!("a{k}"))).unwrap();
    let mut m = PolyMatrix::zeros(&space, order, order);
    let mut k = 0;
    for i in 0..order {
        for j in i + 1..order {
            let v = Poly::var(&space, k);
            m.set(j, i, -&v);
            m.set(i, j, v);
            k += 1;
        }
    }
    m
}

fn generic_square(order: usize) -> PolyMatrix {
    let space = VarSpace::ungraded((0..order * order).map(|k| format!("x{k}"))).unwrap();
    PolyMatrix::from_fn(&space, order, order, |i, j| Poly::var(&space, i * order + j)).unwrap()
}

fn exactpoly(c: &mut Criterion) {
    let skew = generic_skew(8);
    c.bench_function("pfaffian/generic-8", |b| b.iter(|| black_box(&skew).pfaffian().unwrap()));
    let sq = generic_square(4);
    c.bench_function("principal_minor_sums/generic-4", |b| {
        b.iter(|| black_box(&sq).principal_minor_sums().unwrap())
    });
}

fn invariants(c: &mut Criterion) {
    let mut g = c.benchmark_group("good_gensystem_check");
    g.sample_size(10);
    for (family, n, m, kind) in [
        (Family::Gl, 2, 2, SystemKind::CharpolyCoeffs),
        (Family::So, 4, 1, SystemKind::EvenCoeffsPlusPfaffian),
    ] {
        let pair = SymmetricPair::new(family, n, m).unwrap();
        g.bench_function(pair.name(), |b| b.iter(|| good_gensystem_check(&pair, kind, 0).unwrap()));
    }
    g.finish();
}

fn weylf4(c: &mut Criterion) {
    let mut g = c.benchmark_group("f4");
    g.sample_size(10);
    g.bench_function("verify", |b| b.iter(|| f4_verify(0).unwrap()));
    g.finish();
}

criterion_group!(benches, exactpoly, invariants, weylf4);
criterion_main!(benches);
