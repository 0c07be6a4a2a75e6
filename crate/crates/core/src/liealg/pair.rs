use std::sync::Arc;

use super::algebra::LieAlgebra;
use super::classical::{Family, MatrixModel, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};
use crate::exactpoly::{Part, Poly, PolyMatrix, Space, VarSpace};

/// The subspace `c ⊕ s` as a parameterized block matrix `M̃`.
///
/// Variables of the slice space graded `ONE` span the Cartan subspace `c`
/// (`d_i` for SO, `b_i` for GL); the `ZERO` ones span the generic
/// stabilizer `s` (or its torus part `a_i` and the block `E`).
#[derive(Clone, Debug)]
pub struct Slice {
    space: Space,
    matrix: PolyMatrix,
    images: Vec<Poly>,
}

impl Slice {
    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    /// Image of each ambient coordinate, indexed like the pair's basis.
    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    /// Indices of the `c`-variables in the slice space.
    pub fn c_variables(&self) -> Vec<usize> {
        self.space.indices_of(Part::One)
    }
}

/// Z2-graded classical Lie algebra `g = g0 ⊕ g1` in its block matrix model.
///
/// The first `m` rows and columns form one diagonal block, the last `n` the
/// other; diagonal blocks span `g0` and off-diagonal ones `g1`.
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    family: Family,
    n: usize,
    m: usize,
    model: MatrixModel,
    algebra: LieAlgebra,
    slice: Slice,
}

impl SymmetricPair {
    pub fn new(family: Family, n: usize, m: usize) -> Result<Self> {
        SymmetricPair::with_cap(family, n, m, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(family: Family, n: usize, m: usize, cap: usize) -> Result<Self> {
        if !matches!(family, Family::Gl | Family::So) {
            return Err(Error::Unsupported(format!("symmetric pair for {family}")));
        }
        if n < m {
            return Err(Error::Unsupported(format!(
                "slice requires n >= m, got n={n}, m={m}"
            )));
        }
        let order = n + m;
        if family == Family::So && order < 2 {
            return Err(Error::Dimension("so(N) needs N >= 2".into()));
        }
        let model = MatrixModel::with_cap(family, order, cap)?;
        let block = |i: usize| i >= m;
        let space = VarSpace::new((0..model.dim()).map(|k| {
            let (r, c) = model.entry(k);
            let part = if block(r) == block(c) {
                Part::Zero
            } else {
                Part::One
            };
            (model.label(k), part)
        }))?;
        let algebra = model.algebra(space);
        let slice = match family {
            Family::So => so_slice(&model, n, m)?,
            _ => gl_slice(&model, n, m)?,
        };
        Ok(SymmetricPair {
            family,
            n,
            m,
            model,
            algebra,
            slice,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn model(&self) -> &MatrixModel {
        &self.model
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn space(&self) -> &Space {
        self.algebra.space()
    }

    pub fn slice(&self) -> &Slice {
        &self.slice
    }

    pub fn name(&self) -> String {
        format!("{}({},{})", self.family, self.n, self.m)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_g0(&self) -> usize {
        self.space().indices_of(Part::Zero).len()
    }

    pub fn dim_g1(&self) -> usize {
        self.space().indices_of(Part::One).len()
    }

    /// `rk(g, g0)`, the dimension of a Cartan subspace of `g1`.
    pub fn rank_k(&self) -> usize {
        self.n.min(self.m)
    }

    /// `rk g`.
    pub fn rank_l(&self) -> usize {
        match self.family {
            Family::Gl => self.n + self.m,
            _ => (self.n + self.m) / 2,
        }
    }

    /// `(dim s, rk s)` for the generic stabilizer `s ⊂ g0` of `g1`.
    pub fn generic_stabilizer(&self) -> (usize, usize) {
        let d = self.n - self.m;
        match self.family {
            Family::Gl => (d * d + self.m, self.n),
            _ => (d * d.saturating_sub(1) / 2, d / 2),
        }
    }

    /// The generic matrix of the model over the pair's coordinates.
    pub fn generic_matrix(&self) -> PolyMatrix {
        self.model.generic_matrix(self.space())
    }

    pub fn contract(&self) -> Contraction {
        Contraction {
            algebra: self.algebra.contract_by_parts(),
            pair: Arc::new(self.clone()),
        }
    }
}

fn so_slice(model: &MatrixModel, n: usize, m: usize) -> Result<Slice> {
    let k = n - m;
    let mut vars: Vec<(String, Part)> = (1..=m).map(|i| (format!("d{i}"), Part::One)).collect();
    for p in 1..=k {
        for q in p + 1..=k {
            vars.push((format!("e{p}_{q}"), Part::Zero));
        }
    }
    let space = VarSpace::new(vars)?;
    let order = model.order();
    let mut mt = PolyMatrix::zeros(&space, order, order);
    for i in 0..m {
        let d = Poly::var(&space, i);
        mt.set(m + i, i, -&d);
        mt.set(i, m + i, d);
    }
    let mut idx = m;
    for p in 0..k {
        for q in p + 1..k {
            let e = Poly::var(&space, idx);
            mt.set(2 * m + q, 2 * m + p, -&e);
            mt.set(2 * m + p, 2 * m + q, e);
            idx += 1;
        }
    }
    Ok(finish_slice(model, space, mt))
}

fn gl_slice(model: &MatrixModel, n: usize, m: usize) -> Result<Slice> {
    let k = n - m;
    let mut vars: Vec<(String, Part)> = (1..=m).map(|i| (format!("a{i}"), Part::Zero)).collect();
    vars.extend((1..=m).map(|i| (format!("b{i}"), Part::One)));
    for p in 1..=k {
        for q in 1..=k {
            vars.push((format!("e{p}_{q}"), Part::Zero));
        }
    }
    let space = VarSpace::new(vars)?;
    let order = model.order();
    let mut mt = PolyMatrix::zeros(&space, order, order);
    for i in 0..m {
        let a = Poly::var(&space, i);
        let b = Poly::var(&space, m + i);
        mt.set(i, i, a.clone());
        mt.set(m + i, m + i, a);
        mt.set(m + i, i, -&b);
        mt.set(i, m + i, b);
    }
    let mut idx = 2 * m;
    for p in 0..k {
        for q in 0..k {
            mt.set(2 * m + p, 2 * m + q, Poly::var(&space, idx));
            idx += 1;
        }
    }
    Ok(finish_slice(model, space, mt))
}

fn finish_slice(model: &MatrixModel, space: Space, matrix: PolyMatrix) -> Slice {
    let images = (0..model.dim())
        .map(|k| {
            let (r, c) = model.entry(k);
            matrix.get(r, c).clone()
        })
        .collect();
    Slice {
        space,
        matrix,
        images,
    }
}

/// The semidirect product `k = g0 ⋉ g1`: same constants as `g` except
/// `[g1, g1] = 0`. Its coordinate space is the graded dual of `k`.
#[derive(Clone, Debug)]
pub struct Contraction {
    pair: Arc<SymmetricPair>,
    algebra: LieAlgebra,
}

impl Contraction {
    pub fn pair(&self) -> &SymmetricPair {
        &self.pair
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn space(&self) -> &Space {
        self.algebra.space()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}
