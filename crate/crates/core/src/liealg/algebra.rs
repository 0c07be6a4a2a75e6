use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactpoly::{linalg::QMatrix, Part, Poly, PolyMatrix, Scalar, Space, VarSpace};

/// Sparse vector of basis coefficients `(index, value)`, sorted by index.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Finite-dimensional Lie algebra given by structure constants
/// `[x_i, x_j] = sum_k c_ij^k x_k`.
///
/// The basis labels double as the coordinate names of the dual space, so a
/// polynomial on `L*` lives in [`LieAlgebra::space`]. The same space carries
/// the `g0`/`g1` grading when the algebra comes from a symmetric pair.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    space: Space,
    brackets: Vec<Vec<SparseVec>>,
}

impl LieAlgebra {
    pub fn abelian(space: Space) -> Self {
        let n = space.len();
        LieAlgebra {
            space,
            brackets: vec![vec![Vec::new(); n]; n],
        }
    }

    pub fn from_brackets(space: Space, f: impl Fn(usize, usize) -> SparseVec) -> Self {
        let mut l = LieAlgebra::abelian(space);
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                l.set_bracket(i, j, f(i, j));
            }
        }
        l
    }

    /// Three-dimensional Heisenberg algebra `[a, b] = h`.
    pub fn heisenberg() -> Self {
        let space = VarSpace::ungraded(["a", "b", "h"]).expect("valid labels");
        let mut l = LieAlgebra::abelian(space);
        l.set_bracket(0, 1, vec![(2, Scalar::one())]);
        l.set_bracket(1, 0, vec![(2, Scalar::from(-1))]);
        l
    }

    /// Parses the `i j k num/den` export format.
    pub fn from_export(space: Space, text: &str) -> Result<Self> {
        let mut l = LieAlgebra::abelian(space);
        let n = l.dim();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: `{line}`", lineno + 1));
            if f.len() != 4 {
                return Err(bad());
            }
            let idx = |s: &str| -> Result<usize> {
                let v: usize = s.parse().map_err(|_| bad())?;
                if v >= n {
                    return Err(Error::BasisIndex(v));
                }
                Ok(v)
            };
            let (i, j, k) = (idx(f[0])?, idx(f[1])?, idx(f[2])?);
            let c: Scalar = f[3].parse()?;
            let mut v = l.brackets[i][j].clone();
            v.push((k, c));
            l.set_bracket(i, j, v);
        }
        Ok(l)
    }

    pub fn dim(&self) -> usize {
        self.space.len()
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn label(&self, i: usize) -> &str {
        self.space.name(i)
    }

    pub fn part(&self, i: usize) -> Part {
        self.space.part(i)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.brackets[i][j]
    }

    /// Overwrites `[x_i, x_j]` without touching `[x_j, x_i]`; entries are
    /// merged and zeros dropped.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: SparseVec) {
        self.brackets[i][j] = normalize(v);
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.brackets[i][j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// All nonzero constants as `(i, j, k, c)` in lexicographic index order.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.brackets.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(j, v)| v.iter().map(move |(k, c)| (i, j, *k, c)))
        })
    }

    /// One line `i j k num/den` per nonzero constant, 0-based indices.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for (i, j, k, c) in self.constants() {
            let _ = writeln!(out, "{i} {j} {k} {}", c.to_ratio_string());
        }
        out
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vectors(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let f = ui * vj;
                for (k, c) in &self.brackets[i][j] {
                    out[*k] += &(&f * c);
                }
            }
        }
        out
    }

    fn bracket_sparse(&self, i: usize, v: &[(usize, Scalar)]) -> SparseVec {
        let mut out = Vec::new();
        for (j, a) in v {
            for (k, c) in &self.brackets[i][*j] {
                out.push((*k, a * c));
            }
        }
        normalize(out)
    }

    /// Antisymmetry and the Jacobi identity on every basis triple.
    pub fn check_jacobi(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            if !self.brackets[i][i].is_empty() {
                return false;
            }
            for j in i + 1..n {
                let neg: SparseVec = self.brackets[j][i].iter().map(|(k, c)| (*k, -c)).collect();
                if self.brackets[i][j] != neg {
                    return false;
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc = self.bracket_sparse(i, &self.brackets[j][k]);
                    acc.extend(self.bracket_sparse(j, &self.brackets[k][i]));
                    acc.extend(self.bracket_sparse(k, &self.brackets[i][j]));
                    if !normalize(acc).is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `Π = ([x_i, x_j])` with linear-form entries on `L*`.
    pub fn poisson_matrix(&self) -> PolyMatrix {
        let s = &self.space;
        let mut m = PolyMatrix::zeros(s, self.dim(), self.dim());
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let mut p = Poly::zero(s);
                for (k, c) in &self.brackets[i][j] {
                    p.add_term(crate::exactpoly::Monomial::var(s.len(), *k), c.clone());
                }
                m.set(i, j, p);
            }
        }
        m
    }

    /// `Π` evaluated at a point of `L*` without building polynomials.
    pub fn poisson_at(&self, point: &[Scalar]) -> QMatrix {
        let n = self.dim();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                for (k, c) in &self.brackets[i][j] {
                    if !point[*k].is_zero() {
                        *e += &(c * &point[*k]);
                    }
                }
            }
        }
        m
    }

    /// Same constants with every `[g1, g1]` bracket set to zero.
    pub fn contract_by_parts(&self) -> LieAlgebra {
        let mut l = self.clone();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if self.part(i) == Part::One && self.part(j) == Part::One {
                    l.brackets[i][j].clear();
                }
            }
        }
        l
    }

    /// True iff `[g_p, g_q] ⊆ g_{p+q mod 2}` for the grading of the space.
    pub fn respects_grading(&self) -> bool {
        self.constants().all(|(i, j, k, _)| {
            let want = if self.part(i) == self.part(j) {
                Part::Zero
            } else {
                Part::One
            };
            self.part(k) == want
        })
    }
}

fn normalize(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(k, _)| *k);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (k, c) in v {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => *lc += &c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}
