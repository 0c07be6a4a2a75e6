use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactpoly::{linalg::QMatrix, Part, Poly, PolyMatrix, Scalar, Space, VarSpace};

/// Default cap on the matrix order of classical models.
pub const DEFAULT_ORDER_CAP: usize = 10;

/// Family tag shared by models, symmetric pairs and table rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Gl,
    So,
    /// Only known to the table oracle, which reports its row as conjectural.
    Sp,
    /// Only known to the table oracle and the Weyl group module.
    F4,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gl => "GL",
            Family::So => "SO",
            Family::Sp => "SP",
            Family::F4 => "F4",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Family::Gl),
            "so" => Ok(Family::So),
            "sp" => Ok(Family::Sp),
            "f4" => Ok(Family::F4),
            _ => Err(Error::Unsupported(format!("family `{s}`"))),
        }
    }
}

/// Standard basis of `gl(N)` (elementary matrices) or `so(N)`
/// (`E_ab - E_ba`, `a < b`), with coordinates read off matrix entries.
#[derive(Clone, Debug)]
pub struct MatrixModel {
    family: Family,
    order: usize,
    entries: Vec<(usize, usize)>,
    lookup: Vec<Vec<Option<(usize, bool)>>>,
}

impl MatrixModel {
    pub fn new(family: Family, order: usize) -> Result<Self> {
        MatrixModel::with_cap(family, order, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(family: Family, order: usize, cap: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Dimension("matrix order must be positive".into()));
        }
        if order > cap {
            return Err(Error::CapExceeded {
                what: "matrix order",
                value: order,
                cap,
            });
        }
        let mut entries = Vec::new();
        let mut lookup = vec![vec![None; order]; order];
        match family {
            Family::Gl => {
                for r in 0..order {
                    for c in 0..order {
                        lookup[r][c] = Some((entries.len(), false));
                        entries.push((r, c));
                    }
                }
            }
            Family::So => {
                for a in 0..order {
                    for b in a + 1..order {
                        lookup[a][b] = Some((entries.len(), false));
                        lookup[b][a] = Some((entries.len(), true));
                        entries.push((a, b));
                    }
                }
            }
            _ => return Err(Error::Unsupported(format!("no matrix model for {family}"))),
        }
        Ok(MatrixModel {
            family,
            order,
            entries,
            lookup,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Matrix position `(row, col)` carrying the coordinate of basis element `i`.
    pub fn entry(&self, i: usize) -> (usize, usize) {
        self.entries[i]
    }

    /// Basis index and sign of the coordinate sitting at `(r, c)`.
    pub fn at(&self, r: usize, c: usize) -> Option<(usize, bool)> {
        self.lookup[r][c]
    }

    pub fn label(&self, i: usize) -> String {
        let (r, c) = self.entries[i];
        format!("x{}_{}", r + 1, c + 1)
    }

    pub fn basis_matrix(&self, i: usize) -> QMatrix {
        let mut m = vec![vec![Scalar::zero(); self.order]; self.order];
        let (r, c) = self.entries[i];
        m[r][c] = Scalar::one();
        if self.family == Family::So {
            m[c][r] = Scalar::from(-1);
        }
        m
    }

    pub fn matrix_of(&self, v: &[Scalar]) -> QMatrix {
        let mut m = vec![vec![Scalar::zero(); self.order]; self.order];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                if let Some((k, neg)) = self.lookup[r][c] {
                    *e = if neg { -&v[k] } else { v[k].clone() };
                }
            }
        }
        m
    }

    /// Coordinates of a matrix assumed to lie in the model.
    pub fn coords(&self, m: &QMatrix) -> Vec<Scalar> {
        self.entries.iter().map(|&(r, c)| m[r][c].clone()).collect()
    }

    /// `X` with entries given by the coordinate variables of `space`.
    pub fn generic_matrix(&self, space: &Space) -> PolyMatrix {
        assert_eq!(space.len(), self.dim(), "space does not match the model");
        let mut x = PolyMatrix::zeros(space, self.order, self.order);
        for r in 0..self.order {
            for c in 0..self.order {
                if let Some((k, neg)) = self.lookup[r][c] {
                    let v = Poly::var(space, k);
                    x.set(r, c, if neg { -&v } else { v });
                }
            }
        }
        x
    }

    /// Structure constants from matrix commutators, over the given space of labels.
    pub fn algebra(&self, space: Space) -> LieAlgebra {
        let n = self.dim();
        let mats: Vec<QMatrix> = (0..n).map(|i| self.basis_matrix(i)).collect();
        LieAlgebra::from_brackets(space, |i, j| {
            if i == j {
                return Vec::new();
            }
            let comm = commutator(&mats[i], &mats[j]);
            self.coords(&comm)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect()
        })
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }
}

pub(crate) fn commutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let ab = crate::exactpoly::linalg::mat_mul(a, b);
    let ba = crate::exactpoly::linalg::mat_mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

/// `gl(N)` or `so(N)` on its standard basis, ungraded.
pub fn build_classical(family: Family, order: usize) -> Result<LieAlgebra> {
    build_classical_with_cap(family, order, DEFAULT_ORDER_CAP)
}

pub fn build_classical_with_cap(family: Family, order: usize, cap: usize) -> Result<LieAlgebra> {
    let model = MatrixModel::with_cap(family, order, cap)?;
    let space = VarSpace::new(model.labels().into_iter().map(|l| (l, Part::Zero)))?;
    Ok(model.algebra(space))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl1_is_abelian() {
        let l = build_classical(Family::Gl, 1).unwrap();
        assert_eq!(l.dim(), 1);
        assert_eq!(l.constants().count(), 0);
    }

    #[test]
    fn gl2_elementary_commutator() {
        let l = build_classical(Family::Gl, 2).unwrap();
        let s = l.space();
        let e11 = s.index_of("x1_1").unwrap();
        let e12 = s.index_of("x1_2").unwrap();
        assert_eq!(l.bracket(e11, e12), &[(e12, Scalar::one())]);
        assert!(l.check_jacobi());
    }

    #[test]
    fn so3_cyclic_pattern() {
        let l = build_classical(Family::So, 3).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(l.check_jacobi());
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let b = l.bracket(i, j);
            assert_eq!(b.len(), 1);
            assert_ne!(b[0].0, i);
            assert_ne!(b[0].0, j);
            assert_eq!(b[0].1.abs(), Scalar::one());
        }
    }

    #[test]
    fn corrupted_so3_fails_jacobi() {
        let mut l = build_classical(Family::So, 3).unwrap();
        let (k, c) = l.bracket(0, 1)[0].clone();
        l.set_bracket(0, 1, vec![(k, -c)]);
        assert!(!l.check_jacobi());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            build_classical(Family::Gl, 11),
            Err(Error::CapExceeded { .. })
        ));
        assert!(build_classical_with_cap(Family::Gl, 11, 11).is_ok());
        assert!(build_classical(Family::Sp, 4).is_err());
    }

    #[test]
    fn classical_jacobi() {
        for n in 1..=4 {
            assert!(build_classical(Family::Gl, n).unwrap().check_jacobi());
        }
        for n in 2..=6 {
            assert!(build_classical(Family::So, n).unwrap().check_jacobi());
        }
    }
}
