use rustc_hash::FxHashMap;

use super::poly::{Poly, Ring};
use super::scalar::Scalar;
use super::varspace::{same_space, Space};
use crate::error::{Error, Result};

/// Dense rectangular matrix of polynomials over one variable space.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    space: Space,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(space: &Space, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            space: space.clone(),
            entries: vec![Poly::zero(space); rows * cols],
        }
    }

    pub fn identity(space: &Space, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(space, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(space));
        }
        m
    }

    pub fn from_fn(space: &Space, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Poly) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                if !same_space(p.space(), space) {
                    return Err(Error::VarSpaceMismatch);
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix {
            rows,
            cols,
            space: space.clone(),
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        assert!(same_space(p.space(), &self.space), "variable space mismatch");
        self.entries[i * self.cols + j] = p;
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// First offending position, if the matrix is not skew-symmetric.
    pub fn skew_defect(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in i..self.cols {
                let s = self.get(i, j) + self.get(j, i);
                if !s.is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(&self.space, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.entries[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if !same_space(&self.space, &other.space) {
            return Err(Error::VarSpaceMismatch);
        }
        let mut out = PolyMatrix::zeros(&self.space, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.space);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &mul_sparse(a, b);
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Poly> {
        let n = self.require_square()?;
        let mut acc = Poly::zero(&self.space);
        for i in 0..n {
            acc = &acc + self.get(i, i);
        }
        Ok(acc)
    }

    pub fn add_scaled_identity(&mut self, c: &Scalar) {
        for i in 0..self.rows.min(self.cols) {
            let e = self.get(i, i) + &Poly::constant(&self.space, c.clone());
            self.entries[i * self.cols + i] = e;
        }
    }

    /// Pfaffian by first-row expansion, memoized on index subsets.
    /// Sign convention: `Pf([[0, a], [-a, 0]]) = a`.
    pub fn pfaffian(&self) -> Result<Poly> {
        let n = self.require_square()?;
        if n % 2 == 1 {
            return Err(Error::OddOrder(n));
        }
        if let Some((i, j)) = self.skew_defect() {
            return Err(Error::NotSkew(i, j));
        }
        Ok(pfaffian_with(n, &Poly::one(&self.space), |i, j| self.get(i, j).clone()))
    }

    /// Coefficients `[f_1, ..., f_N]` where `f_i` is the sum of all principal
    /// `i x i` minors, via the Faddeev-LeVerrier recursion.
    pub fn principal_minor_sums(&self) -> Result<Vec<Poly>> {
        let n = self.require_square()?;
        let space = &self.space;
        let mut out = Vec::with_capacity(n);
        // B_0 = I; A_k = M B_{k-1}; c_k = -tr(A_k)/k; B_k = A_k + c_k I.
        // det(tI - M) = sum c_k t^{N-k}, so f_k = (-1)^k c_k.
        let mut b = PolyMatrix::identity(space, n);
        for k in 1..=n {
            let a = if k == n {
                // Only the trace is needed on the last step.
                let mut diag = PolyMatrix::zeros(space, n, n);
                for i in 0..n {
                    let mut acc = Poly::zero(space);
                    for t in 0..n {
                        let (x, y) = (self.get(i, t), b.get(t, i));
                        if !x.is_zero() && !y.is_zero() {
                            acc = &acc + &mul_sparse(x, y);
                        }
                    }
                    diag.set(i, i, acc);
                }
                diag
            } else {
                self.checked_mul(&b)?
            };
            let tr = a.trace()?;
            let c = tr.scale(&Scalar::ratio(-1, k as i64));
            let f = if k % 2 == 0 { c.clone() } else { -&c };
            out.push(f);
            if k < n {
                let mut next = a;
                for i in 0..n {
                    let e = next.get(i, i) + &c;
                    next.entries[i * n + i] = e;
                }
                b = next;
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free elimination with exact polynomial division.
    pub fn determinant(&self) -> Result<Poly> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Poly::one(&self.space));
        }
        let mut a: Vec<Vec<Poly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = Poly::one(&self.space);
        let mut negate = false;
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Poly::zero(&self.space));
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = v.div_exact(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -&d } else { d })
    }

    pub fn eval(&self, point: &[Scalar]) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).eval(point)).collect())
            .collect()
    }

    pub fn map_entries(&self, target: &Space, f: impl Fn(&Poly) -> Result<Poly>) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        if entries.iter().any(|p| !same_space(p.space(), target)) {
            return Err(Error::VarSpaceMismatch);
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            space: target.clone(),
            entries,
        })
    }
}

/// Product that takes the cheap path when one factor is a single term.
fn mul_sparse(a: &Poly, b: &Poly) -> Poly {
    if a.num_terms() == 1 {
        let (m, c) = a.terms().next().unwrap();
        b.mul_term(m, c)
    } else if b.num_terms() == 1 {
        let (m, c) = b.terms().next().unwrap();
        a.mul_term(m, c)
    } else {
        a * b
    }
}

/// Pfaffian of the `n x n` skew matrix with upper entries `entry(i, j)`, `i < j`,
/// over any ring; `one` fixes the ring element used for the empty Pfaffian.
pub fn pfaffian_with<R: Ring>(n: usize, one: &R, entry: impl Fn(usize, usize) -> R) -> R {
    assert!(n <= 64, "pfaffian order above 64");
    if n % 2 == 1 {
        return one.zero_like();
    }
    let cache: Vec<Vec<R>> = (0..n)
        .map(|i| (0..n).map(|j| if i < j { entry(i, j) } else { one.zero_like() }).collect())
        .collect();
    let mut memo: FxHashMap<u64, R> = FxHashMap::default();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    pf_rec(full, &cache, one, &mut memo)
}

fn pf_rec<R: Ring>(mask: u64, a: &[Vec<R>], one: &R, memo: &mut FxHashMap<u64, R>) -> R {
    if mask == 0 {
        return one.clone();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let i0 = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << i0);
    let mut acc = one.zero_like();
    let mut positive = true;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let aij = &a[i0][j];
        if !aij.is_zero_elem() {
            let sub = pf_rec(rest & !(1u64 << j), a, one, memo);
            if !sub.is_zero_elem() {
                let t = aij.mul_ref(&sub);
                acc = if positive { acc.add_ref(&t) } else { acc.sub_ref(&t) };
            }
        }
        positive = !positive;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Pfaffian of the principal submatrix of a rational skew matrix on `idx`.
pub fn scalar_pfaffian(m: &[Vec<Scalar>], idx: &[usize]) -> Scalar {
    pfaffian_with(idx.len(), &Scalar::one(), |i, j| m[idx[i]][idx[j]].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::VarSpace;

    fn skew4() -> (Space, PolyMatrix) {
        let names = ["p12", "p13", "p14", "p23", "p24", "p34"];
        let s = VarSpace::ungraded(names).unwrap();
        let mut m = PolyMatrix::zeros(&s, 4, 4);
        let mut k = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                m.set(i, j, Poly::var(&s, k));
                m.set(j, i, -&Poly::var(&s, k));
                k += 1;
            }
        }
        (s, m)
    }

    #[test]
    fn pfaffian_2x2_and_zero() {
        let s = VarSpace::ungraded(["a"]).unwrap();
        let a = Poly::var(&s, 0);
        let m = PolyMatrix::from_fn(&s, 2, 2, |i, j| match (i, j) {
            (0, 1) => a.clone(),
            (1, 0) => -&a,
            _ => Poly::zero(&s),
        })
        .unwrap();
        assert_eq!(m.pfaffian().unwrap(), a);
        assert!(PolyMatrix::zeros(&s, 4, 4).pfaffian().unwrap().is_zero());
    }

    #[test]
    fn pfaffian_generic_4x4() {
        let (s, m) = skew4();
        let pf = m.pfaffian().unwrap();
        assert_eq!(pf, Poly::parse(&s, "p12*p34 - p13*p24 + p14*p23").unwrap());
        assert_eq!(&pf * &pf, m.determinant().unwrap());
    }

    #[test]
    fn pfaffian_errors() {
        let (s, mut m) = skew4();
        assert_eq!(PolyMatrix::zeros(&s, 3, 3).pfaffian(), Err(Error::OddOrder(3)));
        m.set(0, 1, Poly::one(&s));
        assert_eq!(m.pfaffian(), Err(Error::NotSkew(0, 1)));
        assert!(matches!(
            PolyMatrix::zeros(&s, 2, 4).pfaffian(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn minor_sums_small_cases() {
        let s = VarSpace::ungraded(["a", "b", "c", "d"]).unwrap();
        let m = PolyMatrix::from_fn(&s, 2, 2, |i, j| Poly::var(&s, 2 * i + j)).unwrap();
        let f = m.principal_minor_sums().unwrap();
        assert_eq!(f[0], m.trace().unwrap());
        assert_eq!(f[1], Poly::parse(&s, "a*d - b*c").unwrap());
        assert!(PolyMatrix::zeros(&s, 2, 3).principal_minor_sums().is_err());
    }

    #[test]
    fn skew_minor_sum_f2() {
        let (s, m) = skew4();
        let f = m.principal_minor_sums().unwrap();
        // principal 2-minors of a skew matrix are p_ij^2
        let expected = Poly::parse(&s, "p12^2 + p13^2 + p14^2 + p23^2 + p24^2 + p34^2").unwrap();
        assert_eq!(f[1], expected);
        assert!(f[0].is_zero() && f[2].is_zero());
    }
}
