use serde::Serialize;

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactpoly::{Poly, Scalar};

/// Which representation a polynomial lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Representation {
    /// `k[L*]`, coordinates `y_k` dual to the basis.
    Coadjoint,
    /// `k[L]`, coordinates `z_k` of the basis expansion.
    Adjoint,
}

fn check(l: &LieAlgebra, i: usize, p: &Poly) -> Result<()> {
    if !crate::exactpoly::same_space(l.space(), p.space()) {
        return Err(Error::VarSpaceMismatch);
    }
    if i >= l.dim() {
        return Err(Error::BasisIndex(i));
    }
    Ok(())
}

/// `D_i(p) = sum_{j,k} c_ij^k y_k dp/dy_j`.
pub fn coadjoint_derivation(l: &LieAlgebra, i: usize, p: &Poly) -> Result<Poly> {
    check(l, i, p)?;
    let mut out = Poly::zero(p.space());
    for (mono, coef) in p.terms() {
        for (j, e) in mono.support() {
            let br = l.bracket(i, j);
            if br.is_empty() {
                continue;
            }
            let base = coef * &Scalar::from(e as i64);
            for (k, c) in br {
                out.add_term(mono.shift(j, *k), &base * c);
            }
        }
    }
    Ok(out)
}

/// `D_i(p) = sum_{j,k} c_ij^k z_j dp/dz_k`.
pub fn adjoint_derivation(l: &LieAlgebra, i: usize, p: &Poly) -> Result<Poly> {
    check(l, i, p)?;
    let mut by_target: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); l.dim()];
    for j in 0..l.dim() {
        for (k, c) in l.bracket(i, j) {
            by_target[*k].push((j, c));
        }
    }
    let mut out = Poly::zero(p.space());
    for (mono, coef) in p.terms() {
        for (k, e) in mono.support() {
            if by_target[k].is_empty() {
                continue;
            }
            let base = coef * &Scalar::from(e as i64);
            for (j, c) in &by_target[k] {
                out.add_term(mono.shift(k, *j), &base * *c);
            }
        }
    }
    Ok(out)
}

pub fn derivation(l: &LieAlgebra, rep: Representation, i: usize, p: &Poly) -> Result<Poly> {
    match rep {
        Representation::Coadjoint => coadjoint_derivation(l, i, p),
        Representation::Adjoint => adjoint_derivation(l, i, p),
    }
}

/// First basis index whose derivation does not annihilate `p`.
pub fn first_non_annihilating(l: &LieAlgebra, p: &Poly, rep: Representation) -> Result<Option<usize>> {
    for i in 0..l.dim() {
        if !derivation(l, rep, i, p)?.is_zero() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// `p` is invariant iff every basis derivation kills it.
pub fn is_invariant(l: &LieAlgebra, p: &Poly, rep: Representation) -> Result<bool> {
    Ok(first_non_annihilating(l, p, rep)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::VarSpace;
    use crate::liealg::{build_classical, Family};

    #[test]
    fn heisenberg_coadjoint() {
        let h = LieAlgebra::heisenberg();
        let s = h.space();
        let (yb, yh) = (Poly::var(s, 1), Poly::var(s, 2));
        assert!(coadjoint_derivation(&h, 0, &yh).unwrap().is_zero());
        let d = coadjoint_derivation(&h, 0, &yb).unwrap();
        assert!(d == yh || d == -&yh);
        assert!(is_invariant(&h, &yh, Representation::Coadjoint).unwrap());
        assert!(!is_invariant(&h, &yb, Representation::Coadjoint).unwrap());
    }

    #[test]
    fn abelian_kills_everything() {
        let l = LieAlgebra::abelian(VarSpace::ungraded(["u", "v"]).unwrap());
        let p = Poly::parse(l.space(), "u^3*v + 2*v^2").unwrap();
        for i in 0..2 {
            assert!(adjoint_derivation(&l, i, &p).unwrap().is_zero());
            assert!(coadjoint_derivation(&l, i, &p).unwrap().is_zero());
        }
    }

    #[test]
    fn gl2_trace_is_invariant() {
        let l = build_classical(Family::Gl, 2).unwrap();
        let tr = Poly::parse(l.space(), "x1_1 + x2_2").unwrap();
        assert!(is_invariant(&l, &tr, Representation::Adjoint).unwrap());
        assert!(is_invariant(&l, &tr, Representation::Coadjoint).unwrap());
        let x12 = Poly::parse(l.space(), "x1_2").unwrap();
        assert!(!is_invariant(&l, &x12, Representation::Adjoint).unwrap());
    }

    #[test]
    fn mismatched_space_rejected() {
        let l = LieAlgebra::heisenberg();
        let other = VarSpace::ungraded(["p"]).unwrap();
        assert!(matches!(
            coadjoint_derivation(&l, 0, &Poly::var(&other, 0)),
            Err(Error::VarSpaceMismatch)
        ));
    }
}
