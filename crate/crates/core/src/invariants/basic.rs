use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{Part, Poly, PolyMatrix};
use crate::liealg::{adjoint_derivation, Family, SymmetricPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SystemKind {
    /// Sums of principal `i`-minors, `i = 1..N` (GL).
    CharpolyCoeffs,
    /// Sums of principal `2i`-minors, with the Pfaffian replacing the
    /// last one when `N` is even (SO).
    EvenCoeffsPlusPfaffian,
    /// `tr M^{2i}` (SO, odd `N`) or `tr M^i` (GL).
    PowerTraces,
    /// The explicit `F4` system; built by the Weyl group module.
    F4Explicit,
}

impl SystemKind {
    pub fn default_for(family: Family) -> Result<SystemKind> {
        match family {
            Family::Gl => Ok(SystemKind::CharpolyCoeffs),
            Family::So => Ok(SystemKind::EvenCoeffsPlusPfaffian),
            Family::F4 => Ok(SystemKind::F4Explicit),
            Family::Sp => Err(Error::Conjectural("no proved generating system for Sp".into())),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SystemKind::CharpolyCoeffs => "CHARPOLY_COEFFS",
            SystemKind::EvenCoeffsPlusPfaffian => "EVEN_COEFFS_PLUS_PFAFFIAN",
            SystemKind::PowerTraces => "POWER_TRACES",
            SystemKind::F4Explicit => "F4_EXPLICIT",
        }
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_uppercase().replace('-', "_");
        match norm.as_str() {
            "CHARPOLY_COEFFS" | "CHARPOLY" => Ok(SystemKind::CharpolyCoeffs),
            "EVEN_COEFFS_PLUS_PFAFFIAN" | "EVEN_COEFFS" => Ok(SystemKind::EvenCoeffsPlusPfaffian),
            "POWER_TRACES" => Ok(SystemKind::PowerTraces),
            "F4_EXPLICIT" => Ok(SystemKind::F4Explicit),
            _ => Err(Error::Unsupported(format!("system kind `{s}`"))),
        }
    }
}

/// Basic invariants of `g` on the pair's coordinates, in degree order.
#[derive(Clone, Debug)]
pub struct GeneratingSystem {
    pair: Arc<SymmetricPair>,
    kind: SystemKind,
    generators: Vec<Poly>,
}

impl GeneratingSystem {
    pub fn pair(&self) -> &SymmetricPair {
        &self.pair
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().filter_map(Poly::total_degree).collect()
    }
}

/// Builds the requested system on the generic matrix of the model and
/// spot-checks `G`-invariance with one `g0` and one `g1` derivation.
pub fn basic_invariants(pair: &SymmetricPair, kind: SystemKind) -> Result<GeneratingSystem> {
    let x = pair.generic_matrix();
    let n = pair.model().order();
    let generators = match (pair.family(), kind) {
        (Family::Gl, SystemKind::CharpolyCoeffs) => x.principal_minor_sums()?,
        (Family::So, SystemKind::EvenCoeffsPlusPfaffian) => {
            let sums = x.principal_minor_sums()?;
            let l = n / 2;
            let mut gens: Vec<Poly> = (1..=l).map(|i| sums[2 * i - 1].clone()).collect();
            if n % 2 == 0 {
                gens[l - 1] = x.pfaffian()?;
            }
            gens
        }
        (Family::Gl, SystemKind::PowerTraces) => power_traces(&x, (1..=n as u32).collect())?,
        (Family::So, SystemKind::PowerTraces) => {
            if n % 2 == 0 {
                return Err(Error::Unsupported(
                    "power traces for so(N) are only defined here for odd N".into(),
                ));
            }
            power_traces(&x, (1..=(n / 2) as u32).map(|i| 2 * i).collect())?
        }
        (f, k) => return Err(Error::Unsupported(format!("{k} for family {f}"))),
    };
    let g = pair.algebra();
    let probes: Vec<usize> = [Part::Zero, Part::One]
        .iter()
        .filter_map(|p| pair.space().indices_of(*p).first().copied())
        .collect();
    for f in &generators {
        for &i in &probes {
            if !adjoint_derivation(g, i, f)?.is_zero() {
                return Err(Error::Unsupported(format!(
                    "generator of degree {:?} is not ad-invariant under {}",
                    f.total_degree(),
                    g.label(i)
                )));
            }
        }
    }
    Ok(GeneratingSystem {
        pair: Arc::new(pair.clone()),
        kind,
        generators,
    })
}

fn power_traces(x: &PolyMatrix, exponents: Vec<u32>) -> Result<Vec<Poly>> {
    let top = exponents.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    let mut pw = x.clone();
    for e in 1..=top {
        if e > 1 {
            pw = pw.checked_mul(x)?;
        }
        if exponents.contains(&e) {
            out.push(pw.trace()?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl11_trace_and_determinant() {
        let p = SymmetricPair::new(Family::Gl, 1, 1).unwrap();
        let sys = basic_invariants(&p, SystemKind::CharpolyCoeffs).unwrap();
        let s = p.space();
        assert_eq!(sys.generators()[0], Poly::parse(s, "x1_1 + x2_2").unwrap());
        assert_eq!(
            sys.generators()[1],
            Poly::parse(s, "x1_1*x2_2 - x1_2*x2_1").unwrap()
        );
    }

    #[test]
    fn so41_degrees() {
        let p = SymmetricPair::new(Family::So, 4, 1).unwrap();
        let sys = basic_invariants(&p, SystemKind::EvenCoeffsPlusPfaffian).unwrap();
        assert_eq!(sys.degrees(), vec![2, 4]);
        let pt = basic_invariants(&p, SystemKind::PowerTraces).unwrap();
        assert_eq!(pt.degrees(), vec![2, 4]);
        let x = p.generic_matrix();
        assert_eq!(pt.generators()[0], x.checked_mul(&x).unwrap().trace().unwrap());
    }

    #[test]
    fn so_even_uses_pfaffian() {
        let p = SymmetricPair::new(Family::So, 2, 2).unwrap();
        let sys = basic_invariants(&p, SystemKind::EvenCoeffsPlusPfaffian).unwrap();
        assert_eq!(sys.degrees(), vec![2, 2]);
        assert_eq!(sys.generators()[1], p.generic_matrix().pfaffian().unwrap());
    }

    #[test]
    fn unsupported_combinations() {
        let p = SymmetricPair::new(Family::So, 2, 1).unwrap();
        assert!(basic_invariants(&p, SystemKind::CharpolyCoeffs).is_err());
        assert!(basic_invariants(&p, SystemKind::F4Explicit).is_err());
        let q = SymmetricPair::new(Family::So, 2, 2).unwrap();
        assert!(basic_invariants(&q, SystemKind::PowerTraces).is_err());
        assert_eq!("even-coeffs".parse::<SystemKind>().unwrap(), SystemKind::EvenCoeffsPlusPfaffian);
    }
}
