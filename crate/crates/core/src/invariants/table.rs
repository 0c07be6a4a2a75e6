use crate::error::{Error, Result};
use crate::exactpoly::BiDegree;
use crate::liealg::Family;

fn bd(a: usize, b: usize) -> BiDegree {
    BiDegree::new(a as u32, b as u32)
}

fn sorted(mut v: Vec<BiDegree>) -> Vec<BiDegree> {
    v.sort();
    v
}

/// Expansion of the proved table row for `(family, n, m)`, sorted.
///
/// GL row: `(0,2),…,(0,2m)`, `(1,0),(1,2),…,(1,2m)`, `(2,2m),…,(n-m,2m)`;
/// the entry `(1,2m)` only exists for `n > m`. SO rows: `(0,2),…,(0,2m)`
/// and `(2,2m),(4,2m),…,(n-m-1,2m)` for `n > m+2`, `n+m` odd, and the
/// maximal-rank row `(0,2),…,(0,2m)` for `n = m+1`. F4 ignores `n, m`.
pub fn table_expected(family: Family, n: usize, m: usize) -> Result<Vec<BiDegree>> {
    let (n, m) = (n.max(m), n.min(m));
    match family {
        Family::Gl => {
            let mut v: Vec<BiDegree> = (1..=m).map(|i| bd(0, 2 * i)).collect();
            let top = if n > m { m } else { m.saturating_sub(1) };
            v.extend((0..=top).map(|i| bd(1, 2 * i)));
            v.extend((2..=n - m).map(|a| bd(a, 2 * m)));
            Ok(sorted(v))
        }
        Family::So => {
            if n == m + 1 {
                return Ok((1..=m).map(|i| bd(0, 2 * i)).collect());
            }
            if n > m + 2 && (n + m) % 2 == 1 {
                let mut v: Vec<BiDegree> = (1..=m).map(|i| bd(0, 2 * i)).collect();
                v.extend((2..n - m).step_by(2).map(|a| bd(a, 2 * m)));
                return Ok(sorted(v));
            }
            Err(Error::NotTabulated(format!("SO({n},{m}) has no proved table row")))
        }
        Family::F4 => Ok(vec![bd(0, 2), bd(2, 4), bd(4, 4), bd(6, 6)]),
        Family::Sp => Err(Error::Conjectural(format!(
            "the Sp({n},{m}) row of the table is conjectural"
        ))),
    }
}

/// Bi-degrees predicted by the case analysis of the good generating systems,
/// valid for every `n >= m`, sorted.
///
/// SO: `(0,2i)` for `i <= m`, `(2i-2m, 2m)` for `i > m`, and the Pfaffian
/// `((n-m)/2, m)` in place of the last one when `n+m` is even. GL: `(0,i)`
/// for even `i <= 2m`, `(1,i-1)` for odd `i < 2m`, `(i-2m, 2m)` for `i > 2m`.
pub fn theorem_bidegrees(family: Family, n: usize, m: usize) -> Result<Vec<BiDegree>> {
    let (n, m) = (n.max(m), n.min(m));
    let v = match family {
        Family::Gl => (1..=n + m)
            .map(|i| {
                if i > 2 * m {
                    bd(i - 2 * m, 2 * m)
                } else if i % 2 == 0 {
                    bd(0, i)
                } else {
                    bd(1, i - 1)
                }
            })
            .collect(),
        Family::So => {
            let l = (n + m) / 2;
            let last = if (n + m) % 2 == 0 { l - 1 } else { l };
            let mut v: Vec<BiDegree> = (1..=last)
                .map(|i| if i <= m { bd(0, 2 * i) } else { bd(2 * i - 2 * m, 2 * m) })
                .collect();
            if (n + m) % 2 == 0 {
                v.push(bd((n - m) / 2, m));
            }
            v
        }
        _ => return table_expected(family, n, m),
    };
    Ok(sorted(v))
}
