use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use serde::Serialize;

use super::scalar::Scalar;
use super::varspace::{same_space, Part, Space};
use crate::error::{Error, Result};

/// Exponent vector over a [`VarSpace`](super::VarSpace); variable `i` has exponent `self.0[i]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exponents(e: Vec<u16>) -> Self {
        Monomial(e.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    /// Nonzero exponents only.
    pub fn support(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / x_j * x_k`; requires `x_j | self`.
    pub(crate) fn shift(&self, j: usize, k: usize) -> Monomial {
        let mut e = self.0.clone();
        e[j] -= 1;
        e[k] += 1;
        Monomial(e)
    }

    pub(crate) fn lower(&self, j: usize) -> Monomial {
        let mut e = self.0.clone();
        e[j] -= 1;
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub(crate) fn div_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn bidegree(&self, parts: &[Part]) -> BiDegree {
        let mut bd = BiDegree::default();
        for (i, e) in self.support() {
            match parts[i] {
                Part::Zero => bd.a += e as u32,
                Part::One => bd.b += e as u32,
            }
        }
        bd
    }

    /// Graded lexicographic order; `Greater` means printed first.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0)
    }
}

/// Bi-degree `(a, b)`: `a` counts `g0` variables, `b` counts `g1` variables.
///
/// The derived `Ord` is lexicographic and only used for sorting; use
/// [`BiDegree::le_componentwise`] for the partial order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BiDegree {
    pub a: u32,
    pub b: u32,
}

impl BiDegree {
    pub const fn new(a: u32, b: u32) -> Self {
        BiDegree { a, b }
    }

    pub fn total(&self) -> u32 {
        self.a + self.b
    }

    pub fn le_componentwise(&self, other: &BiDegree) -> bool {
        self.a <= other.a && self.b <= other.b
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl std::iter::Sum for BiDegree {
    fn sum<I: Iterator<Item = BiDegree>>(iter: I) -> Self {
        iter.fold(BiDegree::default(), |x, y| x + y)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone)]
pub struct Poly {
    space: Space,
    terms: FxHashMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(space: &Space) -> Self {
        Poly {
            space: space.clone(),
            terms: FxHashMap::default(),
        }
    }

    pub fn constant(space: &Space, c: Scalar) -> Self {
        let mut p = Poly::zero(space);
        p.add_term(Monomial::one(space.len()), c);
        p
    }

    pub fn one(space: &Space) -> Self {
        Poly::constant(space, Scalar::one())
    }

    pub fn var(space: &Space, i: usize) -> Self {
        let mut p = Poly::zero(space);
        p.add_term(Monomial::var(space.len(), i), Scalar::one());
        p
    }

    pub fn var_named(space: &Space, name: &str) -> Result<Self> {
        Ok(Poly::var(space, space.index_of(name)?))
    }

    pub fn from_terms(space: &Space, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Poly::zero(space);
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), space.len());
            p.add_term(m, c);
        }
        p
    }

    /// Parses the canonical text form, e.g. `3/2*x0^2*y1 - y1^3`.
    pub fn parse(space: &Space, text: &str) -> Result<Self> {
        parse::parse_poly(space, text)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in descending graded-lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Indices of variables that actually occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.space.len()];
        for m in self.terms.keys() {
            for (i, _) in m.support() {
                used[i] = true;
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }

    fn check_space(&self, other: &Poly) -> Result<()> {
        if same_space(&self.space, &other.space) {
            Ok(())
        } else {
            Err(Error::VarSpaceMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_space(other)?;
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        Ok(big)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_space(other)?;
        let mut terms: FxHashMap<Monomial, Scalar> = FxHashMap::default();
        terms.reserve(self.terms.len().saturating_mul(other.terms.len()).min(1 << 20));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                *terms.entry(m1.mul(m2)).or_default() += &c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Poly {
            space: self.space.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.space);
        }
        Poly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.space);
        }
        Poly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    /// Square-and-multiply power.
    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.space);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Poly {
        let mut out = Poly::zero(&self.space);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                out.terms.insert(m.lower(var), c * &Scalar::from(e as i64));
            }
        }
        out
    }

    pub fn partial_named(&self, var: &str) -> Result<Poly> {
        Ok(self.partial(self.space.index_of(var)?))
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let table = PowerTable::new(point, self.max_exponents());
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            acc += &(c * &table.monomial(m));
        }
        acc
    }

    /// Gradient `(dp/dx_j)(point)` for every variable.
    pub fn gradient_at(&self, point: &[Scalar]) -> Vec<Scalar> {
        let table = PowerTable::new(point, self.max_exponents());
        let mut grad = vec![Scalar::zero(); self.space.len()];
        for (m, c) in &self.terms {
            for (j, e) in m.support() {
                let mut v = c * &Scalar::from(e as i64);
                for (i, f) in m.support() {
                    let f = if i == j { f - 1 } else { f };
                    if f > 0 {
                        v *= &table.pows[i][f as usize];
                    }
                }
                grad[j] += &v;
            }
        }
        grad
    }

    fn max_exponents(&self) -> Vec<u16> {
        let mut mx = vec![0u16; self.space.len()];
        for m in self.terms.keys() {
            for (i, e) in m.support() {
                mx[i] = mx[i].max(e);
            }
        }
        mx
    }

    /// Composes with `x_i -> images[i]`; every image must live in `target`.
    pub fn substitute(&self, images: &[Poly], target: &Space) -> Result<Poly> {
        if images.len() != self.space.len() {
            return Err(Error::Dimension(format!(
                "{} images for {} variables",
                images.len(),
                self.space.len()
            )));
        }
        if images.iter().any(|p| !same_space(&p.space, target)) {
            return Err(Error::VarSpaceMismatch);
        }
        let mut out = Poly::zero(target);
        // Fast path: every image is zero or a single term, so the map is monomial.
        if images.iter().all(|p| p.terms.len() <= 1) {
            let single: Vec<Option<(&Monomial, &Scalar)>> =
                images.iter().map(|p| p.terms.iter().next()).collect();
            'terms: for (m, c) in &self.terms {
                let mut mono = Monomial::one(target.len());
                let mut coef = c.clone();
                for (i, e) in m.support() {
                    match single[i] {
                        None => continue 'terms,
                        Some((im, ic)) => {
                            for (k, f) in im.support() {
                                mono.0[k] += f * e;
                            }
                            if !ic.is_one() {
                                coef *= &ic.pow(e as u32);
                            }
                        }
                    }
                }
                out.add_term(mono, coef);
            }
            return Ok(out);
        }
        let mut cache: FxHashMap<(usize, u16), Poly> = FxHashMap::default();
        'terms2: for (m, c) in &self.terms {
            let mut acc = Poly::constant(target, c.clone());
            for (i, e) in m.support() {
                if images[i].is_zero() {
                    continue 'terms2;
                }
                let pw = cache
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e as u32));
                acc = &acc * pw;
            }
            for (mm, cc) in acc.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Substitution by variable name; unassigned variables map to the
    /// same-named variable of `target`.
    pub fn substitute_map(&self, assignment: &BTreeMap<String, Poly>, target: &Space) -> Result<Poly> {
        for name in assignment.keys() {
            self.space.index_of(name)?;
        }
        let images = self
            .space
            .names()
            .iter()
            .map(|name| match assignment.get(name) {
                Some(p) => Ok(p.clone()),
                None => target
                    .index_of(name)
                    .map(|i| Poly::var(target, i))
                    .map_err(|_| Error::Dimension(format!("variable `{name}` missing from target space"))),
            })
            .collect::<Result<Vec<_>>>()?;
        self.substitute(&images, target)
    }

    /// Re-expresses the polynomial in a space that contains all its variables.
    pub fn embed(&self, target: &Space) -> Result<Poly> {
        let map: Vec<usize> = self
            .space
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect::<Result<_>>()?;
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u16; target.len()];
            for (i, f) in m.support() {
                e[map[i]] += f;
            }
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        Ok(out)
    }

    pub fn bidegree_of(&self, m: &Monomial) -> BiDegree {
        m.bidegree(self.space.parts())
    }

    /// `Some(bideg)` iff the polynomial is nonzero and bi-homogeneous.
    pub fn bidegree(&self) -> Option<BiDegree> {
        let mut it = self.terms.keys().map(|m| m.bidegree(self.space.parts()));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// Bi-homogeneous pieces sorted by `(a, b)`; they sum back to `self`.
    pub fn bihomogeneous_components(&self) -> Vec<(BiDegree, Poly)> {
        let mut groups: BTreeMap<BiDegree, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let bd = m.bidegree(self.space.parts());
            groups
                .entry(bd)
                .or_insert_with(|| Poly::zero(&self.space))
                .terms
                .insert(m.clone(), c.clone());
        }
        groups.into_iter().collect()
    }

    fn extreme_component(&self, top: bool) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let parts = self.space.parts();
        let bs = self.terms.keys().map(|m| m.bidegree(parts).b);
        let target = if top { bs.max() } else { bs.min() }.unwrap();
        Ok(Poly {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree(parts).b == target)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Bi-homogeneous component of maximal `g1`-degree (the Z2-degeneration `f•`).
    pub fn top_component(&self) -> Result<Poly> {
        self.extreme_component(true)
    }

    /// Bi-homogeneous component of minimal `g1`-degree.
    pub fn bottom_component(&self) -> Result<Poly> {
        self.extreme_component(false)
    }

    /// Exact quotient `self / d`; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        self.check_space(d)?;
        let lead = d
            .terms
            .iter()
            .max_by(|a, b| a.0.grlex_cmp(b.0))
            .ok_or(Error::DivisionByZero)?;
        let (lm, lc) = (lead.0.clone(), lead.1.clone());
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.space);
        while let Some((m, c)) = rem
            .terms
            .iter()
            .max_by(|a, b| a.0.grlex_cmp(b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            if !lm.divides(&m) {
                return Err(Error::InexactDivision);
            }
            let qm = m.div_unchecked(&lm);
            let qc = &c * &lc_inv;
            rem = &rem - &d.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Common bound for sampling arguments: sum over `fs` of total degrees.
    pub fn degree_sum(fs: &[Poly]) -> u32 {
        fs.iter().filter_map(Poly::total_degree).sum()
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space) && self.terms == other.terms
    }
}

impl Eq for Poly {}

struct PowerTable {
    pows: Vec<Vec<Scalar>>,
}

impl PowerTable {
    fn new(point: &[Scalar], max: Vec<u16>) -> Self {
        let pows = point
            .iter()
            .zip(max)
            .map(|(x, m)| {
                let mut v = Vec::with_capacity(m as usize + 1);
                v.push(Scalar::one());
                for k in 1..=m as usize {
                    let next = &v[k - 1] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        PowerTable { pows }
    }

    fn monomial(&self, m: &Monomial) -> Scalar {
        let mut acc = Scalar::one();
        for (i, e) in m.support() {
            acc *= &self.pows[i][e as usize];
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (i, e) in m.support() {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.space.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// Operators are conveniences for same-space arithmetic and panic on a
// mismatch; the `checked_*` methods are the fallible forms.
impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("variable space mismatch")
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("variable space mismatch")
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("variable space mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Scalar::from(-1))
    }
}

/// Minimal commutative-ring interface shared by [`Scalar`] and [`Poly`].
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn one_like(&self) -> Self {
        Scalar::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(&self.space)
    }
    fn one_like(&self) -> Self {
        Poly::one(&self.space)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

mod parse {
    use super::*;

    struct Lexer<'a> {
        s: &'a [u8],
        pos: usize,
    }

    impl<'a> Lexer<'a> {
        fn skip_ws(&mut self) {
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.s.get(self.pos).copied()
        }

        fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
            let start = self.pos;
            while self.pos < self.s.len() && f(self.s[self.pos]) {
                self.pos += 1;
            }
            std::str::from_utf8(&self.s[start..self.pos]).unwrap()
        }
    }

    pub(super) fn parse_poly(space: &Space, text: &str) -> Result<Poly> {
        let err = |msg: &str| Error::Parse(format!("{msg} in `{text}`"));
        let mut lx = Lexer {
            s: text.as_bytes(),
            pos: 0,
        };
        let mut out = Poly::zero(space);
        let mut first = true;
        loop {
            let mut sign = Scalar::one();
            match lx.peek() {
                None if first => return Err(err("empty polynomial")),
                None => break,
                Some(b'+') => lx.pos += 1,
                Some(b'-') => {
                    lx.pos += 1;
                    sign = Scalar::from(-1);
                }
                Some(_) if first => {}
                Some(_) => return Err(err("expected `+` or `-`")),
            }
            first = false;
            let mut coef = sign;
            let mut mono = Monomial::one(space.len());
            loop {
                match lx.peek() {
                    Some(c) if c.is_ascii_digit() => {
                        let lit = lx.take_while(|c| c.is_ascii_digit() || c == b'/');
                        coef *= &lit.parse::<Scalar>()?;
                    }
                    Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                        let name = lx.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
                        let i = space.index_of(name)?;
                        let mut e: u16 = 1;
                        if lx.peek() == Some(b'^') {
                            lx.pos += 1;
                            lx.skip_ws();
                            e = lx
                                .take_while(|c| c.is_ascii_digit())
                                .parse()
                                .map_err(|_| err("bad exponent"))?;
                        }
                        mono.0[i] += e;
                    }
                    _ => return Err(err("expected factor")),
                }
                if lx.peek() == Some(b'*') {
                    lx.pos += 1;
                } else {
                    break;
                }
            }
            out.add_term(mono, coef);
        }
        Ok(out)
    }
}
