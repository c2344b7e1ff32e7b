//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Ground field plus an ordered list of variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: FieldSpec,
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(field: FieldSpec, vars: impl IntoIterator<Item = S>) -> Result<Arc<Ring>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::pre(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::pre(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Ring { field, vars }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent tuple, ordered graded-lexicographically: total degree first,
/// then lexicographically with the first variable most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = vec![0; nvars];
        m[i] = e;
        Monomial(m)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Weighted degree; `weights` must have the same length.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over a [`Ring`]: a finite map from monomials to nonzero
/// scalars. The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Scalar) -> Poly {
        Poly::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Poly::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Poly {
        Poly::term(ring, Monomial::var(ring.nvars(), i, 1), ring.field().one())
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Scalar) -> Poly {
        assert_eq!(m.len(), ring.nvars(), "monomial length must match the ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: ring.clone(), terms }
    }

    /// Sums duplicate monomials and drops zero coefficients.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.len(), ring.nvars(), "monomial length must match the ring");
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = &*existing + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(|| self.field().zero()),
        )
    }

    /// Largest exponent of variable `i` over all terms.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn same_context(&self, other: &Poly) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "ring {} [{}] vs {} [{}]",
                self.ring.field,
                self.ring.vars.join(" "),
                other.ring.field,
                other.ring.vars.join(" ")
            )))
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.same_context(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.same_context(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_context(other)?;
        Ok(self * other)
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
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

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Poly> {
        let n = self.ring.nvars();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        let field = self.field();
        let terms = self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
            let e = m.0[i];
            let mut exps = m.0.clone();
            exps[i] -= 1;
            (Monomial(exps), c * &field.from_i64(e as i64))
        });
        Ok(Poly::from_terms(&self.ring, terms))
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::Arity {
                expected: n,
                got: point.len(),
            });
        }
        let field = self.field();
        if let Some(bad) = point.iter().find(|s| !field.contains(s)) {
            return Err(Error::ContextMismatch(format!("point coordinate {bad} is not in {field}")));
        }
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for variable `i`; the result lives in the
    /// images' ring.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Arity {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for p in images {
            p.same_context(&images[0])?;
        }
        let mut acc = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Poly> {
        if target.field() != self.field() {
            return Err(Error::ContextMismatch(format!(
                "cannot move a polynomial over {} into a ring over {}",
                self.field(),
                target.field()
            )));
        }
        let map: Vec<usize> = self
            .ring
            .vars
            .iter()
            .map(|v| {
                target
                    .var_index(v)
                    .ok_or_else(|| Error::ContextMismatch(format!("variable `{v}` missing from target ring")))
            })
            .collect::<Result<_>>()?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0; target.nvars()];
            for (&j, &e) in map.iter().zip(&m.0) {
                exps[j] = e;
            }
            (Monomial(exps), c.clone())
        });
        Ok(Poly::from_terms(target, terms))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Canonical form: terms in descending graded-lex order with explicit `*`
/// and `^`, e.g. `2/3*x^2 - y`. The zero polynomial prints as `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| match e {
                    1 => self.ring.vars[i].clone(),
                    _ => format!("{}^{}", self.ring.vars[i], e),
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ring(field: FieldSpec, vars: &[&str]) -> Arc<Ring> {
        Ring::new(field, vars.iter().copied()).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Poly {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn cancellation_and_difference_of_squares() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        assert_eq!(&p(&r, "x+y") + &p(&r, "x-y"), p(&r, "2x"));
        assert_eq!(&p(&r, "x+y") * &p(&r, "x-y"), p(&r, "x^2 - y^2"));
        assert!((&p(&r, "x") - &p(&r, "x")).is_zero());
    }

    #[test]
    fn char_five_product() {
        let r = ring(FieldSpec::prime(5).unwrap(), &["x"]);
        assert_eq!(&p(&r, "3x") * &p(&r, "2x"), p(&r, "x^2"));
    }

    #[test]
    fn context_mismatch_is_reported() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        let s = ring(FieldSpec::Rationals, &["x", "z"]);
        let err = p(&r, "x").checked_add(&p(&s, "x")).unwrap_err();
        assert!(matches!(err, Error::ContextMismatch(_)));
        let f5 = ring(FieldSpec::prime(5).unwrap(), &["x", "y"]);
        assert!(p(&r, "x").checked_mul(&p(&f5, "x")).is_err());
    }

    #[test]
    fn derivatives() {
        let r = ring(FieldSpec::Rationals, &["x", "y", "z"]);
        assert_eq!(p(&r, "x^5+y^3+z^2").partial_derivative(0).unwrap(), p(&r, "5x^4"));
        let f5 = ring(FieldSpec::prime(5).unwrap(), &["x"]);
        assert!(p(&f5, "x^5").partial_derivative(0).unwrap().is_zero());
        let bn = ring(FieldSpec::Rationals, &["x", "z0", "z1", "z2"]);
        assert_eq!(
            p(&bn, "x^2 z2 + z1^2 + z0^3").partial_derivative(3).unwrap(),
            p(&bn, "x^2")
        );
        assert_eq!(
            p(&r, "x").partial_derivative(3),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        );
    }

    #[test]
    fn evaluation() {
        let q = FieldSpec::Rationals;
        let r = ring(q, &["x", "y", "z"]);
        let origin = vec![q.zero(); 3];
        assert!(p(&r, "x^5+y^3+z^2").evaluate(&origin).unwrap().is_zero());

        let f2 = FieldSpec::prime(2).unwrap();
        let r2 = ring(f2, &["x"]);
        assert!(p(&r2, "x+1").evaluate(&[f2.one()]).unwrap().is_zero());

        let russell = ring(q, &["x", "y", "z", "t"]);
        let pt: Vec<Scalar> = [1, -1, 1, -1].iter().map(|&v| q.from_i64(v)).collect();
        assert!(p(&russell, "x + x^2*y + z^2 + t^3").evaluate(&pt).unwrap().is_zero());

        assert_eq!(
            p(&r, "x").evaluate(&origin[..2]),
            Err(Error::Arity { expected: 3, got: 2 })
        );
    }

    #[test]
    fn printer_is_canonical() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        assert_eq!(p(&r, "-y + 2/3 x^2").to_string(), "2/3*x^2 - y");
        assert_eq!(p(&r, "1 - x y").to_string(), "-x*y + 1");
        assert_eq!(Poly::zero(&r).to_string(), "0");
        assert_eq!(p(&r, "-1").to_string(), "-1");
    }

    #[test]
    fn embed_moves_by_name() {
        let small = ring(FieldSpec::Rationals, &["y", "x"]);
        let big = ring(FieldSpec::Rationals, &["x", "y", "z"]);
        let e = p(&small, "x^2 y").embed(&big).unwrap();
        assert_eq!(e, p(&big, "x^2*y"));
        assert!(p(&big, "z").embed(&small).is_err());
    }
}
