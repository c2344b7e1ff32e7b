//! Weighted ℤ-gradings on presented algebras.
//!
//! Graded pieces are only computed for free polynomial rings and for
//! quotients carrying a [`PurePowerRewriteSystem`], i.e. relations of the
//! shape `z^e = (polynomial free of z)`. In that case the monomials whose
//! rewritten exponents stay below their rule exponents form a k-basis.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::poly::{Monomial, Poly, Ring};
use crate::scalar::Scalar;

/// One integer weight per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector(weights)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&w| w > 0)
    }

    pub fn scaled(&self, c: i64) -> WeightVector {
        WeightVector(self.0.iter().map(|w| w * c).collect())
    }

    pub fn negated(&self) -> WeightVector {
        self.scaled(-1)
    }

    /// gcd of the absolute values of the nonzero entries (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &w| g.gcd(&w))
    }
}

impl From<Vec<i64>> for WeightVector {
    fn from(v: Vec<i64>) -> Self {
        WeightVector(v)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn weighted_degree(m: &Monomial, w: &WeightVector) -> Result<i64> {
    if m.len() != w.len() {
        return Err(Error::Arity {
            expected: m.len(),
            got: w.len(),
        });
    }
    Ok(m.weighted_degree(w.as_slice()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(i64),
    NotHomogeneous,
    /// The zero polynomial, homogeneous of every degree.
    ZeroPolynomial,
}

pub fn homogeneity(p: &Poly, w: &WeightVector) -> Result<Homogeneity> {
    let mut degree = None;
    for (m, _) in p.terms() {
        let d = weighted_degree(m, w)?;
        match degree {
            None => degree = Some(d),
            Some(e) if e != d => return Ok(Homogeneity::NotHomogeneous),
            _ => {}
        }
    }
    Ok(degree.map_or(Homogeneity::ZeroPolynomial, Homogeneity::Homogeneous))
}

/// Splits `p` into homogeneous components keyed by weighted degree.
pub fn homogeneous_components(p: &Poly, w: &WeightVector) -> BTreeMap<i64, Poly> {
    let mut out: BTreeMap<i64, Poly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let d = m.weighted_degree(w.as_slice());
        out.entry(d)
            .or_insert_with(|| Poly::zero(p.ring()))
            .add_term(m.clone(), c.clone());
    }
    out
}

/// `v^exponent ↦ replacement`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub var: usize,
    pub exponent: u32,
    pub replacement: Poly,
}

/// Acyclic pure-power rewrite rules, at most one per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PurePowerRewriteSystem {
    rules: Vec<RewriteRule>,
    bounds: Vec<Option<u32>>,
}

impl PurePowerRewriteSystem {
    pub fn new(ring: &Arc<Ring>, rules: Vec<RewriteRule>) -> Result<Self> {
        let n = ring.nvars();
        let mut bounds = vec![None; n];
        for r in &rules {
            if r.var >= n {
                return Err(Error::IndexOutOfRange { index: r.var, len: n });
            }
            if r.exponent == 0 {
                return Err(Error::pre("rewrite exponent must be positive"));
            }
            if bounds[r.var].replace(r.exponent).is_some() {
                return Err(Error::pre(format!("variable `{}` has two rewrite rules", ring.vars()[r.var])));
            }
            r.replacement.same_context(&Poly::zero(ring))?;
        }
        // Acyclicity: repeatedly peel rules whose replacement only mentions
        // variables without a remaining rule.
        let mut remaining: Vec<&RewriteRule> = rules.iter().collect();
        while !remaining.is_empty() {
            let live: Vec<usize> = remaining.iter().map(|r| r.var).collect();
            let before = remaining.len();
            remaining.retain(|r| live.iter().any(|&v| r.replacement.degree_in(v) > 0));
            if remaining.len() == before {
                return Err(Error::pre("rewrite rules are cyclic"));
            }
        }
        Ok(PurePowerRewriteSystem { rules, bounds })
    }

    /// Reads one rule per relation: the relation must contain a pure power
    /// `c·v^e` of a variable `v` occurring in no other term and in no other
    /// relation. Among candidates the last variable wins.
    pub fn detect(ring: &Arc<Ring>, relations: &[Poly]) -> Option<Self> {
        let mut rules = Vec::new();
        for (k, rel) in relations.iter().enumerate() {
            let candidate = (0..ring.nvars()).rev().find_map(|v| {
                if rules.iter().any(|r: &RewriteRule| r.var == v) {
                    return None;
                }
                if relations
                    .iter()
                    .enumerate()
                    .any(|(j, other)| j != k && other.degree_in(v) > 0)
                {
                    return None;
                }
                let mut hits = rel.terms().filter(|(m, _)| m.exponents()[v] > 0);
                let (m, c) = hits.next()?;
                if hits.next().is_some() {
                    return None;
                }
                let e = m.exponents()[v];
                if m.exponents().iter().enumerate().any(|(i, &x)| i != v && x > 0) {
                    return None;
                }
                let lead = Poly::term(ring, m.clone(), c.clone());
                let inv = c.inverse()?;
                let replacement = (&lead - rel).scalar_mul(&inv);
                Some(RewriteRule {
                    var: v,
                    exponent: e,
                    replacement,
                })
            })?;
            rules.push(candidate);
        }
        PurePowerRewriteSystem::new(ring, rules).ok()
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// Exclusive exponent bound of each variable in normal form.
    pub fn bound(&self, var: usize) -> Option<u32> {
        self.bounds.get(var).copied().flatten()
    }

    /// Every replacement homogeneous of degree `exponent · weight(var)`.
    pub fn is_graded(&self, w: &WeightVector) -> bool {
        self.rules.iter().all(|r| {
            let target = r.exponent as i64 * w.as_slice()[r.var];
            match homogeneity(&r.replacement, w) {
                Ok(Homogeneity::ZeroPolynomial) => true,
                Ok(Homogeneity::Homogeneous(d)) => d == target,
                _ => false,
            }
        })
    }
}

/// Canonical representative of `p` modulo the rewrite rules.
pub fn normal_form(p: &Poly, rs: &PurePowerRewriteSystem) -> Poly {
    let ring = p.ring();
    let mut out = Poly::zero(ring);
    let mut stack: Vec<(Monomial, Scalar)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    while let Some((m, c)) = stack.pop() {
        let hit = rs.rules.iter().find(|r| m.exponents()[r.var] >= r.exponent);
        match hit {
            None => out.add_term(m, c),
            Some(rule) => {
                let k = m.exponents()[rule.var];
                let mut rest = m.exponents().to_vec();
                rest[rule.var] = k % rule.exponent;
                let expanded = rule.replacement.pow(k / rule.exponent);
                let base = Monomial::new(rest);
                for (n, d) in expanded.terms() {
                    stack.push((base.mul(n), &c * d));
                }
            }
        }
    }
    out
}

/// A field, variables, relations and optional weights.
#[derive(Debug, Clone)]
pub struct PresentedAlgebra {
    ring: Arc<Ring>,
    relations: Vec<Poly>,
    weights: Option<WeightVector>,
    rewrite: Option<PurePowerRewriteSystem>,
}

impl PartialEq for PresentedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.relations == other.relations && self.weights == other.weights
    }
}

impl PresentedAlgebra {
    /// Checks that relations are nonzero and, when weights are given, that
    /// every relation is homogeneous. A pure-power rewrite system is detected
    /// automatically when the relations have that shape.
    pub fn new(ring: Arc<Ring>, relations: Vec<Poly>, weights: Option<WeightVector>) -> Result<Self> {
        for (i, r) in relations.iter().enumerate() {
            r.same_context(&Poly::zero(&ring))?;
            if r.is_zero() {
                return Err(Error::pre(format!("relation {} is zero", i + 1)));
            }
        }
        if let Some(w) = &weights {
            if w.len() != ring.nvars() {
                return Err(Error::Arity {
                    expected: ring.nvars(),
                    got: w.len(),
                });
            }
            for (i, r) in relations.iter().enumerate() {
                if homogeneity(r, w)? == Homogeneity::NotHomogeneous {
                    return Err(Error::pre(format!(
                        "relation {} (`{r}`) is not homogeneous under weights {w}",
                        i + 1
                    )));
                }
            }
        }
        let rewrite = PurePowerRewriteSystem::detect(&ring, &relations);
        Ok(PresentedAlgebra {
            ring,
            relations,
            weights,
            rewrite,
        })
    }

    pub fn free(ring: Arc<Ring>, weights: Option<WeightVector>) -> Result<Self> {
        PresentedAlgebra::new(ring, Vec::new(), weights)
    }

    /// Replaces the detected rewrite system with an explicit one.
    pub fn with_rewrite(mut self, rs: PurePowerRewriteSystem) -> Result<Self> {
        if rs.rules.len() != self.relations.len() {
            return Err(Error::pre("rewrite system must have one rule per relation"));
        }
        self.rewrite = Some(rs);
        Ok(self)
    }

    pub fn with_weights(self, weights: Option<WeightVector>) -> Result<Self> {
        PresentedAlgebra::new(self.ring, self.relations, weights)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn weights(&self) -> Option<&WeightVector> {
        self.weights.as_ref()
    }

    pub fn rewrite_system(&self) -> Option<&PurePowerRewriteSystem> {
        self.rewrite.as_ref()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Degrees of the relations under the attached weights.
    pub fn relation_degrees(&self) -> Vec<i64> {
        let Some(w) = &self.weights else {
            return Vec::new();
        };
        self.relations
            .iter()
            .filter_map(|r| match homogeneity(r, w) {
                Ok(Homogeneity::Homogeneous(d)) => Some(d),
                _ => None,
            })
            .collect()
    }

    /// Normal form when a rewrite system is known, else `p` itself (free ring).
    pub fn reduce(&self, p: &Poly) -> Poly {
        match &self.rewrite {
            Some(rs) => normal_form(p, rs),
            None => p.clone(),
        }
    }

    /// Positive weights and a way to compute graded pieces.
    pub(crate) fn graded_pieces_supported(&self) -> Result<&WeightVector> {
        let w = self
            .weights
            .as_ref()
            .ok_or_else(|| Error::pre("algebra has no weights"))?;
        if !w.is_positive() {
            return Err(Error::pre(format!("weights {w} are not all positive")));
        }
        if !self.relations.is_empty() {
            let rs = self.rewrite.as_ref().ok_or_else(|| {
                Error::pre("graded pieces need a free ring or pure-power relations (z^c = f(other variables))")
            })?;
            if !rs.is_graded(w) {
                return Err(Error::pre("rewrite rules are not homogeneous under the weights"));
            }
        }
        Ok(w)
    }
}

/// Normal-form monomials of weighted degree exactly `d`, in descending
/// graded-lex order. They form a k-basis of the degree-`d` piece.
pub fn graded_piece_basis(alg: &PresentedAlgebra, d: i64) -> Result<Vec<Monomial>> {
    let w = alg.graded_pieces_supported()?;
    if d < 0 {
        return Ok(Vec::new());
    }
    let bounds: Vec<Option<u32>> = (0..alg.nvars())
        .map(|v| alg.rewrite.as_ref().and_then(|rs| rs.bound(v)))
        .collect();
    let mut out = Vec::new();
    let mut current = vec![0u32; alg.nvars()];
    enumerate(w.as_slice(), &bounds, 0, d, &mut current, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

fn enumerate(w: &[i64], bounds: &[Option<u32>], var: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if var == w.len() {
        if left == 0 {
            out.push(Monomial::new(cur.clone()));
        }
        return;
    }
    if var + 1 == w.len() {
        if left % w[var] == 0 {
            let e = left / w[var];
            if bounds[var].is_none_or(|b| (e as u64) < b as u64) {
                cur[var] = e as u32;
                out.push(Monomial::new(cur.clone()));
                cur[var] = 0;
            }
        }
        return;
    }
    let mut e = 0u32;
    while e as i64 * w[var] <= left && bounds[var].is_none_or(|b| e < b) {
        cur[var] = e;
        enumerate(w, bounds, var + 1, left - e as i64 * w[var], cur, out);
        e += 1;
    }
    cur[var] = 0;
}

pub fn hilbert_dim(alg: &PresentedAlgebra, d: i64) -> Result<usize> {
    Ok(graded_piece_basis(alg, d)?.len())
}

/// `hilbert_dim` for every degree in `0..=upto`.
pub fn hilbert_dims(alg: &PresentedAlgebra, upto: i64, exec: Execution) -> Result<Vec<usize>> {
    alg.graded_pieces_supported()?;
    let degrees: Vec<i64> = (0..=upto.max(-1)).collect();
    exec::map(exec, &degrees, |&d| hilbert_dim(alg, d)).into_iter().collect()
}

/// Coefficients `0..=upto` of the Hilbert series
/// `∏_rules (1 − t^{e·w_v}) / ∏_all (1 − t^{w_v})`, expanded as a power
/// series. Independent of the monomial enumeration in [`graded_piece_basis`].
pub fn hilbert_series_coefficients(alg: &PresentedAlgebra, upto: i64) -> Result<Vec<i128>> {
    let w = alg.graded_pieces_supported()?;
    if upto < 0 {
        return Ok(Vec::new());
    }
    let len = upto as usize + 1;
    let mut series = vec![0i128; len];
    series[0] = 1;
    if let Some(rs) = &alg.rewrite {
        for r in &rs.rules {
            let step = r.exponent as usize * w.as_slice()[r.var] as usize;
            for i in (step..len).rev() {
                series[i] -= series[i - step];
            }
        }
    }
    for &wv in w.as_slice() {
        let step = wv as usize;
        for i in step..len {
            series[i] += series[i - step];
        }
    }
    Ok(series)
}

pub fn veronese_dim(alg: &PresentedAlgebra, a: i64, j: i64) -> Result<usize> {
    if a <= 0 {
        return Err(Error::pre(format!("Veronese index must be positive, got {a}")));
    }
    hilbert_dim(alg, a * j)
}

/// Under a positive grading the units are exactly the nonzero constants.
pub fn is_unit(p: &Poly, alg: &PresentedAlgebra) -> Result<bool> {
    alg.graded_pieces_supported()?;
    p.same_context(&Poly::zero(alg.ring()))?;
    Ok(!p.is_zero() && p.is_constant())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ActionKind {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// Type of the 𝔾ₘ-action induced by a weight vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ActionClass {
    pub kind: ActionKind,
    pub effective: bool,
    pub good: bool,
}

/// Classifies at the level of generator weights: a zero weight on a
/// generator makes the action parabolic even if relations might force that
/// generator to be algebraic over others.
pub fn classify_action(w: &WeightVector) -> Result<ActionClass> {
    if w.is_zero() {
        return Err(Error::pre("cannot classify the zero weight vector"));
    }
    let pos = w.as_slice().iter().any(|&x| x > 0);
    let neg = w.as_slice().iter().any(|&x| x < 0);
    let zero = w.as_slice().contains(&0);
    let kind = match (pos && neg, zero) {
        (true, _) => ActionKind::Hyperbolic,
        (false, true) => ActionKind::Parabolic,
        (false, false) => ActionKind::Elliptic,
    };
    let effective = w.content() == 1;
    Ok(ActionClass {
        kind,
        effective,
        good: kind == ActionKind::Elliptic && effective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalar::FieldSpec;

    fn b532() -> PresentedAlgebra {
        let r = Ring::new(FieldSpec::Rationals, ["x", "y", "z"]).unwrap();
        let rel = parse_poly("x^5 + y^3 + z^2", &r).unwrap();
        PresentedAlgebra::new(r, vec![rel], Some(vec![6, 10, 15].into())).unwrap()
    }

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn weighted_degrees() {
        assert_eq!(weighted_degree(&mono(&[5, 0, 0]), &vec![6, 10, 15].into()).unwrap(), 30);
        assert_eq!(weighted_degree(&mono(&[2, 1, 0, 0]), &vec![6, -6, 3, 2].into()).unwrap(), 6);
        assert_eq!(weighted_degree(&mono(&[0, 0]), &vec![4, 9].into()).unwrap(), 0);
        assert!(weighted_degree(&mono(&[1]), &vec![1, 2].into()).is_err());
    }

    #[test]
    fn homogeneity_examples() {
        let a = b532();
        assert_eq!(
            homogeneity(&a.relations()[0], &vec![6, 10, 15].into()).unwrap(),
            Homogeneity::Homogeneous(30)
        );
        let r = Ring::new(FieldSpec::Rationals, ["x", "y", "z", "t"]).unwrap();
        let russell = parse_poly("x + x^2*y + z^2 + t^3", &r).unwrap();
        assert_eq!(
            homogeneity(&russell, &vec![6, -6, 3, 2].into()).unwrap(),
            Homogeneity::Homogeneous(6)
        );
        let r2 = Ring::new(FieldSpec::Rationals, ["x", "y"]).unwrap();
        let f = parse_poly("x + y", &r2).unwrap();
        assert_eq!(homogeneity(&f, &vec![1, 2].into()).unwrap(), Homogeneity::NotHomogeneous);
        assert_eq!(
            homogeneity(&Poly::zero(&r2), &vec![1, 2].into()).unwrap(),
            Homogeneity::ZeroPolynomial
        );
    }

    #[test]
    fn rejects_inhomogeneous_weights() {
        let r = Ring::new(FieldSpec::Rationals, ["x", "y", "z"]).unwrap();
        let rel = parse_poly("x^5 + y^3 + z^2", &r).unwrap();
        assert!(PresentedAlgebra::new(r, vec![rel], Some(vec![1, 1, 1].into())).is_err());
    }

    #[test]
    fn detected_rewrite_targets_last_variable() {
        let a = b532();
        let rs = a.rewrite_system().unwrap();
        assert_eq!(rs.rules().len(), 1);
        assert_eq!(rs.rules()[0].var, 2);
        assert_eq!(rs.rules()[0].exponent, 2);
        assert_eq!(rs.rules()[0].replacement.to_string(), "-x^5 - y^3");
    }

    #[test]
    fn normal_forms() {
        let a = b532();
        let rs = a.rewrite_system().unwrap();
        let r = a.ring();
        let nf = |s: &str| normal_form(&parse_poly(s, r).unwrap(), rs).to_string();
        assert_eq!(nf("z^2"), "-x^5 - y^3");
        assert_eq!(nf("z^3"), "-x^5*z - y^3*z");
        assert_eq!(nf("x^7"), "x^7");
        assert_eq!(nf("z^2 + x^5 + y^3"), "0");
    }

    #[test]
    fn cyclic_rules_rejected() {
        let r = Ring::new(FieldSpec::Rationals, ["u", "v"]).unwrap();
        let rules = vec![
            RewriteRule {
                var: 0,
                exponent: 2,
                replacement: Poly::var(&r, 1),
            },
            RewriteRule {
                var: 1,
                exponent: 2,
                replacement: Poly::var(&r, 0),
            },
        ];
        assert!(PurePowerRewriteSystem::new(&r, rules).is_err());
    }

    #[test]
    fn graded_pieces_of_b532() {
        let a = b532();
        assert_eq!(graded_piece_basis(&a, 30).unwrap(), vec![mono(&[5, 0, 0]), mono(&[0, 3, 0])]);
        assert_eq!(graded_piece_basis(&a, 21).unwrap(), vec![mono(&[1, 0, 1])]);
        assert_eq!(graded_piece_basis(&a, 0).unwrap(), vec![mono(&[0, 0, 0])]);
        assert!(graded_piece_basis(&a, -4).unwrap().is_empty());
        assert_eq!(hilbert_dim(&a, 30).unwrap(), 2);
        assert_eq!(hilbert_dim(&a, 7).unwrap(), 0);
    }

    #[test]
    fn free_ring_dimensions() {
        let r = Ring::new(FieldSpec::Rationals, ["x", "y"]).unwrap();
        let a = PresentedAlgebra::free(r, Some(vec![1, 1].into())).unwrap();
        assert_eq!(hilbert_dim(&a, 3).unwrap(), 4);
        assert_eq!(veronese_dim(&a, 1, 3).unwrap(), 4);
    }

    #[test]
    fn missing_or_nonpositive_weights() {
        let r = Ring::new(FieldSpec::Rationals, ["x", "y"]).unwrap();
        let a = PresentedAlgebra::free(r.clone(), None).unwrap();
        assert!(graded_piece_basis(&a, 2).is_err());
        let b = PresentedAlgebra::free(r, Some(vec![1, 0].into())).unwrap();
        assert!(hilbert_dim(&b, 2).is_err());
    }

    #[test]
    fn veronese() {
        let a = b532();
        assert_eq!(veronese_dim(&a, 2, 15).unwrap(), 2);
        assert_eq!(veronese_dim(&a, 7, 1).unwrap(), 0);
        assert!(veronese_dim(&a, 0, 1).is_err());
    }

    #[test]
    fn series_matches_enumeration() {
        let a = b532();
        let series = hilbert_series_coefficients(&a, 120).unwrap();
        let dims = hilbert_dims(&a, 120, Execution::Sequential).unwrap();
        for (d, (s, e)) in series.iter().zip(&dims).enumerate() {
            assert_eq!(*s, *e as i128, "degree {d}");
        }
    }

    #[test]
    fn units() {
        let a = b532();
        let r = a.ring();
        assert!(is_unit(&parse_poly("5", r).unwrap(), &a).unwrap());
        assert!(!is_unit(&parse_poly("x", r).unwrap(), &a).unwrap());
        assert!(!is_unit(&Poly::zero(r), &a).unwrap());
    }

    #[test]
    fn action_classes() {
        let c = classify_action(&vec![6, 10, 15].into()).unwrap();
        assert_eq!(
            c,
            ActionClass {
                kind: ActionKind::Elliptic,
                effective: true,
                good: true
            }
        );
        assert_eq!(
            classify_action(&vec![6, -6, 3, 2].into()).unwrap().kind,
            ActionKind::Hyperbolic
        );
        let p = classify_action(&vec![2, 4, 0].into()).unwrap();
        assert_eq!(p.kind, ActionKind::Parabolic);
        assert!(!p.effective);
        assert!(!p.good);
        assert!(classify_action(&vec![0, 0].into()).is_err());
        assert_eq!(
            classify_action(&vec![-2, -3].into()).unwrap().kind,
            ActionKind::Elliptic
        );
    }
}
