//! The surfaces `B = k[x,y,z_1..z_n]/(x^a + λ_i y^b + z_i^{c_i})`.

use num_integer::Integer;

use crate::constructions::{jacobian_tangent_dim, origin};
use crate::error::{Error, Result};
use crate::graded::{homogeneity, Homogeneity, PresentedAlgebra, PurePowerRewriteSystem, RewriteRule, WeightVector};
use crate::poly::{Monomial, Poly, Ring};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BkData {
    pub field: FieldSpec,
    pub a: i64,
    pub b: i64,
    pub c: Vec<i64>,
    pub lambdas: Vec<Scalar>,
}

impl BkData {
    pub fn new(field: FieldSpec, a: i64, b: i64, c: Vec<i64>, lambdas: &[i64]) -> BkData {
        BkData {
            field,
            a,
            b,
            c,
            lambdas: lambdas.iter().map(|&l| field.from_i64(l)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    /// `[a, b, c_1, …, c_n]`.
    pub fn exponents(&self) -> Vec<i64> {
        [self.a, self.b].into_iter().chain(self.c.iter().copied()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Valid,
    Invalid(Vec<String>),
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validation::Valid)
    }
}

pub fn validate_bk(data: &BkData) -> Validation {
    let mut reasons = Vec::new();
    let e = data.exponents();
    for (i, w) in e.windows(2).enumerate() {
        if w[0] <= w[1] {
            reasons.push(format!("exponents must strictly decrease: {} ≤ {} at position {}", w[0], w[1], i + 1));
        }
    }
    if let Some(&last) = e.last() {
        if last < 2 {
            reasons.push(format!("smallest exponent {last} is below 2"));
        }
    }
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let g = e[i].gcd(&e[j]);
            if g != 1 {
                reasons.push(format!("gcd({}, {}) = {g}", e[i], e[j]));
            }
        }
    }
    if data.lambdas.len() != data.n() {
        reasons.push(format!("{} λ values for {} exponents c_i", data.lambdas.len(), data.n()));
    }
    if data.lambdas.iter().any(|l| !data.field.contains(l)) {
        reasons.push(format!("λ values must lie in {}", data.field));
    } else {
        if let Some(l1) = data.lambdas.first() {
            if !l1.is_one() {
                reasons.push(format!("λ_1 = {l1}, expected 1"));
            }
        }
        for (i, l) in data.lambdas.iter().enumerate() {
            if l.is_zero() {
                reasons.push(format!("λ_{} is zero", i + 1));
            }
            if let Some(j) = data.lambdas[..i].iter().position(|m| m == l) {
                reasons.push(format!("λ_{} = λ_{} = {l}", j + 1, i + 1));
            }
        }
    }
    if reasons.is_empty() {
        Validation::Valid
    } else {
        Validation::Invalid(reasons)
    }
}

fn require_valid(data: &BkData) -> Result<()> {
    match validate_bk(data) {
        Validation::Valid => Ok(()),
        Validation::Invalid(r) => Err(Error::pre(format!("invalid B(k) data: {}", r.join("; ")))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGrading {
    pub n_total: i64,
    pub weights: WeightVector,
}

fn canonical_unchecked(data: &BkData) -> Result<CanonicalGrading> {
    let e = data.exponents();
    let n_total = e
        .iter()
        .try_fold(1i64, |acc, &v| acc.checked_mul(v))
        .ok_or_else(|| Error::pre("N = a·b·c_1···c_n overflows i64"))?;
    Ok(CanonicalGrading {
        n_total,
        weights: e.iter().map(|&v| n_total / v).collect::<Vec<_>>().into(),
    })
}

/// Weights `(N/a, N/b, N/c_1, …, N/c_n)` with `N = a·b·c_1···c_n`; every
/// relation is checked to be homogeneous of degree `N`.
pub fn canonical_grading(data: &BkData) -> Result<CanonicalGrading> {
    require_valid(data)?;
    let g = canonical_unchecked(data)?;
    let alg = build(data, &g)?;
    for r in alg.relations() {
        if homogeneity(r, &g.weights)? != Homogeneity::Homogeneous(g.n_total) {
            return Err(Error::Invariant(format!("relation `{r}` is not of degree {}", g.n_total)));
        }
    }
    Ok(g)
}

fn build(data: &BkData, g: &CanonicalGrading) -> Result<PresentedAlgebra> {
    let n = data.n();
    let names = ["x".to_string(), "y".to_string()]
        .into_iter()
        .chain((1..=n).map(|i| format!("z{i}")));
    let ring = Ring::new(data.field, names)?;
    let nv = ring.nvars();
    let one = data.field.one();
    let xa = Poly::term(&ring, Monomial::var(nv, 0, data.a as u32), one.clone());
    let mut relations = Vec::with_capacity(n);
    let mut rules = Vec::with_capacity(n);
    for i in 0..n {
        let lyb = Poly::term(&ring, Monomial::var(nv, 1, data.b as u32), data.lambdas[i].clone());
        let rest = &xa + &lyb;
        let zc = Poly::term(&ring, Monomial::var(nv, 2 + i, data.c[i] as u32), one.clone());
        relations.push(&rest + &zc);
        rules.push(RewriteRule {
            var: 2 + i,
            exponent: data.c[i] as u32,
            replacement: -&rest,
        });
    }
    let rs = PurePowerRewriteSystem::new(&ring, rules)?;
    PresentedAlgebra::new(ring, relations, Some(g.weights.clone()))?.with_rewrite(rs)
}

/// The presentation with rewrite rules `z_i^{c_i} ↦ −x^a − λ_i y^b` and the
/// canonical weights. For `n = 0` this is the free ring `k[x,y]`.
pub fn bk_algebra(data: &BkData) -> Result<PresentedAlgebra> {
    let g = canonical_grading(data)?;
    build(data, &g)
}

/// Exact data equality. Within the family this decides isomorphism over ℂ.
pub fn same_class(d1: &BkData, d2: &BkData) -> bool {
    d1 == d2
}

/// Reads a presentation `k[x,y,z_1..z_n]/(x^a + λ_i y^b + z_i^{c_i})` back
/// into valid data. Relations may be scaled; variable order must match.
pub fn recognize_bk(alg: &PresentedAlgebra) -> Option<BkData> {
    let n = alg.relations().len();
    if n == 0 || alg.nvars() != n + 2 {
        return None;
    }
    let pure = |m: &Monomial| {
        let nz: Vec<usize> = (0..m.len()).filter(|&i| m.exponents()[i] > 0).collect();
        match nz.as_slice() {
            [v] => Some((*v, m.exponents()[*v] as i64)),
            _ => None,
        }
    };
    let (mut a, mut b) = (None, None);
    let mut c = Vec::with_capacity(n);
    let mut lambdas = Vec::with_capacity(n);
    for (i, r) in alg.relations().iter().enumerate() {
        if r.num_terms() != 3 {
            return None;
        }
        let mut slots: [Option<(i64, Scalar)>; 3] = [None, None, None];
        for (m, coef) in r.terms() {
            let (v, e) = pure(m)?;
            let slot = match v {
                0 => 0,
                1 => 1,
                v if v == 2 + i => 2,
                _ => return None,
            };
            slots[slot] = Some((e, coef.clone()));
        }
        let [Some((ea, ca)), Some((eb, cb)), Some((ec, cc))] = slots else {
            return None;
        };
        if *a.get_or_insert(ea) != ea || *b.get_or_insert(eb) != eb || ca != cc {
            return None;
        }
        c.push(ec);
        lambdas.push(&cb * &ca.inverse()?);
    }
    let data = BkData {
        field: alg.ring().field(),
        a: a?,
        b: b?,
        c,
        lambdas,
    };
    validate_bk(&data).is_valid().then_some(data)
}

/// `n + 2`, cross-checked against the tangent space at the origin.
pub fn min_generators(data: &BkData) -> Result<usize> {
    require_valid(data)?;
    let p = data.field.characteristic() as i64;
    if p != 0 {
        if let Some(e) = data.exponents().into_iter().find(|e| e % p == 0) {
            return Err(Error::pre(format!(
                "characteristic {p} divides the exponent {e}; the Jacobian count is not reliable there"
            )));
        }
    }
    let alg = bk_algebra(data)?;
    let rep = jacobian_tangent_dim(&alg, &origin(&alg))?;
    let expected = data.n() + 2;
    if rep.rank != 0 || rep.tangent_dim != expected {
        return Err(Error::Invariant(format!(
            "tangent space at the origin has dimension {} (rank {}), expected {expected}",
            rep.tangent_dim, rep.rank
        )));
    }
    Ok(expected)
}
