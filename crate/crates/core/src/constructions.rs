//! Ring constructors: cyclic covers `A[Z]/(Z^c − F)`, affine modifications
//! `A[Z_1..Z_n]/(f·Z_i − a_i)`, the `z_i^{a_i} + z_{i-1}^{b_i}` ideal chains,
//! the threefolds `B_n`, and Jacobian tangent-space dimensions.

use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graded::{homogeneity, Homogeneity, PresentedAlgebra, PurePowerRewriteSystem, RewriteRule, WeightVector};
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly, Ring};
use crate::scalar::{FieldSpec, Scalar};

/// A constructed algebra together with notes on degenerate inputs.
#[derive(Debug, Clone)]
pub struct Construction {
    pub algebra: PresentedAlgebra,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SamuelSpec {
    pub base: PresentedAlgebra,
    /// Homogeneous element of the base ring, of degree `ω`.
    pub f: Poly,
    pub c: u32,
    /// Name of the adjoined variable `Z`.
    pub var: String,
}

fn extend_ring(base: &Arc<Ring>, new_vars: &[String]) -> Result<Arc<Ring>> {
    Ring::new(base.field(), base.vars().iter().chain(new_vars).cloned())
}

fn degree_of(p: &Poly, w: &WeightVector, what: &str) -> Result<i64> {
    match homogeneity(p, w)? {
        Homogeneity::Homogeneous(d) => Ok(d),
        Homogeneity::ZeroPolynomial => Err(Error::pre(format!("{what} is zero"))),
        Homogeneity::NotHomogeneous => Err(Error::pre(format!("{what} `{p}` is not homogeneous under {w}"))),
    }
}

/// `A[Z]/(Z^c − F)` with weights `c·w_A` and `deg Z = ω = deg F`.
pub fn samuel_extend(spec: &SamuelSpec) -> Result<Construction> {
    let base = &spec.base;
    let w = base
        .weights()
        .ok_or_else(|| Error::pre("the base algebra needs weights"))?;
    spec.f.same_context(&Poly::zero(base.ring()))?;
    let omega = degree_of(&spec.f, w, "F")?;
    if spec.c == 0 {
        return Err(Error::pre("c must be positive"));
    }
    if (spec.c as i64).gcd(&omega) != 1 {
        return Err(Error::pre(format!("gcd(c, ω) = gcd({}, {omega}) ≠ 1", spec.c)));
    }
    let ring = extend_ring(base.ring(), std::slice::from_ref(&spec.var))?;
    let z = ring.nvars() - 1;
    let f = spec.f.embed(&ring)?;
    let mut relations: Vec<Poly> = base.relations().iter().map(|r| r.embed(&ring)).collect::<Result<_>>()?;
    let zc = Poly::term(&ring, Monomial::var(ring.nvars(), z, spec.c), ring.field().one());
    relations.push(&zc - &f);

    let mut weights: Vec<i64> = w.scaled(spec.c as i64).as_slice().to_vec();
    weights.push(omega);
    let mut rules = match base.rewrite_system() {
        Some(rs) => rs
            .rules()
            .iter()
            .map(|r| {
                Ok(RewriteRule {
                    var: r.var,
                    exponent: r.exponent,
                    replacement: r.replacement.embed(&ring)?,
                })
            })
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let keep_rules = base.rewrite_system().is_some() || base.relations().is_empty();
    rules.push(RewriteRule {
        var: z,
        exponent: spec.c,
        replacement: f,
    });
    let mut algebra = PresentedAlgebra::new(ring.clone(), relations, Some(weights.into()))?;
    if keep_rules {
        algebra = algebra.with_rewrite(PurePowerRewriteSystem::new(&ring, rules)?)?;
    }
    let mut notes = Vec::new();
    if spec.c == 1 {
        notes.push(format!("c = 1: {} = F, the extension is isomorphic to the base", spec.var));
    }
    Ok(Construction { algebra, notes })
}

#[derive(Debug, Clone)]
pub struct ModificationSpec {
    pub base: PresentedAlgebra,
    pub f: Poly,
    pub ideal_gens: Vec<Poly>,
    /// Names of the adjoined `Z_1..Z_n`, one per ideal generator.
    pub new_vars: Vec<String>,
}

/// `A[Z_1..Z_n]/(f·Z_i − a_i)`; graded when the base carries weights, with
/// `deg Z_i = deg a_i − deg f`.
pub fn affine_modification(spec: &ModificationSpec) -> Result<Construction> {
    let base = &spec.base;
    if spec.f.is_zero() {
        return Err(Error::pre("f must be nonzero"));
    }
    if spec.new_vars.len() != spec.ideal_gens.len() {
        return Err(Error::pre(format!(
            "{} new variables for {} ideal generators",
            spec.new_vars.len(),
            spec.ideal_gens.len()
        )));
    }
    let zero = Poly::zero(base.ring());
    spec.f.same_context(&zero)?;
    for a in &spec.ideal_gens {
        a.same_context(&zero)?;
    }
    let weights = match base.weights() {
        Some(w) => {
            let df = degree_of(&spec.f, w, "f")?;
            let mut ws = w.as_slice().to_vec();
            for (i, a) in spec.ideal_gens.iter().enumerate() {
                ws.push(degree_of(a, w, &format!("ideal generator {}", i + 1))? - df);
            }
            Some(WeightVector::new(ws))
        }
        None => None,
    };
    let ring = extend_ring(base.ring(), &spec.new_vars)?;
    let f = spec.f.embed(&ring)?;
    let mut relations: Vec<Poly> = base.relations().iter().map(|r| r.embed(&ring)).collect::<Result<_>>()?;
    let nbase = base.nvars();
    for (i, a) in spec.ideal_gens.iter().enumerate() {
        let zi = Poly::var(&ring, nbase + i);
        relations.push(&(&f * &zi) - &a.embed(&ring)?);
    }
    let mut notes = Vec::new();
    if spec.f.is_constant() {
        notes.push("f is a unit: the modification only adjoins a_i/f, which already lie in the base".into());
    }
    Ok(Construction {
        algebra: PresentedAlgebra::new(ring, relations, weights)?,
        notes,
    })
}

fn check_chain_gcds(a: &[u32], b: &[u32]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::pre(format!("a has {} entries but b has {}", a.len(), b.len())));
    }
    if let Some(i) = a.iter().chain(b).position(|&v| v == 0) {
        return Err(Error::pre(format!("exponents must be positive (entry {})", i + 1)));
    }
    let mut prod: u128 = 1;
    for (i, (&ai, &bi)) in a.iter().zip(b).enumerate() {
        prod = prod
            .checked_mul(bi as u128)
            .ok_or_else(|| Error::pre("b_1···b_i overflows"))?;
        if (ai as u128).gcd(&prod) != 1 {
            return Err(Error::pre(format!(
                "gcd(a_{n}, b_1···b_{n}) = gcd({ai}, {prod}) ≠ 1 at index {n}",
                n = i + 1
            )));
        }
    }
    Ok(())
}

/// Generators `z_i^{a_i} + z_{i-1}^{b_i}` (1 ≤ i ≤ n) in `k[z_0..z_n]`.
pub fn prime_chain_ideal(field: FieldSpec, n: usize, a: &[u32], b: &[u32]) -> Result<(Arc<Ring>, Vec<Poly>)> {
    if a.len() != n || b.len() != n {
        return Err(Error::pre(format!("expected {n} entries in a and b")));
    }
    check_chain_gcds(a, b)?;
    let ring = Ring::new(field, (0..=n).map(|i| format!("z{i}")))?;
    let one = field.one();
    let gens = (1..=n)
        .map(|i| {
            let zi = Poly::term(&ring, Monomial::var(n + 1, i, a[i - 1]), one.clone());
            let zprev = Poly::term(&ring, Monomial::var(n + 1, i - 1, b[i - 1]), one.clone());
            &zi + &zprev
        })
        .collect();
    Ok((ring, gens))
}

/// Data of the threefold `B_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BnData {
    pub field: FieldSpec,
    /// Coefficients of `p(x)`, constant term first.
    pub p_coeffs: Vec<Scalar>,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl BnData {
    pub fn n(&self) -> usize {
        self.a.len()
    }

    fn p_in(&self, ring: &Arc<Ring>) -> Poly {
        let x = ring.var_index("x").expect("ring has x");
        Poly::from_terms(
            ring,
            self.p_coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::var(ring.nvars(), x, e as u32), c.clone())),
        )
    }

    fn validate(&self) -> Result<Vec<String>> {
        check_chain_gcds(&self.a, &self.b)?;
        if self.p_coeffs.iter().any(|c| !self.field.contains(c)) {
            return Err(Error::ContextMismatch(format!("p(x) coefficients must lie in {}", self.field)));
        }
        let nonzero: Vec<usize> = (0..self.p_coeffs.len()).filter(|&i| !self.p_coeffs[i].is_zero()).collect();
        match nonzero.as_slice() {
            [] => Err(Error::pre("p(x) must be nonzero")),
            [0] => Ok(vec!["p(x) is a unit: B_n is a polynomial ring in two variables over k[x]".into()]),
            _ => Ok(Vec::new()),
        }
    }
}

fn bn_ring(data: &BnData) -> Result<Arc<Ring>> {
    let n = data.n();
    Ring::new(data.field, std::iter::once("x".to_string()).chain((0..=n + 1).map(|i| format!("z{i}"))))
}

/// `k[x, z_0..z_{n+1}]/(p(x)·z_{i+1} + z_i^{a_i} + z_{i-1}^{b_i})_{1≤i≤n}`, ungraded.
pub fn bn_algebra(data: &BnData) -> Result<Construction> {
    let notes = data.validate()?;
    let ring = bn_ring(data)?;
    let p = data.p_in(&ring);
    let nv = ring.nvars();
    let one = data.field.one();
    let z = |i: usize| 1 + i;
    let relations = (1..=data.n())
        .map(|i| {
            let lin = &p * &Poly::var(&ring, z(i + 1));
            let pa = Poly::term(&ring, Monomial::var(nv, z(i), data.a[i - 1]), one.clone());
            let pb = Poly::term(&ring, Monomial::var(nv, z(i - 1), data.b[i - 1]), one.clone());
            &(&lin + &pa) + &pb
        })
        .collect();
    Ok(Construction {
        algebra: PresentedAlgebra::new(ring, relations, None)?,
        notes,
    })
}

/// Builds `B_n` as the chain `A_0 = k[x,z_0,z_1]`, `A_m = A_{m-1}[I/p]` with
/// `I = (p, z_m^{a_m} + z_{m-1}^{b_m})`; each step adjoins `z_{m+1}`.
pub fn bn_by_modifications(data: &BnData) -> Result<Construction> {
    let mut notes = data.validate()?;
    let r0 = Ring::new(data.field, ["x", "z0", "z1"])?;
    let mut alg = PresentedAlgebra::free(r0, None)?;
    for m in 1..=data.n() {
        let ring = alg.ring().clone();
        let nv = ring.nvars();
        let one = data.field.one();
        let zm = ring.var_index(&format!("z{m}")).expect("z_m present");
        let zprev = ring.var_index(&format!("z{}", m - 1)).expect("z_(m-1) present");
        let a = &Poly::term(&ring, Monomial::var(nv, zm, data.a[m - 1]), one.clone())
            + &Poly::term(&ring, Monomial::var(nv, zprev, data.b[m - 1]), one.clone());
        let step = affine_modification(&ModificationSpec {
            base: alg,
            f: data.p_in(&ring),
            ideal_gens: vec![-&a],
            new_vars: vec![format!("z{}", m + 1)],
        })?;
        notes.extend(step.notes);
        alg = step.algebra;
    }
    notes.dedup();
    Ok(Construction { algebra: alg, notes })
}

/// Jacobian of the relations at a k-rational point of the variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianReport {
    /// `matrix[i][j] = ∂ relation_i / ∂ var_j`.
    pub matrix: Vec<Vec<Poly>>,
    pub point: Vec<Scalar>,
    pub rank: usize,
    /// `dim 𝔪/𝔪²` = number of variables − rank.
    pub tangent_dim: usize,
}

pub fn jacobian_tangent_dim(alg: &PresentedAlgebra, point: &[Scalar]) -> Result<JacobianReport> {
    let n = alg.nvars();
    if point.len() != n {
        return Err(Error::Arity {
            expected: n,
            got: point.len(),
        });
    }
    for (i, r) in alg.relations().iter().enumerate() {
        let v = r.evaluate(point)?;
        if !v.is_zero() {
            return Err(Error::pre(format!(
                "point is not on the variety: relation {} (`{r}`) evaluates to {v}",
                i + 1
            )));
        }
    }
    let matrix: Vec<Vec<Poly>> = alg
        .relations()
        .iter()
        .map(|r| (0..n).map(|j| r.partial_derivative(j)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let field = alg.ring().field();
    let values: Vec<Vec<Scalar>> = matrix
        .iter()
        .map(|row| row.iter().map(|p| p.evaluate(point)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let rank = Matrix::new(field, n, values).rank();
    Ok(JacobianReport {
        matrix,
        point: point.to_vec(),
        rank,
        tangent_dim: n - rank,
    })
}

pub fn origin(alg: &PresentedAlgebra) -> Vec<Scalar> {
    vec![alg.ring().field().zero(); alg.nvars()]
}
