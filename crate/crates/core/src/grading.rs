//! Integer weight vectors making a presentation homogeneous, and exact
//! positivity decisions for them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graded::{PresentedAlgebra, WeightVector};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar};

/// Scope note attached to every negative positivity verdict.
pub const GENERATOR_HOMOGENEOUS_CAVEAT: &str = "grading non-existence proven only for generator-homogeneous gradings: \
     the search covers weights making the given generators homogeneous, not every grading of the abstract algebra";

/// `equations[k] · w = 0` for each consecutive pair of terms of each relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneitySystem {
    pub vars: Vec<String>,
    pub equations: Vec<Vec<i64>>,
}

impl HomogeneitySystem {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn satisfied_by(&self, w: &[i64]) -> bool {
        self.equations
            .iter()
            .all(|e| e.iter().zip(w).map(|(&a, &b)| a as i128 * b as i128).sum::<i128>() == 0)
    }
}

/// Terms are read in printed (descending) order; equation `k` of a relation
/// says `deg m_k − deg m_{k+1} = 0`.
pub fn homogeneity_system(alg: &PresentedAlgebra) -> HomogeneitySystem {
    let mut equations = Vec::new();
    for r in alg.relations() {
        let monos: Vec<_> = r.terms().rev().map(|(m, _)| m.exponents().to_vec()).collect();
        for pair in monos.windows(2) {
            equations.push(pair[0].iter().zip(&pair[1]).map(|(&a, &b)| a as i64 - b as i64).collect());
        }
    }
    HomogeneitySystem {
        vars: alg.ring().vars().to_vec(),
        equations,
    }
}

/// `y ≥ 0`, `y ≠ 0` and `y = Σ_k λ_k E_k`. Every `w` in the cone has
/// `y·w = 0`, whereas `w ≥ 1` would force `y·w ≥ Σ y > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfeasibilityCertificate {
    pub variable_multipliers: Vec<BigInt>,
    pub equation_multipliers: Vec<BigInt>,
}

impl InfeasibilityCertificate {
    pub fn verify(&self, sys: &HomogeneitySystem) -> bool {
        let y = &self.variable_multipliers;
        if y.len() != sys.nvars() || self.equation_multipliers.len() != sys.equations.len() {
            return false;
        }
        if y.iter().any(Signed::is_negative) || y.iter().all(Zero::is_zero) {
            return false;
        }
        (0..sys.nvars()).all(|i| {
            let s: BigInt = sys
                .equations
                .iter()
                .zip(&self.equation_multipliers)
                .map(|(e, l)| l * e[i])
                .sum();
            s == y[i]
        })
    }

    /// Human-readable form, e.g. `w_x + w_y = 0`.
    pub fn describe(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .variable_multipliers
            .iter()
            .zip(vars)
            .filter(|(y, _)| !y.is_zero())
            .map(|(y, v)| if y.is_one() { format!("w_{v}") } else { format!("{y}*w_{v}") })
            .collect();
        format!("{} = 0 on the cone, impossible when every weight is ≥ 1", parts.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingCone {
    pub system: HomogeneitySystem,
    /// Primitive integer vectors spanning the solution space.
    pub basis: Vec<WeightVector>,
    pub dimension: usize,
    pub has_positive: bool,
    pub sample_positive: Option<WeightVector>,
    pub certificate: Option<InfeasibilityCertificate>,
}

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Scales a rational vector to a primitive integer vector with the same sign.
fn clear_denominators(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

fn to_weight(v: &[BigInt]) -> Result<WeightVector> {
    v.iter()
        .map(|x| x.to_i64().ok_or_else(|| Error::pre(format!("weight {x} does not fit in i64"))))
        .collect::<Result<Vec<_>>>()
        .map(WeightVector::new)
}

/// `coeffs · t ≥ rhs`, obtained as the `mult`-combination of the rows
/// `basis_i · t ≥ 1`.
#[derive(Debug, Clone)]
struct Ineq {
    coeffs: Vec<Q>,
    rhs: Q,
    mult: Vec<Q>,
}

impl Ineq {
    fn combine(p: &Ineq, n: &Ineq, k: usize) -> Ineq {
        let a = p.coeffs[k].clone();
        let b = -n.coeffs[k].clone();
        let lin = |x: &Q, y: &Q| &b * x + &a * y;
        Ineq {
            coeffs: p.coeffs.iter().zip(&n.coeffs).map(|(x, y)| lin(x, y)).collect(),
            rhs: lin(&p.rhs, &n.rhs),
            mult: p.mult.iter().zip(&n.mult).map(|(x, y)| lin(x, y)).collect(),
        }
    }
}

pub fn solve_grading_cone(sys: &HomogeneitySystem) -> Result<GradingCone> {
    let m = sys.nvars();
    let field = FieldSpec::Rationals;
    let e = Matrix::from_i64(field, m, &sys.equations);
    let ns = e.nullspace();
    let basis_q: Vec<Vec<Q>> = ns
        .iter()
        .map(|v| {
            let qs: Vec<Q> = v.iter().map(|s| s.as_rational().expect("rational").clone()).collect();
            let mut ints = clear_denominators(&qs);
            if ints.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
                ints.iter_mut().for_each(|x| *x = -x.clone());
            }
            ints.into_iter().map(Q::from_integer).collect()
        })
        .collect();
    let basis = basis_q
        .iter()
        .map(|v| to_weight(&v.iter().map(|x| x.to_integer()).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    for b in &basis {
        if !sys.satisfied_by(b.as_slice()) {
            return Err(Error::Invariant(format!("basis vector {b} violates the equations")));
        }
    }
    let dim = basis_q.len();

    // w = Σ_j t_j basis_j; rows w_i ≥ 1.
    let rows: Vec<Ineq> = (0..m)
        .map(|i| Ineq {
            coeffs: basis_q.iter().map(|b| b[i].clone()).collect(),
            rhs: q(1),
            mult: (0..m).map(|k| q((k == i) as i64)).collect(),
        })
        .collect();
    let mut stages = Vec::with_capacity(dim);
    let mut cur = rows;
    for k in 0..dim {
        stages.push(cur.clone());
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in cur {
            if ineq.coeffs[k].is_positive() {
                pos.push(ineq);
            } else if ineq.coeffs[k].is_negative() {
                neg.push(ineq);
            } else {
                rest.push(ineq);
            }
        }
        for p in &pos {
            for n in &neg {
                rest.push(Ineq::combine(p, n, k));
            }
        }
        cur = rest;
    }

    if let Some(bad) = cur.iter().find(|i| i.rhs.is_positive()) {
        let y = clear_denominators(&bad.mult);
        let cert = certificate(sys, &e, y)?;
        return Ok(GradingCone {
            system: sys.clone(),
            basis,
            dimension: dim,
            has_positive: false,
            sample_positive: None,
            certificate: Some(cert),
        });
    }

    let mut t = vec![q(0); dim];
    for k in (0..dim).rev() {
        let mut lower: Option<Q> = None;
        let mut upper: Option<Q> = None;
        for ineq in &stages[k] {
            let a = &ineq.coeffs[k];
            if a.is_zero() {
                continue;
            }
            let others: Q = ineq.coeffs[k + 1..].iter().zip(&t[k + 1..]).map(|(c, x)| c * x).sum();
            let bound = (&ineq.rhs - others) / a;
            if a.is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            }
        }
        t[k] = lower.or(upper).unwrap_or_else(|| q(0));
    }
    let w: Vec<Q> = (0..m)
        .map(|i| basis_q.iter().zip(&t).map(|(b, tj)| &b[i] * tj).sum())
        .collect();
    if w.iter().any(|x| x < &q(1)) {
        return Err(Error::Invariant("back-substitution left a weight below 1".into()));
    }
    let sample = to_weight(&clear_denominators(&w))?;
    if !sys.satisfied_by(sample.as_slice()) {
        return Err(Error::Invariant(format!("sample {sample} violates the equations")));
    }
    Ok(GradingCone {
        system: sys.clone(),
        basis,
        dimension: dim,
        has_positive: true,
        sample_positive: Some(sample),
        certificate: None,
    })
}

fn certificate(sys: &HomogeneitySystem, e: &Matrix, y: Vec<BigInt>) -> Result<InfeasibilityCertificate> {
    // y lies in the row space of E because y·b = 0 for every nullspace vector.
    let field = FieldSpec::Rationals;
    let rhs: Vec<Scalar> = y.iter().map(|v| field.from_bigint(v)).collect();
    let lambda = e
        .transpose()
        .solve(&rhs)
        .ok_or_else(|| Error::Invariant("multipliers are not a combination of the equations".into()))?;
    let lq: Vec<Q> = lambda.iter().map(|s| s.as_rational().expect("rational").clone()).collect();
    let den = lq.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scale = Q::from_integer(den.clone());
    let cert = InfeasibilityCertificate {
        variable_multipliers: y.into_iter().map(|v| v * &den).collect(),
        equation_multipliers: lq.iter().map(|x| (x * &scale).to_integer()).collect(),
    };
    if !cert.verify(sys) {
        return Err(Error::Invariant("infeasibility certificate failed verification".into()));
    }
    Ok(cert)
}

/// Checks `w` against the originating equations directly.
pub fn contains_weight(cone: &GradingCone, w: &WeightVector) -> Result<bool> {
    if w.len() != cone.system.nvars() {
        return Err(Error::Arity {
            expected: cone.system.nvars(),
            got: w.len(),
        });
    }
    Ok(cone.system.satisfied_by(w.as_slice()))
}

/// Divides by the gcd of the entries, keeping signs.
pub fn primitive_normalize(w: &WeightVector) -> Result<WeightVector> {
    if w.is_zero() {
        return Err(Error::pre("cannot normalize the zero vector"));
    }
    let g = w.content();
    Ok(w.as_slice().iter().map(|&x| x / g).collect::<Vec<_>>().into())
}
