//! Exhaustive oracles over small prime fields.
//!
//! Irreducibility is decided by running through every normalized candidate
//! factor `u` and solving `u·v = f` for `v` exactly. This needs no theory
//! beyond the graded structure: a product of terms of degrees `du` and `dv`
//! lands in degree `du + dv`, and in the domains handled here top-degree
//! parts multiply to nonzero elements.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::graded::{graded_piece_basis, weighted_degree, PresentedAlgebra};
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly};
use crate::scalar::Scalar;

pub const MAX_PRIME: u64 = 7;
pub const MAX_SEARCH_DIM: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    Factored(Poly, Poly),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

/// Normal-form monomials of degree `0..=d`, lowest degree first.
fn monomials_upto(alg: &PresentedAlgebra, d: i64) -> Result<Vec<(i64, Monomial)>> {
    let mut out = Vec::new();
    for k in 0..=d {
        out.extend(graded_piece_basis(alg, k)?.into_iter().map(|m| (k, m)));
    }
    Ok(out)
}

pub fn irreducible_bruteforce(alg: &PresentedAlgebra, f: &Poly, bound: i64, exec: Execution) -> Result<Irreducibility> {
    let field = alg.ring().field();
    let p = field.characteristic();
    if p == 0 || p > MAX_PRIME {
        return Err(Error::pre(format!("brute force needs a prime field with p ≤ {MAX_PRIME}, got {field}")));
    }
    let w = alg.graded_pieces_supported()?.clone();
    f.same_context(&Poly::zero(alg.ring()))?;
    if alg.reduce(f) != *f {
        return Err(Error::pre(format!("`{f}` is not in normal form")));
    }
    if f.is_constant() {
        return Err(Error::pre("f must be non-constant"));
    }
    let mut top = 0;
    for (m, _) in f.terms() {
        let d = weighted_degree(m, &w)?;
        if d > bound {
            return Err(Error::pre(format!("term of degree {d} exceeds the bound {bound}")));
        }
        top = top.max(d);
    }
    let wmin = *w.as_slice().iter().min().expect("at least one variable");
    let space = monomials_upto(alg, bound - wmin)?;
    if space.len() > MAX_SEARCH_DIM {
        return Err(Error::pre(format!(
            "factor search space has dimension {} > {MAX_SEARCH_DIM} at bound {bound}",
            space.len()
        )));
    }

    let all = monomials_upto(alg, top)?;
    let index: HashMap<&Monomial, usize> = all.iter().enumerate().map(|(i, (_, m))| (m, i)).collect();
    let mut target = vec![field.zero(); all.len()];
    for (m, c) in f.terms() {
        target[index[m]] = c.clone();
    }
    let elements = field.elements();

    for du in wmin..=top / 2 {
        let dv = top - du;
        let us: Vec<&(i64, Monomial)> = all.iter().filter(|(d, _)| *d <= du).collect();
        let vs: Vec<&(i64, Monomial)> = all.iter().filter(|(d, _)| *d <= dv).collect();
        let ntop = us.iter().filter(|(d, _)| *d == du).count();
        if ntop == 0 || !vs.iter().any(|(d, _)| *d == dv) {
            continue;
        }
        // products[i][j] = normal form of u_i·v_j as a dense column.
        let products: Vec<Vec<Vec<Scalar>>> = us
            .iter()
            .map(|(_, mu)| {
                vs.iter()
                    .map(|(_, mv)| {
                        let prod = alg.reduce(&Poly::term(alg.ring(), mu.mul(mv), field.one()));
                        let mut col = vec![field.zero(); all.len()];
                        for (m, c) in prod.terms() {
                            col[index[m]] = c.clone();
                        }
                        col
                    })
                    .collect()
            })
            .collect();
        let total = p.pow(us.len() as u32);
        let found = exec::find_map_first(exec, total, |code| {
            let mut coeffs = Vec::with_capacity(us.len());
            let mut rest = code;
            for _ in 0..us.len() {
                coeffs.push(elements[(rest % p) as usize].clone());
                rest /= p;
            }
            // Normalize: the first nonzero coefficient in degree du is 1.
            let lead = us.iter().zip(&coeffs).find(|((d, _), c)| *d == du && !c.is_zero());
            if !lead.is_some_and(|(_, c)| c.is_one()) {
                return None;
            }
            let rows = (0..all.len())
                .map(|r| {
                    (0..vs.len())
                        .map(|j| {
                            coeffs
                                .iter()
                                .enumerate()
                                .filter(|(_, c)| !c.is_zero())
                                .fold(field.zero(), |acc, (i, c)| &acc + &(c * &products[i][j][r]))
                        })
                        .collect()
                })
                .collect();
            let v = Matrix::new(field, vs.len(), rows).solve(&target)?;
            let u_poly = Poly::from_terms(alg.ring(), us.iter().map(|(_, m)| m.clone()).zip(coeffs));
            let v_poly = Poly::from_terms(alg.ring(), vs.iter().map(|(_, m)| m.clone()).zip(v));
            Some((u_poly, v_poly))
        });
        if let Some((u, v)) = found {
            if alg.reduce(&(&u * &v)) != *f || u.is_constant() || v.is_constant() {
                return Err(Error::Invariant(format!("factorization ({u})·({v}) does not reproduce `{f}`")));
            }
            return Ok(Irreducibility::Factored(u, v));
        }
    }
    Ok(Irreducibility::Irreducible)
}

/// Counts normal-form monomials of degree `d` by running through every
/// exponent tuple with `e_v ≤ d / w_v`.
pub fn dimension_bruteforce(alg: &PresentedAlgebra, d: i64) -> Result<usize> {
    let w = alg.graded_pieces_supported()?.as_slice().to_vec();
    if d < 0 {
        return Ok(0);
    }
    let rs = alg.rewrite_system();
    let caps: Vec<i64> = (0..w.len())
        .map(|v| {
            let c = d / w[v];
            match rs.and_then(|r| r.bound(v)) {
                Some(b) => c.min(b as i64 - 1),
                None => c,
            }
        })
        .collect();
    let mut e = vec![0i64; w.len()];
    let mut count = 0;
    loop {
        if e.iter().zip(&w).map(|(a, b)| a * b).sum::<i64>() == d {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == e.len() {
                return Ok(count);
            }
            if e[k] < caps[k] {
                e[k] += 1;
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

/// `dimension_bruteforce` for `d = 0..=upto`.
pub fn dimension_bruteforce_range(alg: &PresentedAlgebra, upto: i64, exec: Execution) -> Result<Vec<usize>> {
    let ds: Vec<i64> = (0..=upto).collect();
    exec::map(exec, &ds, |&d| dimension_bruteforce(alg, d)).into_iter().collect()
}
