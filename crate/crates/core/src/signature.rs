//! Signature sequences of positively graded algebras.
//!
//! Membership in the subalgebra `k[h_1, …, h_m]` is decided one degree at a
//! time: a homogeneous `f` of degree `d` lies in the subalgebra iff it lies in
//! the k-span of the products `h^e` of degree exactly `d`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graded::{graded_piece_basis, homogeneity, homogeneous_components, Homogeneity, PresentedAlgebra};
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// Expression of the element as a polynomial in generator symbols
    /// `X1, X2, …`.
    Member(Poly),
    NotMember,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

/// Elements `h_1, …, h_m` (with `h_0 = 1` implicit) and their degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureSequence {
    pub elements: Vec<Poly>,
    pub degrees: Vec<i64>,
    pub complete_up_to: i64,
    /// Every generator of the algebra lies in `k[h_1, …, h_m]`, so the
    /// sequence generates the whole algebra.
    pub complete: bool,
}

impl SignatureSequence {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Generator of the subgroup `⟨d_1, …, d_i⟩ ⊂ ℤ`.
    pub fn degree_subgroup(&self, i: usize) -> i64 {
        self.degrees[..i.min(self.degrees.len())]
            .iter()
            .fold(0, |g, d| g.gcd(d))
    }
}

/// Homogeneous generators with their degrees and cached powers.
struct Generators<'a> {
    alg: &'a PresentedAlgebra,
    gens: Vec<Poly>,
    degrees: Vec<i64>,
    powers: Vec<Vec<Poly>>,
}

impl<'a> Generators<'a> {
    fn new(alg: &'a PresentedAlgebra) -> Self {
        Generators {
            alg,
            gens: Vec::new(),
            degrees: Vec::new(),
            powers: Vec::new(),
        }
    }

    fn push(&mut self, g: Poly, degree: i64) {
        self.powers.push(vec![Poly::one(self.alg.ring())]);
        self.gens.push(g);
        self.degrees.push(degree);
    }

    fn power(&mut self, i: usize, k: u32) -> Poly {
        while self.powers[i].len() <= k as usize {
            let last = self.powers[i].last().expect("power 0 present");
            let next = self.alg.reduce(&(last * &self.gens[i]));
            self.powers[i].push(next);
        }
        self.powers[i][k as usize].clone()
    }

    /// Exponent vectors `e` with `Σ e_i · deg_i = d`.
    fn exponent_vectors(&self, d: i64) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.degrees.len()];
        fill(&self.degrees, 0, d, &mut cur, &mut out);
        out
    }

    /// Normal forms of all generator products of degree `d`.
    fn products(&mut self, d: i64) -> Vec<(Vec<u32>, Poly)> {
        self.exponent_vectors(d)
            .into_iter()
            .map(|e| {
                let mut p = Poly::one(self.alg.ring());
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        p = self.alg.reduce(&(&p * &self.power(i, k)));
                    }
                }
                (e, p)
            })
            .collect()
    }

    fn symbol_ring(&self) -> Arc<Ring> {
        let names: Vec<String> = (1..=self.gens.len()).map(|i| format!("X{i}")).collect();
        Ring::new(self.alg.ring().field(), names).expect("generated names are valid")
    }

    /// Membership of a homogeneous normal-form `f` of degree `d`.
    fn membership(&mut self, f: &Poly, d: i64) -> Membership {
        let products = self.products(d);
        let symbols = self.symbol_ring();
        if f.is_zero() {
            return Membership::Member(Poly::zero(&symbols));
        }
        let mut coords: BTreeMap<Monomial, usize> = BTreeMap::new();
        for m in products.iter().flat_map(|(_, p)| p.terms().map(|(m, _)| m)).chain(f.terms().map(|(m, _)| m)) {
            let next = coords.len();
            coords.entry(m.clone()).or_insert(next);
        }
        let field = self.alg.ring().field();
        let mut a = Matrix::zeros(field, coords.len(), products.len());
        for (j, (_, p)) in products.iter().enumerate() {
            for (m, c) in p.terms() {
                a.set(coords[m], j, c.clone());
            }
        }
        let mut b = vec![field.zero(); coords.len()];
        for (m, c) in f.terms() {
            b[coords[m]] = c.clone();
        }
        match a.solve(&b) {
            None => Membership::NotMember,
            Some(x) => Membership::Member(Poly::from_terms(
                &symbols,
                products
                    .iter()
                    .zip(x)
                    .map(|((e, _), c)| (Monomial::new(e.clone()), c)),
            )),
        }
    }

    /// Rank of the products of degree `d` inside the graded piece.
    fn span_rank(&mut self, d: i64, basis: &[Monomial]) -> usize {
        let products = self.products(d);
        let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let field = self.alg.ring().field();
        let mut a = Matrix::zeros(field, basis.len(), products.len());
        for (j, (_, p)) in products.iter().enumerate() {
            for (m, c) in p.terms() {
                a.set(index[m], j, c.clone());
            }
        }
        a.rank()
    }
}

fn fill(degrees: &[i64], i: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == degrees.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let mut k = 0u32;
    while k as i64 * degrees[i] <= left {
        cur[i] = k;
        fill(degrees, i + 1, left - k as i64 * degrees[i], cur, out);
        k += 1;
    }
    cur[i] = 0;
}

fn positive_degree(p: &Poly, alg: &PresentedAlgebra, what: &str) -> Result<i64> {
    let w = alg.graded_pieces_supported()?;
    match homogeneity(p, w)? {
        Homogeneity::Homogeneous(d) if d > 0 => Ok(d),
        Homogeneity::Homogeneous(_) => Err(Error::pre(format!("{what} `{p}` has degree 0"))),
        Homogeneity::ZeroPolynomial => Err(Error::pre(format!("{what} is zero"))),
        Homogeneity::NotHomogeneous => Err(Error::pre(format!("{what} `{p}` is not homogeneous"))),
    }
}

/// Decides whether the homogeneous `f` lies in `k[gens]`.
pub fn subalgebra_membership(f: &Poly, gens: &[Poly], alg: &PresentedAlgebra, bound: i64) -> Result<Membership> {
    let w = alg.graded_pieces_supported()?;
    f.same_context(&Poly::zero(alg.ring()))?;
    let f = alg.reduce(f);
    let d = match homogeneity(&f, w)? {
        Homogeneity::Homogeneous(d) => d,
        Homogeneity::ZeroPolynomial => 0,
        Homogeneity::NotHomogeneous => {
            return Err(Error::pre(format!("`{f}` is not homogeneous; test its components separately")))
        }
    };
    if d > bound {
        return Err(Error::pre(format!("degree {d} exceeds the bound {bound}")));
    }
    let mut g = Generators::new(alg);
    for h in gens {
        h.same_context(&f)?;
        let h = alg.reduce(h);
        let dh = positive_degree(&h, alg, "generator")?;
        g.push(h, dh);
    }
    Ok(g.membership(&f, d))
}

/// Greedy signature sequence: scan degrees `1..=bound` upwards and adjoin
/// the graded-lex-smallest basis monomial outside the current subalgebra,
/// one at a time, until every degree is covered.
pub fn compute_signature_sequence(alg: &PresentedAlgebra, bound: i64) -> Result<SignatureSequence> {
    let w = alg.graded_pieces_supported()?.clone();
    let min_weight = w.as_slice().iter().copied().min().unwrap_or(0);
    if alg.nvars() > 0 && bound < min_weight {
        return Err(Error::pre(format!(
            "bound {bound} is below the smallest weight {min_weight}; nothing to search"
        )));
    }
    let ring = alg.ring().clone();
    let mut g = Generators::new(alg);
    for d in 1..=bound {
        let basis = graded_piece_basis(alg, d)?;
        if basis.is_empty() {
            continue;
        }
        while g.span_rank(d, &basis) < basis.len() {
            let field = ring.field();
            let pick = basis
                .iter()
                .rev()
                .find(|m| {
                    let f = Poly::term(&ring, (*m).clone(), field.one());
                    !g.membership(&f, d).is_member()
                })
                .expect("rank deficit implies a non-member basis monomial")
                .clone();
            g.push(Poly::term(&ring, pick, field.one()), d);
        }
    }
    let complete = (0..alg.nvars()).all(|v| {
        let wv = w.as_slice()[v];
        wv <= bound && g.membership(&alg.reduce(&Poly::var(&ring, v)), wv).is_member()
    });
    Ok(SignatureSequence {
        elements: g.gens,
        degrees: g.degrees,
        complete_up_to: bound,
        complete,
    })
}

/// Checks that every homogeneous component of `b` (all of degree below
/// `d_n`) lies in `k[h_1, …, h_{n-1}]`. `n` is 1-based.
pub fn check_proposition_intersect(
    alg: &PresentedAlgebra,
    seq: &SignatureSequence,
    n: usize,
    b: &Poly,
) -> Result<bool> {
    if n == 0 || n > seq.len() {
        return Err(Error::pre(format!("index {n} outside 1..={}", seq.len())));
    }
    let w = alg.graded_pieces_supported()?;
    b.same_context(&Poly::zero(alg.ring()))?;
    if &alg.reduce(b) != b {
        return Err(Error::pre(format!("`{b}` is not in normal form")));
    }
    let dn = seq.degrees[n - 1];
    let comps = homogeneous_components(b, w);
    if let Some((&d, _)) = comps.iter().next_back().filter(|(&d, _)| d >= dn) {
        return Err(Error::pre(format!("`{b}` has a component of degree {d} ≥ d_{n} = {dn}")));
    }
    let gens = &seq.elements[..n - 1];
    for comp in comps.values() {
        if !subalgebra_membership(comp, gens, alg, dn)?.is_member() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degreewise linear independence of the products `h_i^p h_j^q` with
/// `p·d_i + q·d_j ≤ bound`; `i < j` are 1-based.
pub fn pairwise_independence(alg: &PresentedAlgebra, seq: &SignatureSequence, i: usize, j: usize, bound: i64) -> Result<bool> {
    if !(0 < i && i < j && j <= seq.len()) {
        return Err(Error::pre(format!("need 0 < i < j ≤ {}, got i={i}, j={j}", seq.len())));
    }
    let (hi, hj) = (&seq.elements[i - 1], &seq.elements[j - 1]);
    let (di, dj) = (seq.degrees[i - 1], seq.degrees[j - 1]);
    let mut by_degree: BTreeMap<i64, Vec<Poly>> = BTreeMap::new();
    let mut pi = Poly::one(alg.ring());
    let mut p = 0i64;
    while p * di <= bound {
        let mut prod = pi.clone();
        let mut q = 0i64;
        while p * di + q * dj <= bound {
            by_degree.entry(p * di + q * dj).or_default().push(prod.clone());
            prod = alg.reduce(&(&prod * hj));
            q += 1;
        }
        pi = alg.reduce(&(&pi * hi));
        p += 1;
    }
    let field = alg.ring().field();
    for polys in by_degree.values() {
        if polys.len() < 2 {
            if polys.iter().any(Poly::is_zero) {
                return Ok(false);
            }
            continue;
        }
        let mut coords: BTreeMap<&Monomial, usize> = BTreeMap::new();
        for m in polys.iter().flat_map(|p| p.terms().map(|(m, _)| m)) {
            let next = coords.len();
            coords.entry(m).or_insert(next);
        }
        let mut a = Matrix::zeros(field, coords.len(), polys.len());
        for (col, poly) in polys.iter().enumerate() {
            for (m, c) in poly.terms() {
                a.set(coords[m], col, c.clone());
            }
        }
        if a.rank() < polys.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
