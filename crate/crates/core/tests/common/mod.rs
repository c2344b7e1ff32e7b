#![allow(dead_code)]

use gradalg::bk::BkData;
use gradalg::FieldSpec;
use rand::seq::SliceRandom;
use rand::Rng;

const PRIMES: [i64; 6] = [2, 3, 5, 7, 11, 13];

/// Valid data: exponents are powers of distinct primes, sorted descending;
/// λ_1 = 1 and the other λ_i are distinct nonzero rationals.
pub fn random_bk<R: Rng>(rng: &mut R, max_n: usize) -> BkData {
    let n = rng.gen_range(0..=max_n.min(4));
    let mut primes = PRIMES.to_vec();
    primes.shuffle(rng);
    let mut e: Vec<i64> = primes[..n + 2]
        .iter()
        .map(|&p| if p <= 5 && rng.gen_bool(0.3) { p * p } else { p })
        .collect();
    e.sort_unstable_by(|a, b| b.cmp(a));
    let q = FieldSpec::Rationals;
    let mut lambdas = vec![q.one()];
    while lambdas.len() < n {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=4);
        let l = q.from_ratio(&num.into(), &den.into()).unwrap();
        if !l.is_zero() && !lambdas.contains(&l) {
            lambdas.push(l);
        }
    }
    lambdas.truncate(n);
    BkData {
        field: q,
        a: e[0],
        b: e[1],
        c: e[2..].to_vec(),
        lambdas,
    }
}

pub fn bk(a: i64, b: i64, c: &[i64], l: &[i64]) -> BkData {
    BkData::new(FieldSpec::Rationals, a, b, c.to_vec(), l)
}
