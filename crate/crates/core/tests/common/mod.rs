#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use symdecomp::symmetry::all_permutations;
use symdecomp::{
    apply_permutation, Monomial, Polynomial, Rational, SigmaExponent, SigmaPolynomial,
};

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rand_rational<R: Rng>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn rand_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = rand_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Exponent vector of length `n` with total degree at most `max_degree`.
pub fn rand_exponents<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> Vec<u32> {
    let d = rng.gen_range(0..=max_degree);
    let mut e = vec![0; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

pub fn rand_poly<R: Rng>(rng: &mut R, n: usize, max_degree: u32, max_terms: usize) -> Polynomial {
    let count = rng.gen_range(1..=max_terms);
    Polynomial::from_terms(
        n,
        (0..count).map(|_| {
            (
                Monomial::new(rand_exponents(rng, n, max_degree)),
                rand_nonzero_rational(rng),
            )
        }),
    )
}

/// `sum over all pi in S_n of pi(f)`.
pub fn symmetrize(f: &Polynomial) -> Polynomial {
    all_permutations(f.ambient_n())
        .iter()
        .fold(Polynomial::zero(f.ambient_n()), |acc, p| {
            &acc + &apply_permutation(f, p).unwrap()
        })
}

/// σ-exponent of weighted degree at most `max_degree`.
pub fn rand_sigma_exponent<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> SigmaExponent {
    let budget = rng.gen_range(0..=max_degree);
    let mut e = vec![0; n];
    let mut used = 0;
    loop {
        let j = rng.gen_range(1..=n) as u32;
        if used + j > budget {
            break;
        }
        e[j as usize - 1] += 1;
        used += j;
    }
    SigmaExponent::new(e)
}

pub fn rand_sigma_poly<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> SigmaPolynomial {
    let count = rng.gen_range(1..=max_terms);
    SigmaPolynomial::from_terms(
        n,
        (0..count).map(|_| {
            (
                rand_sigma_exponent(rng, n, max_degree),
                rand_nonzero_rational(rng),
            )
        }),
    )
}

/// Random weakly decreasing exponent vector of length `n` and degree at
/// most `max_degree`.
pub fn rand_partition<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> Vec<u32> {
    let mut e = rand_exponents(rng, n, max_degree);
    e.sort_unstable_by(|a, b| b.cmp(a));
    e
}

/// All weakly decreasing vectors of length `n` with sum exactly `d`.
pub fn partitions(d: u32, n: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for v in (0..=rest.min(max)).rev() {
            prefix.push(v);
            go(rest - v, v, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, n, &mut Vec::new(), &mut out);
    out
}

// ---- single-variable oracle (degree-descending coefficient lists) ----

pub fn trim(p: &[Rational]) -> Vec<Rational> {
    let start = p.iter().position(|c| !c.is_zero()).unwrap_or(p.len());
    p[start..].to_vec()
}

/// Remainder of `a` divided by nonzero `b`.
pub fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let b = trim(b);
    let mut r = trim(a);
    while r.len() >= b.len() && !r.is_empty() {
        let factor = &r[0] / &b[0];
        for (i, c) in b.iter().enumerate() {
            r[i] -= &factor * c;
        }
        r = trim(&r);
    }
    r
}

/// Monic gcd by the Euclidean algorithm; `[]` represents zero.
pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.first().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    debug_assert!(a.is_empty() || a[0].is_one());
    a
}

/// Degree of the gcd is at least one.
pub fn share_root_by_gcd(a: &[Rational], b: &[Rational]) -> bool {
    let g = gcd(a, b);
    g.is_empty() || g.len() >= 2
}

pub fn pick<'a, T, R: Rng>(rng: &mut R, items: &'a [T]) -> &'a T {
    items.choose(rng).unwrap()
}
