//! Shared inputs for the benchmarks.

use symdecomp::{elementary_sigma, orbit_sum, Monomial, Polynomial, Rational};

/// `x1^m + ... + xn^m`.
pub fn power_sum(m: u32, n: usize) -> Polynomial {
    let mut e = vec![0; n];
    e[0] = m;
    orbit_sum(&Monomial::new(e))
}

/// Product of all `n` elementary symmetric polynomials, raised to `k`.
pub fn sigma_tower(n: usize, k: u32) -> Polynomial {
    (1..=n).fold(Polynomial::one(n), |acc, j| {
        &acc * &elementary_sigma(j, n).unwrap().pow(k)
    })
}

/// A dense symmetric polynomial: every orbit of degree `d` with coefficient
/// equal to its position.
pub fn all_orbits(n: usize, d: u32) -> Polynomial {
    let mut out = Polynomial::zero(n);
    for (i, p) in partitions(d, n).into_iter().enumerate() {
        let c = Rational::from_integer((i as i64 + 1).into());
        out = &out + &orbit_sum(&Monomial::new(p)).scale(&c);
    }
    out
}

/// Weakly decreasing vectors of length `n` summing to `d`.
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
