//! Elementary symmetric polynomials and the objects built from them.
//!
//! Single-variable polynomials in `z` are plain coefficient slices in
//! degree-descending order, never [`Polynomial`]s.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementaryError {
    #[error("index {k} out of range 1..={n}")]
    OutOfRange { k: usize, n: usize },
    #[error("power sum exponent must be at least 1")]
    ZeroPower,
}

impl ElementaryError {
    pub fn code(&self) -> &'static str {
        match self {
            ElementaryError::OutOfRange { .. } => "elementary::out_of_range",
            ElementaryError::ZeroPower => "elementary::zero_power",
        }
    }
}

/// Exponents `(k1, ..., kn)` of the product `s1^k1 * ... * sn^kn`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SigmaExponent(Vec<u32>);

impl SigmaExponent {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(
            !exponents.is_empty(),
            "ambient variable count must be positive"
        );
        SigmaExponent(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        SigmaExponent::new(vec![0; n])
    }

    /// `s_k` alone (1-based `k`).
    pub fn unit(k: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[k - 1] = 1;
        SigmaExponent::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn ambient_n(&self) -> usize {
        self.0.len()
    }

    /// Degree of the expanded product, `sum_j j * k_j`.
    pub fn weighted_degree(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &k)| (j as u32 + 1) * k)
            .sum()
    }

    /// Exponents of the lex-leading monomial of the expanded product:
    /// `x1^(k1+...+kn) x2^(k2+...+kn) ... xn^kn`.
    pub fn leading_monomial(&self) -> Monomial {
        let mut acc = 0;
        let mut out: Vec<u32> = self
            .0
            .iter()
            .rev()
            .map(|k| {
                acc += k;
                acc
            })
            .collect();
        out.reverse();
        Monomial::new(out)
    }

    pub(crate) fn as_monomial(&self) -> Monomial {
        Monomial::new(self.0.clone())
    }
}

impl From<Monomial> for SigmaExponent {
    fn from(m: Monomial) -> Self {
        SigmaExponent(m.into_exponents())
    }
}

/// `s_k` in `n` variables: the sum of all products of `k` distinct variables.
pub fn elementary_sigma(k: usize, n: usize) -> Result<Polynomial, ElementaryError> {
    if k < 1 || k > n {
        return Err(ElementaryError::OutOfRange { k, n });
    }
    // walk the k-subsets as 0/1 exponent vectors
    let mut pattern: Vec<u32> = (0..n).map(|i| u32::from(i >= n - k)).collect();
    let mut out = Polynomial::zero(n);
    loop {
        out.add_term(Monomial::new(pattern.clone()), Rational::one());
        if !crate::symmetry::next_permutation(&mut pattern) {
            break;
        }
    }
    Ok(out)
}

/// Caches `s_j^e` for one ambient size so repeated σ-product expansion
/// does not redo the same multiplications.
#[derive(Debug, Clone)]
pub struct SigmaCache {
    n: usize,
    // powers[j][e] = s_{j+1}^e
    powers: Vec<Vec<Polynomial>>,
}

impl SigmaCache {
    pub fn new(n: usize) -> Self {
        let powers = (1..=n)
            .map(|k| {
                vec![
                    Polynomial::one(n),
                    elementary_sigma(k, n).expect("k in range"),
                ]
            })
            .collect();
        SigmaCache { n, powers }
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    fn power(&mut self, j: usize, e: u32) -> &Polynomial {
        let cache = &mut self.powers[j];
        while cache.len() <= e as usize {
            let next = cache.last().unwrap() * &cache[1];
            cache.push(next);
        }
        &cache[e as usize]
    }

    /// Expanded `s1^k1 * ... * sn^kn`.
    pub fn expand(&mut self, e: &SigmaExponent) -> Polynomial {
        assert_eq!(e.ambient_n(), self.n, "sigma exponent ambient mismatch");
        let mut acc = Polynomial::one(self.n);
        for (j, &k) in e.exponents().iter().enumerate() {
            if k > 0 {
                acc = &acc * self.power(j, k);
            }
        }
        acc
    }
}

/// Expanded product `s1^k1 * ... * sn^kn`, homogeneous of degree `sum j*k_j`.
pub fn sigma_product_expand(e: &SigmaExponent) -> Polynomial {
    SigmaCache::new(e.ambient_n()).expand(e)
}

/// One signed coefficient of the generic monic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VietaTerm {
    /// Power of `z` this coefficient multiplies.
    pub z_power: usize,
    /// `+1` or `-1`.
    pub sign: i8,
    pub sigma: SigmaExponent,
}

/// Coefficients of `z^n - s1 z^(n-1) + s2 z^(n-2) - ... + (-1)^n sn`, one
/// entry per `k = 1..=n` (the leading `z^n` is implicit).
pub fn vieta_coefficients(n: usize) -> Vec<VietaTerm> {
    (1..=n)
        .map(|k| VietaTerm {
            z_power: n - k,
            sign: if k % 2 == 0 { 1 } else { -1 },
            sigma: SigmaExponent::unit(k, n),
        })
        .collect()
}

/// Renders Vieta terms as a polynomial in `z` with σ-coefficients.
pub struct VietaDisplay<'a>(pub &'a [VietaTerm]);

impl fmt::Display for VietaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        write!(f, "{}", z_power(n).unwrap_or_else(|| "1".into()))?;
        for t in self.0 {
            let k = t
                .sigma
                .exponents()
                .iter()
                .position(|&e| e == 1)
                .map_or(0, |i| i + 1);
            let op = if t.sign < 0 { '-' } else { '+' };
            match z_power(t.z_power) {
                Some(z) => write!(f, " {op} s{k}*{z}")?,
                None => write!(f, " {op} s{k}")?,
            }
        }
        Ok(())
    }
}

fn z_power(p: usize) -> Option<String> {
    match p {
        0 => None,
        1 => Some("z".into()),
        p => Some(format!("z^{p}")),
    }
}

/// Coefficients (degree-descending, leading 1) of `prod (z - root)`.
pub fn monic_from_roots(roots: &[Rational]) -> Vec<Rational> {
    let mut coeffs = vec![Rational::one()];
    for r in roots {
        // multiply by (z - r)
        let mut next = coeffs.clone();
        next.push(Rational::zero());
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] -= c * r;
        }
        coeffs = next;
    }
    coeffs
}

/// Horner evaluation of a degree-descending coefficient list.
pub fn eval_univariate(coeffs: &[Rational], z: &Rational) -> Rational {
    coeffs.iter().fold(Rational::zero(), |acc, c| acc * z + c)
}

/// `x1^m + ... + xn^m`.
pub fn power_sum(m: u32, n: usize) -> Result<Polynomial, ElementaryError> {
    if m == 0 {
        return Err(ElementaryError::ZeroPower);
    }
    if n == 0 {
        return Err(ElementaryError::OutOfRange { k: 1, n });
    }
    Ok(Polynomial::from_terms(
        n,
        (0..n).map(|i| {
            let mut e = vec![0; n];
            e[i] = m;
            (Monomial::new(e), Rational::one())
        }),
    ))
}
