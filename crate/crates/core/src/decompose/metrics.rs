//! Monomial orderings and the numeric quantities attached to a monomial.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::DecomposeError;
use crate::elementary::SigmaExponent;
use crate::poly::{Monomial, Polynomial, Rational};

/// Lexicographic order with `x1 > x2 > ... > xn`: the first differing
/// exponent decides.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering, DecomposeError> {
    if a.ambient_n() != b.ambient_n() {
        return Err(DecomposeError::AmbientMismatch {
            left: a.ambient_n(),
            right: b.ambient_n(),
        });
    }
    for (x, y) in a.exponents().iter().zip(b.exponents()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

pub fn lex_leading_term(f: &Polynomial) -> Result<(Monomial, Rational), DecomposeError> {
    let mut terms = f.terms();
    let first = terms.next().ok_or(DecomposeError::ZeroPolynomial)?;
    let mut best = first;
    for t in terms {
        if lex_compare(t.0, best.0)? == Ordering::Greater {
            best = t;
        }
    }
    Ok((best.0.clone(), best.1.clone()))
}

/// Sum of squared exponents.
pub fn spreadiness(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .map(|&e| u64::from(e) * u64::from(e))
        .sum()
}

/// For `i1 >= i2 >= ... >= in`, the exponent vector
/// `(i1 - i2, i2 - i3, ..., i_{n-1} - in, in)` of the σ-product whose
/// lex-leading term is `x^i`.
pub fn sigma_exponent_from_partition(
    partition: &[u32],
    coefficient: Rational,
) -> Result<(SigmaExponent, Rational), DecomposeError> {
    if partition.is_empty() || partition.windows(2).any(|w| w[0] < w[1]) {
        return Err(DecomposeError::NotSorted(partition.to_vec()));
    }
    let mut out: Vec<u32> = partition.windows(2).map(|w| w[0] - w[1]).collect();
    out.push(*partition.last().unwrap());
    Ok((SigmaExponent::new(out), coefficient))
}

/// Height of the centre of gravity of the monomial drawn as stacks of unit
/// bricks, `(s + d) / (2d)`.
pub fn gravity_height(m: &Monomial) -> Result<Rational, DecomposeError> {
    let d = u64::from(m.degree());
    if d == 0 {
        return Err(DecomposeError::ZeroDegree);
    }
    Ok(Rational::new(
        BigInt::from(spreadiness(m) + d),
        BigInt::from(2 * d),
    ))
}

/// Population variance of the exponent multiset.
pub fn exponent_variance(m: &Monomial) -> Rational {
    let n = m.ambient_n() as u64;
    let mean = Rational::new(BigInt::from(m.degree()), BigInt::from(n));
    Rational::new(BigInt::from(spreadiness(m)), BigInt::from(n)) - &mean * &mean
}
