//! Questions about the roots of a monic polynomial answered from its
//! coefficients alone, by writing the answer as a symmetric function of the
//! roots and decomposing it.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::decompose::{decompose_lex, DecomposeError, SigmaPolynomial};
use crate::elementary::elementary_sigma;
use crate::poly::{Monomial, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApplicationError {
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("polynomial must have degree at least 1")]
    DegreeZero,
    #[error("leading coefficient must be 1")]
    NotMonic,
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
}

impl ApplicationError {
    pub fn code(&self) -> &'static str {
        match self {
            ApplicationError::ZeroPower => "applications::zero_power",
            ApplicationError::DegreeZero => "applications::degree_zero",
            ApplicationError::NotMonic => "applications::not_monic",
            ApplicationError::Decompose(e) => e.code(),
        }
    }
}

/// `z^n + c[0] z^(n-1) + ... + c[n-1]`; the leading 1 is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicPoly {
    coefficients: Vec<Rational>,
}

impl MonicPoly {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        MonicPoly { coefficients }
    }

    /// From a full degree-descending list whose first entry must be 1.
    pub fn from_full(coeffs: &[Rational]) -> Result<Self, ApplicationError> {
        match coeffs.split_first() {
            Some((lead, rest)) if lead.is_one() => Ok(MonicPoly::new(rest.to_vec())),
            _ => Err(ApplicationError::NotMonic),
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    /// Coefficients below the leading term, degree-descending.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Degree-descending list including the leading 1.
    pub fn to_full(&self) -> Vec<Rational> {
        std::iter::once(Rational::one())
            .chain(self.coefficients.iter().cloned())
            .collect()
    }

    /// The values of `s1..sn` on the roots: `s_k = (-1)^k c_k`.
    pub fn sigma_values(&self) -> Vec<Rational> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { -c.clone() } else { c.clone() })
            .collect()
    }
}

/// Coefficients (below the leading 1) of the monic polynomial whose roots
/// are the `m`-th powers of the roots of the generic degree-`n` polynomial,
/// as σ-polynomials: entry `k-1` multiplies `z^(n-k)` and equals
/// `(-1)^k e_k(x1^m, ..., xn^m)` rewritten in `s1..sn`.
pub fn power_roots_symbolic(n: usize, m: u32) -> Result<Vec<SigmaPolynomial>, ApplicationError> {
    if m == 0 {
        return Err(ApplicationError::ZeroPower);
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let powers: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = m;
            Polynomial::monomial(Monomial::new(e), Rational::one())
        })
        .collect();
    (1..=n)
        .map(|k| {
            let ek = elementary_sigma(k, n)
                .expect("k in range")
                .substitute(&powers)
                .expect("sizes match");
            let (g, _) = decompose_lex(&ek)?;
            Ok(if k % 2 == 1 {
                g.scale(&-Rational::one())
            } else {
                g
            })
        })
        .collect()
}

/// The monic polynomial whose roots are the `m`-th powers of `f`'s roots.
/// Works from `f`'s coefficients only.
pub fn power_roots_transform(f: &MonicPoly, m: u32) -> Result<MonicPoly, ApplicationError> {
    let symbolic = power_roots_symbolic(f.degree(), m)?;
    let sigma = f.sigma_values();
    let coefficients = symbolic
        .iter()
        .map(|g| g.evaluate(&sigma).expect("sizes match"))
        .collect();
    Ok(MonicPoly::new(coefficients))
}

/// `prod_i g(x_i)` over `n` root symbols, rewritten in `s1..sn`. `g` is a
/// degree-descending coefficient list; it need not be monic.
pub fn root_product_symbolic(
    n: usize,
    g: &[Rational],
) -> Result<SigmaPolynomial, ApplicationError> {
    if n == 0 {
        return Err(ApplicationError::DegreeZero);
    }
    let deg = g.len().saturating_sub(1);
    let mut product = Polynomial::one(n);
    for i in 0..n {
        let gi = Polynomial::from_terms(
            n,
            g.iter().enumerate().map(|(j, c)| {
                let mut e = vec![0; n];
                e[i] = (deg - j) as u32;
                (Monomial::new(e), c.clone())
            }),
        );
        product = &product * &gi;
    }
    Ok(decompose_lex(&product)?.0)
}

/// `prod_i g(alpha_i)` over the roots `alpha_i` of `f`, computed without
/// finding them. Zero exactly when `f` and `g` have a common root.
///
/// This is the resultant of `f` and `g` only up to a power of `g`'s leading
/// coefficient, which is not normalized away.
pub fn resultant_vs_roots(f: &MonicPoly, g: &[Rational]) -> Result<Rational, ApplicationError> {
    if f.degree() == 0 {
        return Err(ApplicationError::DegreeZero);
    }
    let symbolic = root_product_symbolic(f.degree(), g)?;
    Ok(symbolic.evaluate(&f.sigma_values()).expect("sizes match"))
}

pub fn common_root(f: &MonicPoly, g: &[Rational]) -> Result<bool, ApplicationError> {
    resultant_vs_roots(f, g).map(|v| v.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::{eval_univariate, monic_from_roots};
    use crate::parse::{parse_sigma, ExprSource};
    use crate::poly::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| int(c)).collect()
    }

    fn monic(full: &[i64]) -> MonicPoly {
        MonicPoly::from_full(&ints(full)).unwrap()
    }

    #[test]
    fn symbolic_squares_of_quadratic_roots() {
        let coeffs = power_roots_symbolic(2, 2).unwrap();
        let s = |t: &str| parse_sigma(&ExprSource::with_ambient(t, 2)).unwrap();
        assert_eq!(coeffs, vec![s("-(s1^2 - 2*s2)"), s("s2^2")]);
    }

    #[test]
    fn power_roots_examples() {
        let f = monic(&[1, -3, 2]);
        assert_eq!(power_roots_transform(&f, 1).unwrap(), f);
        assert_eq!(power_roots_transform(&f, 2).unwrap(), monic(&[1, -5, 4]));
        // roots +-sqrt(2) square to 2, 2
        assert_eq!(
            power_roots_transform(&monic(&[1, 0, -2]), 2).unwrap(),
            monic(&[1, -4, 4])
        );
        let cubic = MonicPoly::from_full(&monic_from_roots(&ints(&[1, -2, 3]))).unwrap();
        let cubed = power_roots_transform(&cubic, 3).unwrap();
        assert_eq!(cubed.to_full(), monic_from_roots(&ints(&[1, -8, 27])));
        assert_eq!(
            power_roots_transform(&f, 0),
            Err(ApplicationError::ZeroPower)
        );
    }

    #[test]
    fn resultant_examples() {
        let f = monic(&[1, -3, 2]);
        assert_eq!(resultant_vs_roots(&f, &ints(&[1, -2])).unwrap(), int(0));
        assert_eq!(resultant_vs_roots(&f, &ints(&[1, -5])).unwrap(), int(12));
        assert!(common_root(&f, &f.to_full()).unwrap());
        assert!(common_root(&f, &ints(&[1, -5, 6])).unwrap());
        assert!(!common_root(&f, &ints(&[1, -7, 12])).unwrap());
        assert!(!common_root(&f, &ints(&[1])).unwrap());
        // non-monic g is used as-is
        let g = ints(&[2, -10]);
        let direct: Rational = [int(1), int(2)]
            .iter()
            .map(|r| eval_univariate(&g, r))
            .product();
        assert_eq!(resultant_vs_roots(&f, &g).unwrap(), direct);
        assert_eq!(
            resultant_vs_roots(&MonicPoly::new(vec![]), &g),
            Err(ApplicationError::DegreeZero)
        );
    }

    #[test]
    fn monic_validation() {
        assert_eq!(
            MonicPoly::from_full(&ints(&[2, 1])),
            Err(ApplicationError::NotMonic)
        );
        assert_eq!(MonicPoly::from_full(&[]), Err(ApplicationError::NotMonic));
        assert_eq!(monic(&[1, -3, 2]).sigma_values(), ints(&[3, 2]));
    }
}
