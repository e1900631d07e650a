//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is a canonical map from [`Monomial`] to nonzero
//! [`Rational`] coefficients. Every polynomial carries its ambient variable
//! count explicitly, since symmetry depends on how many variables are in
//! play: `x1^2` is a different object for `n = 2` than for `n = 3`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational coefficient, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds a rational from an integer.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ambient variable counts differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("expected {expected} values, got {got}")]
    PointLength { expected: usize, got: usize },
    #[error("variable index {index} out of range for {ambient} variables")]
    VariableOutOfRange { index: usize, ambient: usize },
}

impl PolyError {
    pub fn code(&self) -> &'static str {
        match self {
            PolyError::AmbientMismatch { .. } => "poly::ambient_mismatch",
            PolyError::PointLength { .. } => "poly::point_length",
            PolyError::VariableOutOfRange { .. } => "poly::variable_out_of_range",
        }
    }
}

/// Exponent vector `x1^e1 * ... * xn^en`. Its length is the ambient
/// variable count.
///
/// The derived ordering compares exponents position by position, which is
/// exactly the lexicographic monomial order with `x1 > x2 > ... > xn`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(
            !exponents.is_empty(),
            "ambient variable count must be positive"
        );
        Monomial(exponents)
    }

    /// The monomial `1` in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// The monomial `x_{index+1}` (0-based `index`).
    pub fn variable(index: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[index] = 1;
        Monomial::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn ambient_n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Exponent-wise sum, i.e. the product of the two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ambient_n(), other.ambient_n());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// True when the exponents are weakly decreasing.
    pub fn is_sorted_desc(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The orbit representative with weakly decreasing exponents.
    pub fn sorted_desc(&self) -> Monomial {
        let mut e = self.0.clone();
        e.sort_unstable_by(|a, b| b.cmp(a));
        Monomial(e)
    }

    pub(crate) fn into_exponents(self) -> Vec<u32> {
        self.0
    }
}

/// Total degree of a polynomial. The zero polynomial has degree
/// [`Degree::NegInfinity`], which sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ambient_n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "ambient variable count must be positive");
        Polynomial {
            ambient_n: n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(Rational::one(), n)
    }

    pub fn constant(c: Rational, n: usize) -> Self {
        Self::monomial(Monomial::unit(n), c)
    }

    /// `x_{index+1}` in `n` variables.
    pub fn variable(index: usize, n: usize) -> Result<Self, PolyError> {
        if index >= n {
            return Err(PolyError::VariableOutOfRange {
                index: index + 1,
                ambient: n,
            });
        }
        Ok(Self::monomial(
            Monomial::variable(index, n),
            Rational::one(),
        ))
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(m.ambient_n());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    ///
    /// Panics if a monomial's length differs from `n`.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            assert_eq!(m.ambient_n(), n, "monomial ambient mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of monomials.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys()
    }

    /// Coefficient of `m`, or `None` if the term is absent.
    pub fn coefficient(&self, m: &Monomial) -> Option<&Rational> {
        self.terms.get(m)
    }

    /// Constant term, zero if absent.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::unit(self.ambient_n))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The lex-greatest term, if any.
    pub fn lex_max(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ambient_n != other.ambient_n {
            return Err(PolyError::AmbientMismatch {
                left: self.ambient_n,
                right: other.ambient_n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ambient(other)?;
        let mut out = Polynomial::zero(self.ambient_n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ambient_n);
        }
        Polynomial {
            ambient_n: self.ambient_n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// `self^e` by repeated squaring; `pow(0) == 1`, including `0^0`.
    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.ambient_n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces each `x_k` by `images[k]` and expands over the images'
    /// common ambient count.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.ambient_n {
            return Err(PolyError::PointLength {
                expected: self.ambient_n,
                got: images.len(),
            });
        }
        let m = images[0].ambient_n;
        if let Some(bad) = images.iter().find(|p| p.ambient_n != m) {
            return Err(PolyError::AmbientMismatch {
                left: m,
                right: bad.ambient_n,
            });
        }
        // powers[k][e] = images[k]^e, grown on demand
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(m)]; images.len()];
        let mut out = Polynomial::zero(m);
        for (mono, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone(), m);
            for (k, &e) in mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[k];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &images[k];
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.ambient_n {
            return Err(PolyError::PointLength {
                expected: self.ambient_n,
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::degree)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Splits into homogeneous parts keyed by total degree. The zero
    /// polynomial yields an empty map.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.ambient_n))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Applies `f` to every exponent vector. Coefficients of colliding
    /// images are summed.
    pub fn map_monomials<F>(&self, mut f: F) -> Polynomial
    where
        F: FnMut(&Monomial) -> Monomial,
    {
        let mut out = Polynomial::zero(self.ambient_n);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics on ambient mismatch; use the `checked_*` method to get an error instead.
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ambient mismatch")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ambient_n: self.ambient_n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
