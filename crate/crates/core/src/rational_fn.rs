//! Symmetric rational functions as quotients of σ-polynomials.
//!
//! For `f = P/Q`, multiplying top and bottom by every non-identity permuted
//! copy of `Q` makes the denominator the full product over S_n, which is
//! symmetric; the numerator then is too. Both are decomposed separately.
//! No common factors are cancelled, so results are compared by
//! cross-multiplication.

use thiserror::Error;

use crate::decompose::{decompose_lex, expand_sigma, DecomposeError, SigmaPolynomial};
use crate::poly::{PolyError, Polynomial};
use crate::symmetry::{
    all_permutations, apply_permutation, is_symmetric, FactorialGuard, Permutation, SymmetryError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("rational function is not symmetric")]
    NotSymmetric,
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
}

impl RationalError {
    pub fn code(&self) -> &'static str {
        match self {
            RationalError::ZeroDenominator => "rational_fn::zero_denominator",
            RationalError::Poly(e) => e.code(),
            RationalError::NotSymmetric => "rational_fn::not_symmetric",
            RationalError::Symmetry(SymmetryError::SizeGuardExceeded { .. }) => {
                "rational_fn::size_guard_exceeded"
            }
            RationalError::Symmetry(e) => e.code(),
            RationalError::Decompose(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, RationalError> {
        if numerator.ambient_n() != denominator.ambient_n() {
            return Err(PolyError::AmbientMismatch {
                left: numerator.ambient_n(),
                right: denominator.ambient_n(),
            }
            .into());
        }
        if denominator.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(RationalFunction {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn ambient_n(&self) -> usize {
        self.numerator.ambient_n()
    }

    /// `P1 * Q2 == P2 * Q1`.
    pub fn equivalent(&self, other: &RationalFunction) -> Result<bool, RationalError> {
        let lhs = self.numerator.checked_mul(&other.denominator)?;
        let rhs = other.numerator.checked_mul(&self.denominator)?;
        Ok(lhs == rhs)
    }
}

/// Quotient of two σ-polynomials, not reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaRationalFunction {
    pub numerator: SigmaPolynomial,
    pub denominator: SigmaPolynomial,
}

impl SigmaRationalFunction {
    pub fn expand(&self) -> Result<RationalFunction, RationalError> {
        RationalFunction::new(
            expand_sigma(&self.numerator),
            expand_sigma(&self.denominator),
        )
    }
}

/// Symmetry under every adjacent transposition `t`, tested as
/// `t(P) * Q == P * t(Q)` so that non-reduced representations are handled.
pub fn is_symmetric_rf(f: &RationalFunction) -> bool {
    let n = f.ambient_n();
    (1..n).all(|k| {
        let t = Permutation::adjacent_transposition(k, n);
        let tp = apply_permutation(&f.numerator, &t).expect("sizes match");
        let tq = apply_permutation(&f.denominator, &t).expect("sizes match");
        &tp * &f.denominator == &f.numerator * &tq
    })
}

/// How the permuted copies of the denominator are distributed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProductReading {
    /// `P * prod_{pi != id} pi(Q)  /  prod_pi pi(Q)`: the only arrangement in
    /// which both parts are symmetric.
    #[default]
    Complement,
    /// `P * prod_pi pi(Q)  /  Q * prod_pi pi(Q)`: every permuted copy on
    /// both sides. Equal to `f`, but neither part is symmetric unless `Q` is.
    FullWithRepeat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalOptions {
    pub guard: FactorialGuard,
    pub reading: ProductReading,
    /// Decompose `P` and `Q` directly when `Q` is already symmetric.
    pub shortcut: bool,
}

impl Default for RationalOptions {
    fn default() -> Self {
        RationalOptions {
            guard: FactorialGuard::default(),
            reading: ProductReading::Complement,
            shortcut: true,
        }
    }
}

/// Rewrites `f` as a quotient whose parts are built from permuted copies of
/// the denominator, according to `reading`.
pub fn symmetrized_quotient(
    f: &RationalFunction,
    reading: ProductReading,
    guard: FactorialGuard,
) -> Result<RationalFunction, RationalError> {
    let n = f.ambient_n();
    guard.check(n)?;
    let q = &f.denominator;
    let mut others = Polynomial::one(n);
    for p in all_permutations(n).iter().filter(|p| !p.is_identity()) {
        others = &others * &apply_permutation(q, p)?;
    }
    Ok(match reading {
        ProductReading::Complement => RationalFunction {
            numerator: &f.numerator * &others,
            denominator: q * &others,
        },
        ProductReading::FullWithRepeat => {
            let full = q * &others;
            RationalFunction {
                numerator: &f.numerator * &full,
                denominator: q * &full,
            }
        }
    })
}

pub fn decompose_rational(
    f: &RationalFunction,
    options: RationalOptions,
) -> Result<SigmaRationalFunction, RationalError> {
    if !is_symmetric_rf(f) {
        return Err(RationalError::NotSymmetric);
    }
    let parts = if options.shortcut && is_symmetric(&f.denominator) {
        f.clone()
    } else {
        symmetrized_quotient(f, options.reading, options.guard)?
    };
    let (numerator, _) = decompose_lex(&parts.numerator)?;
    let (denominator, _) = decompose_lex(&parts.denominator)?;
    Ok(SigmaRationalFunction {
        numerator,
        denominator,
    })
}
