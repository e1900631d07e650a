//! Exact decomposition of symmetric polynomials into elementary symmetric
//! polynomials.
//!
//! Every symmetric polynomial in `x1, ..., xn` with rational coefficients is
//! a unique polynomial in `s1, ..., sn`, where `s_k` is the sum of all
//! products of `k` distinct variables. This crate computes that
//! representation two ways (lexicographic reduction and spreadiness
//! reduction), extends it to symmetric rational functions, and applies it to
//! questions about the roots of a polynomial that can be answered from its
//! coefficients alone.
//!
//! ```
//! use symdecomp::{decompose_lex, parse_poly, ExprSource};
//!
//! let f = parse_poly(&ExprSource::with_ambient("(x1 - x2)^2", 2)).unwrap();
//! let (g, _trace) = decompose_lex(&f).unwrap();
//! assert_eq!(g.to_string(), "s1^2 - 4*s2");
//! ```

pub mod applications;
pub mod decompose;
pub mod elementary;
pub mod parse;
pub mod poly;
pub mod print;
pub mod rational_fn;
pub mod symmetry;

pub use applications::{
    common_root, power_roots_symbolic, power_roots_transform, resultant_vs_roots,
    root_product_symbolic, ApplicationError, MonicPoly,
};
pub use decompose::{
    decompose, decompose_lex, decompose_spreadiness, decompose_spreadiness_with, expand_sigma,
    exponent_variance, gravity_height, lex_compare, lex_leading_term,
    sigma_exponent_from_partition, spreadiness, spreadiness_lemma_report, verify_spreadiness_lemma,
    Algorithm, DecomposeError, DecompositionTrace, LemmaReport, Metric, SigmaPolynomial,
    SpreadLevel, TraceStep,
};
pub use elementary::{
    elementary_sigma, eval_univariate, monic_from_roots, power_sum, sigma_product_expand,
    vieta_coefficients, ElementaryError, SigmaExponent, VietaTerm,
};
pub use parse::{parse_poly, parse_rational, parse_sigma, ExprSource, ParseError, ParseErrorKind};
pub use poly::{Degree, Monomial, PolyError, Polynomial, Rational};
pub use print::{print_monomial, print_poly, print_rational_pq, print_sigma, print_univariate};
pub use rational_fn::{
    decompose_rational, is_symmetric_rf, symmetrized_quotient, ProductReading, RationalError,
    RationalFunction, RationalOptions, SigmaRationalFunction,
};
pub use symmetry::{
    apply_permutation, is_symmetric, monomial_orbit, orbit_sum, permutation_product,
    symmetry_witness, AsymmetryWitness, FactorialGuard, Permutation, SymmetryError,
};
