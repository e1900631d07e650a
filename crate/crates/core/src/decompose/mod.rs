//! Rewriting symmetric polynomials in the elementary symmetric polynomials.
//!
//! Two independent reductions are provided. [`decompose_lex`] repeatedly
//! cancels the lex-leading term; [`decompose_spreadiness`] cancels a term of
//! maximal spreadiness (sum of squared exponents) together with its
//! conjugates. Both produce the same [`SigmaPolynomial`], because the
//! representation is unique.
//!
//! Non-homogeneous inputs are split into homogeneous components, which are
//! reduced independently in ascending degree order.

mod lemma;
mod metrics;

use std::fmt;

use num_traits::One;
use thiserror::Error;

pub use lemma::{
    spreadiness_lemma_report, verify_spreadiness_lemma, LemmaReport, DEFAULT_LEMMA_MAX_DEGREE,
};
pub use metrics::{
    exponent_variance, gravity_height, lex_compare, lex_leading_term,
    sigma_exponent_from_partition, spreadiness,
};

use crate::elementary::{SigmaCache, SigmaExponent};
use crate::poly::{Monomial, PolyError, Polynomial, Rational};
use crate::symmetry::{monomial_orbit, symmetry_witness, AsymmetryWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("polynomial is not symmetric: swapping x{} and x{} changes the coefficient of {}", .0.transposition, .0.transposition + 1, crate::print::print_monomial(&.0.monomial, 'x'))]
    NotSymmetric(Box<AsymmetryWitness>),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("ambient variable counts differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("exponents {0:?} are not weakly decreasing")]
    NotSorted(Vec<u32>),
    #[error("monomial has degree zero")]
    ZeroDegree,
    #[error("partition degree {degree} exceeds the size guard of {limit}")]
    SizeGuardExceeded { degree: u32, limit: u32 },
}

impl DecomposeError {
    pub fn code(&self) -> &'static str {
        match self {
            DecomposeError::NotSymmetric(_) => "decompose::not_symmetric",
            DecomposeError::ZeroPolynomial => "decompose::zero_polynomial",
            DecomposeError::AmbientMismatch { .. } => "decompose::ambient_mismatch",
            DecomposeError::NotSorted(_) => "decompose::not_sorted",
            DecomposeError::ZeroDegree => "decompose::zero_degree",
            DecomposeError::SizeGuardExceeded { .. } => "decompose::size_guard_exceeded",
        }
    }
}

/// A polynomial in `s1, ..., sn`, the elementary symmetric polynomials of
/// `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaPolynomial(Polynomial);

impl SigmaPolynomial {
    pub fn zero(n: usize) -> Self {
        SigmaPolynomial(Polynomial::zero(n))
    }

    pub fn constant(c: Rational, n: usize) -> Self {
        SigmaPolynomial(Polynomial::constant(c, n))
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (SigmaExponent, Rational)>,
    {
        SigmaPolynomial(Polynomial::from_terms(
            n,
            terms.into_iter().map(|(e, c)| (e.as_monomial(), c)),
        ))
    }

    /// Reinterprets `x_k` as `s_k`.
    pub fn from_polynomial(p: Polynomial) -> Self {
        SigmaPolynomial(p)
    }

    /// The same terms with `s_k` read as a plain variable `x_k`.
    pub fn as_polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn ambient_n(&self) -> usize {
        self.0.ambient_n()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (SigmaExponent, &Rational)> + '_ {
        self.0
            .terms()
            .map(|(m, c)| (SigmaExponent::from(m.clone()), c))
    }

    pub fn coefficient(&self, e: &SigmaExponent) -> Option<&Rational> {
        self.0.coefficient(&e.as_monomial())
    }

    /// Value at `s_k = sigma_values[k-1]`.
    pub fn evaluate(&self, sigma_values: &[Rational]) -> Result<Rational, PolyError> {
        self.0.evaluate(sigma_values)
    }

    pub fn scale(&self, c: &Rational) -> SigmaPolynomial {
        SigmaPolynomial(self.0.scale(c))
    }

    pub fn checked_add(&self, other: &SigmaPolynomial) -> Result<SigmaPolynomial, PolyError> {
        self.0.checked_add(&other.0).map(SigmaPolynomial)
    }

    pub fn checked_mul(&self, other: &SigmaPolynomial) -> Result<SigmaPolynomial, PolyError> {
        self.0.checked_mul(&other.0).map(SigmaPolynomial)
    }

    fn add_term(&mut self, e: SigmaExponent, c: Rational) {
        self.0.add_term(e.as_monomial(), c);
    }
}

impl fmt::Display for SigmaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::print::print_sigma(self))
    }
}

/// Expands `sum c * s^e` back into the `x` variables.
pub fn expand_sigma(g: &SigmaPolynomial) -> Polynomial {
    let n = g.ambient_n();
    let mut cache = SigmaCache::new(n);
    let mut out = Polynomial::zero(n);
    for (e, c) in g.terms() {
        for (m, v) in cache.expand(&e).terms() {
            out.add_term(m.clone(), v * c);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Lex,
    Spreadiness,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Lex => "lex",
            Algorithm::Spreadiness => "spread",
        }
    }
}

/// Spreadiness level of a remainder: the maximal spreadiness among its
/// terms and how many terms attain it. Ordered by `max`, then `count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpreadLevel {
    pub max: u64,
    pub count: usize,
}

/// Termination measure of the remaining homogeneous component. `None`
/// means the component has been fully cancelled and sorts below any value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Metric {
    Lex(Option<Monomial>),
    Spread(Option<SpreadLevel>),
}

impl Metric {
    /// True when `self` is strictly below `other` in the measure's order.
    /// Metrics of different algorithms are incomparable.
    pub fn is_below(&self, other: &Metric) -> bool {
        match (self, other) {
            (Metric::Lex(a), Metric::Lex(b)) => a < b,
            (Metric::Spread(a), Metric::Spread(b)) => a < b,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// Degree of the homogeneous component this step belongs to.
    pub degree: u32,
    pub selected: Monomial,
    pub coefficient: Rational,
    pub sigma_exponent: SigmaExponent,
    pub metric_before: Metric,
    pub metric_after: Metric,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTrace {
    pub algorithm: Algorithm,
    pub steps: Vec<TraceStep>,
}

impl DecompositionTrace {
    /// Every step lowers the measure, and consecutive steps within one
    /// component chain (`after` of one is `before` of the next).
    pub fn is_strictly_decreasing(&self) -> bool {
        let each = self
            .steps
            .iter()
            .all(|s| s.metric_after.is_below(&s.metric_before));
        let chained = self
            .steps
            .windows(2)
            .filter(|w| w[0].degree == w[1].degree)
            .all(|w| w[0].metric_after == w[1].metric_before);
        each && chained
    }
}

pub type Decomposition = (SigmaPolynomial, DecompositionTrace);

fn lex_metric(rem: &Polynomial) -> Metric {
    Metric::Lex(rem.lex_max().map(|(m, _)| m.clone()))
}

fn spread_level(rem: &Polynomial) -> Option<SpreadLevel> {
    let max = rem.monomials().map(spreadiness).max()?;
    let count = rem.monomials().filter(|m| spreadiness(m) == max).count();
    Some(SpreadLevel { max, count })
}

fn spread_metric(rem: &Polynomial) -> Metric {
    Metric::Spread(spread_level(rem))
}

/// Shared reduction loop. `select` picks the term to cancel from a nonzero
/// symmetric homogeneous remainder.
fn reduce<S>(
    f: &Polynomial,
    algorithm: Algorithm,
    mut select: S,
    metric: fn(&Polynomial) -> Metric,
) -> Result<Decomposition, DecomposeError>
where
    S: FnMut(&Polynomial) -> (Monomial, Rational),
{
    if let Some(w) = symmetry_witness(f) {
        return Err(DecomposeError::NotSymmetric(Box::new(w)));
    }
    let n = f.ambient_n();
    let mut cache = SigmaCache::new(n);
    let mut result = SigmaPolynomial::zero(n);
    let mut steps = Vec::new();
    for (degree, mut rem) in f.homogeneous_components() {
        let mut before = metric(&rem);
        while !rem.is_zero() {
            let (selected, c) = select(&rem);
            let (e, c) = sigma_exponent_from_partition(selected.sorted_desc().exponents(), c)?;
            let g = cache.expand(&e).scale(&c);
            rem = &rem - &g;
            let after = metric(&rem);
            steps.push(TraceStep {
                degree,
                selected,
                coefficient: c.clone(),
                sigma_exponent: e.clone(),
                metric_before: before,
                metric_after: after.clone(),
            });
            result.add_term(e, c);
            before = after;
        }
    }
    Ok((result, DecompositionTrace { algorithm, steps }))
}

/// Classical reduction: cancel the lex-leading term `c x^i` with
/// `c s1^(i1-i2) s2^(i2-i3) ... sn^in` until nothing remains.
pub fn decompose_lex(f: &Polynomial) -> Result<Decomposition, DecomposeError> {
    reduce(
        f,
        Algorithm::Lex,
        |rem| {
            let (m, c) = rem.lex_max().expect("nonzero remainder");
            debug_assert!(
                m.is_sorted_desc(),
                "lex-leading term of a symmetric polynomial is sorted"
            );
            (m.clone(), c.clone())
        },
        lex_metric,
    )
}

/// Spreadiness reduction with the deterministic tie-break: among terms of
/// maximal spreadiness, the lex-greatest is cancelled.
pub fn decompose_spreadiness(f: &Polynomial) -> Result<Decomposition, DecomposeError> {
    decompose_spreadiness_with(f, |candidates| candidates.len() - 1)
}

/// Spreadiness reduction with a caller-chosen term. `pick` receives every
/// monomial of maximal spreadiness (ascending lex order) and returns the
/// index of the one to cancel. Any choice yields the same result.
pub fn decompose_spreadiness_with<P>(
    f: &Polynomial,
    mut pick: P,
) -> Result<Decomposition, DecomposeError>
where
    P: FnMut(&[Monomial]) -> usize,
{
    reduce(
        f,
        Algorithm::Spreadiness,
        |rem| {
            let level = spread_level(rem).expect("nonzero remainder");
            let candidates: Vec<Monomial> = rem
                .monomials()
                .filter(|m| spreadiness(m) == level.max)
                .cloned()
                .collect();
            let chosen = candidates[pick(&candidates)].clone();
            let c = rem
                .coefficient(&chosen)
                .cloned()
                .expect("candidate is a term");
            for conj in monomial_orbit(&chosen) {
                assert_eq!(
                    rem.coefficient(&conj),
                    Some(&c),
                    "remainder orbit coefficients differ"
                );
            }
            (chosen, c)
        },
        spread_metric,
    )
}

pub fn decompose(f: &Polynomial, algorithm: Algorithm) -> Result<Decomposition, DecomposeError> {
    match algorithm {
        Algorithm::Lex => decompose_lex(f),
        Algorithm::Spreadiness => decompose_spreadiness(f),
    }
}

/// Convenience wrapper returning only the σ-polynomial.
pub fn to_sigma(f: &Polynomial) -> Result<SigmaPolynomial, DecomposeError> {
    decompose_lex(f).map(|(g, _)| g)
}

impl SigmaExponent {
    /// `s1^k1 ... sn^kn` as a one-term σ-polynomial.
    pub fn to_sigma_polynomial(&self) -> SigmaPolynomial {
        SigmaPolynomial::from_terms(self.ambient_n(), [(self.clone(), Rational::one())])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::{elementary_sigma, power_sum, sigma_product_expand};
    use crate::poly::int;
    use crate::symmetry::orbit_sum;
    use proptest::prelude::*;

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::variable(i - 1, n).unwrap()
    }

    fn sigma(terms: &[(&[u32], i64)]) -> SigmaPolynomial {
        let n = terms[0].0.len();
        SigmaPolynomial::from_terms(
            n,
            terms
                .iter()
                .map(|(e, c)| (SigmaExponent::new(e.to_vec()), int(*c))),
        )
    }

    fn both(f: &Polynomial) -> SigmaPolynomial {
        let (a, ta) = decompose_lex(f).unwrap();
        let (b, tb) = decompose_spreadiness(f).unwrap();
        assert_eq!(a, b);
        assert!(ta.is_strictly_decreasing());
        assert!(tb.is_strictly_decreasing());
        assert_eq!(expand_sigma(&a), *f);
        a
    }

    #[test]
    fn discriminant_of_quadratic() {
        let d = (&x(1, 2) - &x(2, 2)).pow(2);
        assert_eq!(both(&d), sigma(&[(&[2, 0], 1), (&[0, 1], -4)]));
    }

    #[test]
    fn sum_of_squares_trace() {
        let f = power_sum(2, 2).unwrap();
        let (g, trace) = decompose_lex(&f).unwrap();
        assert_eq!(g, sigma(&[(&[2, 0], 1), (&[0, 1], -2)]));
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(trace.steps[0].sigma_exponent.exponents(), &[2, 0]);
        assert_eq!(trace.steps[0].coefficient, int(1));
        assert_eq!(
            trace.steps[0].metric_after,
            Metric::Lex(Some(Monomial::new(vec![1, 1])))
        );
        assert_eq!(trace.steps[1].sigma_exponent.exponents(), &[0, 1]);
        assert_eq!(trace.steps[1].coefficient, int(-2));
        assert_eq!(trace.steps[1].metric_after, Metric::Lex(None));
    }

    #[test]
    fn product_of_squares() {
        let f = &x(1, 2).pow(2) * &x(2, 2).pow(2);
        assert_eq!(both(&f), sigma(&[(&[0, 2], 1)]));
    }

    #[test]
    fn cubic_power_sum_matches_newton_identity() {
        // p3 = s1 p2 - s2 p1 + 3 s3 with p2 = s1^2 - 2 s2, p1 = s1
        let expected = sigma(&[(&[3, 0, 0], 1), (&[1, 1, 0], -3), (&[0, 0, 1], 3)]);
        assert_eq!(both(&power_sum(3, 3).unwrap()), expected);
    }

    #[test]
    fn degenerate_inputs() {
        let (g, t) = decompose_spreadiness(&Polynomial::zero(3)).unwrap();
        assert!(g.is_zero());
        assert!(t.steps.is_empty());
        let (g, _) = decompose_lex(&Polynomial::zero(2)).unwrap();
        assert!(g.is_zero());
        let c = Polynomial::constant(int(7), 3);
        assert_eq!(both(&c), SigmaPolynomial::constant(int(7), 3));
    }

    #[test]
    fn not_symmetric_reports_witness() {
        let f = &x(1, 2) - &x(2, 2);
        match decompose_lex(&f) {
            Err(DecomposeError::NotSymmetric(w)) => assert_eq!(w.transposition, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            decompose_spreadiness(&f),
            Err(DecomposeError::NotSymmetric(_))
        ));
    }

    #[test]
    fn non_homogeneous_input_concatenates_traces_by_degree() {
        let f =
            &(&power_sum(2, 3).unwrap() + &elementary_sigma(1, 3).unwrap()) + &Polynomial::one(3);
        let (g, trace) = decompose_lex(&f).unwrap();
        assert_eq!(expand_sigma(&g), f);
        let degrees: Vec<u32> = trace.steps.iter().map(|s| s.degree).collect();
        let mut sorted = degrees.clone();
        sorted.sort();
        assert_eq!(degrees, sorted);
        assert_eq!(degrees.first(), Some(&0));
    }

    #[test]
    fn spreadiness_tie_between_orbits() {
        // {3,3,0} and {4,1,1} share spreadiness 18
        let f = &orbit_sum(&Monomial::new(vec![3, 3, 0]))
            + &orbit_sum(&Monomial::new(vec![4, 1, 1])).scale(&int(2));
        let (g, trace) = decompose_spreadiness(&f).unwrap();
        assert_eq!(trace.steps[0].selected, Monomial::new(vec![4, 1, 1]));
        assert_eq!(
            trace.steps[0].metric_before,
            Metric::Spread(Some(SpreadLevel { max: 18, count: 6 }))
        );
        assert_eq!(g, decompose_lex(&f).unwrap().0);
    }

    #[test]
    fn expand_sigma_examples() {
        let g = sigma(&[(&[2, 0], 1), (&[0, 1], -4)]);
        assert_eq!(expand_sigma(&g), (&x(1, 2) - &x(2, 2)).pow(2));
        assert!(expand_sigma(&SigmaPolynomial::zero(2)).is_zero());
        assert_eq!(
            expand_sigma(&sigma(&[(&[0, 2], 1)])),
            &x(1, 2).pow(2) * &x(2, 2).pow(2)
        );
    }

    #[test]
    fn leading_term_formula_and_injectivity() {
        use std::collections::HashMap;
        for n in 1..=4usize {
            let mut seen: HashMap<Monomial, SigmaExponent> = HashMap::new();
            let mut e = vec![0u32; n];
            // enumerate every exponent vector with sum <= 8
            loop {
                let se = SigmaExponent::new(e.clone());
                let lead = se.leading_monomial();
                assert_eq!(
                    lex_leading_term(&sigma_product_expand(&se)).unwrap(),
                    (lead.clone(), int(1))
                );
                assert!(seen.insert(lead, se).is_none());
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    e[i] += 1;
                    if e.iter().sum::<u32>() <= 8 {
                        break;
                    }
                    e[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
    }

    fn arb_sigma_poly() -> impl Strategy<Value = SigmaPolynomial> {
        (1usize..=4).prop_flat_map(|n| {
            prop::collection::vec((prop::collection::vec(0u32..=2, n), -5i64..=5), 0..5).prop_map(
                move |ts| {
                    SigmaPolynomial::from_terms(
                        n,
                        ts.into_iter()
                            .map(|(e, c)| (SigmaExponent::new(e), int(c)))
                            .filter(|(e, _)| e.weighted_degree() <= 8),
                    )
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn decomposition_inverts_expansion(g in arb_sigma_poly()) {
            let f = expand_sigma(&g);
            let (lex, tl) = decompose_lex(&f).unwrap();
            let (spr, ts) = decompose_spreadiness(&f).unwrap();
            prop_assert_eq!(&lex, &g);
            prop_assert_eq!(&spr, &g);
            prop_assert!(tl.is_strictly_decreasing());
            prop_assert!(ts.is_strictly_decreasing());
        }

        #[test]
        fn tie_break_choice_does_not_matter(g in arb_sigma_poly(), seed in any::<u64>()) {
            let f = expand_sigma(&g);
            let mut state = seed;
            let (random, trace) = decompose_spreadiness_with(&f, |c| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize % c.len()
            }).unwrap();
            prop_assert_eq!(random, g);
            prop_assert!(trace.is_strictly_decreasing());
        }
    }
}
