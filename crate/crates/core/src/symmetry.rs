//! The action of the symmetric group on polynomials.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("permutation acts on {perm} symbols but the polynomial has {poly} variables")]
    SizeMismatch { perm: usize, poly: usize },
    #[error("images {0:?} do not form a permutation of 1..n")]
    InvalidPermutation(Vec<usize>),
    #[error("input polynomial is zero")]
    ZeroInput,
    #[error("{n} variables exceed the factorial guard of {limit}")]
    SizeGuardExceeded { n: usize, limit: usize },
}

impl SymmetryError {
    pub fn code(&self) -> &'static str {
        match self {
            SymmetryError::SizeMismatch { .. } => "symmetry::size_mismatch",
            SymmetryError::InvalidPermutation(_) => "symmetry::invalid_permutation",
            SymmetryError::ZeroInput => "symmetry::zero_input",
            SymmetryError::SizeGuardExceeded { .. } => "symmetry::size_guard_exceeded",
        }
    }
}

/// Upper bound on `n` for operations that enumerate all `n!` permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorialGuard {
    pub max_n: usize,
}

impl Default for FactorialGuard {
    fn default() -> Self {
        FactorialGuard { max_n: 5 }
    }
}

impl FactorialGuard {
    pub fn check(&self, n: usize) -> Result<(), SymmetryError> {
        if n > self.max_n {
            return Err(SymmetryError::SizeGuardExceeded {
                n,
                limit: self.max_n,
            });
        }
        Ok(())
    }
}

/// A bijection of `{1, ..., n}`; variable `x_k` is sent to `x_{images[k-1]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // 0-based internally
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, SymmetryError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(SymmetryError::InvalidPermutation(images));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition `(k, k+1)` for 1-based `k`.
    pub fn adjacent_transposition(k: usize, n: usize) -> Self {
        assert!(k >= 1 && k < n, "adjacent transposition index out of range");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(k - 1, k);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| k == i)
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn act_on_monomial(&self, m: &Monomial) -> Monomial {
        let src = m.exponents();
        let mut out = vec![0; src.len()];
        for (k, &e) in src.iter().enumerate() {
            out[self.images[k]] = e;
        }
        Monomial::new(out)
    }
}

pub fn apply_permutation(f: &Polynomial, p: &Permutation) -> Result<Polynomial, SymmetryError> {
    if p.len() != f.ambient_n() {
        return Err(SymmetryError::SizeMismatch {
            perm: p.len(),
            poly: f.ambient_n(),
        });
    }
    Ok(f.map_monomials(|m| p.act_on_monomial(m)))
}

/// Evidence that a polynomial is not symmetric: swapping `x_k` and
/// `x_{k+1}` moves `monomial` onto a monomial with a different coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymmetryWitness {
    /// 1-based index `k` of the transposition `(k, k+1)`.
    pub transposition: usize,
    pub monomial: Monomial,
    pub coefficient: Rational,
    pub image: Monomial,
    /// Coefficient of `image` in the polynomial (zero when absent).
    pub image_coefficient: Rational,
}

/// Checks invariance under the adjacent transpositions, which generate S_n.
/// Returns the first violation found.
pub fn symmetry_witness(f: &Polynomial) -> Option<AsymmetryWitness> {
    let n = f.ambient_n();
    for k in 1..n {
        let t = Permutation::adjacent_transposition(k, n);
        for (m, c) in f.terms() {
            let image = t.act_on_monomial(m);
            let other = f.coefficient(&image);
            if other != Some(c) {
                return Some(AsymmetryWitness {
                    transposition: k,
                    monomial: m.clone(),
                    coefficient: c.clone(),
                    image_coefficient: other.cloned().unwrap_or_else(Rational::zero),
                    image,
                });
            }
        }
    }
    None
}

pub fn is_symmetric(f: &Polynomial) -> bool {
    symmetry_witness(f).is_none()
}

/// All distinct rearrangements of `m`'s exponents ("conjugates"), produced by
/// stepping through the multiset permutations of the sorted exponents.
pub fn monomial_orbit(m: &Monomial) -> BTreeSet<Monomial> {
    let mut e = m.exponents().to_vec();
    e.sort_unstable();
    let mut out = BTreeSet::new();
    loop {
        out.insert(Monomial::new(e.clone()));
        if !next_permutation(&mut e) {
            break;
        }
    }
    out
}

/// The monomial symmetric polynomial: sum of the orbit with unit coefficients.
pub fn orbit_sum(m: &Monomial) -> Polynomial {
    Polynomial::from_terms(
        m.ambient_n(),
        monomial_orbit(m).into_iter().map(|o| (o, Rational::one())),
    )
}

/// Advances `v` to the next lexicographic arrangement. Returns `false` (and
/// leaves `v` untouched) once it is the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every element of S_n, starting from the identity.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut images: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        if !next_permutation(&mut images) {
            break;
        }
    }
    out
}

/// Product of `q` over every one of the `n!` variable permutations.
///
/// The result is symmetric with degree `n! * deg(q)`. This enumerates the
/// group literally, so it is refused for `n` beyond `guard`.
pub fn permutation_product(
    q: &Polynomial,
    guard: FactorialGuard,
) -> Result<Polynomial, SymmetryError> {
    if q.is_zero() {
        return Err(SymmetryError::ZeroInput);
    }
    guard.check(q.ambient_n())?;
    let mut acc = Polynomial::one(q.ambient_n());
    for p in all_permutations(q.ambient_n()) {
        acc = &acc * &apply_permutation(q, &p)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use proptest::prelude::*;

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::variable(i - 1, n).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    // Full-group check kept only as an oracle for the generator-based test.
    fn is_symmetric_full(f: &Polynomial) -> bool {
        all_permutations(f.ambient_n())
            .iter()
            .all(|p| apply_permutation(f, p).unwrap() == *f)
    }

    #[test]
    fn apply_permutation_examples() {
        let d = &x(1, 2) - &x(2, 2);
        let swap = Permutation::from_images(vec![2, 1]).unwrap();
        assert_eq!(apply_permutation(&d, &swap).unwrap(), -&d);
        assert_eq!(apply_permutation(&d, &Permutation::identity(2)).unwrap(), d);

        let cycle = Permutation::from_images(vec![2, 3, 1]).unwrap();
        let f = Polynomial::monomial(mono(&[2, 1, 0]), int(1));
        let g = Polynomial::monomial(mono(&[0, 2, 1]), int(1));
        assert_eq!(apply_permutation(&f, &cycle).unwrap(), g);
        assert!(apply_permutation(&f, &swap).is_err());
    }

    #[test]
    fn invalid_permutations_rejected() {
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_images(vec![1, 3]).is_err());
    }

    #[test]
    fn is_symmetric_examples() {
        let d = (&x(1, 2) - &x(2, 2)).pow(2);
        assert!(is_symmetric(&d));
        assert!(!is_symmetric(&(&x(1, 2) - &x(2, 2))));
        assert!(!is_symmetric(&(&x(1, 2).pow(2) + &x(2, 2))));
        assert!(is_symmetric(&Polynomial::zero(3)));
        assert!(is_symmetric(&x(1, 1)));
    }

    #[test]
    fn witness_points_at_a_violation() {
        let f = &x(1, 3) + &x(2, 3);
        let w = symmetry_witness(&f).unwrap();
        assert_eq!(w.transposition, 2);
        assert_ne!(w.coefficient, w.image_coefficient);
    }

    #[test]
    fn orbit_examples() {
        let orbit = monomial_orbit(&mono(&[2, 1, 0]));
        let expected: BTreeSet<_> = [
            [2, 1, 0],
            [2, 0, 1],
            [1, 2, 0],
            [0, 2, 1],
            [1, 0, 2],
            [0, 1, 2],
        ]
        .iter()
        .map(|e| mono(e))
        .collect();
        assert_eq!(orbit, expected);
        assert_eq!(monomial_orbit(&mono(&[1, 1, 1])).len(), 1);
        assert_eq!(monomial_orbit(&Monomial::unit(4)).len(), 1);
    }

    #[test]
    fn orbit_sum_examples() {
        assert_eq!(orbit_sum(&mono(&[5, 0])), &x(1, 2).pow(5) + &x(2, 2).pow(5));
        assert_eq!(orbit_sum(&mono(&[1, 1])), &x(1, 2) * &x(2, 2));
        assert_eq!(orbit_sum(&mono(&[2, 1, 0])).len(), 6);
    }

    #[test]
    fn permutation_product_examples() {
        let guard = FactorialGuard::default();
        assert_eq!(
            permutation_product(&x(1, 2), guard).unwrap(),
            &x(1, 2) * &x(2, 2)
        );
        let q = &x(1, 2) + &x(2, 2).scale(&int(2));
        let expected = Polynomial::from_terms(
            2,
            [
                (mono(&[2, 0]), int(2)),
                (mono(&[1, 1]), int(5)),
                (mono(&[0, 2]), int(2)),
            ],
        );
        assert_eq!(permutation_product(&q, guard).unwrap(), expected);
        let c = Polynomial::constant(int(3), 2);
        assert_eq!(
            permutation_product(&c, guard).unwrap(),
            Polynomial::constant(int(9), 2)
        );
        assert_eq!(
            permutation_product(&Polynomial::zero(2), guard),
            Err(SymmetryError::ZeroInput)
        );
        assert!(matches!(
            permutation_product(&x(1, 6), guard),
            Err(SymmetryError::SizeGuardExceeded { n: 6, limit: 5 })
        ));
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(1).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        assert!(all_permutations(3)[0].is_identity());
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    fn arb_monomial(max_n: usize, max_e: u32) -> impl Strategy<Value = Monomial> {
        (1..=max_n)
            .prop_flat_map(move |n| prop::collection::vec(0..=max_e, n))
            .prop_map(Monomial::new)
    }

    fn arb_poly(max_n: usize) -> impl Strategy<Value = Polynomial> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec((prop::collection::vec(0u32..=3, n), -3i64..=3), 0..6).prop_map(
                move |ts| {
                    Polynomial::from_terms(
                        n,
                        ts.into_iter().map(|(e, c)| (Monomial::new(e), int(c))),
                    )
                },
            )
        })
    }

    fn arb_symmetric(max_n: usize) -> impl Strategy<Value = Polynomial> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec((prop::collection::vec(0u32..=3, n), -3i64..=3), 0..4).prop_map(
                move |ts| {
                    ts.into_iter().fold(Polynomial::zero(n), |acc, (e, c)| {
                        &acc + &orbit_sum(&Monomial::new(e)).scale(&int(c))
                    })
                },
            )
        })
    }

    proptest! {
        #[test]
        fn orbit_sums_are_symmetric(m in arb_monomial(5, 8)) {
            prop_assert!(is_symmetric(&orbit_sum(&m)));
        }

        #[test]
        fn generators_agree_with_full_group(f in arb_poly(4)) {
            prop_assert_eq!(is_symmetric(&f), is_symmetric_full(&f));
        }

        #[test]
        fn symmetric_agrees_with_full_group(f in arb_symmetric(4)) {
            prop_assert!(is_symmetric(&f));
            prop_assert!(is_symmetric_full(&f));
        }

        #[test]
        fn symmetric_coefficients_constant_on_orbits(f in arb_symmetric(4)) {
            for (m, c) in f.terms() {
                for o in monomial_orbit(m) {
                    prop_assert_eq!(f.coefficient(&o), Some(c));
                }
            }
        }

        #[test]
        fn orbit_size_divides_group_order(m in arb_monomial(6, 4)) {
            let size = monomial_orbit(&m).len();
            prop_assert_eq!(factorial(m.ambient_n()) % size, 0);
        }

        #[test]
        fn permutation_product_degree_and_symmetry(f in arb_poly(3)) {
            prop_assume!(!f.is_zero());
            let n = f.ambient_n();
            let prod = permutation_product(&f, FactorialGuard::default()).unwrap();
            prop_assert!(is_symmetric(&prod));
            let d = f.total_degree().finite().unwrap();
            prop_assert_eq!(prod.total_degree().finite(), Some(d * factorial(n) as u32));
        }
    }
}
