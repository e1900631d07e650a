//! Brute-force check that the maximal-spreadiness terms of a σ-product are
//! exactly the conjugates of its lex-leading monomial.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::metrics::{sigma_exponent_from_partition, spreadiness};
use super::DecomposeError;
use crate::elementary::sigma_product_expand;
use crate::poly::{Monomial, Rational};
use crate::symmetry::monomial_orbit;

/// Largest partition degree accepted by default. The expansion grows
/// exponentially in the degree.
pub const DEFAULT_LEMMA_MAX_DEGREE: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub partition: Vec<u32>,
    /// Number of distinct terms in the expanded product.
    pub term_count: usize,
    pub max_spreadiness: u64,
    pub argmax: BTreeSet<Monomial>,
    pub orbit: BTreeSet<Monomial>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.argmax == self.orbit
    }
}

pub fn spreadiness_lemma_report(
    partition: &[u32],
    max_degree: u32,
) -> Result<LemmaReport, DecomposeError> {
    let (e, _) = sigma_exponent_from_partition(partition, Rational::zero())?;
    let degree: u32 = partition.iter().sum();
    if degree > max_degree {
        return Err(DecomposeError::SizeGuardExceeded {
            degree,
            limit: max_degree,
        });
    }
    let expanded = sigma_product_expand(&e);
    let max_spreadiness = expanded.monomials().map(spreadiness).max().unwrap_or(0);
    let argmax = expanded
        .monomials()
        .filter(|m| spreadiness(m) == max_spreadiness)
        .cloned()
        .collect();
    Ok(LemmaReport {
        partition: partition.to_vec(),
        term_count: expanded.len(),
        max_spreadiness,
        argmax,
        orbit: monomial_orbit(&Monomial::new(partition.to_vec())),
    })
}

/// Expands the σ-product for `partition` in full and compares its
/// maximal-spreadiness terms against the orbit of `x^partition`.
pub fn verify_spreadiness_lemma(partition: &[u32]) -> Result<bool, DecomposeError> {
    spreadiness_lemma_report(partition, DEFAULT_LEMMA_MAX_DEGREE).map(|r| r.holds())
}
