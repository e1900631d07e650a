//! Canonical text rendering.
//!
//! Terms are ordered by total degree (descending), then lexicographically
//! (descending). Variables inside a monomial appear in ascending index
//! order and a unit coefficient is omitted except on the constant term.
//! The output is accepted by [`crate::parse`] and parses back to the same
//! value.

use std::fmt::Write;

use num_traits::{One, Signed, Zero};

use crate::decompose::SigmaPolynomial;
use crate::poly::{Monomial, Polynomial, Rational};

/// `x1^2*x2`, or `1` for the unit monomial.
pub fn print_monomial(m: &Monomial, var: char) -> String {
    let mut out = String::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        let _ = write!(out, "{var}{}", i + 1);
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// `p` or `p/q`.
pub fn print_rational(r: &Rational) -> String {
    r.to_string()
}

/// Always `p/q`, even for integers.
pub fn print_rational_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn print_terms(p: &Polynomial, var: char) -> String {
    let mut terms: Vec<(&Monomial, &Rational)> = p.terms().collect();
    terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if m.is_unit() {
            out.push_str(&print_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&print_monomial(m, var));
        } else {
            let _ = write!(out, "{}*{}", print_rational(&abs), print_monomial(m, var));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_poly(f: &Polynomial) -> String {
    print_terms(f, 'x')
}

pub fn print_sigma(g: &SigmaPolynomial) -> String {
    print_terms(g.as_polynomial(), 's')
}

/// Degree-descending coefficients in `z`, e.g. `z^2 - 3*z + 2`.
pub fn print_univariate(coeffs: &[Rational]) -> String {
    let deg = coeffs.len().saturating_sub(1);
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let power = deg - i;
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let z = match power {
            0 => String::new(),
            1 => "z".to_string(),
            p => format!("z^{p}"),
        };
        if z.is_empty() {
            out.push_str(&print_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&z);
        } else {
            let _ = write!(out, "{}*{z}", print_rational(&abs));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::SigmaExponent;
    use crate::poly::{int, ratio};

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::variable(i - 1, n).unwrap()
    }

    #[test]
    fn canonical_order() {
        assert_eq!(print_poly(&(&x(2, 2) + &x(1, 2))), "x1 + x2");
        assert_eq!(print_poly(&Polynomial::zero(3)), "0");
        let d = (&x(1, 2) - &x(2, 2)).pow(2);
        assert_eq!(print_poly(&d), "x1^2 - 2*x1*x2 + x2^2");
        let f = &(&x(1, 2) + &Polynomial::constant(int(-3), 2)) + &x(2, 2).pow(3);
        assert_eq!(print_poly(&f), "x2^3 + x1 - 3");
    }

    #[test]
    fn sigma_rendering() {
        let g = SigmaPolynomial::from_terms(
            2,
            [
                (SigmaExponent::new(vec![2, 0]), int(1)),
                (SigmaExponent::new(vec![0, 1]), int(-4)),
            ],
        );
        assert_eq!(print_sigma(&g), "s1^2 - 4*s2");
        assert_eq!(g.to_string(), "s1^2 - 4*s2");
    }

    #[test]
    fn coefficients() {
        assert_eq!(print_poly(&x(1, 1).scale(&ratio(-1, 2))), "-1/2*x1");
        assert_eq!(print_poly(&Polynomial::one(2)), "1");
        assert_eq!(print_poly(&Polynomial::constant(int(-1), 2)), "-1");
        assert_eq!(print_rational_pq(&int(-2)), "-2/1");
        assert_eq!(print_rational_pq(&ratio(6, 4)), "3/2");
    }

    #[test]
    fn univariate() {
        assert_eq!(
            print_univariate(&[int(1), int(-3), int(2)]),
            "z^2 - 3*z + 2"
        );
        assert_eq!(print_univariate(&[int(1), int(0), int(-2)]), "z^2 - 2");
        assert_eq!(print_univariate(&[int(1)]), "1");
        assert_eq!(print_univariate(&[int(0)]), "0");
        assert_eq!(print_univariate(&[ratio(1, 2), int(1)]), "1/2*z + 1");
    }
}
