//! Closed forms for graph families and composition rules for unions and
//! joins.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::Zero;

use super::AlliancePolynomial;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

fn at_least(family: &'static str, parameter: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        return Err(Error::BelowBound {
            family,
            parameter,
            min,
            got,
        });
    }
    Ok(())
}

fn choose(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    binomial(BigUint::from(n), BigUint::from(k))
}

/// Accumulates counts by exponent.
#[derive(Default)]
struct Terms(BTreeMap<usize, BigUint>);

impl Terms {
    fn add(&mut self, exponent: usize, count: BigUint) {
        if !count.is_zero() {
            *self.0.entry(exponent).or_default() += count;
        }
    }

    fn finish(self, order: usize) -> Result<AlliancePolynomial> {
        AlliancePolynomial::from_exponents(order, self.0)
    }
}

/// `(n-2) x^(n-2) + 2 x^(n-1) + ((n-2)(n+1)/2) x^n + x^(n+1)`.
pub fn closed_form_path(n: usize) -> Result<AlliancePolynomial> {
    at_least("path", "n", 2, n)?;
    let mut t = Terms::default();
    t.add(n - 2, BigUint::from(n - 2));
    t.add(n - 1, BigUint::from(2u32));
    t.add(n, BigUint::from((n - 2) * (n + 1) / 2));
    t.add(n + 1, BigUint::from(1u32));
    t.finish(n)
}

/// `n x^(n-2) + n(n-2) x^n + x^(n+2)`.
pub fn closed_form_cycle(n: usize) -> Result<AlliancePolynomial> {
    at_least("cycle", "n", 3, n)?;
    let mut t = Terms::default();
    t.add(n - 2, BigUint::from(n));
    t.add(n, BigUint::from(n * (n - 2)));
    t.add(n + 2, BigUint::from(1u32));
    t.finish(n)
}

/// `((x^2 + 1)^n - 1) / x`: `C(n, j)` at exponent `2j - 1`.
pub fn closed_form_complete(n: usize) -> Result<AlliancePolynomial> {
    at_least("complete", "n", 1, n)?;
    let mut t = Terms::default();
    for j in 1..=n {
        t.add(2 * j - 1, choose(n, j));
    }
    t.finish(n)
}

/// `n x^n`.
pub fn closed_form_empty(n: usize) -> Result<AlliancePolynomial> {
    at_least("empty", "n", 1, n)?;
    let mut t = Terms::default();
    t.add(n, BigUint::from(n));
    t.finish(n)
}

/// `((x^2+1)^n - (x^4 - x^3)(x^2+1)^(n-2) + x^3 - 2x^2 - 1) / x`, expanded
/// with exact signed arithmetic before the division.
pub fn closed_form_complete_minus_edge(n: usize) -> Result<AlliancePolynomial> {
    at_least("complete-minus-edge", "n", 2, n)?;
    let base = IntPolynomial::from_terms(&[(2, 1), (0, 1)]);
    let numerator = base.pow(n as u32)
        - IntPolynomial::from_terms(&[(4, 1), (3, -1)]) * base.pow(n as u32 - 2)
        + IntPolynomial::from_terms(&[(3, 1), (2, -2), (0, -1)]);
    let p = numerator
        .div_x_pow(1)
        .ok_or_else(|| Error::Polynomial("numerator not divisible by x".into()))?;
    AlliancePolynomial::from_int_polynomial(n, &p)
}

/// `n x^n + m x^m + sum_{i,j >= 1} C(n,i) C(m,j) x^(n + m + min(2i - n, 2j - m))`.
pub fn closed_form_complete_bipartite(n: usize, m: usize) -> Result<AlliancePolynomial> {
    at_least("complete-bipartite", "n", 1, n)?;
    at_least("complete-bipartite", "m", 1, m)?;
    let mut t = Terms::default();
    t.add(n, BigUint::from(n));
    t.add(m, BigUint::from(m));
    let total = (n + m) as i64;
    for i in 1..=n {
        for j in 1..=m {
            let k = (2 * i as i64 - n as i64).min(2 * j as i64 - m as i64);
            t.add((total + k) as usize, choose(n, i) * choose(m, j));
        }
    }
    t.finish(n + m)
}

/// Star `S_n = K_{1, n-1}`:
/// `sum_{k=0}^{floor((n-1)/2)} C(n-1,k) x^(2k+1) + (n-1) x^(n-1)
///  + x^(n+1) sum_{k=ceil(n/2)}^{n-1} C(n-1,k)`.
pub fn closed_form_star(n: usize) -> Result<AlliancePolynomial> {
    at_least("star", "n", 2, n)?;
    let mut t = Terms::default();
    for k in 0..=(n - 1) / 2 {
        t.add(2 * k + 1, choose(n - 1, k));
    }
    t.add(n - 1, BigUint::from(n - 1));
    let tail: BigUint = (n.div_ceil(2)..n).map(|k| choose(n - 1, k)).sum();
    t.add(n + 1, tail);
    t.finish(n)
}

/// Polynomial of a disjoint union from the polynomials of its parts: the
/// part of order `n_i` is shifted by `x^(n - n_i)`, which leaves every
/// alliance index in place.
pub fn union_compose(parts: &[AlliancePolynomial]) -> Result<AlliancePolynomial> {
    if parts.is_empty() {
        return Err(Error::EmptyParts);
    }
    let order = parts.iter().map(AlliancePolynomial::order).sum();
    let mut coeffs: BTreeMap<i64, BigUint> = BTreeMap::new();
    for p in parts {
        for (&k, c) in p.coefficients() {
            *coeffs.entry(k).or_default() += c;
        }
    }
    AlliancePolynomial::new(order, coeffs)
}

/// `sum_{r=0}^{m} C(m, r) x^(min(2r, m+1))`, collisions at `m + 1` summed.
pub fn tilde_a(m: usize) -> Result<IntPolynomial> {
    at_least("tilde-A", "m", 1, m)?;
    let mut coeffs = vec![BigInt::zero(); m + 2];
    for r in 0..=m {
        coeffs[(2 * r).min(m + 1)] += BigInt::from(choose(m, r));
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `A(K_n ⊎ E_m; x) = A(K_n; x) * tilde_a(m) + m x^m`.
pub fn join_complete_empty(n: usize, m: usize) -> Result<AlliancePolynomial> {
    at_least("join-complete-empty", "n", 1, n)?;
    at_least("join-complete-empty", "m", 1, m)?;
    let complete = closed_form_complete(n)?.to_int_polynomial();
    let p = &complete * &tilde_a(m)? + IntPolynomial::monomial(BigInt::from(m), m);
    AlliancePolynomial::from_int_polynomial(n + m, &p)
}
