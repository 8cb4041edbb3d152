//! Characteristic polynomial of the adjacency matrix by the Faddeev–LeVerrier
//! recurrence in exact integer arithmetic. Every division in the recurrence
//! is exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::check_order;
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

type Matrix = Vec<Vec<BigInt>>;

fn identity_scaled(n: usize, c: &BigInt) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { c.clone() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// `det(λI - A)`, constant term first.
pub fn characteristic_polynomial(g: &Graph) -> Result<IntPolynomial> {
    check_order("characteristic polynomial", g)?;
    let n = g.order();
    let a: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| g.has_edge(i, j)).collect())
        .collect();
    // coeffs[i] multiplies λ^i
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Matrix = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = identity_scaled(n, &coeffs[n - k + 1]);
        for i in 0..n {
            for l in 0..n {
                if a[i][l] {
                    for j in 0..n {
                        next[i][j] += &m[l][j];
                    }
                }
            }
        }
        m = next;
        // c_{n-k} = -tr(A M_k) / k
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                if a[i][l] {
                    trace += &m[l][i];
                }
            }
        }
        let kk = BigInt::from(k);
        if !(&trace % &kk).is_zero() {
            return Err(Error::Polynomial("inexact trace division".into()));
        }
        coeffs[n - k] = -(trace / kk);
    }
    Ok(IntPolynomial::new(coeffs))
}
