//! Ramanujan theta functions and the indicator sums behind the parity
//! arguments.
//!
//! - [`theta_f_general`]: the two-parameter theta sum
//!   `f(a,b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}` for monomials
//!   `a = sign_a * q^{exp_a}`, `b = sign_b * q^{exp_b}`
//! - [`psi_series`], [`phi_series`], [`psi_neg_series`], [`phi_neg_series`]:
//!   the classical specializations, expanded through their eta-quotient forms
//! - indicator sums over triangular numbers and (odd) squares

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::series::eta::EtaQuotientSpec;
use crate::series::TruncatedSeries;

/// Sign of a theta monomial argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn to_power(self, exponent: u128) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => {
                if exponent % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// Two-sided theta sum for `a = sign_a * q^{exp_a}`, `b = sign_b * q^{exp_b}`.
/// Term n contributes sign `sign_a^{n(n+1)/2} * sign_b^{n(n-1)/2}` at the
/// q-exponent `exp_a * n(n+1)/2 + exp_b * n(n-1)/2`; the sum runs over all
/// integers n whose exponent stays below the order. Requires
/// `exp_a + exp_b >= 1` (the formal analogue of |ab| < 1).
pub fn theta_f_general(
    sign_a: Sign,
    exp_a: u32,
    sign_b: Sign,
    exp_b: u32,
    order: usize,
) -> Result<TruncatedSeries> {
    if exp_a + exp_b == 0 {
        return Err(Error::ZeroThetaExponents);
    }
    // Exponents grow at least like |n|(|n|-1)/2, so |n| <= isqrt(2*order)+2
    // covers every contributing term.
    let bound = ((2 * order) as u64).isqrt() as i128 + 2;
    let mut terms = Vec::new();
    for n in -bound..=bound {
        let tri_up = (n * (n + 1) / 2) as u128; // nonnegative for all integer n
        let tri_down = (n * (n - 1) / 2) as u128;
        let exponent = exp_a as u128 * tri_up + exp_b as u128 * tri_down;
        if exponent < order as u128 {
            let sign = sign_a.to_power(tri_up) * sign_b.to_power(tri_down);
            terms.push((exponent as usize, BigInt::from(sign)));
        }
    }
    Ok(TruncatedSeries::from_terms(order, terms))
}

/// psi(q) = f(q, q^3) = sum q^{n(n+1)/2}, expanded as f2^2/f1.
pub fn psi_series(order: usize) -> TruncatedSeries {
    EtaQuotientSpec::new(vec![(2, 2), (1, -1)], 0).expand(order)
}

/// phi(q) = f(q, q) = 1 + 2 sum q^{n^2}, expanded as f2^5/(f1^2 f4^2).
pub fn phi_series(order: usize) -> TruncatedSeries {
    EtaQuotientSpec::new(vec![(2, 5), (1, -2), (4, -2)], 0).expand(order)
}

/// psi(-q), expanded as f1 f4 / f2.
pub fn psi_neg_series(order: usize) -> TruncatedSeries {
    EtaQuotientSpec::new(vec![(1, 1), (4, 1), (2, -1)], 0).expand(order)
}

/// phi(-q), expanded as f1^2 / f2.
pub fn phi_neg_series(order: usize) -> TruncatedSeries {
    EtaQuotientSpec::new(vec![(1, 2), (2, -1)], 0).expand(order)
}

/// sum_{n>=0} q^{n(n+1)/2}: indicator of the triangular numbers.
pub fn triangular_sum(order: usize) -> TruncatedSeries {
    let mut terms = Vec::new();
    let mut n = 0usize;
    while n * (n + 1) / 2 < order {
        terms.push((n * (n + 1) / 2, BigInt::one()));
        n += 1;
    }
    TruncatedSeries::from_terms(order, terms)
}

/// sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}: the expansion of f1^3.
pub fn signed_triangular_sum(order: usize) -> TruncatedSeries {
    let mut terms = Vec::new();
    let mut n = 0usize;
    while n * (n + 1) / 2 < order {
        let c = BigInt::from(2 * n as i64 + 1) * if n % 2 == 0 { 1 } else { -1 };
        terms.push((n * (n + 1) / 2, c));
        n += 1;
    }
    TruncatedSeries::from_terms(order, terms)
}

/// sum_{n>=0} q^{(2n+1)^2}: indicator of the odd squares.
pub fn odd_square_sum(order: usize) -> TruncatedSeries {
    let mut terms = Vec::new();
    let mut n = 0usize;
    while (2 * n + 1) * (2 * n + 1) < order {
        terms.push(((2 * n + 1) * (2 * n + 1), BigInt::one()));
        n += 1;
    }
    TruncatedSeries::from_terms(order, terms)
}

/// sum_{n>=1} (-1)^n q^{d n^2}.
pub fn alternating_square_sum(dilation: u32, order: usize) -> TruncatedSeries {
    assert!(dilation >= 1, "dilation must be positive");
    let d = dilation as usize;
    let mut terms = Vec::new();
    let mut n = 1usize;
    while d * n * n < order {
        terms.push((d * n * n, BigInt::from(if n % 2 == 0 { 1 } else { -1 })));
        n += 1;
    }
    TruncatedSeries::from_terms(order, terms)
}

/// sum_{n>=1} q^{d n^2}.
pub fn square_sum(dilation: u32, order: usize) -> TruncatedSeries {
    assert!(dilation >= 1, "dilation must be positive");
    let d = dilation as usize;
    let mut terms = Vec::new();
    let mut n = 1usize;
    while d * n * n < order {
        terms.push((d * n * n, BigInt::one()));
        n += 1;
    }
    TruncatedSeries::from_terms(order, terms)
}
