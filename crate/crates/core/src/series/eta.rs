//! The products `f_j = prod_{n>=1} (1 - q^{jn})` and finite quotients of them.
//!
//! Every generating function in this crate is an eta quotient
//! `q^shift * prod f_j^{e_j}`; each `f_j` has constant term one, so arbitrary
//! integer exponents expand to honest power series and no fractional powers
//! of q ever appear.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::series::TruncatedSeries;

/// Expansion of `f_j` by the pentagonal number theorem: coefficients are
/// +-1 at the indices `j * k(3k-1)/2` for integer k (sign `(-1)^k`) and zero
/// elsewhere. Equivalent to, and much sparser than, the naive term-by-term
/// product, which the tests keep as an independent oracle.
pub fn eta_product(j: u32, order: usize) -> TruncatedSeries {
    assert!(j >= 1, "dilation must be positive");
    let j = j as usize;
    let mut terms = vec![(0usize, BigInt::one())];
    let mut k: usize = 1;
    loop {
        let small = j * (k * (3 * k - 1) / 2);
        if small >= order {
            break;
        }
        let sign = if k % 2 == 1 { BigInt::from(-1) } else { BigInt::one() };
        terms.push((small, sign.clone()));
        let large = j * (k * (3 * k + 1) / 2);
        if large < order {
            terms.push((large, sign));
        }
        k += 1;
    }
    TruncatedSeries::from_terms(order, terms)
}

/// A finite multiset of `(dilation, exponent)` pairs representing
/// `q^shift * prod f_j^{e_j}`. Repeated dilations are allowed; their
/// exponents add.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    factors: Vec<(u32, i32)>,
    q_shift: usize,
}

impl EtaQuotientSpec {
    /// Panics if any dilation is zero.
    pub fn new(factors: Vec<(u32, i32)>, q_shift: usize) -> Self {
        assert!(factors.iter().all(|&(j, _)| j >= 1), "dilations must be positive");
        Self { factors, q_shift }
    }

    pub fn factors(&self) -> &[(u32, i32)] {
        &self.factors
    }

    pub fn q_shift(&self) -> usize {
        self.q_shift
    }

    /// Net exponent per dilation, with zero exponents dropped.
    fn net_factors(&self) -> BTreeMap<u32, i64> {
        let mut net: BTreeMap<u32, i64> = BTreeMap::new();
        for &(j, e) in &self.factors {
            *net.entry(j).or_default() += i64::from(e);
        }
        net.retain(|_, e| *e != 0);
        net
    }

    /// Expand the quotient to the requested order. Positive powers multiply
    /// into the numerator, negative powers into a denominator product that is
    /// inverted once at the end; both products start from the sparse
    /// pentagonal expansions.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let mut numerator = TruncatedSeries::one(order);
        let mut denominator = TruncatedSeries::one(order);
        for (&j, &e) in &self.net_factors() {
            let power = eta_product(j, order).pow(e.abs()).expect("f_j is a unit");
            if e > 0 {
                numerator = &numerator * &power;
            } else {
                denominator = &denominator * &power;
            }
        }
        let inv = denominator.invert().expect("denominator has constant term 1");
        let quotient = &numerator * &inv;
        if self.q_shift == 0 {
            quotient
        } else {
            quotient.shift_up(self.q_shift).truncated(order)
        }
    }
}
