//! Exact truncated power series in q over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] knows its coefficients for `0 <= n < order` and
//! nothing beyond; coefficients past the order are *unknown*, not zero.
//! Binary operations truncate to the shorter operand, so truncation is
//! contagious and no operation ever invents data.
//!
//! Submodules:
//! - [`eta`]: the products `f_j = prod (1 - q^{jn})` and general eta quotients
//! - [`theta`]: Ramanujan theta functions and the indicator sums used by the
//!   parity arguments

pub mod eta;
pub mod theta;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Formal power series in q, exact integer coefficients, truncated at an
/// exclusive order bound. The coefficient vector always has length equal to
/// the order, so the order is implicit in the storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Build a series from explicit coefficients. The length of `coeffs`
    /// must equal `order` (which must be positive).
    pub fn new(coeffs: Vec<BigInt>, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder);
        }
        if coeffs.len() != order {
            return Err(Error::LengthMismatch { len: coeffs.len(), order });
        }
        Ok(Self { coeffs })
    }

    /// The zero series known to the given order.
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "order must be at least 1");
        Self { coeffs: vec![BigInt::zero(); order] }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Build a series from sparse `(exponent, coefficient)` terms; terms at
    /// or past `order` are dropped, repeated exponents accumulate.
    pub fn from_terms<I>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut s = Self::zero(order);
        for (n, c) in terms {
            if n < order {
                s.coeffs[n] += c;
            }
        }
        s
    }

    /// Convenience constructor from machine integers (mostly for tests).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "order must be at least 1");
        Self { coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect() }
    }

    /// Exclusive truncation bound: coefficients for `n >= order()` are unknown.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `q^n`. Panics if `n >= order()`; an unknown coefficient
    /// is a bug at the call site, never silently zero.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    fn nonzero_count(&self, upto: usize) -> usize {
        self.coeffs[..upto].iter().filter(|c| !c.is_zero()).count()
    }

    /// Drop coefficients at index `order` and beyond. `order` must be at
    /// least 1 and at most the current order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(
            (1..=self.order()).contains(&order),
            "cannot truncate order {} to {}",
            self.order(),
            order
        );
        Self { coeffs: self.coeffs[..order].to_vec() }
    }

    /// Multiply every coefficient by the integer `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplicative inverse to the same order. The constant term must be a
    /// unit of the integers, i.e. +1 or -1; anything else signals a quotient
    /// with a pole at q = 0 that was not factored into an explicit power of q.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.magnitude().is_one() {
            return Err(Error::NonUnitConstant { found: c0.to_string() });
        }
        let order = self.order();
        // 1/c0 = c0 for c0 = +-1, so b[n] = -c0 * sum_{k>=1} a[k] b[n-k].
        let nz: Vec<(usize, &BigInt)> = self.coeffs[1..]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + 1, c))
            .collect();
        let mut inv = vec![BigInt::zero(); order];
        inv[0] = c0.clone();
        for n in 1..order {
            let mut acc = BigInt::zero();
            for &(k, ak) in &nz {
                if k > n {
                    break;
                }
                acc += ak * &inv[n - k];
            }
            if !acc.is_zero() {
                inv[n] = -(c0 * acc);
            }
        }
        Ok(Self { coeffs: inv })
    }

    /// Integer power. Negative exponents invert first and then raise to the
    /// positive power; the constant term must then be a unit.
    pub fn pow(&self, exponent: i64) -> Result<Self> {
        if exponent == 0 {
            return Ok(Self::one(self.order()));
        }
        let base = if exponent < 0 { self.invert()? } else { self.clone() };
        Ok(base.pow_unsigned(exponent.unsigned_abs()))
    }

    fn pow_unsigned(&self, exponent: u64) -> Self {
        let order = self.order();
        if exponent == 0 {
            return Self::one(order);
        }
        // For a very sparse base (the pentagonal series), repeated
        // multiplication by the base is cheaper than squaring, which densifies
        // immediately.
        let nz = self.nonzero_count(order);
        if nz.saturating_mul(8) <= order {
            let mut acc = self.clone();
            for _ in 1..exponent {
                acc = &acc * self;
            }
            return acc;
        }
        let mut result = Self::one(order);
        let mut power = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &power;
            }
            e >>= 1;
            if e > 0 {
                power = &power * &power;
            }
        }
        result
    }

    /// Keep the coefficients along the arithmetic progression
    /// `step*n + offset`: result[n] = self[step*n + offset]. The result order
    /// is `ceil((order - offset) / step)`, so a caller wanting n coefficients
    /// must supply a source of order at least `step*n + offset + 1`.
    /// Panics unless `offset < step` and `offset < order()`.
    pub fn extract_progression(&self, step: usize, offset: usize) -> Self {
        assert!(step >= 1, "step must be positive");
        assert!(offset < step, "offset must be smaller than step");
        assert!(
            offset < self.order(),
            "series of order {} has no coefficient at offset {}",
            self.order(),
            offset
        );
        let len = (self.order() - offset).div_ceil(step);
        let coeffs = (0..len).map(|n| self.coeffs[step * n + offset].clone()).collect();
        Self { coeffs }
    }

    /// Substitute q -> q^m. The result order is `m*(order-1) + 1`, the last
    /// index actually populated plus one.
    pub fn magnify(&self, m: usize) -> Self {
        assert!(m >= 1, "magnification factor must be positive");
        let mut out = Self::zero(m * (self.order() - 1) + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[m * i] = c.clone();
            }
        }
        out
    }

    /// Multiply by q^k. Every known coefficient survives, so the order grows
    /// by k.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.order() + k];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[k + i] = c.clone();
        }
        Self { coeffs }
    }

    /// Reduce every coefficient to its least nonnegative residue mod `m`.
    /// The reduction is a view; the series itself always stores exact lifts.
    pub fn mod_reduce(&self, m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::ModulusTooSmall { modulus: m });
        }
        let m = BigInt::from(m);
        Ok(Self { coeffs: self.coeffs.iter().map(|c| c.mod_floor(&m)).collect() })
    }

    /// True iff the first `upto` coefficients of both series agree mod `m`.
    /// `upto` must not exceed either order (comparing unknown coefficients is
    /// a caller bug).
    pub fn eq_mod(&self, other: &Self, m: u64, upto: usize) -> Result<bool> {
        if m < 2 {
            return Err(Error::ModulusTooSmall { modulus: m });
        }
        assert!(
            upto <= self.order().min(other.order()),
            "comparison range {} exceeds known orders ({}, {})",
            upto,
            self.order(),
            other.order()
        );
        let m = BigInt::from(m);
        Ok(self.coeffs[..upto]
            .iter()
            .zip(&other.coeffs[..upto])
            .all(|(a, b)| (a - b).mod_floor(&m).is_zero()))
    }
}

pub fn series_eq_mod(a: &TruncatedSeries, b: &TruncatedSeries, m: u64, upto: usize) -> Result<bool> {
    a.eq_mod(b, m, upto)
}

fn binary_op(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    f: impl Fn(&BigInt, &BigInt) -> BigInt,
) -> TruncatedSeries {
    let order = a.order().min(b.order());
    let coeffs = a.coeffs[..order]
        .iter()
        .zip(&b.coeffs[..order])
        .map(|(x, y)| f(x, y))
        .collect();
    TruncatedSeries { coeffs }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        binary_op(self, rhs, |x, y| x + y)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        binary_op(self, rhs, |x, y| x - y)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product truncated to the shorter operand. The outer loop runs
    /// over the operand with fewer nonzero coefficients, which makes products
    /// against the sparse pentagonal series cost O(order * sqrt(order))
    /// instead of O(order^2); for dense operands it degenerates to schoolbook.
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let (outer, inner) = if self.nonzero_count(order) <= rhs.nonzero_count(order) {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = vec![BigInt::zero(); order];
        for i in 0..order {
            let oi = &outer.coeffs[i];
            if oi.is_zero() {
                continue;
            }
            for (j, ij) in inner.coeffs[..order - i].iter().enumerate() {
                if !ij.is_zero() {
                    out[i + j] += oi * ij;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut printed = 0;
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if printed == 8 {
                write!(f, " + ...")?;
                break;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
            printed += 1;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

/// JSON form: coefficients as decimal strings (they outgrow every native
/// integer width) plus the explicit order.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            coeffs: Vec<String>,
            order: usize,
            #[serde(skip)]
            _marker: &'a (),
        }
        Repr {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
            order: self.order(),
            _marker: &(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<String>,
            order: usize,
        }
        let repr = Repr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        TruncatedSeries::new(coeffs, repr.order).map_err(D::Error::custom)
    }
}
