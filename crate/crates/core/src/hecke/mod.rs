//! The discriminant q-expansion, Ramanujan tau arithmetic, the prime Hecke
//! operator, Legendre symbols, and the mod-2 / mod-8 congruence families it
//! all feeds (see [`families`]).

pub mod families;

pub use families::{
    mod8_r_values, nonresidue_s_values, reciprocal_r_values, verify_family_mod2_base,
    verify_family_mod2_even_power, verify_family_mod2_odd_power, verify_family_mod8, FamilyKind,
    FamilyParams,
};

use std::io::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::arith::{is_odd_square, require_odd_prime};
use crate::error::{Error, Result};
use crate::partitions::pod2_quotient_spec;
use crate::report::{compare_series, Counterexample, VerificationReport, MAX_COUNTEREXAMPLES};
use crate::series::eta::EtaQuotientSpec;
use crate::series::theta::odd_square_sum;
use crate::series::TruncatedSeries;

/// The discriminant as an eta quotient: q * f1^24.
pub fn delta_quotient_spec() -> EtaQuotientSpec {
    EtaQuotientSpec::new(vec![(1, 24)], 1)
}

/// Exact table of tau(n) for 1 <= n < limit. Index 0 carries the constant
/// coefficient of the q-expansion, which is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauTable {
    values: Vec<BigInt>,
}

impl TauTable {
    /// Exclusive bound on the tabulated argument.
    pub fn limit(&self) -> usize {
        self.values.len()
    }

    /// tau(n) for n >= 1; panics when out of range.
    pub fn tau(&self, n: usize) -> &BigInt {
        assert!(n >= 1, "tau(n) is defined for n >= 1");
        &self.values[n]
    }

    pub fn is_odd(&self, n: usize) -> bool {
        self.tau(n).is_odd()
    }

    /// The underlying q-expansion, for feeding back into series operators.
    pub fn as_series(&self) -> TruncatedSeries {
        TruncatedSeries::new(self.values.clone(), self.values.len()).expect("table is nonempty")
    }

    pub fn require_limit(&self, required: usize) -> Result<()> {
        if self.limit() < required {
            return Err(Error::TableTooSmall { required, available: self.limit() });
        }
        Ok(())
    }

    /// CSV rows `n,value` from n = 1, with header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "n,value")?;
        for (n, v) in self.values.iter().enumerate().skip(1) {
            writeln!(w, "{n},{v}")?;
        }
        Ok(())
    }
}

/// JSON form: a bare array of decimal strings starting at the q^0
/// coefficient (which is "0").
impl Serialize for TauTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.values.len()))?;
        for v in &self.values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }
}

/// Expand q * f1^24 exactly and read off tau(n) for n < limit.
pub fn delta_series(limit: usize) -> TauTable {
    assert!(limit >= 2, "a tau table needs at least tau(1)");
    TauTable { values: delta_quotient_spec().expand(limit).into_coeffs() }
}

/// The prime Hecke operator on a weight-k q-expansion:
/// result[n] = s[p*n] + p^{k-1} * s[n/p], the second term present only when
/// p divides n. The result order is floor((order-1)/p) + 1; the input must
/// reach at least order p.
pub fn hecke_tp(s: &TruncatedSeries, p: u64, weight: u32) -> TruncatedSeries {
    assert!(p >= 2, "p must be prime");
    let pu = p as usize;
    assert!(s.order() >= pu, "series order {} is smaller than p = {p}", s.order());
    let scale = BigInt::from(p).pow(weight - 1);
    let out_order = (s.order() - 1) / pu + 1;
    let mut coeffs = Vec::with_capacity(out_order);
    for n in 0..out_order {
        let mut c = s.coeff(pu * n).clone();
        if n % pu == 0 {
            c += &scale * s.coeff(n / pu);
        }
        coeffs.push(c);
    }
    TruncatedSeries::new(coeffs, out_order).expect("order is positive")
}

/// Check the eigenform property tau(p*n) + p^11 tau(n/p) = tau(p) tau(n) for
/// all n < limit, by applying the weight-12 prime Hecke operator to the
/// discriminant expansion and comparing with the tau(p)-scaled expansion.
/// Needs the table up to p*limit.
pub fn eigenform_check(tau: &TauTable, p: u64, limit: usize) -> Result<VerificationReport> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    tau.require_limit(p as usize * limit)?;
    let series = tau.as_series();
    let transformed = hecke_tp(&series, p, 12);
    let scaled = series.truncated(limit).scale(tau.tau(p as usize));
    let mismatches = compare_series(&transformed.truncated(limit), &scaled, 0, limit);
    Ok(VerificationReport::from_mismatches(
        format!("eigenform-p{p}"),
        format!("the discriminant is a Hecke eigenform under T_{p} with eigenvalue tau({p})"),
        0,
        limit as u64,
        mismatches,
    ))
}

/// Check multiplicativity tau(m*n) = tau(m) tau(n) over all coprime pairs
/// with m*n < limit, and the prime-power recurrence
/// tau(p^l) = tau(p) tau(p^{l-1}) - p^11 tau(p^{l-2}) for all p^l < limit,
/// l >= 2.
pub fn tau_multiplicativity_check(tau: &TauTable, limit: usize) -> Result<VerificationReport> {
    tau.require_limit(limit)?;
    let mut mismatches = Vec::new();
    let mut checked: u64 = 0;
    for m in 2..limit {
        if m * m >= limit {
            break;
        }
        for n in m..limit {
            let mn = m * n;
            if mn >= limit {
                break;
            }
            if m.gcd(&n) != 1 {
                continue;
            }
            checked += 1;
            let product = tau.tau(m) * tau.tau(n);
            if tau.tau(mn) != &product {
                mismatches.push(Counterexample {
                    index: mn as u64,
                    lhs: tau.tau(mn).to_string(),
                    rhs: product.to_string(),
                });
                if mismatches.len() > MAX_COUNTEREXAMPLES {
                    break;
                }
            }
        }
    }
    for p in (2..limit).filter(|&p| crate::arith::is_prime(p as u64)) {
        let p11 = BigInt::from(p).pow(11);
        let mut power = p * p; // p^l, l >= 2
        let mut lower = p; // p^{l-1}
        let mut lowest = 1; // p^{l-2}
        while power < limit {
            checked += 1;
            let expected = tau.tau(p) * tau.tau(lower) - &p11 * tau.tau(lowest);
            if tau.tau(power) != &expected {
                mismatches.push(Counterexample {
                    index: power as u64,
                    lhs: tau.tau(power).to_string(),
                    rhs: expected.to_string(),
                });
            }
            lowest = lower;
            lower = power;
            match power.checked_mul(p) {
                Some(next) => power = next,
                None => break,
            }
        }
    }
    Ok(VerificationReport::from_mismatches(
        "tau-multiplicativity",
        "tau is multiplicative on coprime arguments and satisfies the prime-power recurrence",
        0,
        checked,
        mismatches,
    ))
}

/// Check that tau(n) is odd exactly on the odd squares, for n < limit.
pub fn tau_parity_check(tau: &TauTable, limit: usize) -> Result<VerificationReport> {
    tau.require_limit(limit)?;
    let mut mismatches = Vec::new();
    for n in 1..limit {
        let odd = tau.is_odd(n);
        let square = is_odd_square(n as u64);
        if odd != square {
            mismatches.push(Counterexample {
                index: n as u64,
                lhs: tau.tau(n).to_string(),
                rhs: if square { "odd expected".into() } else { "even expected".into() },
            });
            if mismatches.len() > MAX_COUNTEREXAMPLES {
                break;
            }
        }
    }
    Ok(VerificationReport::from_mismatches(
        "tau-parity-odd-squares",
        "tau(n) is odd iff n is an odd perfect square",
        2,
        limit.saturating_sub(1) as u64,
        mismatches,
    ))
}

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion with fast
/// modular exponentiation. Returns 0 when p divides a, +1 for nonzero
/// quadratic residues, -1 otherwise.
pub fn legendre(a: i64, p: u64) -> Result<i32> {
    require_odd_prime(p)?;
    let reduced = a.rem_euclid(p as i64) as u64;
    if reduced == 0 {
        return Ok(0);
    }
    let mut result: u64 = 1;
    let mut base = reduced % p;
    let mut exp = (p - 1) / 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    Ok(if result == 1 { 1 } else { -1 })
}

/// Check the four mod-2 links between the pod2 series, its eta-quotient
/// image under q -> q^8 times q, the discriminant expansion, and the
/// odd-square indicator: all pairwise congruent mod 2 up to `order`.
pub fn delta_parity_link(order: usize) -> VerificationReport {
    let source_order = (order - 1).div_ceil(8) + 1;
    let pod2 = pod2_quotient_spec().expand(source_order).magnify(8).shift_up(1).truncated(order);
    let quotient = EtaQuotientSpec::new(vec![(16, 2), (64, 1), (8, -1), (32, -2)], 1).expand(order);
    let delta = delta_quotient_spec().expand(order);
    let squares = odd_square_sum(order);
    let sides: [(&str, &TruncatedSeries); 4] = [
        ("pod2 image", &pod2),
        ("eta quotient", &quotient),
        ("delta", &delta),
        ("odd squares", &squares),
    ];
    let mut mismatches = Vec::new();
    for i in 0..sides.len() {
        for j in i + 1..sides.len() {
            for c in compare_series(sides[i].1, sides[j].1, 2, order) {
                mismatches.push(Counterexample {
                    index: c.index,
                    lhs: format!("{}: {}", sides[i].0, c.lhs),
                    rhs: format!("{}: {}", sides[j].0, c.rhs),
                });
                if mismatches.len() > MAX_COUNTEREXAMPLES {
                    break;
                }
            }
        }
    }
    VerificationReport::from_mismatches(
        "delta-parity-link",
        "sum pod2(n) q^{8n+1}, q*f16^2*f64/(f8*f32^2), q*f1^24 and the odd-square indicator are pairwise congruent mod 2",
        2,
        order as u64,
        mismatches,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn tau_prefix() {
        let t = delta_series(13);
        let expect = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944];
        for (n, v) in expect.iter().enumerate() {
            assert_eq!(t.tau(n + 1), &BigInt::from(*v), "tau({})", n + 1);
        }
    }

    #[test]
    fn tau_six_factors() {
        let t = delta_series(10);
        assert_eq!(t.tau(6), &(t.tau(2) * t.tau(3)));
    }

    #[test]
    fn tau_nine_from_recurrence() {
        let t = delta_series(10);
        let expected = t.tau(3) * t.tau(3) - BigInt::from(3).pow(11) * t.tau(1);
        assert_eq!(t.tau(9), &expected);
        assert_eq!(t.tau(9), &BigInt::from(-113643));
    }

    #[test]
    fn tau_four_from_recurrence() {
        let t = delta_series(5);
        let expected = t.tau(2) * t.tau(2) - BigInt::from(2).pow(11) * t.tau(1);
        assert_eq!(t.tau(4), &expected);
    }

    #[test]
    fn hecke_operator_shapes() {
        let t = delta_series(40);
        let s = t.as_series();
        let transformed = hecke_tp(&s, 3, 12);
        assert_eq!(transformed.order(), 14);
        // n=1 coefficient is tau(p): the p | n term is absent
        assert_eq!(transformed.coeff(1), t.tau(3));
        // zero in, zero out
        let z = TruncatedSeries::zero(20);
        assert_eq!(hecke_tp(&z, 5, 12), TruncatedSeries::zero(4));
    }

    #[test]
    fn hecke_operator_on_delta_scales_by_tau_p() {
        let t = delta_series(200);
        let s = t.as_series();
        for p in [2u64, 3, 5] {
            let transformed = hecke_tp(&s, p, 12);
            let order = transformed.order();
            let scaled = s.truncated(order).scale(t.tau(p as usize));
            assert_eq!(transformed, scaled, "p = {p}");
        }
    }

    #[test]
    fn eigenform_check_passes_and_guards_table() {
        let t = delta_series(501);
        assert!(eigenform_check(&t, 2, 250).unwrap().passed());
        assert!(matches!(
            eigenform_check(&t, 7, 200),
            Err(Error::TableTooSmall { required: 1400, available: 501 })
        ));
    }

    #[test]
    fn perturbed_tau_fails_eigenform() {
        let mut t = delta_series(101);
        t.values[50] += BigInt::one();
        let r = eigenform_check(&t, 2, 50).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn multiplicativity_holds_to_300() {
        let t = delta_series(300);
        let r = tau_multiplicativity_check(&t, 300).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.range_checked > 0);
    }

    #[test]
    fn tau_parity_matches_odd_squares() {
        let t = delta_series(400);
        assert!(tau_parity_check(&t, 400).unwrap().passed());
        assert!(t.is_odd(1));
        assert!(t.is_odd(9));
        assert!(!t.is_odd(2));
    }

    #[test]
    fn legendre_basics() {
        for p in [3u64, 5, 7, 11, 97] {
            assert_eq!(legendre(1, p).unwrap(), 1, "p = {p}");
            assert_eq!(legendre(p as i64, p).unwrap(), 0, "p = {p}");
        }
        // squares mod 5 are {0,1,4}; 17 = 2 (mod 5)
        assert_eq!(legendre(17, 5).unwrap(), -1);
        assert!(matches!(legendre(3, 2), Err(Error::NotAnOddPrime { value: 2 })));
        assert!(legendre(3, 15).is_err());
    }

    #[test]
    fn legendre_matches_exhaustive_square_search() {
        for p in (3..100).filter(|&p| crate::arith::is_prime(p)) {
            let residues: std::collections::HashSet<u64> = (1..p).map(|x| x * x % p).collect();
            for a in 0..(2 * p as i64) {
                let expected = if a as u64 % p == 0 {
                    0
                } else if residues.contains(&(a as u64 % p)) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(a, p).unwrap(), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn delta_link_small_order() {
        let r = delta_parity_link(120);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn csv_starts_at_one() {
        let t = delta_series(4);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,value\n1,1\n2,-24\n3,252\n");
    }
}
