//! Combinatorial ground truth for pod2(n).
//!
//! pod2(n) counts partitions of n into distinct odd parts together with
//! unrestricted parts congruent to 4 mod 8 — the coefficient of q^n in
//! `f2^2 f8 / (f1 f4^2)`. Two independent computations live here:
//!
//! - [`pod2_dp`]: a dynamic-programming table (0/1 items for odd parts,
//!   unbounded items for parts = 4 mod 8)
//! - [`pod2_enumerate`]: explicit recursion over decreasing part lists
//!
//! plus [`pod2_series_check`], which confronts the table with the
//! eta-quotient expansion coefficient by coefficient.

use std::io::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::report::{Counterexample, VerificationReport, MAX_COUNTEREXAMPLES};
use crate::series::eta::EtaQuotientSpec;

/// Largest n accepted by [`pod2_enumerate`]; the recursion is exponential.
pub const ENUMERATION_LIMIT: usize = 80;

/// The quotient `f2^2 f8 / (f1 f4^2)` whose coefficients are pod2(n).
pub fn pod2_quotient_spec() -> EtaQuotientSpec {
    EtaQuotientSpec::new(vec![(2, 2), (8, 1), (1, -1), (4, -2)], 0)
}

/// Exact table of pod2(0..limit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pod2Table {
    values: Vec<BigInt>,
}

impl Pod2Table {
    /// Exclusive bound on the tabulated argument.
    pub fn limit(&self) -> usize {
        self.values.len()
    }

    /// pod2(n); panics when n is out of range.
    pub fn value(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn is_odd(&self, n: usize) -> bool {
        self.values[n].is_odd()
    }

    pub fn require_limit(&self, required: usize) -> Result<()> {
        if self.limit() < required {
            return Err(Error::TableTooSmall { required, available: self.limit() });
        }
        Ok(())
    }

    /// CSV rows `n,value` starting from n = 0, with header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "n,value")?;
        for (n, v) in self.values.iter().enumerate() {
            writeln!(w, "{n},{v}")?;
        }
        Ok(())
    }
}

/// JSON form: a bare array of decimal strings.
impl Serialize for Pod2Table {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.values.len()))?;
        for v in &self.values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }
}

/// Dynamic-programming table of pod2(n) for n < limit.
///
/// Part classes are processed in increasing size, odd items before the
/// mod-4 items; the result is independent of that order (a test permutes it).
pub fn pod2_dp(limit: usize) -> Pod2Table {
    assert!(limit >= 1, "limit must be positive");
    let mut dp = vec![BigInt::zero(); limit];
    dp[0] = BigInt::one();
    // distinct odd parts: 0/1 knapsack, descending inner loop
    let mut part = 1;
    while part < limit {
        for n in (part..limit).rev() {
            let prev = dp[n - part].clone();
            dp[n] += prev;
        }
        part += 2;
    }
    // parts = 4 (mod 8): unbounded, ascending inner loop
    let mut part = 4;
    while part < limit {
        for n in part..limit {
            let prev = dp[n - part].clone();
            dp[n] += prev;
        }
        part += 8;
    }
    Pod2Table { values: dp }
}

/// Count partitions of n by explicit recursion over decreasing part lists:
/// odd parts strictly decrease (distinctness), parts = 4 mod 8 may repeat.
/// Refuses n > [`ENUMERATION_LIMIT`].
pub fn pod2_enumerate(n: usize) -> Result<BigInt> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit { n, max: ENUMERATION_LIMIT });
    }
    fn count(remaining: usize, max_part: usize) -> BigInt {
        if remaining == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for part in (1..=max_part.min(remaining)).rev() {
            if part % 2 == 1 {
                total += count(remaining - part, part - 1);
            } else if part % 8 == 4 {
                total += count(remaining - part, part);
            }
        }
        total
    }
    Ok(count(n, n))
}

/// Expand an eta quotient to `limit` and compare coefficient-wise with the
/// DP table. Mismatches are report content, not errors.
pub fn quotient_table_check(spec: &EtaQuotientSpec, limit: usize) -> VerificationReport {
    let series = spec.expand(limit);
    let table = pod2_dp(limit);
    let mut mismatches = Vec::new();
    for n in 0..limit {
        if series.coeff(n) != table.value(n) {
            mismatches.push(Counterexample {
                index: n as u64,
                lhs: series.coeff(n).to_string(),
                rhs: table.value(n).to_string(),
            });
            if mismatches.len() > MAX_COUNTEREXAMPLES {
                break;
            }
        }
    }
    VerificationReport::from_mismatches(
        "pod2-quotient-vs-table",
        "eta-quotient expansion of f2^2*f8/(f1*f4^2) equals the pod2 DP table",
        0,
        limit as u64,
        mismatches,
    )
}

/// The oracle-agreement check for the canonical pod2 quotient.
pub fn pod2_series_check(limit: usize) -> VerificationReport {
    quotient_table_check(&pod2_quotient_spec(), limit)
}

/// Cross-check the DP table against exhaustive enumeration for all n <= upto.
pub fn enumeration_cross_check(table: &Pod2Table, upto: usize) -> Result<VerificationReport> {
    table.require_limit(upto + 1)?;
    let mut mismatches = Vec::new();
    for n in 0..=upto {
        let enumerated = pod2_enumerate(n)?;
        if &enumerated != table.value(n) {
            mismatches.push(Counterexample {
                index: n as u64,
                lhs: table.value(n).to_string(),
                rhs: enumerated.to_string(),
            });
        }
    }
    Ok(VerificationReport::from_mismatches(
        "pod2-dp-vs-enumeration",
        "DP table equals exhaustive enumeration over decreasing part lists",
        0,
        (upto + 1) as u64,
        mismatches,
    ))
}

/// Check that pod2(m) is odd exactly when 8m+1 is an odd perfect square
/// (equivalently, m is triangular), for all m < the table limit.
pub fn parity_law_check(table: &Pod2Table) -> VerificationReport {
    let mut mismatches = Vec::new();
    for m in 0..table.limit() {
        let odd = table.is_odd(m);
        let tri = crate::arith::is_triangular(m as u64);
        if odd != tri {
            mismatches.push(Counterexample {
                index: m as u64,
                lhs: table.value(m).to_string(),
                rhs: if tri { "odd expected".into() } else { "even expected".into() },
            });
            if mismatches.len() > MAX_COUNTEREXAMPLES {
                break;
            }
        }
    }
    VerificationReport::from_mismatches(
        "pod2-parity-odd-square-law",
        "pod2(m) is odd iff 8m+1 is an odd perfect square",
        2,
        table.limit() as u64,
        mismatches,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dp_prefix() {
        let t = pod2_dp(16);
        let expect: Vec<BigInt> =
            [1, 1, 0, 1, 2, 2, 1, 2, 4, 4, 3, 4, 8, 8, 6, 9].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(t.values(), &expect[..]);
    }

    #[test]
    fn empty_partition_and_two() {
        let t = pod2_dp(3);
        assert_eq!(t.value(0), &BigInt::one());
        // 2 is neither odd nor 4 mod 8, and 1+1 repeats an odd part
        assert!(t.value(2).is_zero());
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(pod2_enumerate(0).unwrap(), BigInt::one());
        // {4} and {3,1}
        assert_eq!(pod2_enumerate(4).unwrap(), BigInt::from(2));
        // {5,1} only: 3+3 repeats, 4+2 uses a forbidden 2
        assert_eq!(pod2_enumerate(6).unwrap(), BigInt::one());
    }

    #[test]
    fn enumeration_guard_rail() {
        assert!(matches!(
            pod2_enumerate(81),
            Err(Error::EnumerationLimit { n: 81, max: ENUMERATION_LIMIT })
        ));
        assert!(pod2_enumerate(ENUMERATION_LIMIT).is_ok());
    }

    #[test]
    fn dp_matches_enumeration_to_60() {
        let t = pod2_dp(61);
        for n in 0..=60 {
            assert_eq!(t.value(n), &pod2_enumerate(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn dp_is_order_independent() {
        // Same items processed mod-4 classes first, odd classes descending.
        let limit = 200;
        let mut dp = vec![BigInt::zero(); limit];
        dp[0] = BigInt::one();
        let mut part = 4;
        while part < limit {
            for n in part..limit {
                let prev = dp[n - part].clone();
                dp[n] += prev;
            }
            part += 8;
        }
        let mut odd_parts: Vec<usize> = (1..limit).step_by(2).collect();
        odd_parts.reverse();
        for part in odd_parts {
            for n in (part..limit).rev() {
                let prev = dp[n - part].clone();
                dp[n] += prev;
            }
        }
        assert_eq!(dp, pod2_dp(limit).values());
    }

    #[test]
    fn series_check_passes() {
        let r = pod2_series_check(500);
        assert!(r.passed(), "{r:?}");
        assert!(pod2_series_check(1).passed());
    }

    #[test]
    fn corrupted_quotient_fails_at_four() {
        let bad = EtaQuotientSpec::new(vec![(2, 2), (8, 1), (1, -1), (4, -1)], 0);
        let r = quotient_table_check(&bad, 50);
        assert!(!r.passed());
        assert_eq!(r.first_failure(), Some(4));
    }

    #[test]
    fn parity_law_holds() {
        assert!(parity_law_check(&pod2_dp(600)).passed());
    }

    #[test]
    fn support_is_positive_from_three_on() {
        let t = pod2_dp(600);
        for n in 3..600 {
            assert!(t.value(n) >= &BigInt::one(), "pod2({n}) = 0");
        }
    }

    #[test]
    fn csv_and_json_forms() {
        let t = pod2_dp(3);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,value\n0,1\n1,1\n2,0\n");
        assert_eq!(serde_json::to_string(&t).unwrap(), "[\"1\",\"1\",\"0\"]");
    }

    #[test]
    fn table_size_guard() {
        let t = pod2_dp(10);
        assert!(matches!(
            enumeration_cross_check(&t, 20),
            Err(Error::TableTooSmall { required: 21, available: 10 })
        ));
    }
}
