//! Structured verification outcomes.
//!
//! Every checker in this crate reduces to "compare two integer sequences over
//! a finite range, exactly or modulo M" and reports the result as a
//! [`VerificationReport`]: what was claimed, how far it was checked, whether
//! it held, and the first few counterexamples if it did not.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::series::TruncatedSeries;

/// Keep reports readable when a claim is badly wrong.
pub const MAX_COUNTEREXAMPLES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Whether a claim is supposed to hold or is a deliberately broken negative
/// control that must fail.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    #[default]
    Holds,
    Fails,
}

/// One index where the two sides disagree. Values are decimal strings since
/// exact coefficients outgrow native integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: u64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    /// The mathematical statement being checked, human readable.
    #[serde(rename = "paper_ref")]
    pub statement: String,
    /// 0 means exact equality, otherwise the comparison modulus.
    pub modulus: u64,
    /// Number of indices (or argument tuples) checked.
    #[serde(rename = "range")]
    pub range_checked: u64,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    /// Assemble a report from a mismatch list; status is pass exactly when
    /// the list is empty, and at most [`MAX_COUNTEREXAMPLES`] entries are kept
    /// (in index order).
    pub fn from_mismatches(
        name: impl Into<String>,
        statement: impl Into<String>,
        modulus: u64,
        range_checked: u64,
        mut counterexamples: Vec<Counterexample>,
    ) -> Self {
        let status = if counterexamples.is_empty() { Status::Pass } else { Status::Fail };
        counterexamples.truncate(MAX_COUNTEREXAMPLES);
        Self {
            name: name.into(),
            statement: statement.into(),
            modulus,
            range_checked,
            status,
            counterexamples,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Index of the first counterexample, if any.
    pub fn first_failure(&self) -> Option<u64> {
        self.counterexamples.first().map(|c| c.index)
    }

    /// One human-readable line per claim.
    pub fn summary_line(&self) -> String {
        match self.status {
            Status::Pass => format!("PASS  {:<44} range {:>6}  {}", self.name, self.range_checked, self.statement),
            Status::Fail => format!(
                "FAIL  {:<44} range {:>6}  first counterexample at {}",
                self.name,
                self.range_checked,
                self.counterexamples.first().map(|c| c.index.to_string()).unwrap_or_default()
            ),
        }
    }
}

/// Compare the first `upto` coefficients of two series, exactly when
/// `modulus == 0` and mod `modulus` otherwise, collecting mismatches with the
/// exact coefficient values on both sides.
pub fn compare_series(
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
    modulus: u64,
    upto: usize,
) -> Vec<Counterexample> {
    assert!(
        upto <= lhs.order().min(rhs.order()),
        "comparison range {} exceeds known orders ({}, {})",
        upto,
        lhs.order(),
        rhs.order()
    );
    let m = BigInt::from(modulus);
    let mut out = Vec::new();
    for n in 0..upto {
        let a = lhs.coeff(n);
        let b = rhs.coeff(n);
        let equal = if modulus == 0 { a == b } else { (a - b).mod_floor(&m).is_zero() };
        if !equal {
            out.push(Counterexample { index: n as u64, lhs: a.to_string(), rhs: b.to_string() });
            if out.len() > MAX_COUNTEREXAMPLES {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_reflects_counterexamples() {
        let r = VerificationReport::from_mismatches("a", "x = x", 0, 10, vec![]);
        assert!(r.passed());
        let r = VerificationReport::from_mismatches(
            "b",
            "x = y",
            2,
            10,
            vec![Counterexample { index: 3, lhs: "1".into(), rhs: "0".into() }],
        );
        assert!(!r.passed());
        assert_eq!(r.first_failure(), Some(3));
    }

    #[test]
    fn compare_exact_and_modular() {
        let a = TruncatedSeries::from_ints(&[1, 3, 5]);
        let b = TruncatedSeries::from_ints(&[1, 1, 6]);
        let exact = compare_series(&a, &b, 0, 3);
        assert_eq!(exact.len(), 2);
        let mod2 = compare_series(&a, &b, 2, 3);
        assert_eq!(mod2.len(), 1);
        assert_eq!(mod2[0].index, 2);
        assert_eq!(mod2[0].lhs, "5");
        assert_eq!(mod2[0].rhs, "6");
    }

    #[test]
    fn report_serializes_with_schema_keys() {
        let r = VerificationReport::from_mismatches("n", "s", 2, 7, vec![]);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert!(v.get("paper_ref").is_some());
        assert!(v.get("range").is_some());
        assert_eq!(v.get("status").unwrap(), "pass");
    }
}
