//! Verification of the dissection identities and mod-2 / mod-8 reductions.
//!
//! Claims live as data in [`claims::builtin_claims`] and are executed by the
//! generic runner; the functions here are the named entry points for each
//! group of statements, each returning structured [`VerificationReport`]s.

pub mod claims;
pub mod recipe;

pub use claims::{builtin_claims, find_claim, run_claim, run_claim_at, CongruenceClaim};
pub use recipe::SeriesRecipe;

use crate::error::Result;
use crate::partitions::Pod2Table;
use crate::report::{Counterexample, VerificationReport, MAX_COUNTEREXAMPLES};

fn run_named(name: &str, order: usize) -> VerificationReport {
    let catalog = builtin_claims();
    let claim = find_claim(&catalog, name).unwrap_or_else(|| panic!("unknown builtin claim {name}"));
    run_claim_at(claim, order).expect("builtin claims are well formed")
}

/// The 3-dissection of psi(q) = f2^2/f1, checked as an exact identity.
pub fn verify_psi_dissection(order: usize) -> VerificationReport {
    run_named("psi-3-dissection", order)
}

/// The 3-dissection of 1/phi(-q) = f2/f1^2, checked as an exact identity.
pub fn verify_inverse_phi_dissection(order: usize) -> VerificationReport {
    run_named("inverse-phi-3-dissection", order)
}

/// The six-term 3-dissection of the pod2 generating function.
pub fn verify_six_term_dissection(order: usize) -> VerificationReport {
    run_named("pod2-six-term-3-dissection", order)
}

/// The three progression extractions pod2(3n+2), pod2(3n), pod2(3n+1)
/// against their exact product forms.
pub fn verify_progression_extractions(order: usize) -> Vec<VerificationReport> {
    ["pod2-progression-3n2", "pod2-progression-3n", "pod2-progression-3n1"]
        .iter()
        .map(|name| run_named(name, order))
        .collect()
}

/// The four mod-2 reductions: pod2(3n+2) even, pod2(3n) against f1,
/// pod2(3n+1) against f3^3, pod2(9n+1) against f1^3.
pub fn verify_mod2_reductions(order: usize) -> Vec<VerificationReport> {
    ["pod2-3n2-even", "pod2-3n-mod2", "pod2-3n1-mod2", "pod2-9n1-mod2"]
        .iter()
        .map(|name| run_named(name, order))
        .collect()
}

/// Jacobi's cube identity, exact and mod 2.
pub fn verify_jacobi_cube(order: usize) -> Vec<VerificationReport> {
    ["jacobi-cube-exact", "jacobi-cube-mod2"].iter().map(|name| run_named(name, order)).collect()
}

/// The squared alternating-square sum mod 2 and the mod-8 theta expansion of
/// the pod2 series.
pub fn verify_mod8_expansion(order: usize) -> Vec<VerificationReport> {
    ["alternating-squares-squared-mod2", "pod2-mod8-theta"]
        .iter()
        .map(|name| run_named(name, order))
        .collect()
}

/// Table route for the parity characterization: pod2(3n+1) is odd exactly
/// when n = 3*k(k+1)/2, checked directly against the DP table for n < limit.
/// The series route is the `pod2-3n1-parity-triangular` claim; both must
/// agree.
pub fn verify_triangular_parity_3n1(table: &Pod2Table, limit: usize) -> Result<VerificationReport> {
    table.require_limit(3 * (limit - 1) + 2)?;
    let mut mismatches = Vec::new();
    for n in 0..limit {
        let odd = table.is_odd(3 * n + 1);
        let thrice_triangular = n % 3 == 0 && crate::arith::is_triangular(n as u64 / 3);
        if odd != thrice_triangular {
            mismatches.push(Counterexample {
                index: n as u64,
                lhs: table.value(3 * n + 1).to_string(),
                rhs: if thrice_triangular { "odd expected".into() } else { "even expected".into() },
            });
            if mismatches.len() > MAX_COUNTEREXAMPLES {
                break;
            }
        }
    }
    Ok(VerificationReport::from_mismatches(
        "pod2-3n1-parity-table",
        "pod2(3n+1) is odd iff n is three times a triangular number (table route)",
        2,
        limit as u64,
        mismatches,
    ))
}
