//! Infinite families of arithmetic-progression congruences for pod2.
//!
//! Four family shapes, each built from an odd prime p and an auxiliary
//! residue:
//!
//! - mod-2 base: pod2(p*n + (s-1)/8) even, for s = 1 (mod 8) with (s/p) = -1
//! - mod-2 odd power: pod2(p^{2k+1}*n + (s*p^{2k}-1)/8) even
//! - mod-2 even power: pod2(p^{2k+2}*n + (r*p^{2k+1}-1)/8) even, for
//!   r*p = 1 (mod 8), gcd(r,p) = 1
//! - mod-8: pod2(p^{2k+2}*n + (r*p^{2k+1}-1)/8) divisible by 8, for
//!   p = 7 (mod 8), r = 7 (mod 8), gcd(r,p) = 1
//!
//! In every family the hypotheses force the numerator `... - 1` to be
//! divisible by 8, and [`FamilyParams`] asserts that at construction time.
//! The mod-8 family is sometimes quoted with a `+ 1` numerator instead;
//! under its own hypotheses r*p^{2k+1} = 1 (mod 8), so that offset is never
//! an integer, and [`FamilyParams::mod8_with_plus_offset`] exists precisely
//! to demonstrate the rejection.

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{is_triangular, require_odd_prime};
use crate::error::{Error, Result};
use crate::hecke::{legendre, TauTable};
use crate::partitions::Pod2Table;
use crate::report::{Counterexample, VerificationReport, MAX_COUNTEREXAMPLES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Mod2Base,
    Mod2OddPower,
    Mod2EvenPower,
    Mod8,
}

impl FamilyKind {
    pub fn modulus(self) -> u64 {
        match self {
            FamilyKind::Mod8 => 8,
            _ => 2,
        }
    }
}

/// A fully validated congruence family instance: the progression
/// step*n + offset along which pod2 vanishes modulo the family modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    kind: FamilyKind,
    p: u64,
    /// The auxiliary residue (s for the base/odd-power families, r for the
    /// even-power and mod-8 families).
    param: u64,
    k: u32,
    step: u64,
    offset: u64,
}

fn checked_pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e).ok_or_else(|| Error::InvalidFamilyParameter {
        reason: format!("{p}^{e} overflows the progression step"),
    })
}

fn offset_from(numerator: u64, description: &str) -> Result<u64> {
    if numerator % 8 != 0 {
        return Err(Error::NonIntegralOffset { numerator: description.to_string() });
    }
    Ok(numerator / 8)
}

impl FamilyParams {
    /// Validate the hypotheses for one (p, param, k) instance and derive its
    /// progression.
    pub fn new(kind: FamilyKind, p: u64, param: u64, k: u32) -> Result<Self> {
        require_odd_prime(p)?;
        let invalid = |reason: String| Error::InvalidFamilyParameter { reason };
        match kind {
            FamilyKind::Mod2Base | FamilyKind::Mod2OddPower => {
                let s = param;
                if !(1..=8 * p).contains(&s) || s % 8 != 1 {
                    return Err(invalid(format!("s = {s} must lie in [1, {}] with s = 1 (mod 8)", 8 * p)));
                }
                if legendre(s as i64, p)? != -1 {
                    return Err(invalid(format!("s = {s} must be a quadratic non-residue mod {p}")));
                }
                let k = if kind == FamilyKind::Mod2Base { 0 } else { k };
                let step = checked_pow(p, 2 * k + 1)?;
                let scale = checked_pow(p, 2 * k)?;
                let numerator = s
                    .checked_mul(scale)
                    .ok_or_else(|| invalid(format!("s*p^{} overflows", 2 * k)))?
                    - 1;
                let offset = offset_from(numerator, &format!("{s}*{p}^{} - 1", 2 * k))?;
                Ok(Self { kind, p, param: s, k, step, offset })
            }
            FamilyKind::Mod2EvenPower | FamilyKind::Mod8 => {
                let r = param;
                if kind == FamilyKind::Mod2EvenPower && k == 0 {
                    return Err(invalid("the mod-2 even-power family requires k >= 1".into()));
                }
                if kind == FamilyKind::Mod8 && p % 8 != 7 {
                    return Err(invalid(format!("p = {p} must be 7 (mod 8)")));
                }
                let r_ok = match kind {
                    // r <= 8p and r*p = 1 (mod 8)
                    FamilyKind::Mod2EvenPower => (1..=8 * p).contains(&r) && (r * p) % 8 == 1,
                    // r < 8p and r = 7 (mod 8)
                    _ => (1..8 * p).contains(&r) && r % 8 == 7,
                };
                if !r_ok {
                    return Err(invalid(format!(
                        "r = {r} must lie below {} with the required residue mod 8",
                        8 * p
                    )));
                }
                if r.gcd(&p) != 1 {
                    return Err(invalid(format!("r = {r} must be coprime to p = {p}")));
                }
                let step = checked_pow(p, 2 * k + 2)?;
                let scale = checked_pow(p, 2 * k + 1)?;
                let numerator = r
                    .checked_mul(scale)
                    .ok_or_else(|| invalid(format!("r*p^{} overflows", 2 * k + 1)))?
                    - 1;
                let offset = offset_from(numerator, &format!("{r}*{p}^{} - 1", 2 * k + 1))?;
                Ok(Self { kind, p, param: r, k, step, offset })
            }
        }
    }

    /// The verbatim "+1" reading of the mod-8 family offset. The hypotheses
    /// force r*p^{2k+1} = 1 (mod 8), so the numerator is 2 (mod 8) and this
    /// constructor always rejects; it exists so that the rejection itself is
    /// testable.
    pub fn mod8_with_plus_offset(p: u64, r: u64, k: u32) -> Result<Self> {
        let canonical = Self::new(FamilyKind::Mod8, p, r, k)?;
        let scale = checked_pow(p, 2 * k + 1)?;
        let numerator = r
            .checked_mul(scale)
            .and_then(|v| v.checked_add(1))
            .ok_or_else(|| Error::InvalidFamilyParameter {
                reason: format!("r*p^{} overflows", 2 * k + 1),
            })?;
        let offset = offset_from(numerator, &format!("{r}*{p}^{} + 1", 2 * k + 1))?;
        Ok(Self { offset, ..canonical })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn param(&self) -> u64 {
        self.param
    }

    /// The progression (step, offset): indices step*n + offset.
    pub fn progression(&self) -> (u64, u64) {
        (self.step, self.offset)
    }

    /// Largest pod2-table size needed to check n < range.
    pub fn required_table(&self, range: usize) -> usize {
        self.step as usize * range.saturating_sub(1) + self.offset as usize + 1
    }
}

/// All s in [1, 8p] with s = 1 (mod 8) and (s/p) = -1.
pub fn nonresidue_s_values(p: u64) -> Result<Vec<u64>> {
    require_odd_prime(p)?;
    (1..=8 * p)
        .filter(|s| s % 8 == 1)
        .filter_map(|s| match legendre(s as i64, p) {
            Ok(-1) => Some(Ok(s)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

/// All r in [1, 8p] with r*p = 1 (mod 8) and gcd(r, p) = 1.
pub fn reciprocal_r_values(p: u64) -> Result<Vec<u64>> {
    require_odd_prime(p)?;
    Ok((1..=8 * p).filter(|r| (r * p) % 8 == 1 && r.gcd(&p) == 1).collect())
}

/// All r in [1, 8p) with r = 7 (mod 8) and gcd(r, p) = 1; requires
/// p = 7 (mod 8).
pub fn mod8_r_values(p: u64) -> Result<Vec<u64>> {
    require_odd_prime(p)?;
    if p % 8 != 7 {
        return Err(Error::InvalidFamilyParameter { reason: format!("p = {p} must be 7 (mod 8)") });
    }
    Ok((1..8 * p).filter(|r| r % 8 == 7 && r.gcd(&p) == 1).collect())
}

/// Record whether tau(p) is even; the odd/even-power families assume it.
fn tau_parity_note(tau: &TauTable, p: u64) -> Result<String> {
    tau.require_limit(p as usize + 1)?;
    Ok(format!(
        "; hypothesis tau({p}) = 0 (mod 2) held: {}",
        if tau.is_odd(p as usize) { "no" } else { "yes" }
    ))
}

/// Check one family instance over n < range against the exact table,
/// asserting divisibility by the family modulus (which is stronger than
/// comparing pre-reduced residues).
fn check_instance(
    table: &Pod2Table,
    params: &FamilyParams,
    range: usize,
    mismatches: &mut Vec<Counterexample>,
) -> Result<()> {
    table.require_limit(params.required_table(range))?;
    let (step, offset) = params.progression();
    let modulus = params.kind.modulus();
    let m = num_bigint::BigInt::from(modulus);
    for n in 0..range {
        let index = step as usize * n + offset as usize;
        let value = table.value(index);
        let divisible = (value % &m).is_zero();
        if !divisible {
            mismatches.push(Counterexample {
                index: index as u64,
                lhs: value.to_string(),
                rhs: format!("0 (mod {modulus})"),
            });
        }
        if mismatches.len() > MAX_COUNTEREXAMPLES {
            break;
        }
    }
    Ok(())
}

/// Mod-2 base family for every qualifying s at the given prime:
/// pod2(p*n + (s-1)/8) is even for all n < range.
pub fn verify_family_mod2_base(table: &Pod2Table, p: u64, range: usize) -> Result<VerificationReport> {
    let s_values = nonresidue_s_values(p)?;
    let mut mismatches = Vec::new();
    for &s in &s_values {
        let params = FamilyParams::new(FamilyKind::Mod2Base, p, s, 0)?;
        check_instance(table, &params, range, &mut mismatches)?;
    }
    Ok(VerificationReport::from_mismatches(
        format!("family-mod2-base-p{p}"),
        format!("pod2({p}n + (s-1)/8) is even for s in {s_values:?}, n < {range}"),
        2,
        (s_values.len() * range) as u64,
        mismatches,
    ))
}

/// Mod-2 odd-power family: pod2(p^{2k+1}*n + (s*p^{2k}-1)/8) even for every
/// qualifying s and n < range. k = 0 reduces to the base family.
pub fn verify_family_mod2_odd_power(
    table: &Pod2Table,
    tau: &TauTable,
    p: u64,
    k: u32,
    range: usize,
) -> Result<VerificationReport> {
    let s_values = nonresidue_s_values(p)?;
    let mut mismatches = Vec::new();
    for &s in &s_values {
        let params = FamilyParams::new(FamilyKind::Mod2OddPower, p, s, k)?;
        check_instance(table, &params, range, &mut mismatches)?;
    }
    let note = tau_parity_note(tau, p)?;
    Ok(VerificationReport::from_mismatches(
        format!("family-mod2-odd-power-p{p}-k{k}"),
        format!(
            "pod2({p}^{}n + (s*{p}^{}-1)/8) is even for s in {s_values:?}, n < {range}{note}",
            2 * k + 1,
            2 * k
        ),
        2,
        (s_values.len() * range) as u64,
        mismatches,
    ))
}

/// Mod-2 even-power family: pod2(p^{2k+2}*n + (r*p^{2k+1}-1)/8) even for
/// every qualifying r and n < range; k >= 1.
pub fn verify_family_mod2_even_power(
    table: &Pod2Table,
    tau: &TauTable,
    p: u64,
    k: u32,
    range: usize,
) -> Result<VerificationReport> {
    let r_values = reciprocal_r_values(p)?;
    let mut mismatches = Vec::new();
    for &r in &r_values {
        let params = FamilyParams::new(FamilyKind::Mod2EvenPower, p, r, k)?;
        check_instance(table, &params, range, &mut mismatches)?;
    }
    let note = tau_parity_note(tau, p)?;
    Ok(VerificationReport::from_mismatches(
        format!("family-mod2-even-power-p{p}-k{k}"),
        format!(
            "pod2({p}^{}n + (r*{p}^{}-1)/8) is even for r in {r_values:?}, n < {range}{note}",
            2 * k + 2,
            2 * k + 1
        ),
        2,
        (r_values.len() * range) as u64,
        mismatches,
    ))
}

/// Mod-8 family: pod2(p^{2k+2}*n + (r*p^{2k+1}-1)/8) divisible by 8 for
/// every qualifying r and n < range; p = 7 (mod 8).
pub fn verify_family_mod8(table: &Pod2Table, p: u64, k: u32, range: usize) -> Result<VerificationReport> {
    let r_values = mod8_r_values(p)?;
    let mut mismatches = Vec::new();
    for &r in &r_values {
        let params = FamilyParams::new(FamilyKind::Mod8, p, r, k)?;
        check_instance(table, &params, range, &mut mismatches)?;
    }
    Ok(VerificationReport::from_mismatches(
        format!("family-mod8-p{p}-k{k}"),
        format!(
            "pod2({p}^{}n + (r*{p}^{}-1)/8) is divisible by 8 for r in {r_values:?}, n < {range}",
            2 * k + 2,
            2 * k + 1
        ),
        8,
        (r_values.len() * range) as u64,
        mismatches,
    ))
}

/// Equivalent phrasing of the base family through the parity law: the
/// progression p*n + (s-1)/8 avoids the triangular numbers. Both routes must
/// agree index by index with the table parity.
pub fn verify_family_mod2_base_triangular_route(
    table: &Pod2Table,
    p: u64,
    range: usize,
) -> Result<VerificationReport> {
    let s_values = nonresidue_s_values(p)?;
    let mut mismatches = Vec::new();
    for &s in &s_values {
        let params = FamilyParams::new(FamilyKind::Mod2Base, p, s, 0)?;
        table.require_limit(params.required_table(range))?;
        let (step, offset) = params.progression();
        for n in 0..range {
            let index = step as usize * n + offset as usize;
            let triangular = is_triangular(index as u64);
            let odd = table.is_odd(index);
            if triangular || odd {
                mismatches.push(Counterexample {
                    index: index as u64,
                    lhs: format!("triangular: {triangular}"),
                    rhs: format!("pod2 odd: {odd}"),
                });
                if mismatches.len() > MAX_COUNTEREXAMPLES {
                    break;
                }
            }
        }
    }
    Ok(VerificationReport::from_mismatches(
        format!("family-mod2-base-triangular-p{p}"),
        format!("the progressions {p}n + (s-1)/8, s in {s_values:?}, avoid all triangular numbers"),
        2,
        (s_values.len() * range) as u64,
        mismatches,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::delta_series;
    use crate::partitions::pod2_dp;

    #[test]
    fn s_value_enumeration() {
        assert_eq!(nonresidue_s_values(3).unwrap(), vec![17]);
        assert_eq!(nonresidue_s_values(5).unwrap(), vec![17, 33]);
        assert_eq!(nonresidue_s_values(11).unwrap(), vec![17, 41, 57, 65, 73]);
        assert_eq!(nonresidue_s_values(13).unwrap(), vec![33, 41, 57, 73, 89, 97]);
    }

    #[test]
    fn r_value_enumeration() {
        assert_eq!(reciprocal_r_values(3).unwrap(), vec![11, 19]);
        assert_eq!(reciprocal_r_values(5).unwrap(), vec![13, 21, 29, 37]);
        assert_eq!(mod8_r_values(7).unwrap(), vec![15, 23, 31, 39, 47, 55]);
        assert!(mod8_r_values(5).is_err());
    }

    #[test]
    fn base_family_progressions() {
        let params = FamilyParams::new(FamilyKind::Mod2Base, 3, 17, 0).unwrap();
        assert_eq!(params.progression(), (3, 2));
        let params = FamilyParams::new(FamilyKind::Mod2Base, 5, 33, 0).unwrap();
        assert_eq!(params.progression(), (5, 4));
    }

    #[test]
    fn odd_power_offsets() {
        let params = FamilyParams::new(FamilyKind::Mod2OddPower, 3, 17, 1).unwrap();
        assert_eq!(params.progression(), (27, 19)); // (17*9 - 1)/8
        let params = FamilyParams::new(FamilyKind::Mod2OddPower, 5, 17, 1).unwrap();
        assert_eq!(params.progression(), (125, 53)); // (17*25 - 1)/8
    }

    #[test]
    fn even_power_offsets() {
        let params = FamilyParams::new(FamilyKind::Mod2EvenPower, 3, 11, 1).unwrap();
        assert_eq!(params.progression(), (81, 37)); // (11*27 - 1)/8
        let params = FamilyParams::new(FamilyKind::Mod2EvenPower, 3, 19, 1).unwrap();
        assert_eq!(params.progression(), (81, 64)); // (19*27 - 1)/8
    }

    #[test]
    fn construction_rejections() {
        // r = 3 shares a factor with p = 3
        assert!(matches!(
            FamilyParams::new(FamilyKind::Mod2EvenPower, 3, 3, 1),
            Err(Error::InvalidFamilyParameter { .. })
        ));
        // k = 0 is outside the even-power family statement
        assert!(FamilyParams::new(FamilyKind::Mod2EvenPower, 3, 11, 0).is_err());
        // s must be a non-residue
        assert!(FamilyParams::new(FamilyKind::Mod2Base, 3, 9, 0).is_err());
        assert!(FamilyParams::new(FamilyKind::Mod2Base, 3, 2, 0).is_err());
        // mod-8 family needs p = 7 (mod 8)
        assert!(FamilyParams::new(FamilyKind::Mod8, 3, 7, 0).is_err());
        // p must be an odd prime
        assert!(FamilyParams::new(FamilyKind::Mod2Base, 9, 17, 0).is_err());
    }

    #[test]
    fn mod8_offsets_and_verbatim_rejection() {
        let offsets: Vec<u64> = mod8_r_values(7)
            .unwrap()
            .iter()
            .map(|&r| FamilyParams::new(FamilyKind::Mod8, 7, r, 0).unwrap().progression().1)
            .collect();
        assert_eq!(offsets, vec![13, 20, 27, 34, 41, 48]);
        // the "+1" numerator is 2 (mod 8), never divisible
        for &r in &mod8_r_values(7).unwrap() {
            assert!(matches!(
                FamilyParams::mod8_with_plus_offset(7, r, 0),
                Err(Error::NonIntegralOffset { .. })
            ));
        }
    }

    #[test]
    fn families_verify_at_small_scale() {
        let table = pod2_dp(1400);
        let tau = delta_series(16);
        assert!(verify_family_mod2_base(&table, 3, 400).unwrap().passed());
        assert!(verify_family_mod2_odd_power(&table, &tau, 3, 1, 50).unwrap().passed());
        assert!(verify_family_mod2_even_power(&table, &tau, 3, 1, 16).unwrap().passed());
        assert!(verify_family_mod8(&table, 7, 0, 27).unwrap().passed());
    }

    #[test]
    fn odd_power_k0_matches_base_family() {
        let table = pod2_dp(700);
        let tau = delta_series(8);
        let base = verify_family_mod2_base(&table, 3, 200).unwrap();
        let k0 = verify_family_mod2_odd_power(&table, &tau, 3, 0, 200).unwrap();
        assert_eq!(base.status, k0.status);
        assert_eq!(base.range_checked, k0.range_checked);
        assert_eq!(
            FamilyParams::new(FamilyKind::Mod2OddPower, 3, 17, 0).unwrap().progression(),
            FamilyParams::new(FamilyKind::Mod2Base, 3, 17, 0).unwrap().progression()
        );
    }

    #[test]
    fn triangular_route_agrees() {
        let table = pod2_dp(1300);
        for p in [3, 5, 11, 13] {
            let direct = verify_family_mod2_base(&table, p, 90).unwrap();
            let triangular = verify_family_mod2_base_triangular_route(&table, p, 90).unwrap();
            assert_eq!(direct.status, triangular.status, "p = {p}");
            assert!(direct.passed());
        }
    }

    #[test]
    fn table_guard_names_requirement() {
        let table = pod2_dp(10);
        let err = verify_family_mod2_base(&table, 3, 400).unwrap_err();
        assert!(matches!(err, Error::TableTooSmall { required: 1200, available: 10 }));
    }

    #[test]
    fn tau_hypothesis_is_recorded() {
        let table = pod2_dp(1400);
        let tau = delta_series(16);
        let r = verify_family_mod2_odd_power(&table, &tau, 3, 1, 40).unwrap();
        assert!(r.statement.contains("held: yes"), "{}", r.statement);
    }
}
