//! Congruence claims as data, plus the builtin catalog.
//!
//! A [`CongruenceClaim`] pins down everything needed to re-check one series
//! statement: two recipes, a modulus (0 for exact equality), a default check
//! order, and whether the claim is supposed to hold or is a negative control
//! that must fail. The catalog in [`builtin_claims`] covers every dissection,
//! extraction and mod-2/mod-8 reduction verified by this crate, together with
//! deliberately perturbed controls that keep the checker honest.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::recipe::SeriesRecipe;
use crate::report::{compare_series, Expectation, VerificationReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceClaim {
    pub name: String,
    /// Human-readable form of the assertion.
    pub statement: String,
    pub lhs: SeriesRecipe,
    pub rhs: SeriesRecipe,
    /// 0 means exact equality; otherwise coefficients are compared mod this.
    pub modulus: u64,
    #[serde(rename = "order")]
    pub check_order: usize,
    #[serde(default)]
    pub expect: Expectation,
}

impl CongruenceClaim {
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: &str| Error::InvalidClaim { name: self.name.clone(), reason: reason.into() };
        if self.check_order < 2 {
            return Err(fail("check order must be at least 2"));
        }
        if self.modulus == 1 {
            return Err(fail("modulus 1 makes every comparison vacuous"));
        }
        self.lhs.validate().map_err(|r| fail(&r))?;
        self.rhs.validate().map_err(|r| fail(&r))?;
        Ok(())
    }
}

/// Evaluate both sides at the claim's own order and compare.
pub fn run_claim(claim: &CongruenceClaim) -> Result<VerificationReport> {
    run_claim_at(claim, claim.check_order)
}

/// Evaluate both sides at an overridden order and compare.
pub fn run_claim_at(claim: &CongruenceClaim, order: usize) -> Result<VerificationReport> {
    claim.validate()?;
    if order < 2 {
        return Err(Error::InvalidClaim {
            name: claim.name.clone(),
            reason: "check order must be at least 2".into(),
        });
    }
    let lhs = claim.lhs.eval(order)?;
    let rhs = claim.rhs.eval(order)?;
    let mismatches = compare_series(&lhs, &rhs, claim.modulus, order);
    Ok(VerificationReport::from_mismatches(
        claim.name.clone(),
        claim.statement.clone(),
        claim.modulus,
        order as u64,
        mismatches,
    ))
}

/// Look up a claim by name.
pub fn find_claim<'a>(claims: &'a [CongruenceClaim], name: &str) -> Option<&'a CongruenceClaim> {
    claims.iter().find(|c| c.name == name)
}

fn claim(
    name: &str,
    statement: &str,
    lhs: SeriesRecipe,
    rhs: SeriesRecipe,
    modulus: u64,
    check_order: usize,
) -> CongruenceClaim {
    CongruenceClaim {
        name: name.into(),
        statement: statement.into(),
        lhs,
        rhs,
        modulus,
        check_order,
        expect: Expectation::Holds,
    }
}

fn control(
    name: &str,
    statement: &str,
    lhs: SeriesRecipe,
    rhs: SeriesRecipe,
    modulus: u64,
    check_order: usize,
) -> CongruenceClaim {
    CongruenceClaim {
        name: name.into(),
        statement: statement.into(),
        lhs,
        rhs,
        modulus,
        check_order,
        expect: Expectation::Fails,
    }
}

/// The six terms of the 3-dissection of the pod2 generating function, as
/// (factors, q_shift, scalar).
pub(crate) fn six_term_dissection() -> Vec<(Vec<(u32, i32)>, usize, i64)> {
    vec![
        (vec![(6, 1), (9, 2), (24, 4), (36, 6), (3, -1), (18, -1), (12, -8), (72, -3)], 0, 1),
        (vec![(6, 1), (9, 2), (24, 3), (36, 3), (3, -1), (18, -1), (12, -7)], 4, 2),
        (vec![(6, 1), (9, 2), (24, 2), (72, 3), (3, -1), (18, -1), (12, -6)], 8, 4),
        (vec![(18, 2), (24, 4), (36, 6), (9, -1), (12, -8), (72, -3)], 1, 1),
        (vec![(18, 2), (24, 3), (36, 3), (9, -1), (12, -7)], 5, 2),
        (vec![(18, 2), (24, 2), (72, 3), (9, -1), (12, -6)], 9, 4),
    ]
}

fn six_term_sum(terms: &[(Vec<(u32, i32)>, usize, i64)]) -> SeriesRecipe {
    SeriesRecipe::Sum {
        terms: terms
            .iter()
            .map(|(f, sh, sc)| {
                let quotient = SeriesRecipe::eta_shifted(f, *sh);
                if *sc == 1 {
                    quotient
                } else {
                    SeriesRecipe::scaled(*sc, quotient)
                }
            })
            .collect(),
    }
}

/// RHS of the mod-8 expansion:
/// psi(q) * (1 - 2 sum (-1)^n q^{4n^2} + 4 sum (-1)^n q^{8n^2}).
fn mod8_rhs() -> SeriesRecipe {
    SeriesRecipe::Product {
        terms: vec![
            SeriesRecipe::eta(&[(2, 2), (1, -1)]),
            SeriesRecipe::Sum {
                terms: vec![
                    SeriesRecipe::eta(&[]),
                    SeriesRecipe::scaled(-2, SeriesRecipe::AlternatingSquareSum { dilation: 4 }),
                    SeriesRecipe::scaled(4, SeriesRecipe::AlternatingSquareSum { dilation: 8 }),
                ],
            },
        ],
    }
}

/// The full claim catalog: every series identity and congruence this crate
/// verifies, followed by the negative controls. Default orders are chosen so
/// the whole catalog runs in seconds with exact arithmetic.
pub fn builtin_claims() -> Vec<CongruenceClaim> {
    let pod2 = SeriesRecipe::Pod2;
    let shifted_magnified_pod2 = SeriesRecipe::Shift {
        powers: 1,
        of: Box::new(SeriesRecipe::Magnify { factor: 8, of: Box::new(SeriesRecipe::Pod2) }),
    };
    let psi_dissection_rhs = |shift_second: usize| SeriesRecipe::Sum {
        terms: vec![
            SeriesRecipe::eta(&[(6, 1), (9, 2), (3, -1), (18, -1)]),
            SeriesRecipe::eta_shifted(&[(18, 2), (9, -1)], shift_second),
        ],
    };
    let inverse_phi_rhs = |middle: i64| SeriesRecipe::Sum {
        terms: vec![
            SeriesRecipe::eta(&[(6, 4), (9, 6), (3, -8), (18, -3)]),
            SeriesRecipe::scaled(middle, SeriesRecipe::eta_shifted(&[(6, 3), (9, 3), (3, -7)], 1)),
            SeriesRecipe::scaled(4, SeriesRecipe::eta_shifted(&[(6, 2), (18, 3), (3, -6)], 2)),
        ],
    };

    let mut claims = vec![
        claim(
            "psi-3-dissection",
            "f2^2/f1 = f6*f9^2/(f3*f18) + q*f18^2/f9",
            SeriesRecipe::eta(&[(2, 2), (1, -1)]),
            psi_dissection_rhs(1),
            0,
            500,
        ),
        claim(
            "inverse-phi-3-dissection",
            "f2/f1^2 = f6^4*f9^6/(f3^8*f18^3) + 2q*f6^3*f9^3/f3^7 + 4q^2*f6^2*f18^3/f3^6",
            SeriesRecipe::eta(&[(2, 1), (1, -2)]),
            inverse_phi_rhs(2),
            0,
            500,
        ),
        claim(
            "pod2-six-term-3-dissection",
            "the pod2 generating function equals its six-term 3-dissection",
            pod2.clone(),
            six_term_sum(&six_term_dissection()),
            0,
            500,
        ),
        claim(
            "pod2-progression-3n2",
            "sum pod2(3n+2) q^n = 2q*f6^2*f8^3*f12^3/(f3*f4^7) + 4q^2*f2*f3^2*f8^2*f24^3/(f1*f6*f4^6)",
            SeriesRecipe::extract(3, 2, pod2.clone()),
            SeriesRecipe::Sum {
                terms: vec![
                    SeriesRecipe::scaled(
                        2,
                        SeriesRecipe::eta_shifted(&[(6, 2), (8, 3), (12, 3), (3, -1), (4, -7)], 1),
                    ),
                    SeriesRecipe::scaled(
                        4,
                        SeriesRecipe::eta_shifted(
                            &[(2, 1), (3, 2), (8, 2), (24, 3), (1, -1), (6, -1), (4, -6)],
                            2,
                        ),
                    ),
                ],
            },
            0,
            400,
        ),
        claim(
            "pod2-progression-3n",
            "sum pod2(3n) q^n = f2*f3^2*f8^4*f12^6/(f1*f6*f4^8*f24^3) + 4q^3*f6^2*f8^2*f24^3/(f3*f4^6)",
            SeriesRecipe::extract(3, 0, pod2.clone()),
            SeriesRecipe::Sum {
                terms: vec![
                    SeriesRecipe::eta(&[(2, 1), (3, 2), (8, 4), (12, 6), (1, -1), (6, -1), (4, -8), (24, -3)]),
                    SeriesRecipe::scaled(
                        4,
                        SeriesRecipe::eta_shifted(&[(6, 2), (8, 2), (24, 3), (3, -1), (4, -6)], 3),
                    ),
                ],
            },
            0,
            400,
        ),
        claim(
            "pod2-progression-3n1",
            "sum pod2(3n+1) q^n = f6^2*f8^4*f12^6/(f3*f4^8*f24^3) + 2q*f2*f3^2*f8^3*f12^3/(f1*f4^7*f6)",
            SeriesRecipe::extract(3, 1, pod2.clone()),
            SeriesRecipe::Sum {
                terms: vec![
                    SeriesRecipe::eta(&[(6, 2), (8, 4), (12, 6), (3, -1), (4, -8), (24, -3)]),
                    SeriesRecipe::scaled(
                        2,
                        SeriesRecipe::eta_shifted(
                            &[(2, 1), (3, 2), (8, 3), (12, 3), (1, -1), (4, -7), (6, -1)],
                            1,
                        ),
                    ),
                ],
            },
            0,
            400,
        ),
        claim(
            "pod2-3n2-even",
            "pod2(3n+2) == 0 (mod 2); the exact coefficients are divisible by 2",
            SeriesRecipe::extract(3, 2, pod2.clone()),
            SeriesRecipe::Zero,
            2,
            600,
        ),
        claim(
            "pod2-3n-mod2",
            "sum pod2(3n) q^n == f1 (mod 2)",
            SeriesRecipe::extract(3, 0, pod2.clone()),
            SeriesRecipe::eta(&[(1, 1)]),
            2,
            500,
        ),
        claim(
            "pod2-3n1-mod2",
            "sum pod2(3n+1) q^n == f3^3 (mod 2)",
            SeriesRecipe::extract(3, 1, pod2.clone()),
            SeriesRecipe::eta(&[(3, 3)]),
            2,
            500,
        ),
        claim(
            "pod2-9n1-mod2",
            "sum pod2(9n+1) q^n == f1^3 (mod 2)",
            SeriesRecipe::extract(9, 1, pod2.clone()),
            SeriesRecipe::eta(&[(1, 3)]),
            2,
            500,
        ),
        claim(
            "jacobi-cube-exact",
            "f1^3 = sum (-1)^n (2n+1) q^{n(n+1)/2}",
            SeriesRecipe::eta(&[(1, 3)]),
            SeriesRecipe::SignedTriangularSum,
            0,
            500,
        ),
        claim(
            "jacobi-cube-mod2",
            "f1^3 == sum q^{n(n+1)/2} (mod 2)",
            SeriesRecipe::eta(&[(1, 3)]),
            SeriesRecipe::TriangularSum,
            2,
            500,
        ),
        claim(
            "pod2-3n1-parity-triangular",
            "pod2(3n+1) is odd exactly at n = 3*k(k+1)/2",
            SeriesRecipe::extract(3, 1, pod2.clone()),
            SeriesRecipe::Magnify { factor: 3, of: Box::new(SeriesRecipe::TriangularSum) },
            2,
            600,
        ),
        claim(
            "pod2-magnified-eta",
            "sum pod2(n) q^{8n+1} = q*f16^2*f64/(f8*f32^2)",
            shifted_magnified_pod2.clone(),
            SeriesRecipe::eta_shifted(&[(16, 2), (64, 1), (8, -1), (32, -2)], 1),
            0,
            1000,
        ),
        claim(
            "pod2-delta-mod2",
            "sum pod2(n) q^{8n+1} == q*f1^24 (mod 2)",
            shifted_magnified_pod2.clone(),
            SeriesRecipe::Delta,
            2,
            1000,
        ),
        claim(
            "delta-odd-squares-mod2",
            "q*f1^24 == sum q^{(2n+1)^2} (mod 2)",
            SeriesRecipe::Delta,
            SeriesRecipe::OddSquareSum,
            2,
            1000,
        ),
        claim(
            "pod2-odd-squares-mod2",
            "sum pod2(n) q^{8n+1} == sum q^{(2n+1)^2} (mod 2)",
            shifted_magnified_pod2,
            SeriesRecipe::OddSquareSum,
            2,
            1000,
        ),
        claim(
            "alternating-squares-squared-mod2",
            "(sum_{n>=1} (-1)^n q^{n^2})^2 == sum_{n>=1} q^{2n^2} (mod 2)",
            SeriesRecipe::Product {
                terms: vec![
                    SeriesRecipe::AlternatingSquareSum { dilation: 1 },
                    SeriesRecipe::AlternatingSquareSum { dilation: 1 },
                ],
            },
            SeriesRecipe::SquareSum { dilation: 2 },
            2,
            400,
        ),
        claim(
            "pod2-mod8-theta",
            "sum pod2(n) q^n == psi(q)*(1 - 2 sum (-1)^n q^{4n^2} + 4 sum (-1)^n q^{8n^2}) (mod 8)",
            pod2.clone(),
            mod8_rhs(),
            8,
            400,
        ),
    ];

    // Negative controls: each verifier family is exercised by a deliberately
    // perturbed claim that must fail, with its first counterexample at a
    // small index.
    claims.extend([
        control(
            "psi-3-dissection-shiftless-control",
            "psi 3-dissection with the q-shift dropped from the second term (fails at index 0)",
            SeriesRecipe::eta(&[(2, 2), (1, -1)]),
            psi_dissection_rhs(0),
            0,
            50,
        ),
        control(
            "inverse-phi-3-dissection-coefficient-control",
            "inverse-phi 3-dissection with the middle coefficient 2 replaced by 3 (fails at index 1)",
            SeriesRecipe::eta(&[(2, 1), (1, -2)]),
            inverse_phi_rhs(3),
            0,
            50,
        ),
        control(
            "pod2-six-term-missing-term-control",
            "six-term 3-dissection with the q^9 term dropped (fails at index 9)",
            pod2.clone(),
            six_term_sum(&six_term_dissection()[..5]),
            0,
            50,
        ),
        control(
            "pod2-3n1-undilated-cube-control",
            "pod2(3n+1) against f1^3 instead of f3^3 mod 2 (fails at index 1)",
            SeriesRecipe::extract(3, 1, pod2.clone()),
            SeriesRecipe::eta(&[(1, 3)]),
            2,
            50,
        ),
        control(
            "pod2-mod16-theta-control",
            "the truncated geometric expansion is valid mod 8 but not mod 16 (fails at index 8)",
            pod2,
            mod8_rhs(),
            16,
            50,
        ),
        control(
            "pod2-corrupted-quotient-control",
            "f2^2*f8/(f1*f4) against the pod2 series (fails at index 4)",
            SeriesRecipe::eta(&[(2, 2), (8, 1), (1, -1), (4, -1)]),
            SeriesRecipe::Pod2,
            0,
            50,
        ),
    ]);

    claims
}
