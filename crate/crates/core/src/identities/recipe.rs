//! Declarative series recipes.
//!
//! A [`SeriesRecipe`] is a small expression tree describing how to build a
//! q-series: eta quotients, the named theta/indicator sums, and the
//! structural combinators (sum, product, scale, shift, progression
//! extraction, magnification). Claims store recipes as data, so the whole
//! claim catalog is serializable and the runner is one generic evaluator.
//!
//! Evaluation takes a target order and widens the order requested from
//! subexpressions where needed — an extraction at step a and offset b pulls
//! `a*(n-1) + b + 1` coefficients from its source to deliver n of its own.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::delta_quotient_spec;
use crate::partitions::pod2_quotient_spec;
use crate::series::eta::EtaQuotientSpec;
use crate::series::theta;
use crate::series::TruncatedSeries;
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum SeriesRecipe {
    /// The zero series.
    Zero,
    /// Generating function of pod2: f2^2 f8 / (f1 f4^2).
    Pod2,
    /// The discriminant q-expansion q * f1^24.
    Delta,
    /// q^{q_shift} * prod f_j^{e_j}, factors as (dilation, exponent) pairs.
    EtaQuotient {
        factors: Vec<(u32, i32)>,
        #[serde(default)]
        q_shift: usize,
    },
    /// sum_{n>=0} q^{n(n+1)/2}.
    TriangularSum,
    /// sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}.
    SignedTriangularSum,
    /// sum_{n>=0} q^{(2n+1)^2}.
    OddSquareSum,
    /// sum_{n>=1} (-1)^n q^{d n^2}.
    AlternatingSquareSum { dilation: u32 },
    /// sum_{n>=1} q^{d n^2}.
    SquareSum { dilation: u32 },
    Sum { terms: Vec<SeriesRecipe> },
    Product { terms: Vec<SeriesRecipe> },
    Scale { factor: i64, of: Box<SeriesRecipe> },
    /// Multiply by q^powers.
    Shift { powers: usize, of: Box<SeriesRecipe> },
    /// Coefficients along step*n + offset.
    Extract { step: usize, offset: usize, of: Box<SeriesRecipe> },
    /// Substitute q -> q^factor.
    Magnify { factor: usize, of: Box<SeriesRecipe> },
}

impl SeriesRecipe {
    pub fn eta(factors: &[(u32, i32)]) -> Self {
        SeriesRecipe::EtaQuotient { factors: factors.to_vec(), q_shift: 0 }
    }

    pub fn eta_shifted(factors: &[(u32, i32)], q_shift: usize) -> Self {
        SeriesRecipe::EtaQuotient { factors: factors.to_vec(), q_shift }
    }

    pub fn scaled(factor: i64, of: SeriesRecipe) -> Self {
        SeriesRecipe::Scale { factor, of: Box::new(of) }
    }

    pub fn extract(step: usize, offset: usize, of: SeriesRecipe) -> Self {
        SeriesRecipe::Extract { step, offset, of: Box::new(of) }
    }

    /// Reject structurally invalid recipes before evaluation.
    pub fn validate(&self) -> std::result::Result<(), String> {
        match self {
            SeriesRecipe::EtaQuotient { factors, .. } => {
                if factors.iter().any(|&(j, _)| j == 0) {
                    return Err("eta dilation must be positive".into());
                }
            }
            SeriesRecipe::AlternatingSquareSum { dilation } | SeriesRecipe::SquareSum { dilation } => {
                if *dilation == 0 {
                    return Err("square-sum dilation must be positive".into());
                }
            }
            SeriesRecipe::Sum { terms } | SeriesRecipe::Product { terms } => {
                if terms.is_empty() {
                    return Err("sum/product needs at least one term".into());
                }
                for t in terms {
                    t.validate()?;
                }
            }
            SeriesRecipe::Scale { of, .. } | SeriesRecipe::Shift { of, .. } => of.validate()?,
            SeriesRecipe::Extract { step, offset, of } => {
                if *step == 0 {
                    return Err("extraction step must be positive".into());
                }
                if offset >= step {
                    return Err("extraction offset must be smaller than the step".into());
                }
                of.validate()?;
            }
            SeriesRecipe::Magnify { factor, of } => {
                if *factor == 0 {
                    return Err("magnification factor must be positive".into());
                }
                of.validate()?;
            }
            _ => {}
        }
        Ok(())
    }

    /// Evaluate to exactly `order` known coefficients.
    pub fn eval(&self, order: usize) -> Result<TruncatedSeries> {
        if order == 0 {
            return Err(Error::InvalidOrder);
        }
        let s = self.eval_at_least(order)?;
        Ok(s.truncated(order))
    }

    /// Evaluate to at least `order` known coefficients.
    fn eval_at_least(&self, order: usize) -> Result<TruncatedSeries> {
        Ok(match self {
            SeriesRecipe::Zero => TruncatedSeries::zero(order),
            SeriesRecipe::Pod2 => pod2_quotient_spec().expand(order),
            SeriesRecipe::Delta => delta_quotient_spec().expand(order),
            SeriesRecipe::EtaQuotient { factors, q_shift } => {
                EtaQuotientSpec::new(factors.clone(), *q_shift).expand(order)
            }
            SeriesRecipe::TriangularSum => theta::triangular_sum(order),
            SeriesRecipe::SignedTriangularSum => theta::signed_triangular_sum(order),
            SeriesRecipe::OddSquareSum => theta::odd_square_sum(order),
            SeriesRecipe::AlternatingSquareSum { dilation } => {
                theta::alternating_square_sum(*dilation, order)
            }
            SeriesRecipe::SquareSum { dilation } => theta::square_sum(*dilation, order),
            SeriesRecipe::Sum { terms } => {
                let mut acc = TruncatedSeries::zero(order);
                for t in terms {
                    acc = &acc + &t.eval(order)?;
                }
                acc
            }
            SeriesRecipe::Product { terms } => {
                let mut acc = TruncatedSeries::one(order);
                for t in terms {
                    acc = &acc * &t.eval(order)?;
                }
                acc
            }
            SeriesRecipe::Scale { factor, of } => of.eval(order)?.scale(&BigInt::from(*factor)),
            SeriesRecipe::Shift { powers, of } => {
                let inner = of.eval(order.saturating_sub(*powers).max(1))?;
                inner.shift_up(*powers)
            }
            SeriesRecipe::Extract { step, offset, of } => {
                let source_order = step * (order - 1) + offset + 1;
                of.eval(source_order)?.extract_progression(*step, *offset)
            }
            SeriesRecipe::Magnify { factor, of } => {
                let source_order = (order - 1).div_ceil(*factor) + 1;
                of.eval(source_order)?.magnify(*factor)
            }
        })
    }
}
