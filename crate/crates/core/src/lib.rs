//! Exact q-series toolkit for the pod2 partition function.
//!
//! pod2(n) counts partitions of n into distinct odd parts together with
//! unrestricted parts congruent to 4 mod 8; its generating function is the
//! eta quotient `f2^2 f8 / (f1 f4^2)` where `f_j = prod (1 - q^{jn})`. This
//! crate expands such quotients with exact arbitrary-precision integer
//! arithmetic and mechanically verifies, coefficient by coefficient:
//!
//! - the 3-dissection of the generating function and its progression
//!   extractions,
//! - the mod-2 and mod-8 reductions (pod2(3n+2) even, pod2(3n) against f1,
//!   pod2(9n+1) against f1^3, the theta-product form mod 8),
//! - the parity characterizations through triangular numbers and odd squares,
//! - the link to the discriminant q*f1^24 and its tau coefficients
//!   (eigenform property, multiplicativity, prime-power recurrence),
//! - infinite families of congruences along arithmetic progressions
//!   p^m n + offset, with all qualifying residues enumerated automatically.
//!
//! Everything is exact: no floating point, no tolerances, and modular
//! reduction is only ever a view of exact integer coefficients. Claims are
//! data ([`identities::CongruenceClaim`]) so the whole catalog can be
//! serialized, audited and re-run; deliberately broken negative controls
//! keep the checkers honest.

pub mod arith;
pub mod error;
pub mod hecke;
pub mod identities;
pub mod partitions;
pub mod report;
pub mod series;
pub mod suite;

pub use error::{Error, Result};
pub use report::{Counterexample, Expectation, Status, VerificationReport};
pub use series::eta::{eta_product, EtaQuotientSpec};
pub use series::TruncatedSeries;
