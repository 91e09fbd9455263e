//! Exact generating-function toolkit for almost-convex lattice polygons.
//!
//! The crate provides, over exact rational arithmetic:
//!
//! * a truncated multivariate power-series engine ([`series`], [`vars`]);
//! * the even-part / Hadamard / pole-derivative operator layer ([`ops`]);
//! * a catalog of named polygon generating functions ([`catalog`]);
//! * closed-form and transfer-sum builders for the almost-convex families
//!   ([`families`]);
//! * an independent brute-force polygon enumerator ([`oracle`]);
//! * comparison drivers wiring the two together ([`report`]).
//!
//! Everything downstream of [`series`] is generic over the scalar only where
//! that is free; the crate-level aliases fix the exact rational scalar used
//! throughout.

pub mod catalog;
pub mod families;
pub mod laurent;
pub mod ops;
pub mod oracle;
pub mod report;
pub mod series;
pub mod vars;

/// The exact rational scalar used by the whole crate.
pub type Rat = num::BigRational;

/// The crate's concrete series type: truncated multivariate power series
/// with exact rational coefficients.
pub type Series = series::MultiSeries<Rat>;

/// Big integer re-export for counting results.
pub type Int = num::BigInt;

/// Convenience: exact rational from an i64.
pub fn rat(n: i64) -> Rat {
    use num_traits::FromPrimitive;
    Rat::from_i64(n).unwrap()
}
