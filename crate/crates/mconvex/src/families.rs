//! Builders for the almost-convex polygon families: closed forms, transfer
//! sums and case-by-case generators. Submodules are organized by the shape
//! of the computation rather than by family.

pub mod appendix;
pub mod bimodal;
pub mod cases;
pub mod closed;
pub mod one_convex;
