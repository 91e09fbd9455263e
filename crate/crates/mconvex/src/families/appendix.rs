//! Staircase and unimodal polygons with m unit-deep vertical indents, all on
//! the left side and at distinct heights.
//!
//! The generating function is
//!
//! ```text
//!     (y^(m+1) / m!) * (d/dy)^(m-1) [ I^m * d/dy Q ]
//! ```
//!
//! with `I = (SP/y)^2` and `Q = SP/y` (staircase interior) or `UP/y`
//! (unimodal interior), where `SP` and `UP` are the staircase and unimodal
//! series. The result is algebraic of the shape
//!
//! ```text
//!     x (A + sqrt(delta) B) / (y^(m+1) delta^(m+1/2)),
//! ```
//!
//! with `A`, `B` polynomials; [`m_left_indents_parts`] extracts them exactly
//! by pairing the build with its conjugate-root twin (`sqrt(delta)` negated).

use crate::catalog;
use crate::laurent::Shifted;
use crate::vars::VarSet;
use crate::{rat, Rat, Series};

/// Which interior class the indents are cut from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeftIndentKind {
    Staircase,
    Unimodal,
}

fn factorial(m: u32) -> Rat {
    let mut f = rat(1);
    for i in 2..=m {
        f = f * rat(i as i64);
    }
    f
}

/// (y^(m+1)/m!) (d/dy)^(m-1) [ i1^m * d/dy q ], returned still carrying its
/// 1/y^(2m) shift so conjugate builds (whose numerators are not individually
/// divisible) can be combined before cancellation.
fn left_indent_core(m: u32, i1: &Shifted<Rat>, q: &Shifted<Rat>) -> Shifted<Rat> {
    assert!(m >= 1);
    let mut f = i1.pow(m).mul(&q.dy());
    for _ in 1..m {
        f = f.dy();
    }
    f.mul_xy(0, m as u16 + 1)
        .scale(&(rat(1) / factorial(m)))
}

fn q_num(kind: LeftIndentKind, order: u32) -> Series {
    match kind {
        LeftIndentKind::Staircase => catalog::sp(order),
        LeftIndentKind::Unimodal => catalog::up(order),
    }
}

/// Staircase or unimodal polygons with m left-side vertical indents at
/// distinct heights, as a plain series to the given order.
pub fn m_left_indents(m: u32, kind: LeftIndentKind, order: u32) -> Series {
    let guard = order + 3 * m + 2;
    let i1 = Shifted::new(catalog::sp(guard).pow(2), 0, 2);
    let q = Shifted::new(q_num(kind, guard), 0, 1);
    left_indent_core(m, &i1, &q)
        .into_series()
        .extend_vars(&VarSet::xy(order), order)
}

/// Independent coding of the two-indent case by expanding the outer
/// derivative with the product rule:
/// (y^3/2) [ 2 I (d/dy I) (d/dy Q) + I^2 (d/dy)^2 Q ].
pub fn eq_two_left_indents(kind: LeftIndentKind, order: u32) -> Series {
    let guard = order + 8;
    let i1 = Shifted::new(catalog::sp(guard).pow(2), 0, 2);
    let q = Shifted::new(q_num(kind, guard), 0, 1);
    let dq = q.dy();
    let t1 = i1.mul(&i1.dy()).mul(&dq).scale(&rat(2));
    let t2 = i1.pow(2).mul(&dq.dy());
    t1.add(&t2)
        .mul_xy(0, 3)
        .scale(&Rat::new(1.into(), 2.into()))
        .into_series()
        .extend_vars(&VarSet::xy(order), order)
}

/// Staircase polygons with m left-side indents stacked at the same height:
/// I_m * (y SP' - SP), with I_m the m-fold indent column series.
pub fn staircase_bimodal(m: u32, order: u32) -> Series {
    let guard = order + 1;
    let sp = catalog::sp(guard);
    let dsp = sp.derivative(crate::vars::Y).mul_monomial(&[0, 1]);
    let col = dsp
        .truncate(order)
        .sub(&sp.truncate(order))
        .extend_vars(&VarSet::xy(order), order);
    catalog::indent(m, order).mul(&col)
}

/// The polynomials (A, B) with
/// m_left_indents(m, Unimodal) = x (A + sqrt(delta) B) / (y^(m+1) delta^(m+1/2)).
///
/// Computed by running the same build on the conjugate root
/// (SP -> (1-x-y+sqrt(delta))/2, UP -> -UP) and separating even and odd parts
/// in sqrt(delta). Both outputs are exact polynomials once `order` exceeds
/// their degree; the cancellation of every negative exponent and of the
/// sqrt(delta) division is checked by the exact arithmetic itself.
pub fn m_left_indents_parts(m: u32, order: u32) -> (Series, Series) {
    let guard = order + 3 * m + 2;
    let sqd = catalog::sqrt_delta(guard);
    let weight = catalog::delta(guard).pow(m).mul(&sqd);

    let sp = catalog::sp(guard);
    let g = left_indent_core(
        m,
        &Shifted::new(sp.pow(2), 0, 2),
        &Shifted::new(catalog::up(guard), 0, 1),
    );
    // conjugate root: SPc = SP + sqrt(delta), UPc = -UP
    let spc = sp.add(&sqd);
    let gc = left_indent_core(
        m,
        &Shifted::new(spc.pow(2), 0, 2),
        &Shifted::new(catalog::up(guard).neg(), 0, 1),
    );

    // f = G y^(m+1) delta^(m+1/2) / x = A + sqrt(delta) B; its conjugate
    // build picks up one extra sign from the sqrt(delta) factor.
    let to_f = |h: &Shifted<Rat>, sign: i64| {
        let w = h.mul_series(&weight).scale(&rat(sign)).mul_xy(0, m as u16 + 1);
        Shifted::new(w.num.clone(), w.sx + 1, w.sy)
    };
    let f = to_f(&g, 1);
    let fc = to_f(&gc, -1);

    let half = Rat::new(1.into(), 2.into());
    let vars = VarSet::xy(order);
    let a = f.add(&fc).scale(&half).into_series().extend_vars(&vars, order);
    let b = f
        .sub(&fc)
        .scale(&half)
        .div_series(&sqd)
        .into_series()
        .extend_vars(&vars, order);
    (a, b)
}
