//! Closed forms for the defect-2 families and the bimodal defect-2 class.
//!
//! Each result is (polynomial numerators from the data directory) divided by
//! an explicit denominator; the 1/(x^a y^b) monomial part is carried as a
//! guard on the working order and cancelled exactly at the end.
//!
//! Sign conventions: the signs wired here are the ones under which each
//! combination is a nonnegative-integer power series (and, downstream,
//! matches the brute-force enumerator); see the repository tests.

use crate::catalog;
use crate::vars::VarSet;
use crate::{rat, Rat, Series};

fn half() -> Rat {
    Rat::new(1.into(), 2.into())
}

/// (1-x)^k as a series.
fn omx(order: u32, k: u32) -> Series {
    catalog::poly(order, &[(0, 0, 1), (1, 0, -1)]).pow(k)
}

fn omy(order: u32, k: u32) -> Series {
    catalog::poly(order, &[(0, 0, 1), (0, 1, -1)]).pow(k)
}

/// ((1-x)^2 - y)^k.
fn stack_den_x(order: u32, k: u32) -> Series {
    catalog::poly(order, &[(0, 0, 1), (1, 0, -2), (2, 0, 1), (0, 1, -1)]).pow(k)
}

/// ((1-y)^2 - x)^k.
fn stack_den_y(order: u32, k: u32) -> Series {
    catalog::poly(order, &[(0, 0, 1), (0, 1, -2), (0, 2, 1), (1, 0, -1)]).pow(k)
}

fn omxy(order: u32) -> Series {
    catalog::poly(order, &[(0, 0, 1), (1, 0, -1), (0, 1, -1)])
}

/// Polygons that are staircase except for two unit-deep indents:
/// A/(2x^4y^4(1-x)^3(1-y)^3(1-x-y)) - B/(2x^4y^4(1-x)(1-y)delta^(3/2)).
pub fn two_staircase(order: u32) -> Series {
    let w = order + 8;
    let vars = VarSet::xy(w);
    let a = catalog::load_poly("two_staircase_a", &vars, w);
    let b = catalog::load_poly("two_staircase_b", &vars, w);
    let t1 = a
        .mul(&omx(w, 3).mul(&omy(w, 3)).mul(&omxy(w)).inv())
        .scale(&half());
    let t2 = b
        .mul(&omx(w, 1).mul(&omy(w, 1)).inv())
        .mul(&catalog::z(w).pow(3))
        .scale(&half());
    t1.sub(&t2).div_monomial(&[4, 4])
}

/// Polygons that are unimodal except for two unit-deep indents:
/// A/(2x^3y^3(1-x)^3(1-y)^3 delta^(5/2))
/// + B/(2x^3y^3(1-x)^5(1-y)^5((1-x)^2-y)^3((1-y)^2-x)^3(1-x-y)).
pub fn two_unimodal(order: u32) -> Series {
    let w = order + 6;
    let vars = VarSet::xy(w);
    let a = catalog::load_poly("two_unimodal_a", &vars, w);
    let b = catalog::load_poly("two_unimodal_b", &vars, w);
    let t1 = a
        .mul(&omx(w, 3).mul(&omy(w, 3)).inv())
        .mul(&catalog::z(w).pow(5))
        .scale(&half());
    let t2 = b
        .mul(
            &omx(w, 5)
                .mul(&omy(w, 5))
                .mul(&stack_den_x(w, 3))
                .mul(&stack_den_y(w, 3))
                .mul(&omxy(w))
                .inv(),
        )
        .scale(&half());
    t1.add(&t2).div_monomial(&[3, 3])
}

/// Convex-with-defect-2 polygons:
/// -4A/((1-x)^3 x^2 (1-y)^3 y^2 delta^(7/2))
/// + B/((1-x)^7 x^2 (1-y)^7 y^2 ((1-x)^2-y)^3((1-y)^2-x)^3(1-x-y) delta^4).
pub fn two_convex(order: u32) -> Series {
    let w = order + 4;
    let vars = VarSet::xy(w);
    let a = catalog::load_poly("two_convex_a", &vars, w);
    let b = catalog::load_poly("two_convex_b", &vars, w);
    let t1 = a
        .mul(&omx(w, 3).mul(&omy(w, 3)).inv())
        .mul(&catalog::z(w).pow(7))
        .scale(&rat(-4));
    let t2 = b.mul(
        &omx(w, 7)
            .mul(&omy(w, 7))
            .mul(&stack_den_x(w, 3))
            .mul(&stack_den_y(w, 3))
            .mul(&omxy(w))
            .mul(&catalog::delta(w).pow(4))
            .inv(),
    );
    t1.add(&t2).div_monomial(&[2, 2])
}

/// Polygons with a single vertical indent region of depth 2 (defect 2 with
/// one top valley and a convex bottom), closed form:
/// 2x^2 A/((1-x)^3((1-x)^2-y) delta^(5/2)) + x^2 B/((1-x)^5((1-x)^2-y)^3 delta^3).
///
/// The published numerators are defective: the y^2 row of A visibly lost a
/// variable from its middle coefficient ((20+21+15x^2) for (20+21x+15x^2)),
/// and comparison with the transfer-sum construction - itself validated
/// coefficient-by-coefficient against brute-force enumeration - shows the
/// y^3 and y^5 rows of A and the y^6..y^12 rows of B are also off. The
/// repair polynomials were extracted exactly from the transfer sum (the A
/// rows from the terminating rows of the sqrt-free residual, B as the
/// remaining rationalized difference, whose termination proves the split is
/// the unique even/odd decomposition). `corrected` adds them; the raw
/// variant is kept so the defect stays reproducible.
pub fn bimodal_closed_2(order: u32, corrected: bool) -> Series {
    let vars = VarSet::xy(order);
    let mut a = catalog::load_poly("bimodal2_a", &vars, order);
    let mut b = catalog::load_poly("bimodal2_b", &vars, order);
    if corrected {
        a = a.add(&catalog::load_poly("bimodal2_a_fix", &vars, order));
        b = b.add(&catalog::load_poly("bimodal2_b_fix", &vars, order));
    }
    let t1 = a
        .mul(&catalog::poly(order, &[(2, 0, 2)]))
        .mul(&omx(order, 3).mul(&stack_den_x(order, 1)).inv())
        .mul(&catalog::z(order).pow(5));
    let t2 = b
        .mul(&catalog::poly(order, &[(2, 0, 1)]))
        .mul(&omx(order, 5).mul(&stack_den_x(order, 3)).inv())
        .mul(&catalog::z(order).pow(6));
    t1.add(&t2)
}
