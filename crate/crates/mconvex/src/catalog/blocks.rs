//! Side-refined building blocks: staircase and unimodal polygons refined by
//! the perimeters of chosen sides, and convex polygons refined by the left
//! perimeter or by the top and bottom perimeters.
//!
//! Auxiliary variables mark half-perimeters of sides; every entry is built in
//! a registry whose aux caps equal the truncation order (side perimeters of a
//! polygon never exceed its half-perimeter, so nothing reachable is lost).

use crate::ops::{self, StarMask};
use crate::vars::{Var, VarSet, X, Y};
use crate::{catalog, rat, Rat, Series};
use std::sync::Arc;

/// Monomial with explicit (variable, exponent) factors and coefficient 1.
fn mono(vars: &Arc<VarSet>, order: u32, exps: &[(Var, u16)]) -> Series {
    let mut e = vec![0u16; vars.len()];
    for &(v, k) in exps {
        e[v] += k;
    }
    Series::monomial(vars, order, &e, rat(1))
}

/// Declare the series aux-dominated in each listed variable where the terms
/// actually support it.
fn declare_where_dominated(mut f: Series, vs: &[Var]) -> Series {
    for &v in vs {
        if f.scan_aux_dominated(v) {
            f = f.declare_aux_dominated(v);
        }
    }
    f
}

/// Bessel-type kernel for staircases by side perimeter:
/// (1-s)(1-sy) / ((1-s)(1-sy) + xs).
pub fn stair_kernel(vars: &Arc<VarSet>, order: u32, s: Var) -> Series {
    let one = Series::one(vars, order);
    let num = one
        .sub(&mono(vars, order, &[(s, 1)]))
        .mul(&one.sub(&mono(vars, order, &[(s, 1), (Y, 1)])));
    let den = num.add(&mono(vars, order, &[(X, 1), (s, 1)]));
    num.div(&den)
}

/// Registry for the two-sided blocks: {x, y, s, t}.
pub fn st_vars(order: u32) -> Arc<VarSet> {
    VarSet::with_aux(order, &[("s", order), ("t", order)])
}

/// Staircase polygons by right (s) and left (t) perimeters:
/// x ( J0(s) sty/(1-sty) + (1-J0(s)) vt/(1-vt) ).
pub fn stair_sides(order: u32) -> Series {
    let vars = st_vars(order);
    let s = vars.var("s");
    let t = vars.var("t");
    let one = Series::one(&vars, order);
    let j0 = stair_kernel(&vars, order, s);
    let sty = mono(&vars, order, &[(s, 1), (t, 1), (Y, 1)]);
    let v = catalog::uv(order).1.extend_vars(&vars, order);
    let vt = v.mul(&mono(&vars, order, &[(t, 1)]));
    let out = j0
        .mul(&sty.mul(&one.sub(&sty).inv()))
        .add(&one.sub(&j0).mul(&vt.mul(&one.sub(&vt).inv())))
        .mul(&mono(&vars, order, &[(X, 1)]));
    declare_where_dominated(out, &[s, t])
}

/// Unimodal polygons by right (s) and left (t) perimeters.
pub fn unimodal_sides(order: u32) -> Series {
    let vars = st_vars(order);
    let s = vars.var("s");
    let t = vars.var("t");
    let one = Series::one(&vars, order);
    let j0 = stair_kernel(&vars, order, s);
    let sty = mono(&vars, order, &[(s, 1), (t, 1), (Y, 1)]);
    let v = catalog::uv(order).1.extend_vars(&vars, order);
    let vt = v.mul(&mono(&vars, order, &[(t, 1)]));
    let sp = catalog::sp(order).extend_vars(&vars, order);
    let z = catalog::z(order).extend_vars(&vars, order);
    let one_sy = one.sub(&mono(&vars, order, &[(s, 1), (Y, 1)]));
    let xm = mono(&vars, order, &[(X, 1)]);
    let left = j0
        .mul(&sty.mul(&one.sub(&sty).inv()))
        .mul(&one_sy.mul(&one_sy.sub(&xm)))
        .div(&one_sy.pow(2).sub(&xm));
    let right = one
        .sub(&j0)
        .mul(&vt.mul(&one.sub(&vt).inv()))
        .mul(&one.add(&sp.mul(&z)));
    let out = left.add(&right).mul(&xm);
    declare_where_dominated(out, &[s, t])
}

/// Transpose of a two-sided block: swap x with y (side roles follow).
pub fn transpose_block(f: &Series) -> Series {
    f.transpose_xy()
}

/// Registry for staircases by base and right perimeter: {x, y, b, s}.
pub fn bs_vars(order: u32) -> Arc<VarSet> {
    VarSet::with_aux(order, &[("b", order), ("s", order)])
}

/// Staircase polygons by base (b) and right perimeter (s):
/// by (1-J0(s)) ( (1-s)(1-x-sy)/(1-bx-sy) + u/(1-bu) ).
pub fn stair_base_side(order: u32) -> Series {
    let vars = bs_vars(order);
    let b = vars.var("b");
    let s = vars.var("s");
    let one = Series::one(&vars, order);
    let j0 = stair_kernel(&vars, order, s);
    let u = catalog::uv(order).0.extend_vars(&vars, order);
    let bm = mono(&vars, order, &[(b, 1)]);
    let t1 = one
        .sub(&mono(&vars, order, &[(s, 1)]))
        .mul(&one.sub(&mono(&vars, order, &[(X, 1)])).sub(&mono(&vars, order, &[(s, 1), (Y, 1)])))
        .div(
            &one.sub(&mono(&vars, order, &[(b, 1), (X, 1)]))
                .sub(&mono(&vars, order, &[(s, 1), (Y, 1)])),
        );
    let t2 = u.mul(&one.sub(&bm.mul(&u)).inv());
    let out = mono(&vars, order, &[(b, 1), (Y, 1)])
        .mul(&one.sub(&j0))
        .mul(&t1.add(&t2));
    declare_where_dominated(out, &[b, s])
}

/// Registry for the left-perimeter convex block: {x, y, s}.
pub fn s_vars(order: u32) -> Arc<VarSet> {
    VarSet::with_aux(order, &[("s", order)])
}

/// Convex polygons by left perimeter (s): an even-extraction term over both
/// main variables (with the s-marked horizontal steps held fixed) minus the
/// correction 4 Z UP^2 (1-u) s/(1-us).
///
/// The coefficient 4 on the correction is forced: at s = 1 the series must
/// reduce to the convex generating function, whose closed form carries the
/// correction 4 x^2 y^2 Z^3, and the s-refined slices then come out as
/// nonnegative integer counts.
pub fn convex_left(order: u32) -> Series {
    let w = 2 * order;
    // "xh" holds the x-occurrences exempt from extraction.
    let wide = VarSet::with_aux(w, &[("s", w), ("xh", w)]);
    let s = wide.var("s");
    let xh = wide.var("xh");
    let one = Series::one(&wide, w);
    let xm = mono(&wide, w, &[(X, 1)]);
    let ym = mono(&wide, w, &[(Y, 1)]);
    // numerator of the inner expression times x^2 (the 1/x^2 pole is carried
    // as an explicit shift; the even-extraction then divides by x once):
    // x y (1-x)^2 (1-y)^2 ((1-y) - x^2) xh s / (2 (1-x-y)^2 (1 - xh s - y))
    let num = mono(&wide, w, &[(X, 1), (Y, 1)])
        .mul(&one.sub(&xm).pow(2))
        .mul(&one.sub(&ym).pow(2))
        .mul(&one.sub(&ym).sub(&xm.pow(2)))
        .mul(&mono(&wide, w, &[(xh, 1), (s, 1)]))
        .mul(&one.sub(&mono(&wide, w, &[(xh, 1), (s, 1)])).sub(&ym).inv())
        .div(&one.sub(&xm).sub(&ym).pow(2))
        .scale(&Rat::new(1.into(), 2.into()));
    let mut shift = vec![0u16; wide.len()];
    shift[X] = 1;
    let eterm = ops::e_operator(&num, &[X, Y], &StarMask::pair(xh, X))
        .div_monomial(&shift)
        .truncate(order);
    // correction: 4 Z UP^2 (1-u) s/(1-us)
    let (u, _) = catalog::uv(order);
    let corr = catalog::z(order)
        .mul(&catalog::up(order).pow(2))
        .scale(&rat(4))
        .mul(&catalog::one(order).sub(&u))
        .extend_vars(&wide, order)
        .mul(&mono(&wide, order, &[(s, 1)]))
        .mul(
            &Series::one(&wide, order)
                .sub(
                    &u.extend_vars(&wide, order)
                        .mul(&mono(&wide, order, &[(s, 1)])),
                )
                .inv(),
        );
    let out = eterm
        .sub(&corr)
        .drop_var(xh)
        .extend_vars(&s_vars(order), order);
    let s_final = out.vars().var("s");
    declare_where_dominated(out, &[s_final])
}

/// Convex polygons by bottom (s) and top (t) perimeters: a closed form with
/// a large polynomial numerator loaded from the data directory.
pub fn convex_bottom_top(order: u32) -> Series {
    let vars = st_vars(order);
    let s = vars.var("s");
    let t = vars.var("t");
    let one = Series::one(&vars, order);
    let xm = mono(&vars, order, &[(X, 1)]);
    let ym = mono(&vars, order, &[(Y, 1)]);
    // 1 - a(1 + (1-a)x - y) for a in {s, t}
    let dfac = |a: Var| {
        one.sub(&mono(&vars, order, &[(a, 1)]))
            .sub(&mono(&vars, order, &[(a, 1), (X, 1)]))
            .add(&mono(&vars, order, &[(a, 2), (X, 1)]))
            .add(&mono(&vars, order, &[(a, 1), (Y, 1)]))
    };
    // 1 - x + y - a(1 - x - y) for a in {s, t}
    let gfac = |a: Var| {
        one.sub(&xm)
            .add(&ym)
            .sub(&mono(&vars, order, &[(a, 1)]))
            .add(&mono(&vars, order, &[(a, 1), (X, 1)]))
            .add(&mono(&vars, order, &[(a, 1), (Y, 1)]))
    };
    let z = catalog::z(order).extend_vars(&vars, order);
    let term_a = mono(&vars, order, &[(s, 1), (t, 1), (X, 2), (Y, 2)])
        .mul(&gfac(s))
        .mul(&gfac(t))
        .neg();
    let big = catalog::load_poly("convex_st_a", &vars, order);
    let qfac = |a: Var| {
        one.sub(&mono(&vars, order, &[(a, 1), (X, 1)]))
            .pow(2)
            .sub(&ym)
    };
    let term_b = mono(&vars, order, &[(s, 1), (t, 1), (X, 1), (Y, 1)])
        .mul(&big)
        .mul(&z)
        .div(&one.sub(&mono(&vars, order, &[(s, 1), (t, 1), (X, 1)])))
        .div(&qfac(s))
        .div(&qfac(t));
    let out = term_a
        .add(&term_b)
        .mul(&z.pow(3))
        .div(&dfac(s))
        .div(&dfac(t));
    declare_where_dominated(out, &[s, t])
}
