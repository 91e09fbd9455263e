//! Base-indexed building blocks: pyramid, unimodal and convex polygons
//! enumerated by the width of their base, with exact/at-least height
//! refinements, and the indent factors.
//!
//! The indexed entries combine an even-extraction term (computed internally
//! at doubled order so the halved exponents fill the requested window) with
//! algebraic correction terms.

use crate::ops::{self, StarMask};
use crate::vars::{VarSet, Y};
use crate::{catalog, Series};

/// Keep even exponents of `y` and halve them. The input must carry twice the
/// target order; the result is truncated to `order`.
fn e_y(inner: &Series, order: u32) -> Series {
    ops::e_operator(inner, &[Y], &StarMask::none()).extend_vars(&VarSet::xy(order), order)
}

/// Pyramid (stack) polygons: xy(1-x) / ((1-x)^2 - y).
pub fn pyramid(order: u32) -> Series {
    catalog::cached("pyramid", order, || {
        let num = catalog::poly(order, &[(1, 1, 1), (2, 1, -1)]);
        let den = catalog::poly(order, &[(0, 0, 1), (1, 0, -2), (2, 0, 1), (0, 1, -1)]);
        num.div(&den)
    })
}

/// Pyramids of base n for n = 1..=nmax: even-extraction of y^2 (x/(1-y))^n.
pub fn pyramid_n_list(nmax: usize, order: u32) -> Vec<Series> {
    let w = 2 * order;
    let ratio = catalog::poly(w, &[(1, 0, 1)])
        .div(&catalog::poly(w, &[(0, 0, 1), (0, 1, -1)]));
    let mut inner = catalog::poly(w, &[(0, 2, 1)]);
    let mut out = Vec::with_capacity(nmax);
    for _ in 0..nmax {
        inner = inner.mul(&ratio);
        out.push(e_y(&inner, order));
    }
    out
}

pub fn pyramid_n(n: usize, order: u32) -> Series {
    assert!(n >= 1, "base index must be positive");
    pyramid_n_list(n, order).pop().unwrap()
}

/// Unimodal polygons of base n, with the even-extraction term and the
/// 2xy^2 u^n / delta correction.
pub fn unimodal_n_list(nmax: usize, order: u32) -> Vec<Series> {
    let w = 2 * order;
    let one_w = catalog::one(w);
    let y_w = catalog::ys(w);
    let x_w = catalog::xs(w);
    let base = catalog::poly(w, &[(0, 2, 1)])
        .mul(&one_w.sub(&y_w))
        .mul(&one_w.sub(&x_w).sub(&y_w))
        .div(&catalog::poly(w, &[(0, 0, 1), (0, 1, -2), (0, 2, 1), (1, 0, -1)]));
    let ratio = x_w.div(&one_w.sub(&y_w));
    let (u, _) = catalog::uv(order);
    let corr0 = catalog::poly(order, &[(1, 2, 2)]).mul(&catalog::delta(order).inv());
    let mut inner = base;
    let mut un = catalog::one(order);
    let mut out = Vec::with_capacity(nmax);
    for _ in 0..nmax {
        inner = inner.mul(&ratio);
        un = un.mul(&u);
        out.push(e_y(&inner, order).sub(&corr0.mul(&un)));
    }
    out
}

pub fn unimodal_n(n: usize, order: u32) -> Series {
    assert!(n >= 1, "base index must be positive");
    unimodal_n_list(n, order).pop().unwrap()
}

/// Convex polygons of base n: (1/delta^2) E-term minus
/// 4x^2y^3 u^n / (SP delta^(3/2)), the latter rewritten with
/// u^n / SP = u^(n-1) (1-u) / y to avoid dividing by SP.
pub fn convex_n_list(nmax: usize, order: u32) -> Vec<Series> {
    let w = 2 * order;
    let one_w = catalog::one(w);
    let y_w = catalog::ys(w);
    let x_w = catalog::xs(w);
    let fplus = catalog::poly(w, &[(0, 0, 1), (0, 1, 2), (0, 2, 1), (1, 0, -1)]);
    let base = catalog::poly(w, &[(0, 2, 1)])
        .mul(&one_w.sub(&y_w).pow(2))
        .mul(&one_w.sub(&x_w).sub(&y_w).pow(2))
        .mul(&fplus.pow(2));
    let ratio = x_w.div(&one_w.sub(&y_w));
    let inv_d2 = catalog::delta(order).pow(2).inv();
    let (u, _) = catalog::uv(order);
    // 4 x^2 y^2 (1-u) / delta^(3/2)
    let corr0 = catalog::poly(order, &[(2, 2, 4)])
        .mul(&catalog::one(order).sub(&u))
        .mul(&catalog::z(order).pow(3));
    let mut inner = base;
    let mut un = catalog::one(order);
    let mut out = Vec::with_capacity(nmax);
    for _ in 0..nmax {
        inner = inner.mul(&ratio);
        out.push(e_y(&inner, order).mul(&inv_d2).sub(&corr0.mul(&un)));
        un = un.mul(&u);
    }
    out
}

pub fn convex_n(n: usize, order: u32) -> Series {
    assert!(n >= 1, "base index must be positive");
    convex_n_list(n, order).pop().unwrap()
}

/// Slice of exact height m: y^m times the y^m coefficient.
pub fn exact_height(f: &Series, m: u16) -> Series {
    f.coeff_slice(Y, m).mul_monomial(&{
        let mut s = vec![0u16; f.vars().len()];
        s[Y] = m;
        s
    })
}

/// Height at least m: the full series minus the exact slices below m.
pub fn at_least_height(f: &Series, m: u16) -> Series {
    let mut out = f.clone();
    for i in 1..m {
        out = out.sub(&exact_height(f, i));
    }
    out
}

/// The m-deep indent factor u^2 / (1-u)^(2m).
pub fn indent(m: u32, order: u32) -> Series {
    assert!(m >= 1, "indent depth must be positive");
    let (u, _) = catalog::uv(order);
    let one = catalog::one(order);
    u.pow(2).mul(&one.sub(&u).pow(2 * m).inv())
}

/// The transposed indent factor (x and y swapped).
pub fn indent_bar(m: u32, order: u32) -> Series {
    indent(m, order).transpose_xy()
}

/// Pyramids carrying a horizontal indent:
/// xy/((1-x)^2-y) * (y/(1-x-y))^2 * ( x(1-x)^2/((1-x)^2-y) + xy/(1-y) ).
pub fn pyramid_indented(order: u32) -> Series {
    catalog::cached("pyramid_indented", order, || {
        let stack_den = catalog::poly(order, &[(0, 0, 1), (1, 0, -2), (2, 0, 1), (0, 1, -1)]);
        let a = catalog::poly(order, &[(1, 1, 1)]).div(&stack_den);
        let b = catalog::poly(order, &[(0, 1, 1)])
            .div(&catalog::poly(order, &[(0, 0, 1), (1, 0, -1), (0, 1, -1)]))
            .pow(2);
        let c = catalog::poly(order, &[(1, 0, 1), (2, 0, -2), (3, 0, 1)])
            .div(&stack_den)
            .add(
                &catalog::poly(order, &[(1, 1, 1)])
                    .div(&catalog::poly(order, &[(0, 0, 1), (0, 1, -1)])),
            );
        a.mul(&b).mul(&c)
    })
}

/// Build a series in a fresh registry from another registry's x/y terms.
pub fn into_vars(f: &Series, vars: &std::sync::Arc<VarSet>, order: u32) -> Series {
    let terms = f.terms().filter_map(|(e, c)| {
        let mut ne = smallvec::SmallVec::from_elem(0u16, vars.len());
        ne[crate::vars::X] = e[crate::vars::X];
        ne[Y] = e[Y];
        for (v, &exp) in e.iter().enumerate() {
            if v > Y && exp != 0 {
                return None;
            }
        }
        Some((ne, c.clone()))
    });
    Series::from_terms(vars, order, terms)
}

