//! Catalog of named polygon generating functions.
//!
//! All builders take the truncation order and return exact series over the
//! crate's rational scalar. Variables x and y mark width and height (so a
//! polygon of bounding box w x h contributes to x^w y^h); auxiliary
//! variables mark side half-perimeters where noted.

use crate::vars::{VarSet, X, Y};
use crate::{rat, Rat, Series};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

mod blocks;
mod data;
mod indexed;
pub use blocks::*;
pub use data::{load_poly, poly_checksum};
pub use indexed::*;

// ----- small builder helpers -----

/// x as a series over the plain registry.
pub fn xs(order: u32) -> Series {
    Series::var(&VarSet::xy(order), order, X)
}

pub fn ys(order: u32) -> Series {
    Series::var(&VarSet::xy(order), order, Y)
}

pub fn one(order: u32) -> Series {
    Series::one(&VarSet::xy(order), order)
}

/// Build a bivariate polynomial from (i, j, coefficient) triples.
pub fn poly(order: u32, terms: &[(u16, u16, i64)]) -> Series {
    let vars = VarSet::xy(order);
    Series::from_terms(
        &vars,
        order,
        terms.iter().map(|&(i, j, c)| {
            (smallvec::smallvec![i, j], rat(c))
        }),
    )
}

// ----- cache -----

static CACHE: Lazy<Mutex<HashMap<(&'static str, u32), Series>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn cached(key: &'static str, order: u32, build: impl FnOnce() -> Series) -> Series {
    if let Some(s) = CACHE.lock().unwrap().get(&(key, order)) {
        return s.clone();
    }
    let s = build();
    CACHE
        .lock()
        .unwrap()
        .insert((key, order), s.clone());
    s
}

// ----- basic entries -----

/// The convex discriminant 1 - 2x - 2y - 2xy + x^2 + y^2.
pub fn delta(order: u32) -> Series {
    poly(
        order,
        &[(0, 0, 1), (1, 0, -2), (0, 1, -2), (1, 1, -2), (2, 0, 1), (0, 2, 1)],
    )
}

pub fn sqrt_delta(order: u32) -> Series {
    cached("sqrt_delta", order, || delta(order).sqrt())
}

/// 1 / sqrt(delta): the central factor of the convex closed forms.
pub fn z(order: u32) -> Series {
    cached("z", order, || sqrt_delta(order).inv())
}

/// Staircase polygon generating function (1 - x - y - sqrt(delta)) / 2.
pub fn sp(order: u32) -> Series {
    cached("sp", order, || {
        let head = poly(order, &[(0, 0, 1), (1, 0, -1), (0, 1, -1)]);
        head.sub(&sqrt_delta(order)).scale(&Rat::new(1.into(), 2.into()))
    })
}

/// Unimodal (directed convex) polygon generating function x y / sqrt(delta).
pub fn up(order: u32) -> Series {
    cached("up", order, || {
        z(order).mul_monomial(&[1, 1])
    })
}

/// The algebraic pair solving u = x/(1-v), v = y/(1-u); sqrt(delta) equals
/// (1-u-v)(1-u)(1-v) / ... in derived identities, and SP = uv.
pub fn uv(order: u32) -> (Series, Series) {
    let u = cached("u", order, || {
        Series::solve_uv(&VarSet::xy(order), order).0
    });
    let v = cached("v", order, || {
        Series::solve_uv(&VarSet::xy(order), order).1
    });
    (u, v)
}

/// Convex polygon generating function (closed form).
pub fn convex(order: u32) -> Series {
    cached("convex", order, || {
        let a = poly(
            order,
            &[
                (0, 0, 1),
                (1, 0, -3),
                (0, 1, -3),
                (2, 0, 3),
                (0, 2, 3),
                (1, 1, 5),
                (3, 0, -1),
                (0, 3, -1),
                // - x y (x + y + (x - y)^2)
                (2, 1, -1),
                (1, 2, -1),
                (3, 1, -1),
                (1, 3, -1),
                (2, 2, 2),
            ],
        );
        let d = delta(order);
        let t1 = a.mul_monomial(&[1, 1]).mul(&d.pow(2).inv());
        let t2 = z(order)
            .mul(&d.inv())
            .mul_monomial(&[2, 2])
            .scale(&rat(4));
        t1.sub(&t2)
    })
}
