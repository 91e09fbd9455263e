//! Consistency checks for the indexed families and side-refined blocks:
//! summing over the refinement must recover the unrefined series, and
//! setting side markers to 1 must do the same.

use mconvex::vars::Y;
use mconvex::{catalog, rat, Series};

/// Compare a series whose aux exponents are all zero against a plain
/// bivariate series, coefficient by coefficient.
fn assert_xy_eq(f: &Series, g: &Series, what: &str) {
    assert_eq!(f.order(), g.order(), "{what}: order mismatch");
    let mut n = 0;
    for (e, c) in f.terms() {
        for v in 2..e.len() {
            assert_eq!(e[v], 0, "{what}: aux exponent left over at {e:?}");
        }
        assert_eq!(&g.coeff(&[e[0], e[1]]), c, "{what}: coefficient at {e:?}");
        n += 1;
    }
    assert_eq!(n, g.num_terms(), "{what}: term count");
}

fn eval1(f: &Series, name: &str) -> Series {
    f.eval_at_one(f.vars().var(name))
}

#[test]
fn pyramids_by_base_sum_to_pyramid() {
    let n = 10;
    let parts = catalog::pyramid_n_list(n as usize, n);
    let mut acc = Series::zero(parts[0].vars(), n);
    for p in &parts {
        acc = acc.add(p);
    }
    assert_eq!(acc, catalog::pyramid(n));
    // base-1 pyramids are the single columns xy/(1-y)
    for h in 1..=n as u16 - 1 {
        assert_eq!(parts[0].coeff(&[1, h]), rat(1));
    }
}

#[test]
fn unimodal_by_base_sum_to_unimodal() {
    let n = 10;
    let parts = catalog::unimodal_n_list(n as usize, n);
    let mut acc = Series::zero(parts[0].vars(), n);
    for p in &parts {
        acc = acc.add(p);
    }
    assert_eq!(acc, catalog::up(n));
}

#[test]
fn convex_by_base_sum_to_convex() {
    let n = 9;
    let parts = catalog::convex_n_list(n as usize, n);
    let mut acc = Series::zero(parts[0].vars(), n);
    for p in &parts {
        acc = acc.add(p);
    }
    assert_eq!(acc, catalog::convex(n));
}

#[test]
fn height_slices_reassemble() {
    let n = 9;
    let f = catalog::up(n);
    let mut acc = Series::zero(f.vars(), n);
    for k in 0..=f.max_exp(Y) {
        acc = acc.add(&catalog::exact_height(&f, k));
    }
    assert_eq!(acc, f);
    assert_eq!(catalog::at_least_height(&f, 1), f);
    assert_eq!(
        catalog::at_least_height(&f, 3),
        f.sub(&catalog::exact_height(&f, 1))
            .sub(&catalog::exact_height(&f, 2))
    );
}

#[test]
fn indent_identities() {
    let n = 12;
    // depth 1: u^2/(1-u)^2 = (SP/y)^2
    let i1 = catalog::indent(1, n).truncate(n - 2);
    let sp2 = catalog::sp(n).pow(2).div_monomial(&[0, 2]);
    assert_eq!(i1, sp2);
    // depth 2: y^4 u^2/(1-u)^4 = v^2 SP^2
    let y4 = catalog::poly(n, &[(0, 4, 1)]);
    let (_, v) = catalog::uv(n);
    assert_eq!(
        catalog::indent(2, n).mul(&y4),
        v.pow(2).mul(&catalog::sp(n).pow(2))
    );
    // the transpose swaps the roles of x and y
    assert_eq!(
        catalog::indent_bar(1, n),
        catalog::indent(1, n).transpose_xy()
    );
}

#[test]
fn stair_sides_specialise_to_staircase() {
    let n = 9;
    let t = catalog::stair_sides(n);
    let at_one = eval1(&eval1(&t, "s"), "t");
    assert_xy_eq(&at_one, &catalog::sp(n), "stair sides at s=t=1");
}

#[test]
fn unimodal_sides_specialise_and_match_closed_slice() {
    let n = 9;
    let u = catalog::unimodal_sides(n);
    let at_one = eval1(&eval1(&u, "s"), "t");
    assert_xy_eq(&at_one, &catalog::up(n), "unimodal sides at s=t=1");
    // U at s=1 equals x v t (1 + SP Z)/(1 - v t)
    let us1 = eval1(&u, "s");
    let vars = us1.vars();
    let tv = vars.var("t");
    let one = Series::one(vars, n);
    let v = catalog::uv(n).1.extend_vars(vars, n);
    let vt = v.mul(&Series::var(vars, n, tv));
    let closed = Series::var(vars, n, mconvex::vars::X)
        .mul(&vt)
        .mul(&one.add(&catalog::sp(n).extend_vars(vars, n).mul(&catalog::z(n).extend_vars(vars, n))))
        .mul(&one.sub(&vt).inv());
    assert_eq!(us1, closed.declare_aux_dominated(tv));
}

#[test]
fn stair_base_side_specialises_to_staircase() {
    let n = 9;
    let f = catalog::stair_base_side(n);
    let at_one = eval1(&eval1(&f, "b"), "s");
    assert_xy_eq(&at_one, &catalog::sp(n), "stair base/side at b=s=1");
}

#[test]
fn convex_left_specialises_to_convex() {
    let n = 8;
    let f = catalog::convex_left(n);
    let at_one = eval1(&f, "s");
    assert_xy_eq(&at_one, &catalog::convex(n), "convex by left side at s=1");
    for (e, c) in f.terms() {
        assert!(c.is_integer() && c >= &rat(0), "bad side count at {e:?}: {c}");
    }
}

#[test]
fn convex_bottom_top_specialises_and_is_symmetric() {
    let n = 8;
    let f = catalog::convex_bottom_top(n);
    let at_one = eval1(&eval1(&f, "s"), "t");
    assert_xy_eq(&at_one, &catalog::convex(n), "convex bottom/top at s=t=1");
    // bottom/top symmetry: swapping s and t fixes the series
    let s = f.vars().var("s");
    let t = f.vars().var("t");
    let swapped = Series::from_terms(
        f.vars(),
        f.order(),
        f.terms().map(|(e, c)| {
            let mut ne = e.clone();
            ne.swap(s, t);
            (ne, c.clone())
        }),
    );
    for (e, c) in f.terms() {
        assert_eq!(&swapped.coeff(e), c, "bottom/top symmetry at {e:?}");
    }
}

#[test]
fn indented_pyramids_are_nonnegative_integers() {
    let n = 10;
    let f = catalog::pyramid_indented(n);
    assert!(!f.is_zero());
    for (e, c) in f.terms() {
        assert!(c.is_integer(), "non-integer count at {e:?}");
        assert!(c >= &rat(0), "negative count at {e:?}");
    }
}
