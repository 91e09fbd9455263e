//! Unit-level checks of the truncated series engine: ring laws, division,
//! square roots, calculus, substitution and the combinatorial solver.

use mconvex::series::MultiSeries;
use mconvex::vars::{VarSet, X, Y};
use mconvex::{catalog, rat, Series};

fn c(s: &Series, i: u16, j: u16) -> i64 {
    use num_traits::ToPrimitive;
    let v = s.coeff(&[i, j]);
    assert!(v.is_integer(), "coefficient not integral");
    v.to_integer().to_i64().unwrap()
}

#[test]
fn mul_matches_hand_expansion() {
    let n = 8;
    let f = catalog::poly(n, &[(0, 0, 1), (1, 0, 2), (0, 1, 3)]);
    let g = catalog::poly(n, &[(0, 0, 1), (1, 1, -1)]);
    let p = f.mul(&g);
    assert_eq!(c(&p, 0, 0), 1);
    assert_eq!(c(&p, 1, 0), 2);
    assert_eq!(c(&p, 0, 1), 3);
    assert_eq!(c(&p, 1, 1), -1);
    assert_eq!(c(&p, 2, 1), -2);
    assert_eq!(c(&p, 1, 2), -3);
}

#[test]
fn mul_respects_truncation_window() {
    let n = 3;
    let f = catalog::poly(n, &[(2, 0, 1), (0, 2, 1)]);
    let p = f.mul(&f);
    // all products have main degree 4 > 3
    assert!(p.is_zero());
}

#[test]
fn inv_roundtrip_and_geometric() {
    let n = 10;
    let one = catalog::one(n);
    let f = catalog::poly(n, &[(0, 0, 1), (1, 0, -1)]);
    let g = f.inv();
    for k in 0..=n as u16 {
        assert_eq!(c(&g, k, 0), 1, "geometric coefficient");
    }
    assert_eq!(f.mul(&g), one);
    // random-ish denser series
    let h = catalog::poly(n, &[(0, 0, 2), (1, 0, 1), (0, 1, -3), (1, 1, 5), (2, 0, 7)]);
    assert_eq!(h.mul(&h.inv()), one);
}

#[test]
fn div_cancels_common_monomials_exactly() {
    let n = 9;
    // f = x^2 y (1 + y), g = x y (1 - x): f/g = x (1+y)/(1-x)
    let f = catalog::poly(n, &[(2, 1, 1), (2, 2, 1)]);
    let g = catalog::poly(n, &[(1, 1, 1), (2, 1, -1)]);
    let q = f.div(&g);
    // order drops by the cancelled main degree (2)
    assert_eq!(q.order(), n - 2);
    assert_eq!(c(&q, 1, 0), 1);
    assert_eq!(c(&q, 1, 1), 1);
    assert_eq!(c(&q, 3, 0), 1);
    assert_eq!(c(&q, 4, 1), 1);
}

#[test]
#[should_panic(expected = "monomial cancellation failed")]
fn div_rejects_non_divisible() {
    let n = 6;
    let f = catalog::poly(n, &[(1, 0, 1), (0, 1, 1)]); // x + y
    let g = catalog::poly(n, &[(1, 0, 1)]); // x
    let _ = f.div(&g);
}

#[test]
fn sqrt_squares_back() {
    let n = 12;
    let d = catalog::delta(n);
    let r = d.sqrt();
    assert_eq!(r.mul(&r), d);
    assert_eq!(c(&r, 0, 0), 1);
    assert_eq!(c(&r, 1, 0), -1);
    assert_eq!(c(&r, 0, 1), -1);
    // sqrt(delta) = 1 - x - y - 2xy/(stuff): spot value
    assert_eq!(c(&r, 1, 1), -2);
}

#[test]
fn derivative_product_rule() {
    let n = 9;
    let f = catalog::sp(n);
    let g = catalog::delta(n);
    let lhs = f.mul(&g).derivative(Y);
    let rhs = f.derivative(Y).mul(&g.truncate(n - 1)).add(
        &g.derivative(Y).mul(&f.truncate(n - 1)),
    );
    assert_eq!(lhs, rhs);
}

#[test]
fn coeff_slice_reassembles() {
    let n = 8;
    let f = catalog::convex(n);
    let mut acc = Series::zero(f.vars(), n);
    for k in 0..=f.max_exp(Y) {
        acc = acc.add(&f.coeff_slice(Y, k).mul_monomial(&[0, k]));
    }
    assert_eq!(acc, f);
}

#[test]
fn substitute_composes() {
    let n = 8;
    let vars = VarSet::with_aux(n, &[("s", n)]);
    let s = vars.var("s");
    let x = Series::var(&vars, n, X);
    let y = Series::var(&vars, n, Y);
    // f = 1/(1 - s), then s := x + y gives 1/(1 - x - y)
    let f = Series::one(&vars, n)
        .sub(&Series::var(&vars, n, s))
        .inv();
    let g = f.substitute(s, &x.add(&y));
    let direct = Series::one(&vars, n).sub(&x.add(&y)).inv();
    assert_eq!(g, direct);
}

#[test]
fn eval_at_one_requires_declaration() {
    let n = 6;
    let vars = VarSet::with_aux(n, &[("s", n)]);
    let s = vars.var("s");
    // x s + x^2 s^2: aux-dominated in s
    let f = Series::from_terms(
        &vars,
        n,
        [
            (smallvec::smallvec![1u16, 0, 1], rat(1)),
            (smallvec::smallvec![2u16, 0, 2], rat(1)),
        ],
    );
    let g = f.clone().declare_aux_dominated(s).eval_at_one(s);
    assert_eq!(g.coeff(&[1, 0, 0]), rat(1));
    assert_eq!(g.coeff(&[2, 0, 0]), rat(1));
    let result = std::panic::catch_unwind(|| f.eval_at_one(s));
    assert!(result.is_err(), "undeclared evaluation must be rejected");
}

#[test]
fn solve_uv_satisfies_equations() {
    let n = 12;
    let vars = VarSet::xy(n);
    let (u, v) = Series::solve_uv(&vars, n);
    let one = Series::one(&vars, n);
    let x = Series::var(&vars, n, X);
    let y = Series::var(&vars, n, Y);
    assert_eq!(u.mul(&one.sub(&v)), x, "u (1 - v) = x");
    assert_eq!(v.mul(&one.sub(&u)), y, "v (1 - u) = y");
    // SP = u v, and sqrt(delta) = 1 - u - v
    assert_eq!(catalog::sp(n), u.mul(&v));
    assert_eq!(catalog::sqrt_delta(n), one.sub(&u).sub(&v));
}

#[test]
fn catalog_locks() {
    let n = 10;
    let sp = catalog::sp(n);
    let up = catalog::up(n);
    let cx = catalog::convex(n);
    assert_eq!(c(&sp, 1, 1), 1);
    assert_eq!(c(&sp, 2, 2), 3);
    assert_eq!(c(&up, 2, 2), 4);
    assert_eq!(c(&cx, 2, 2), 5);
    // convex totals by half-perimeter
    let totals = [1i64, 2, 7, 28, 120, 528, 2344];
    for (i, &t) in totals.iter().enumerate() {
        let hp = i as u16 + 2;
        let mut sum = 0;
        for w in 1..hp {
            sum += c(&cx, w, hp - w);
        }
        assert_eq!(sum, t, "convex total at half-perimeter {hp}");
    }
}

#[test]
fn canonical_text_golden() {
    let n = 3;
    let f = catalog::sp(n);
    assert_eq!(f.canonical_text(), "1 1\t1/1\n1 2\t1/1\n2 1\t1/1\n");
}

#[test]
fn transpose_and_symmetry() {
    let n = 10;
    assert_eq!(catalog::convex(n).transpose_xy(), catalog::convex(n));
    assert_eq!(catalog::sp(n).transpose_xy(), catalog::sp(n));
    let (u, v) = Series::solve_uv(&VarSet::xy(n), n);
    assert_eq!(u.transpose_xy(), v);
}

#[test]
fn generic_scalar_compiles_for_floats() {
    // The engine is generic over the scalar; exercise the f64 instantiation.
    let vars = VarSet::xy(6);
    let f: MultiSeries<f64> = MultiSeries::from_terms(
        &vars,
        6,
        [
            (smallvec::smallvec![0u16, 0], 1.0),
            (smallvec::smallvec![1u16, 0], -0.5),
        ],
    );
    let g = f.inv();
    assert!((g.coeff(&[1, 0]) - 0.5).abs() < 1e-12);
}
