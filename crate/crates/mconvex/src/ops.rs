//! Series operators: even-part extraction, Hadamard products and joins,
//! pole-derivative evaluation, and coefficient-shift derivatives.
//!
//! These implement the reflection/unfolding machinery that turns transfer
//! sums over half-perimeter markers into ordinary series algebra.

use crate::series::{MultiSeries, Scalar};
use crate::vars::Var;

/// Star mask for `e_operator`: each listed pair (starred, base) names a
/// temporary variable that tracks occurrences exempt from even-extraction;
/// after extraction its exponents are folded back onto the base variable.
///
/// The base of a pair may itself be an extraction target — that is the whole
/// point: the expression is built with the exempt occurrences renamed to the
/// starred copy, extraction halves only the unstarred occurrences, and the
/// copy is merged back afterwards.
#[derive(Clone, Debug, Default)]
pub struct StarMask {
    pub pairs: Vec<(Var, Var)>,
}

impl StarMask {
    pub fn none() -> Self {
        StarMask { pairs: Vec::new() }
    }

    pub fn pair(starred: Var, base: Var) -> Self {
        StarMask {
            pairs: vec![(starred, base)],
        }
    }
}

/// Keep only terms with even exponent in every target variable and halve
/// those exponents, then fold starred copies back onto their bases.
///
/// Truncation discipline: halving doubles the reach of the result, so the
/// input must be computed at twice the intended order (and with doubled caps
/// on capped targets); callers truncate afterwards. This function preserves
/// the declared order and leaves that bookkeeping to the caller.
pub fn e_operator<T: Scalar>(
    f: &MultiSeries<T>,
    targets: &[Var],
    mask: &StarMask,
) -> MultiSeries<T> {
    for &(starred, _) in &mask.pairs {
        assert!(
            !targets.contains(&starred),
            "star mask: starred copy must not be an extraction target"
        );
    }
    let picked = f.terms().filter_map(|(e, c)| {
        let mut ne = e.clone();
        for &v in targets {
            if ne[v] % 2 != 0 {
                return None;
            }
            ne[v] /= 2;
        }
        Some((ne, c.clone()))
    });
    let mut g = MultiSeries::from_terms(f.vars(), f.order(), picked);
    for &(starred, base) in &mask.pairs {
        g = g.merge_var(starred, base);
    }
    g
}

/// Full Hadamard product along `v`: sum over n of f_n * g_n * v^n, where f_n
/// and g_n are the coefficient-series of v^n. The join variable survives.
pub fn hadamard_full<T: Scalar>(
    f: &MultiSeries<T>,
    g: &MultiSeries<T>,
    v: Var,
) -> MultiSeries<T> {
    let nmax = f.max_exp(v).min(g.max_exp(v));
    let mut acc = MultiSeries::zero(f.vars(), f.order().min(g.order()));
    let mut shift = vec![0u16; f.vars().len()];
    for n in 0..=nmax {
        let fn_ = f.coeff_slice(v, n).truncate(acc.order());
        if fn_.is_zero() {
            continue;
        }
        let gn = g.coeff_slice(v, n).truncate(acc.order());
        if gn.is_zero() {
            continue;
        }
        shift[v] = n;
        acc = acc.add(&fn_.mul(&gn).mul_monomial(&shift));
    }
    acc
}

/// Restricted Hadamard join along `v`: sum over n of f_n * g_n with `v`
/// eliminated from the result's registry.
///
/// At least one operand must be declared aux-dominated in `v`; that bounds
/// the v-exponent by the main degree on that side, so only finitely many
/// slices meet the retained window and the sum is exact there.
pub fn hadamard_join<T: Scalar>(
    f: &MultiSeries<T>,
    g: &MultiSeries<T>,
    v: Var,
) -> MultiSeries<T> {
    assert!(
        f.is_aux_dominated(v) || g.is_aux_dominated(v),
        "hadamard_join: neither operand is aux-dominated in {}",
        f.vars().name(v)
    );
    let nmax = f.max_exp(v).min(g.max_exp(v));
    let order = f.order().min(g.order());
    let mut acc = MultiSeries::zero(f.vars(), order);
    for n in 0..=nmax {
        let fn_ = f.coeff_slice(v, n).truncate(order);
        if fn_.is_zero() {
            continue;
        }
        let gn = g.coeff_slice(v, n).truncate(order);
        if gn.is_zero() {
            continue;
        }
        acc = acc.add(&fn_.mul(&gn));
    }
    acc.drop_var(v)
}

/// Joint restricted Hadamard join over several variables:
/// sum over exponent vectors n of f_n * g_n with every listed variable
/// eliminated. The slices must be paired across all variables before
/// multiplying — repeated single-variable joins of the same two operands
/// would mix the remaining join variables' exponents and lose the diagonal.
pub fn hadamard_join_multi<T: Scalar>(
    f: &MultiSeries<T>,
    g: &MultiSeries<T>,
    vs: &[Var],
) -> MultiSeries<T> {
    for &v in vs {
        assert!(
            f.is_aux_dominated(v) || g.is_aux_dominated(v),
            "hadamard_join_multi: neither operand is aux-dominated in {}",
            f.vars().name(v)
        );
    }
    let order = f.order().min(g.order());
    let r = join_multi_inner(&f.truncate(order), &g.truncate(order), vs);
    // drop from the highest index down so earlier indices stay valid
    let mut sorted: Vec<Var> = vs.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut r = r;
    for v in sorted {
        r = r.drop_var(v);
    }
    r
}

fn join_multi_inner<T: Scalar>(
    f: &MultiSeries<T>,
    g: &MultiSeries<T>,
    vs: &[Var],
) -> MultiSeries<T> {
    let Some((&v, rest)) = vs.split_first() else {
        return f.mul(g);
    };
    let nmax = f.max_exp(v).min(g.max_exp(v));
    let mut acc = MultiSeries::zero(f.vars(), f.order());
    for n in 0..=nmax {
        let fn_ = f.coeff_slice(v, n);
        if fn_.is_zero() {
            continue;
        }
        let gn = g.coeff_slice(v, n);
        if gn.is_zero() {
            continue;
        }
        acc = acc.add(&join_multi_inner(&fn_, &gn, rest));
    }
    acc
}

/// k-th derivative of f with respect to `v`, evaluated at v = alpha:
/// sum over n >= k of n(n-1)...(n-k+1) f_n alpha^(n-k), by Horner in alpha.
/// `alpha` must be free of `v` (its constant term may be nonzero: the v-sum
/// is finite because f carries a cap on v).
pub fn pf_pole_rule<T: Scalar>(
    f: &MultiSeries<T>,
    alpha: &MultiSeries<T>,
    k: u16,
    v: Var,
) -> MultiSeries<T> {
    assert_eq!(alpha.max_exp(v), 0, "pf_pole_rule: alpha must not involve v");
    let nmax = f.max_exp(v);
    let order = f.order().min(alpha.order());
    let mut acc = MultiSeries::zero(f.vars(), order);
    if nmax < k {
        return acc;
    }
    let alpha = alpha.truncate(order);
    for n in (k..=nmax).rev() {
        // falling factorial n (n-1) ... (n-k+1)
        let mut fall = T::one();
        for i in 0..k {
            fall = fall * T::from_u32(n as u32 - i as u32).unwrap();
        }
        let term = f.coeff_slice(v, n).truncate(order).scale(&fall);
        acc = acc.mul(&alpha).add(&term);
    }
    acc
}

/// n-th coefficient-shift derivative along `v`: the series whose v^j
/// coefficient is C(j + n, n) times the v^(j+n) coefficient of f — i.e. the
/// n-th v-derivative divided by n!.
pub fn phi<T: Scalar>(f: &MultiSeries<T>, v: Var, n: u16) -> MultiSeries<T> {
    let terms = f.terms().filter_map(|(e, c)| {
        if e[v] < n {
            return None;
        }
        let mut ne = e.clone();
        ne[v] -= n;
        // binomial(e[v], n) built up exactly
        let mut b = T::one();
        for i in 0..n {
            b = b * T::from_u32((e[v] - i) as u32).unwrap()
                / T::from_u32((i + 1) as u32).unwrap();
        }
        let coeff = c.clone() * b;
        if coeff.is_zero() {
            None
        } else {
            Some((ne, coeff))
        }
    });
    MultiSeries::from_terms(f.vars(), f.order(), terms)
}
