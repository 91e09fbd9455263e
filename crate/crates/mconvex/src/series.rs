//! Truncated multivariate formal power series over an exact scalar.
//!
//! A `MultiSeries<T>` stores the coefficients of a formal power series in the
//! variables of its `VarSet`, truncated to total degree `order` in the main
//! variables `x`, `y`, and to the per-variable caps in all auxiliary
//! variables. Arithmetic is exact on the retained window: two series agreeing
//! with analytic functions to a given order combine into a series agreeing
//! with the combined function to the (possibly reduced, and then recorded)
//! order of the result.
//!
//! Invariants maintained everywhere:
//!   * no explicitly stored zero coefficients;
//!   * no term with main degree above `order` or an exponent above its cap;
//!   * binary operations require operands over the same `VarSet` and order.

use crate::vars::{Var, VarSet, X, Y};
use num_traits::{FromPrimitive, One, Zero};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

/// Exponent vector, indexed parallel to the `VarSet`.
pub type Exps = SmallVec<[u16; 6]>;

/// Scalar bound for series coefficients: an exact (or approximate) field
/// reachable from small integers. `num::BigRational` is the alias used by
/// the whole crate; the bound also admits `f32`/`f64`.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Exact rational constant p/q.
    fn ratio(p: i64, q: i64) -> Self {
        Self::from_i64(p).unwrap() / Self::from_i64(q).unwrap()
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
        + Div<Output = Self>
{
}

/// A truncated multivariate power series. See the module docs.
#[derive(Clone)]
pub struct MultiSeries<T> {
    vars: Arc<VarSet>,
    order: u32,
    terms: BTreeMap<Exps, T>,
    /// Bitmask: bit v set means the series is declared aux-dominated in
    /// variable v (every term's exponent of v is at most its main degree).
    /// Required by evaluation-at-one and the restricted Hadamard join.
    aux_dom: u64,
}

/// Equality is mathematical: registry, order and terms. The aux-domination
/// flags are advisory metadata and deliberately excluded.
impl<T: PartialEq> PartialEq for MultiSeries<T> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.order == other.order && self.terms == other.terms
    }
}

impl<T: Scalar> MultiSeries<T> {
    // ----- constructors -----

    pub fn zero(vars: &Arc<VarSet>, order: u32) -> Self {
        MultiSeries {
            vars: vars.clone(),
            order,
            terms: BTreeMap::new(),
            aux_dom: 0,
        }
    }

    pub fn constant(vars: &Arc<VarSet>, order: u32, c: T) -> Self {
        let mut s = Self::zero(vars, order);
        if !c.is_zero() {
            s.terms.insert(Self::zero_exps(vars), c);
        }
        s
    }

    pub fn one(vars: &Arc<VarSet>, order: u32) -> Self {
        Self::constant(vars, order, T::one())
    }

    /// The series consisting of a single monomial.
    pub fn monomial(vars: &Arc<VarSet>, order: u32, exps: &[u16], c: T) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent/arity mismatch");
        let mut s = Self::zero(vars, order);
        let e: Exps = SmallVec::from_slice(exps);
        assert!(
            Self::within(vars, order, &e),
            "monomial outside truncation window"
        );
        if !c.is_zero() {
            s.terms.insert(e, c);
        }
        s
    }

    /// The single variable `v` as a series.
    pub fn var(vars: &Arc<VarSet>, order: u32, v: Var) -> Self {
        let mut e = vec![0u16; vars.len()];
        e[v] = 1;
        Self::monomial(vars, order, &e, T::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, T)>>(
        vars: &Arc<VarSet>,
        order: u32,
        it: I,
    ) -> Self {
        let mut s = Self::zero(vars, order);
        for (e, c) in it {
            if c.is_zero() || !Self::within(vars, order, &e) {
                continue;
            }
            match s.terms.entry(e) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = o.get().clone() + c;
                    if sum.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        }
        s
    }

    fn zero_exps(vars: &Arc<VarSet>) -> Exps {
        SmallVec::from_elem(0u16, vars.len())
    }

    #[inline]
    fn within(vars: &Arc<VarSet>, order: u32, e: &Exps) -> bool {
        if (e[X] as u32 + e[Y] as u32) > order {
            return false;
        }
        for v in 2..vars.len() {
            if e[v] > vars.cap(v) {
                return false;
            }
        }
        true
    }

    // ----- accessors -----

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &T)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coeff(&self, exps: &[u16]) -> T {
        let e: Exps = SmallVec::from_slice(exps);
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> T {
        self.terms
            .get(&Self::zero_exps(&self.vars))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    fn assert_compatible(&self, other: &Self, op: &str) {
        assert!(
            self.vars == other.vars,
            "{op}: mismatched variable registries {:?} vs {:?}",
            self.vars.names(),
            other.vars.names()
        );
        assert_eq!(self.order, other.order, "{op}: mismatched orders");
    }

    // ----- aux-domination -----

    /// True when every stored term's exponent of `v` is at most its main
    /// degree. (A necessary condition for the declaration below; caps may
    /// hide violating terms, so the declaration carries semantic intent.)
    pub fn scan_aux_dominated(&self, v: Var) -> bool {
        self.terms
            .iter()
            .all(|(e, _)| (e[v] as u32) <= e[X] as u32 + e[Y] as u32)
    }

    /// Declare the series aux-dominated in `v`: the (untruncated) function it
    /// represents has every exponent of `v` bounded by the main degree. The
    /// stored window is scanned as a sanity check.
    pub fn declare_aux_dominated(mut self, v: Var) -> Self {
        assert!(!self.vars.is_main(v), "aux-domination concerns aux variables");
        assert!(
            self.scan_aux_dominated(v),
            "stored terms violate aux-domination in {}",
            self.vars.name(v)
        );
        self.aux_dom |= 1 << v;
        self
    }

    pub fn is_aux_dominated(&self, v: Var) -> bool {
        self.aux_dom & (1 << v) != 0
    }

    fn meet_flags(&self, other: &Self) -> u64 {
        self.aux_dom & other.aux_dom
    }

    // ----- linear operations -----

    pub fn neg(&self) -> Self {
        MultiSeries {
            vars: self.vars.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
            aux_dom: self.aux_dom,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other, "add");
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.entry(e.clone()) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = o.get().clone() + c.clone();
                    if sum.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        }
        MultiSeries {
            vars: self.vars.clone(),
            order: self.order,
            terms,
            aux_dom: self.meet_flags(other),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars, self.order);
        }
        MultiSeries {
            vars: self.vars.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, t)| (e.clone(), t.clone() * c.clone()))
                .collect(),
            aux_dom: self.aux_dom,
        }
    }

    // ----- multiplication -----

    /// Cauchy product truncated to the shared window. O(|f| * |g|) coefficient
    /// multiplications (pairs outside the window are skipped early).
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other, "mul");
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        // Sort the larger factor by main degree for early exit.
        let mut big_terms: Vec<(&Exps, &T, u32)> = big
            .terms
            .iter()
            .map(|(e, c)| (e, c, e[X] as u32 + e[Y] as u32))
            .collect();
        big_terms.sort_by_key(|&(_, _, d)| d);
        let nv = self.vars.len();
        let mut acc: BTreeMap<Exps, T> = BTreeMap::new();
        for (ea, ca) in &small.terms {
            let da = ea[X] as u32 + ea[Y] as u32;
            for &(eb, cb, db) in &big_terms {
                if da + db > self.order {
                    break;
                }
                let mut e = ea.clone();
                let mut ok = true;
                for v in 0..nv {
                    e[v] += eb[v];
                    if v >= 2 && e[v] > self.vars.cap(v) {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                let prod = ca.clone() * cb.clone();
                match acc.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let sum = o.get().clone() + prod;
                        if sum.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = sum;
                        }
                    }
                }
            }
        }
        MultiSeries {
            vars: self.vars.clone(),
            order: self.order,
            terms: acc,
            aux_dom: self.meet_flags(other),
        }
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, n: u32) -> Self {
        let mut base = self.clone();
        let mut n = n;
        let mut acc = Self::one(&self.vars, self.order);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    // ----- inversion and division -----

    /// Multiplicative inverse of a series with invertible constant term, by
    /// graded recursion on total degree. O(|self| * |result|) coefficient ops.
    pub fn inv(&self) -> Self {
        let c0 = self.constant_term();
        assert!(
            !c0.is_zero(),
            "inv: constant term is zero (no common monomial was cancelled)"
        );
        let c0inv = T::one() / c0;
        let nv = self.vars.len();
        let total = |e: &Exps| -> usize { e.iter().map(|&k| k as usize).sum() };
        // Nonconstant terms of self, grouped for the recursion.
        let g1: Vec<(&Exps, &T, usize)> = self
            .terms
            .iter()
            .filter(|(e, _)| total(e) > 0)
            .map(|(e, c)| (e, c, total(e)))
            .collect();
        let maxgrade: usize = self.order as usize
            + (2..nv).map(|v| self.vars.cap(v) as usize).sum::<usize>();
        let mut res: BTreeMap<Exps, T> = BTreeMap::new();
        res.insert(Self::zero_exps(&self.vars), c0inv.clone());
        let mut by_grade: Vec<Vec<Exps>> = vec![Vec::new(); maxgrade + 1];
        by_grade[0].push(Self::zero_exps(&self.vars));
        for d in 1..=maxgrade {
            let mut acc: BTreeMap<Exps, T> = BTreeMap::new();
            for &(eg, cg, k) in &g1 {
                if k > d {
                    continue;
                }
                for er in &by_grade[d - k] {
                    let mut e = eg.clone();
                    let mut ok = true;
                    for v in 0..nv {
                        e[v] += er[v];
                        if v >= 2 && e[v] > self.vars.cap(v) {
                            ok = false;
                            break;
                        }
                    }
                    if !ok || (e[X] as u32 + e[Y] as u32) > self.order {
                        continue;
                    }
                    let prod = cg.clone() * res.get(er).unwrap().clone();
                    let slot = acc.entry(e).or_insert_with(T::zero);
                    *slot = slot.clone() + prod;
                }
            }
            for (e, a) in acc {
                if a.is_zero() {
                    continue;
                }
                let val = -(a * c0inv.clone());
                if !val.is_zero() {
                    by_grade[d].push(e.clone());
                    res.insert(e, val);
                }
            }
        }
        MultiSeries {
            vars: self.vars.clone(),
            order: self.order,
            terms: res,
            aux_dom: 0,
        }
    }

    /// Componentwise minimum exponent over all stored terms (the largest
    /// monomial dividing the series). Zero vector for the zero series.
    pub fn monomial_gcd(&self) -> Exps {
        let mut m: Option<Exps> = None;
        for e in self.terms.keys() {
            match &mut m {
                None => m = Some(e.clone()),
                Some(m) => {
                    for v in 0..e.len() {
                        m[v] = m[v].min(e[v]);
                    }
                }
            }
        }
        m.unwrap_or_else(|| Self::zero_exps(&self.vars))
    }

    /// Exact division by the monomial with exponent vector `shift`. Every
    /// stored term must be divisible; the reliable order drops by the main
    /// part of the shift and the result's order records that.
    pub fn div_monomial(&self, shift: &[u16]) -> Self {
        let main_shift = shift[X] as u32 + shift[Y] as u32;
        assert!(
            self.order >= main_shift,
            "div_monomial: shift exceeds series order"
        );
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            for v in 0..shift.len() {
                assert!(
                    e[v] >= shift[v],
                    "monomial cancellation failed: term {:?} not divisible by shift {:?} in {:?}",
                    e,
                    shift,
                    self.vars.names()
                );
                ne[v] = e[v] - shift[v];
            }
            terms.insert(ne, c.clone());
        }
        MultiSeries {
            vars: self.vars.clone(),
            order: self.order - main_shift,
            terms,
            aux_dom: 0,
        }
    }

    /// Multiply by the monomial with exponent vector `shift`; the order
    /// interpretation tightens accordingly (window shrinks, order is kept and
    /// terms pushed past it are dropped).
    pub fn mul_monomial(&self, shift: &[u16]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            for v in 0..shift.len() {
                ne[v] = e[v] + shift[v];
            }
            if Self::within(&self.vars, self.order, &ne) {
                terms.insert(ne, c.clone());
            }
        }
        MultiSeries {
            vars: self.vars.clone(),
            order: self.order,
            terms,
            aux_dom: 0,
        }
    }

    /// Division. If the divisor's constant term vanishes, its largest common
    /// monomial factor is cancelled exactly against the dividend first; the
    /// result's order drops by the main degree of that cancellation. Panics
    /// (reporting the offending monomials) when cancellation cannot make the
    /// divisor invertible or the dividend is not divisible.
    pub fn div(&self, other: &Self) -> Self {
        self.assert_compatible(other, "div");
        assert!(!other.is_zero(), "div: division by zero series");
        if !other.constant_term().is_zero() {
            return self.mul(&other.inv());
        }
        let shift = other.monomial_gcd();
        let g = other.div_monomial(&shift);
        assert!(
            !g.constant_term().is_zero(),
            "div: divisor has zero constant term after cancelling its monomial gcd {:?}",
            shift
        );
        let f = self.div_monomial(&shift);
        // f now has the reduced order; align g.
        let g = g.truncate(f.order);
        f.mul(&g.inv())
    }

    /// Square root of a series with constant term 1, by Newton iteration
    /// g <- (g + f/g)/2, quadratically convergent: O(log order) inversions.
    pub fn sqrt(&self) -> Self {
        assert!(
            self.constant_term() == T::one(),
            "sqrt: constant term must be 1"
        );
        let maxgrade: usize = self.order as usize
            + (2..self.vars.len())
                .map(|v| self.vars.cap(v) as usize)
                .sum::<usize>();
        let half = T::ratio(1, 2);
        let mut g = Self::one(&self.vars, self.order);
        let iters = usize::BITS - maxgrade.leading_zeros() + 2;
        for _ in 0..iters {
            g = g.add(&self.mul(&g.inv())).scale(&half);
        }
        g
    }

    // ----- calculus and slicing -----

    /// Partial derivative with respect to `v`. For a main variable the
    /// reliable order drops by one and the result records that.
    pub fn derivative(&self, v: Var) -> Self {
        let new_order = if self.vars.is_main(v) {
            assert!(self.order > 0, "derivative: order exhausted");
            self.order - 1
        } else {
            self.order
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[v] -= 1;
            if !Self::within(&self.vars, new_order, &ne) {
                continue;
            }
            let k = T::from_u32(e[v] as u32).unwrap();
            terms.insert(ne, c.clone() * k);
        }
        MultiSeries {
            vars: self.vars.clone(),
            order: new_order,
            terms,
            aux_dom: 0,
        }
    }

    /// The terms whose exponent of `v` equals `k`, with that exponent reset
    /// to zero: the coefficient-series of v^k.
    pub fn coeff_slice(&self, v: Var, k: u16) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[v] == k {
                let mut ne = e.clone();
                ne[v] = 0;
                terms.insert(ne, c.clone());
            }
        }
        MultiSeries {
            vars: self.vars.clone(),
            order: self.order,
            terms,
            aux_dom: 0,
        }
    }

    /// Largest exponent of `v` appearing in a stored term.
    pub fn max_exp(&self, v: Var) -> u16 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// Substitute `g` (over the same registry and order, with zero constant
    /// term) for the variable `v`, by Horner evaluation over the v-slices.
    pub fn substitute(&self, v: Var, g: &Self) -> Self {
        self.assert_compatible(g, "substitute");
        assert!(
            g.constant_term().is_zero(),
            "substitute: replacement must have zero constant term (use eval_at_one for 1)"
        );
        let kmax = self.max_exp(v);
        let mut acc = self.coeff_slice(v, kmax);
        for k in (0..kmax).rev() {
            acc = acc.mul(g).add(&self.coeff_slice(v, k));
        }
        acc
    }

    /// Set the aux variable `v` to 1. Requires the series to be declared
    /// aux-dominated in `v` (otherwise the evaluation is not supported by the
    /// retained window and the call panics).
    pub fn eval_at_one(&self, v: Var) -> Self {
        assert!(!self.vars.is_main(v), "eval_at_one: aux variables only");
        assert!(
            self.is_aux_dominated(v),
            "eval_at_one: series not declared aux-dominated in {}",
            self.vars.name(v)
        );
        let mut s = Self::zero(&self.vars, self.order);
        // collapsing v leaves every other exponent and the main degree of
        // each term unchanged, so the remaining domination flags still hold
        s.aux_dom = self.aux_dom & !(1 << v);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[v] = 0;
            let slot = s.terms.entry(ne).or_insert_with(T::zero);
            *slot = slot.clone() + c.clone();
        }
        s.terms.retain(|_, c| !c.is_zero());
        s
    }

    /// Transfer all exponents of `v` onto `w` (rename-and-merge, used to fold
    /// a starred variable copy back onto its base variable).
    pub fn merge_var(&self, v: Var, w: Var) -> Self {
        assert_ne!(v, w, "merge_var: distinct variables required");
        let mut s = Self::zero(&self.vars, self.order);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[w] += ne[v];
            ne[v] = 0;
            if !Self::within(&self.vars, self.order, &ne) {
                continue;
            }
            let slot = s.terms.entry(ne).or_insert_with(T::zero);
            *slot = slot.clone() + c.clone();
        }
        s.terms.retain(|_, c| !c.is_zero());
        s
    }

    // ----- registry changes -----

    /// Reduce the order (dropping terms beyond it).
    pub fn truncate(&self, order: u32) -> Self {
        assert!(order <= self.order, "truncate: cannot raise the order");
        let mut terms = self.terms.clone();
        terms.retain(|e, _| e[X] as u32 + e[Y] as u32 <= order);
        MultiSeries {
            vars: self.vars.clone(),
            order,
            terms,
            aux_dom: self.aux_dom,
        }
    }

    /// Re-home the series into a (super)registry, matching variables by name.
    pub fn extend_vars(&self, vars: &Arc<VarSet>, order: u32) -> Self {
        assert!(order <= self.order, "extend_vars: cannot raise the order");
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| vars.var(n))
            .collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne: Exps = SmallVec::from_elem(0u16, vars.len());
            for (v, &ev) in e.iter().enumerate() {
                ne[map[v]] = ev;
            }
            if Self::within(vars, order, &ne) {
                terms.insert(ne, c.clone());
            }
        }
        MultiSeries {
            vars: vars.clone(),
            order,
            terms,
            aux_dom: 0,
        }
    }

    /// Drop an aux variable in which no exponent appears.
    pub fn drop_var(&self, v: Var) -> Self {
        assert!(
            self.terms.keys().all(|e| e[v] == 0),
            "drop_var: variable {} still occurs",
            self.vars.name(v)
        );
        let vars = self.vars.without(v);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.remove(v);
            terms.insert(ne, c.clone());
        }
        MultiSeries {
            vars,
            order: self.order,
            terms,
            aux_dom: 0,
        }
    }

    /// Swap the roles of x and y (the width/height transpose).
    pub fn transpose_xy(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.swap(X, Y);
            terms.insert(ne, c.clone());
        }
        MultiSeries {
            vars: self.vars.clone(),
            order: self.order,
            terms,
            aux_dom: 0,
        }
    }

    // ----- combinatorial solve -----

    /// The unique series pair solving u = x/(1 - v), v = y/(1 - u), by fixed
    /// point iteration (order + 1 rounds, each contraction gains a degree).
    pub fn solve_uv(vars: &Arc<VarSet>, order: u32) -> (Self, Self) {
        let x = Self::var(vars, order, X);
        let y = Self::var(vars, order, Y);
        let one = Self::one(vars, order);
        let mut u = Self::zero(vars, order);
        let mut v = Self::zero(vars, order);
        for _ in 0..=order {
            let nu = x.mul(&one.sub(&v).inv());
            let nv = y.mul(&one.sub(&u).inv());
            u = nu;
            v = nv;
        }
        (u, v)
    }
}

impl<T: Scalar + fmt::Display> MultiSeries<T> {
    /// Canonical one-term-per-line text form: space-separated exponent vector,
    /// a tab, then the coefficient, in graded lexicographic term order.
    pub fn canonical_text(&self) -> String {
        let mut keys: Vec<&Exps> = self.terms.keys().collect();
        keys.sort_by_key(|e| {
            (
                e.iter().map(|&k| k as u32).sum::<u32>(),
                (*e).clone(),
            )
        });
        let mut out = String::new();
        for e in keys {
            let exps: Vec<String> = e.iter().map(|k| k.to_string()).collect();
            out.push_str(&exps.join(" "));
            out.push('\t');
            out.push_str(&format_coeff(&self.terms[e]));
            out.push('\n');
        }
        out
    }
}

/// Render a coefficient as `numerator/denominator`. For the crate's rational
/// alias the denominator is always explicit (integers print as n/1).
fn format_coeff<T: fmt::Display>(c: &T) -> String {
    let s = c.to_string();
    if s.contains('/') {
        s
    } else {
        format!("{s}/1")
    }
}

impl<T: Scalar + fmt::Display> fmt::Debug for MultiSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MultiSeries(order={}, vars={:?}, {} terms)\n{}",
            self.order,
            self.vars.names(),
            self.terms.len(),
            self.canonical_text()
        )
    }
}

// Operator sugar on references, so formula code reads algebraically.
impl<'a, T: Scalar> Add for &'a MultiSeries<T> {
    type Output = MultiSeries<T>;
    fn add(self, rhs: Self) -> MultiSeries<T> {
        MultiSeries::add(self, rhs)
    }
}

impl<'a, T: Scalar> Sub for &'a MultiSeries<T> {
    type Output = MultiSeries<T>;
    fn sub(self, rhs: Self) -> MultiSeries<T> {
        MultiSeries::sub(self, rhs)
    }
}

impl<'a, T: Scalar> Mul for &'a MultiSeries<T> {
    type Output = MultiSeries<T>;
    fn mul(self, rhs: Self) -> MultiSeries<T> {
        MultiSeries::mul(self, rhs)
    }
}

impl<'a, T: Scalar> Div for &'a MultiSeries<T> {
    type Output = MultiSeries<T>;
    fn div(self, rhs: Self) -> MultiSeries<T> {
        MultiSeries::div(self, rhs)
    }
}

impl<'a, T: Scalar> Neg for &'a MultiSeries<T> {
    type Output = MultiSeries<T>;
    fn neg(self) -> MultiSeries<T> {
        MultiSeries::neg(self)
    }
}
