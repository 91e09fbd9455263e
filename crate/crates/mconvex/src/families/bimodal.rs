//! Transfer sum for polygons that are convex except for a single rectangular
//! indent of depth m (two "modes" on one side).
//!
//! The polygon is factorised at the indent into a top factor, a middle
//! factor and a bottom factor, indexed by the bases a+b, b+c+d (and
//! variants) and d+e; the overlap widths b and d are divided back out as
//! x^(-b-d). Nine classes arise depending on which factors are pyramids
//! (P_n), unimodal polygons (H_n), or height-restricted versions of these:
//!
//! ```text
//! G1 = sum_{a,b,c,d,e>=1} x^(-b-d) H_{a+b,m} P_{b+c+d} (2H+_{d+e,m} - H_{d+e,m})
//! G2 = sum_{a>=0,b,c,d,e>=1} 2 x^(-b-d) P_{b,m} H_{a+b+c+d} H+_{d+e,m}
//! G3 = sum_{a,b,c,d>=1} 2 x^(-b-d) H_{a+b,m} P_{b+c+d} (H+_{d,m} - P+_{d,m})
//! G4 = sum_{a>=0,b,c,d>=1} 2 x^(-b-d) P_{b,m} H_{a+b+c+d} (H+_{d,m} - P+_{d,m})
//! G5 = sum_{a,b,c,d>=1,e>=0} 2 x^(-b-d) H_{a+b,m} H_{b+c+d+e} P+_{d,m+1}
//! G6 = sum_{a,e>=0,b,c,d>=1} x^(-b-d) P_{b,m} C_{a+b+c+d+e} (2P+_{d,m} - P_{d,m})
//! G7 = sum_{b,c,d,e>=1} 2 x^(-b-d) (H_{b,m}-P_{b,m}) P_{b+c+d} H+_{d+e,m+1}
//! G8 = sum_{b,c,d>=1} x^(-b-d) (H_{b,m}-P_{b,m}) P_{b+c+d}
//!                                  (2(H+_{d,m}-P+_{d,m}) - (H_{d,m}-P_{d,m}))
//! G9 = sum_{b,c,d>=1,e>=0} 2 x^(-b-d) (H_{b,m}-P_{b,m}) H_{b+c+d+e} P+_{d,m+1}
//! ```
//!
//! where X_{n,m} is X_n restricted to height exactly m and X+_{n,m} to height
//! at least m. The middle factor of G6 must be convex by base (C_n), not
//! merely unimodal: with both a and e free, the rows below the attachment
//! line may widen on either side. Likewise the middle of G9 must be unimodal
//! (H_n), not a pyramid: with e free, the rows below the attachment line may
//! widen on the e side. The factors of 2 are the up/down reflection of the indent; the
//! (2X+ - X) combinations remove the double count when the short side has
//! height exactly m.
//!
//! Rather than summing the free indices directly, the code sums each G over
//! a, c, e first (plain and weighted tails in the base index) and then over
//! the diagonal k = b+d, so that each diagonal costs one series product per
//! middle-factor type.

use crate::catalog;
use crate::vars::VarSet;
use crate::{rat, Series};

/// tails[j] = sum over n >= j of list[n] (lists are 1-based with a zero
/// sentinel at index 0; tails get one extra zero sentinel at the top).
fn tails(list: &[Series]) -> Vec<Series> {
    let top = list.len();
    let mut t = vec![list[0].clone(); top + 1]; // list[0] is the zero sentinel
    for j in (1..top).rev() {
        t[j] = t[j + 1].add(&list[j]);
    }
    t
}

/// Polygons convex but for one depth-m rectangular indent, to the given
/// order. Exact transfer-sum evaluation; all tails are complete within the
/// doubled working window.
pub fn bimodal_sum(m: u32, order: u32) -> Series {
    assert!(m >= 1);
    let w = 2 * order;
    let nmax = w as usize;
    let mh = m as u16;

    // base-indexed families, 1-based with a zero sentinel at index 0
    let zero = Series::zero(&VarSet::xy(w), w);
    let with_sentinel = |v: Vec<Series>| {
        let mut out = vec![zero.clone()];
        out.extend(v);
        out
    };
    let p = with_sentinel(catalog::pyramid_n_list(nmax, w));
    let h = with_sentinel(catalog::unimodal_n_list(nmax, w));
    let c = with_sentinel(catalog::convex_n_list(nmax, w));

    let slice = |list: &[Series], f: &dyn Fn(&Series) -> Series| -> Vec<Series> {
        list.iter().map(|s| f(s)).collect()
    };
    let hm = slice(&h, &|s| catalog::exact_height(s, mh));
    let pm = slice(&p, &|s| catalog::exact_height(s, mh));
    let hp = slice(&h, &|s| catalog::at_least_height(s, mh));
    let pp = slice(&p, &|s| catalog::at_least_height(s, mh));
    let hp1 = slice(&h, &|s| catalog::at_least_height(s, mh + 1));
    let pp1 = slice(&p, &|s| catalog::at_least_height(s, mh + 1));

    // plain tails in the base index
    let t_hm = tails(&hm); // sum_{n>=j} H_{n,m}
    let t_p = tails(&p); // sum_{n>=j} P_n
    let t_h = tails(&h); // sum_{n>=j} H_n
    let t_hp = tails(&hp); // sum_{n>=j} H+_{n,m}
    let t_hp1 = tails(&hp1); // sum_{n>=j} H+_{n,m+1}
    let q1: Vec<Series> = (0..hp.len())
        .map(|i| hp[i].scale(&rat(2)).sub(&hm[i]))
        .collect();
    let t_q1 = tails(&q1); // sum_{n>=j} (2H+ - H)_{n,m}

    // weighted tails: w2[k] = sum_{n>k} (n-k) X_n, w3[k] = sum binom(n-k+1,2) X_n
    let weighted = |t: &[Series]| -> Vec<Series> {
        let mut w2 = vec![zero.clone(); nmax + 2];
        for k in (0..=nmax).rev() {
            w2[k] = w2[k + 1].add(&t[k + 1]);
        }
        w2
    };
    let wh2 = weighted(&t_h);
    // three free indices (a, e >= 0, c >= 1) over the convex middle: weight
    // binom(n-k+1, 2), i.e. the inclusive tail of the two-index weight
    let t_c = tails(&c);
    let wc2 = weighted(&t_c);
    let mut wc3 = vec![zero.clone(); nmax + 2];
    for k in (0..=nmax).rev() {
        wc3[k] = wc3[k + 1].add(&wc2[k]);
    }

    // diagonal accumulation: every surviving term of diagonal k has total
    // degree at least k + 2m + 2, but looping all the way to k = order is
    // cheap and makes completeness self-evident
    let shift_x = order as u16;
    let mut acc = zero.clone();
    for k in 2..=order as usize {
        let mut s_tp = zero.clone(); // classes with middle P_{b+c+d}
        let mut s_wh2 = zero.clone(); // middle H with two free indices
        let mut s_wc3 = zero.clone(); // convex middle with three free indices
        for b in 1..k {
            let d = k - b;
            let th_b = &t_hm[b + 1]; // sum_a H_{a+b,m}
            let hmp_b = hm[b].sub(&pm[b]); // H_{b,m} - P_{b,m}
            let hpd = hp[d].sub(&pp[d]); // H+_{d,m} - P+_{d,m}
            let q8 = hpd.scale(&rat(2)).sub(&hm[d].sub(&pm[d]));

            // G1, G3, G7, G8
            s_tp = s_tp
                .add(&th_b.mul(&t_q1[d + 1]))
                .add(&th_b.mul(&hpd).scale(&rat(2)))
                .add(&hmp_b.mul(&t_hp1[d + 1]).scale(&rat(2)))
                .add(&hmp_b.mul(&q8));
            // G2, G4, G5, G9
            s_wh2 = s_wh2
                .add(&pm[b].mul(&t_hp[d + 1]).scale(&rat(2)))
                .add(&pm[b].mul(&hpd).scale(&rat(2)))
                .add(&th_b.mul(&pp1[d]).scale(&rat(2)))
                .add(&hmp_b.mul(&pp1[d]).scale(&rat(2)));
            // G6
            s_wc3 = s_wc3.add(&pm[b].mul(&pp[d].scale(&rat(2)).sub(&pm[d])));
        }
        let diag = s_tp
            .mul(&t_p[k + 1])
            .add(&s_wh2.mul(&wh2[k]))
            .add(&s_wc3.mul(&wc3[k]));
        acc = acc.add(&diag.mul_monomial(&[shift_x - k as u16, 0]));
    }
    acc.div_monomial(&[shift_x, 0])
        .extend_vars(&VarSet::xy(order), order)
}
