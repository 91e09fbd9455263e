//! Monomial-shifted series: a power series divided by an explicit monomial.
//!
//! Several intermediate expressions (derivative quotients like d/dy (Q/y),
//! conjugate-root rewrites) are Laurent in x or y even though every final
//! result is a power series. Rather than storing Laurent terms, a
//! [`Shifted`] value keeps an ordinary truncated series `num` together with
//! the monomial x^sx y^sy it is implicitly divided by. Arithmetic aligns
//! shifts exactly; converting back to a plain series performs the exact
//! monomial cancellation and fails loudly if any term would stay negative.

use crate::series::{MultiSeries, Scalar};
use crate::vars::{X, Y};

/// `num / (x^sx * y^sy)` with `num` a plain truncated series.
#[derive(Clone)]
pub struct Shifted<T> {
    pub num: MultiSeries<T>,
    pub sx: u16,
    pub sy: u16,
}

impl<T: Scalar> Shifted<T> {
    pub fn from_series(s: MultiSeries<T>) -> Self {
        Shifted { num: s, sx: 0, sy: 0 }
    }

    /// `s / (x^sx y^sy)`.
    pub fn new(num: MultiSeries<T>, sx: u16, sy: u16) -> Self {
        Shifted { num, sx, sy }
    }

    fn shift_vec(&self) -> Vec<u16> {
        let mut v = vec![0u16; self.num.vars().len()];
        v[X] = self.sx;
        v[Y] = self.sy;
        v
    }

    /// Raise the recorded shift to (sx, sy), multiplying the numerator by the
    /// matching monomial. The window shrinks accordingly: this is only used
    /// with guard orders that absorb the loss.
    fn align_to(&self, sx: u16, sy: u16) -> MultiSeries<T> {
        assert!(sx >= self.sx && sy >= self.sy);
        let mut shift = vec![0u16; self.num.vars().len()];
        shift[X] = sx - self.sx;
        shift[Y] = sy - self.sy;
        self.num.mul_monomial(&shift)
    }

    pub fn add(&self, other: &Self) -> Self {
        let sx = self.sx.max(other.sx);
        let sy = self.sy.max(other.sy);
        // The represented value is reliable to (numerator order - shift);
        // aligning preserves that, so only the numerator orders need meeting.
        let order = self.num.order().min(other.num.order());
        Shifted {
            num: self
                .align_to(sx, sy)
                .truncate(order)
                .add(&other.align_to(sx, sy).truncate(order)),
            sx,
            sy,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Shifted {
            num: self.num.neg(),
            sx: self.sx,
            sy: self.sy,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.num.order().min(other.num.order());
        Shifted {
            num: self.num.truncate(order).mul(&other.num.truncate(order)),
            sx: self.sx + other.sx,
            sy: self.sy + other.sy,
        }
    }

    pub fn mul_series(&self, other: &MultiSeries<T>) -> Self {
        let order = self.num.order().min(other.order());
        Shifted {
            num: self.num.truncate(order).mul(&other.truncate(order)),
            sx: self.sx,
            sy: self.sy,
        }
    }

    /// Divide by a plain series (delegates to series division; any monomial
    /// factor of the divisor is cancelled there and recorded as extra shift).
    pub fn div_series(&self, other: &MultiSeries<T>) -> Self {
        let gcd = other.monomial_gcd();
        let mut mono_only = vec![0u16; other.vars().len()];
        mono_only[X] = gcd[X];
        mono_only[Y] = gcd[Y];
        let reduced = other.div_monomial(&mono_only);
        let order = self.num.order().min(reduced.order());
        let num = self.num.truncate(order).div(&reduced.truncate(order));
        Shifted {
            num,
            sx: self.sx + gcd[X],
            sy: self.sy + gcd[Y],
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Shifted {
            num: self.num.scale(c),
            sx: self.sx,
            sy: self.sy,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        Shifted {
            num: self.num.pow(n),
            sx: self.sx * n as u16,
            sy: self.sy * n as u16,
        }
    }

    /// d/dy of num/(x^sx y^sy) = (y num' - sy num) / (x^sx y^(sy+1)).
    pub fn dy(&self) -> Self {
        let vars = self.num.vars().clone();
        let order = self.num.order() - 1;
        let mut ymono = vec![0u16; vars.len()];
        ymono[Y] = 1;
        let dnum = self.num.derivative(Y).mul_monomial(&ymono);
        let scaled = self
            .num
            .truncate(order)
            .scale(&T::from_u32(self.sy as u32).unwrap());
        Shifted {
            num: dnum.sub(&scaled),
            sx: self.sx,
            sy: self.sy + 1,
        }
    }

    /// Multiply by x^i y^j (cancelling against the shift first).
    pub fn mul_xy(&self, i: u16, j: u16) -> Self {
        let ci = i.min(self.sx);
        let cj = j.min(self.sy);
        let mut shift = vec![0u16; self.num.vars().len()];
        shift[X] = i - ci;
        shift[Y] = j - cj;
        Shifted {
            num: self.num.mul_monomial(&shift),
            sx: self.sx - ci,
            sy: self.sy - cj,
        }
    }

    /// Exact conversion back to a plain series; panics if any term would keep
    /// a negative exponent. The reliable order drops by the recorded shift.
    pub fn into_series(&self) -> MultiSeries<T> {
        self.num.div_monomial(&self.shift_vec())
    }
}

/// Convenience for starting a shifted computation from a plain series.
pub fn sh<T: Scalar>(s: &MultiSeries<T>) -> Shifted<T> {
    Shifted::from_series(s.clone())
}
