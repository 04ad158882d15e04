//! Dense product engine for the generator matrices.
//!
//! Every generator power has entries of the form `c0 + c1·λ` with small
//! Eisenstein-integer coefficients, so a running product is multiplied by
//! one such "affine" matrix per syllable. The engine is generic over the
//! coefficient type so the same code runs with checked `i64` arithmetic and
//! falls back to `BigInt` on overflow.

use num_bigint::BigInt;
use num_traits::Zero;

/// `(c0.0 + c0.1·ω) + (c1.0 + c1.1·ω)·λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Affine {
    pub c0: (i64, i64),
    pub c1: (i64, i64),
}

impl Affine {
    pub const fn new(re0: i64, om0: i64, re1: i64, om1: i64) -> Self {
        Affine { c0: (re0, om0), c1: (re1, om1) }
    }

    /// Substitutes λ = x, leaving a constant.
    pub fn at(self, x: i64) -> Option<Affine> {
        let re = self.c0.0.checked_add(self.c1.0.checked_mul(x)?)?;
        let om = self.c0.1.checked_add(self.c1.1.checked_mul(x)?)?;
        Some(Affine::new(re, om, 0, 0))
    }
}

/// Row-major `[[g00, g01], [g10, g11]]`.
pub(crate) type GenMat = [Affine; 4];

pub(crate) trait Coeff: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `self += x * k`; `None` on overflow.
    fn mac(&mut self, x: &Self, k: i64) -> Option<()>;
    fn checked_add(&self, o: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn mac(&mut self, x: &Self, k: i64) -> Option<()> {
        *self = self.checked_add(x.checked_mul(k)?)?;
        Some(())
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        i64::checked_add(*self, *o)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mac(&mut self, x: &Self, k: i64) -> Option<()> {
        if k != 0 && !Zero::is_zero(x) {
            *self += x * k;
        }
        Some(())
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// A 2×2 matrix over `T[ω][λ]` truncated to degree `cap − 1`.
///
/// Layout: entry `e` (row-major), component `c` (0 = rational, 1 = ω),
/// degree `d` lives at `(2e + c)·cap + d`.
#[derive(Clone, Debug)]
pub(crate) struct PolyMat<T> {
    cap: usize,
    /// number of degree slots that may be nonzero
    len: usize,
    data: Vec<T>,
}

impl<T: Coeff> PolyMat<T> {
    pub fn identity(cap: usize) -> Self {
        let cap = cap.max(1);
        let mut data = vec![T::zero(); 8 * cap];
        data[0] = T::one();
        data[6 * cap] = T::one();
        PolyMat { cap, len: 1, data }
    }

    #[inline]
    fn idx(&self, e: usize, c: usize, d: usize) -> usize {
        (2 * e + c) * self.cap + d
    }

    /// `out = self · g`. Returns `None` on coefficient overflow.
    ///
    /// Panics if the result would exceed the degree capacity.
    pub fn mul_into(&self, g: &GenMat, out: &mut PolyMat<T>) -> Option<()> {
        debug_assert_eq!(self.cap, out.cap);
        let grows = g.iter().any(|a| a.c1 != (0, 0));
        let new_len = if grows { self.len + 1 } else { self.len };
        assert!(new_len <= self.cap, "degree capacity exceeded");
        out.len = new_len;
        for i in 0..2 {
            for j in 0..2 {
                let e_out = 2 * i + j;
                let (r0, o0) = (out.idx(e_out, 0, 0), out.idx(e_out, 1, 0));
                for d in 0..new_len {
                    out.data[r0 + d] = T::zero();
                    out.data[o0 + d] = T::zero();
                }
                for l in 0..2 {
                    let a = g[2 * l + j];
                    let e_in = 2 * i + l;
                    let (sr, so) = (self.idx(e_in, 0, 0), self.idx(e_in, 1, 0));
                    for d in 0..self.len {
                        let x = &self.data[sr + d];
                        let y = &self.data[so + d];
                        if x.is_zero() && y.is_zero() {
                            continue;
                        }
                        // (x + yω)(c + eω) = (xc − ye) + (xe + yc + ye)ω
                        for (shift, (c, e)) in [(0usize, a.c0), (1usize, a.c1)] {
                            if c == 0 && e == 0 {
                                continue;
                            }
                            let dd = d + shift;
                            out.data[r0 + dd].mac(x, c)?;
                            out.data[r0 + dd].mac(y, -e)?;
                            out.data[o0 + dd].mac(x, e)?;
                            out.data[o0 + dd].mac(y, c.checked_add(e)?)?;
                        }
                    }
                }
            }
        }
        Some(())
    }

    /// Trace as (rational part, ω part), constant term first.
    pub fn trace(&self) -> Option<(Vec<T>, Vec<T>)> {
        let mut re = Vec::with_capacity(self.len);
        let mut om = Vec::with_capacity(self.len);
        for d in 0..self.len {
            re.push(self.data[self.idx(0, 0, d)].checked_add(&self.data[self.idx(3, 0, d)])?);
            om.push(self.data[self.idx(0, 1, d)].checked_add(&self.data[self.idx(3, 1, d)])?);
        }
        Some((re, om))
    }
}

/// Multiplies out `mats` left to right into a trace, first in the type `T`
/// and returning `None` on overflow.
pub(crate) fn trace_of_product<T: Coeff>(mats: &[&GenMat], cap: usize) -> Option<(Vec<T>, Vec<T>)> {
    let mut cur = PolyMat::<T>::identity(cap);
    let mut next = cur.clone();
    for g in mats {
        cur.mul_into(g, &mut next)?;
        std::mem::swap(&mut cur, &mut next);
    }
    cur.trace()
}

/// [`trace_of_product`] with an `i64` fast path and exact fallback.
pub(crate) fn trace_of_product_exact(mats: &[&GenMat], cap: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    if let Some((re, om)) = trace_of_product::<i64>(mats, cap) {
        return (re.iter().map(Coeff::to_big).collect(), om.iter().map(Coeff::to_big).collect());
    }
    trace_of_product::<BigInt>(mats, cap).expect("BigInt arithmetic does not overflow")
}
