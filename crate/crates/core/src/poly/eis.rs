//! Polynomials over the Eisenstein-type ring Z[ω], ω² = ω − 1, and 2×2
//! matrices over them.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;

use super::IntPoly;

/// `re(λ) + om(λ)·ω`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EisPoly {
    pub re: IntPoly,
    pub om: IntPoly,
}

impl EisPoly {
    pub fn new(re: IntPoly, om: IntPoly) -> Self {
        EisPoly { re, om }
    }

    pub fn zero() -> Self {
        EisPoly::default()
    }

    pub fn one() -> Self {
        EisPoly::new(IntPoly::one(), IntPoly::zero())
    }

    pub fn omega() -> Self {
        EisPoly::new(IntPoly::zero(), IntPoly::one())
    }

    /// `(re0 + om0·ω) + (re1 + om1·ω)·λ`.
    pub fn affine(re0: i64, om0: i64, re1: i64, om1: i64) -> Self {
        EisPoly::new(IntPoly::from_i64(&[re0, re1]), IntPoly::from_i64(&[om0, om1]))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.om.is_zero()
    }

    /// Substitutes λ = x.
    pub fn eval(&self, x: &BigInt) -> (BigInt, BigInt) {
        (self.re.eval(x), self.om.eval(x))
    }
}

impl Add for &EisPoly {
    type Output = EisPoly;
    fn add(self, rhs: &EisPoly) -> EisPoly {
        EisPoly::new(&self.re + &rhs.re, &self.om + &rhs.om)
    }
}

impl Sub for &EisPoly {
    type Output = EisPoly;
    fn sub(self, rhs: &EisPoly) -> EisPoly {
        EisPoly::new(&self.re - &rhs.re, &self.om - &rhs.om)
    }
}

impl Mul for &EisPoly {
    type Output = EisPoly;
    /// (a+bω)(c+dω) = (ac − bd) + (ad + bc + bd)ω.
    fn mul(self, rhs: &EisPoly) -> EisPoly {
        let (a, b, c, d) = (&self.re, &self.om, &rhs.re, &rhs.om);
        let bd = b * d;
        let re = &(a * c) - &bd;
        let om = &(&(a * d) + &(b * c)) + &bd;
        EisPoly::new(re, om)
    }
}

/// Row-major 2×2 matrix `[[m00, m01], [m10, m11]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub m: [EisPoly; 4],
}

impl Mat2 {
    pub fn identity() -> Self {
        Mat2 { m: [EisPoly::one(), EisPoly::zero(), EisPoly::zero(), EisPoly::one()] }
    }

    pub fn trace(&self) -> EisPoly {
        &self.m[0] + &self.m[3]
    }

    pub fn det(&self) -> EisPoly {
        &(&self.m[0] * &self.m[3]) - &(&self.m[1] * &self.m[2])
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let a = &self.m;
        let b = &rhs.m;
        let e = |i: usize, j: usize| &(&a[2 * i] * &b[j]) + &(&a[2 * i + 1] * &b[2 + j]);
        Mat2 { m: [e(0, 0), e(0, 1), e(1, 0), e(1, 1)] }
    }
}
