//! Arithmetic modulo the Mersenne prime 2^61 − 1, used to evaluate trace
//! polynomials at integer points without big integers.
//!
//! Since p ≡ 1 (mod 3) the ring Z[ω] maps onto F_p by sending ω to a root of
//! ω² − ω + 1, so every exact trace reduces correctly.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::poly::matrix::GenMat;

pub const P: u64 = (1 << 61) - 1;

#[inline]
pub fn reduce(x: u128) -> u64 {
    let lo = (x as u64) & P;
    let hi = (x >> 61) as u64;
    let s = lo + (hi & P) + (hi >> 61);
    let s = (s & P) + (s >> 61);
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    reduce(a as u128 * b as u128)
}

pub fn from_i64(v: i64) -> u64 {
    v.rem_euclid(P as i64) as u64
}

pub fn from_big(v: &BigInt) -> u64 {
    v.mod_floor(&BigInt::from(P)).to_u64().expect("reduced residue")
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

/// A root of ω² − ω + 1 in F_p.
pub fn omega() -> u64 {
    static W: OnceLock<u64> = OnceLock::new();
    *W.get_or_init(|| {
        // p ≡ 3 (mod 4), so square roots are a^((p+1)/4)
        let minus3 = P - 3;
        let s = pow(minus3, (P + 1) / 4);
        assert_eq!(mul(s, s), minus3, "-3 is a square mod p");
        let inv2 = (P + 1) / 2;
        let w = mul(add(1, s), inv2);
        assert_eq!(add(mul(w, w), 1), w, "ω² = ω − 1");
        w
    })
}

/// Row-major 2×2 matrix over F_p.
pub type Mat = [u64; 4];

pub const IDENTITY: Mat = [1, 0, 0, 1];

#[inline]
pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    [
        reduce(a[0] as u128 * b[0] as u128 + a[1] as u128 * b[2] as u128),
        reduce(a[0] as u128 * b[1] as u128 + a[1] as u128 * b[3] as u128),
        reduce(a[2] as u128 * b[0] as u128 + a[3] as u128 * b[2] as u128),
        reduce(a[2] as u128 * b[1] as u128 + a[3] as u128 * b[3] as u128),
    ]
}

#[inline]
pub fn trace(a: &Mat) -> u64 {
    add(a[0], a[3])
}

/// A generator matrix with λ = λ0 substituted, reduced mod p.
pub(crate) fn gen_at(g: &GenMat, lambda0: i64) -> Mat {
    let w = omega();
    let entry = |i: usize| {
        let a = g[i];
        let re = add(from_i64(a.c0.0), mul(from_i64(a.c1.0), from_i64(lambda0)));
        let om = add(from_i64(a.c0.1), mul(from_i64(a.c1.1), from_i64(lambda0)));
        add(re, mul(om, w))
    };
    [entry(0), entry(1), entry(2), entry(3)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_basics() {
        assert_eq!(mul(P - 1, P - 1), 1);
        assert_eq!(reduce(u128::from(P) * 5 + 7), 7);
        let w = omega();
        assert_eq!(pow(w, 6), 1);
        assert_ne!(pow(w, 3), 1);
        assert_eq!(from_big(&BigInt::from(-1)), P - 1);
        assert_eq!(from_i64(-3), P - 3);
    }
}
