//! Trace polynomials of words under the fixed SL(2) representation in which
//! the generators have traces 2cos(π/p), 2cos(π/q) and tr(XY) = λ.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use super::eis::{EisPoly, Mat2};
use super::matrix::{trace_of_product_exact, Affine, GenMat};
use super::IntPoly;
use crate::word::{Factor, FactorSpec, Syllable, Word};

const Z: Affine = Affine::new(0, 0, 0, 0);
const ONE: Affine = Affine::new(1, 0, 0, 0);

// Z2*Z3: X = [[0,1],[-1,0]], Y = [[ω,0],[λ,1-ω]], Y² = Y - I.
const U1: GenMat = [Z, ONE, Affine::new(-1, 0, 0, 0), Z];
const V1: GenMat = [Affine::new(0, 1, 0, 0), Z, Affine::new(0, 0, 1, 0), Affine::new(1, -1, 0, 0)];
const V2: GenMat = [Affine::new(-1, 1, 0, 0), Z, Affine::new(0, 0, 1, 0), Affine::new(0, -1, 0, 0)];

// Z3*Z3: X = [[ω,1],[0,1-ω]], Y = [[ω,0],[λ+1,1-ω]], and squares M - I.
const X1: GenMat = [Affine::new(0, 1, 0, 0), ONE, Z, Affine::new(1, -1, 0, 0)];
const X2: GenMat = [Affine::new(-1, 1, 0, 0), ONE, Z, Affine::new(0, -1, 0, 0)];
const Y1: GenMat = [Affine::new(0, 1, 0, 0), Z, Affine::new(1, 0, 1, 0), Affine::new(1, -1, 0, 0)];
const Y2: GenMat = [Affine::new(-1, 1, 0, 0), Z, Affine::new(1, 0, 1, 0), Affine::new(0, -1, 0, 0)];

pub(crate) fn generator(spec: FactorSpec, s: Syllable) -> &'static GenMat {
    match (spec, s.factor, s.exp) {
        (FactorSpec::TwoThree, Factor::First, 1) => &U1,
        (FactorSpec::TwoThree, Factor::Second, 1) => &V1,
        (FactorSpec::TwoThree, Factor::Second, 2) => &V2,
        (FactorSpec::ThreeThree, Factor::First, 1) => &X1,
        (FactorSpec::ThreeThree, Factor::First, 2) => &X2,
        (FactorSpec::ThreeThree, Factor::Second, 1) => &Y1,
        (FactorSpec::ThreeThree, Factor::Second, 2) => &Y2,
        _ => unreachable!("syllable {s:?} invalid for {spec:?}"),
    }
}

fn to_mat2(g: &GenMat) -> Mat2 {
    let e = |a: Affine| EisPoly::affine(a.c0.0, a.c0.1, a.c1.0, a.c1.1);
    Mat2 { m: [e(g[0]), e(g[1]), e(g[2]), e(g[3])] }
}

/// Generator matrix of a syllable as an exact matrix over Z[ω][λ].
pub fn generator_matrix(spec: FactorSpec, s: Syllable) -> Mat2 {
    to_mat2(generator(spec, s))
}

/// Checks the defining properties of the representation: determinants 1,
/// prescribed traces, squares computed correctly, tr(XY) = λ.
pub fn verify_generators() -> Result<(), String> {
    let one = EisPoly::one();
    let lambda = EisPoly::new(IntPoly::lambda(), IntPoly::zero());
    for spec in [FactorSpec::TwoThree, FactorSpec::ThreeThree] {
        let x = generator_matrix(spec, Syllable::new(Factor::First, 1));
        let y = generator_matrix(spec, Syllable::new(Factor::Second, 1));
        let trace_x = if spec.p() == 2 { EisPoly::zero() } else { one.clone() };
        if x.trace() != trace_x || y.trace() != one {
            return Err(format!("{spec}: generator traces"));
        }
        if (&x * &y).trace() != lambda {
            return Err(format!("{spec}: tr(XY) is not λ"));
        }
        for factor in [Factor::First, Factor::Second] {
            let order = spec.order(factor);
            let g = generator_matrix(spec, Syllable::new(factor, 1));
            let mut power = Mat2::identity();
            for e in 1..order {
                power = &power * &g;
                let s = Syllable::new(factor, e);
                if generator_matrix(spec, s) != power {
                    return Err(format!("{spec}: power {e} of {factor:?}"));
                }
                if power.det() != one {
                    return Err(format!("{spec}: determinant of {s:?}"));
                }
            }
            // X^p = -I in SL(2) for trace 2cos(π/p)
            let full = &power * &g;
            let minus_one = EisPoly::new(IntPoly::from_i64(&[-1]), IntPoly::zero());
            if full.m != [minus_one.clone(), EisPoly::zero(), EisPoly::zero(), minus_one] {
                return Err(format!("{spec}: {factor:?}^{order} is not -I"));
            }
        }
    }
    Ok(())
}

fn ensure_verified() {
    static CHECK: OnceLock<()> = OnceLock::new();
    CHECK.get_or_init(|| {
        if let Err(e) = verify_generators() {
            panic!("generator matrices inconsistent: {e}");
        }
    });
}

/// Trace of W(X,Y) for a cyclically reduced word, as a polynomial in λ.
///
/// Panics if the result has a nonzero ω-part or is not monic of degree k;
/// either would indicate an arithmetic bug.
pub fn trace_polynomial(w: &Word) -> IntPoly {
    ensure_verified();
    let spec = w.spec();
    let mats: Vec<&GenMat> = w.syllables().iter().map(|&s| generator(spec, s)).collect();
    let cap = w.syllables().iter().filter(|s| s.factor == Factor::Second).count() + 1;
    let (re, om) = trace_of_product_exact(&mats, cap);
    assert!(om.iter().all(Zero::is_zero), "trace of {w} has nonzero ω-part");
    let p = IntPoly::new(re);
    let k = w.pair_length();
    assert!(
        (k == 0 && p == IntPoly::from_i64(&[2])) || (p.is_monic() && p.degree() == Some(k)),
        "trace of {w} is not monic of degree {k}: {p}"
    );
    p
}

/// τ_W(λ0), computed by multiplying the matrices with λ = λ0 substituted, over
/// Eisenstein integers.
pub fn eval_trace_int(w: &Word, lambda0: i64) -> BigInt {
    ensure_verified();
    let spec = w.spec();
    let subst: Vec<GenMat> = w
        .syllables()
        .iter()
        .map(|&s| {
            let g = generator(spec, s);
            let at = |a: Affine| a.at(lambda0).expect("evaluation point too large");
            [at(g[0]), at(g[1]), at(g[2]), at(g[3])]
        })
        .collect();
    let mats: Vec<&GenMat> = subst.iter().collect();
    let (mut re, om) = trace_of_product_exact(&mats, 1);
    assert!(om.iter().all(Zero::is_zero), "trace of {w} at {lambda0} has nonzero ω-part");
    re.pop().unwrap_or_default()
}
