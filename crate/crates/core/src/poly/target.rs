//! The restricted factored forms a trace polynomial must take for the
//! group to escape the free-subgroup conclusion.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::error::{Error, Result};
use crate::word::{FactorSpec, PairList};

/// Exponents (a,b,c) of a target form.
///
/// For Z3*Z3: `λ^a (λ−1)^b (λ²−λ−1)^c`, degree a+b+2c.
/// For Z2*Z3: `(λ²−1)^a (λ²−2)^b (λ⁴−3λ²+1)^c`, degree 2a+2b+4c.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TargetForm {
    pub case: FactorSpec,
    pub a: u8,
    pub b: u8,
    pub c: u8,
}

impl TargetForm {
    pub fn new(case: FactorSpec, a: u8, b: u8, c: u8) -> Result<Self> {
        if a > 1 || b > 1 || c > 3 * (a + b + 1) {
            return Err(Error::BadTargetForm(format!("({a},{b},{c})")));
        }
        Ok(TargetForm { case, a, b, c })
    }

    /// Parses `a,b,c`.
    pub fn parse(case: FactorSpec, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let bad = || Error::BadTargetForm(text.to_string());
        if parts.len() != 3 {
            return Err(bad());
        }
        let n: Vec<u8> = parts.iter().map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?;
        TargetForm::new(case, n[0], n[1], n[2])
    }

    pub fn degree(&self) -> usize {
        let (a, b, c) = (self.a as usize, self.b as usize, self.c as usize);
        match self.case {
            FactorSpec::ThreeThree => a + b + 2 * c,
            FactorSpec::TwoThree => 2 * a + 2 * b + 4 * c,
        }
    }

    /// The form of the other case related by the substitution λ → 2 − λ².
    pub fn transferred(&self) -> TargetForm {
        let case = match self.case {
            FactorSpec::ThreeThree => FactorSpec::TwoThree,
            FactorSpec::TwoThree => FactorSpec::ThreeThree,
        };
        TargetForm { case, a: self.b, b: self.a, c: self.c }
    }

    /// Human-readable factored form, e.g. `l*(l^2-l-1)^3`.
    pub fn factored(&self) -> String {
        let names = factor_names(self.case);
        let mut parts = Vec::new();
        for (name, e) in names.iter().zip([self.a, self.b, self.c]) {
            let atom = name.len() == 1;
            match e {
                0 => {}
                1 if atom => parts.push(name.to_string()),
                1 => parts.push(format!("({name})")),
                _ if atom => parts.push(format!("{name}^{e}")),
                _ => parts.push(format!("({name})^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for TargetForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

fn factor_names(case: FactorSpec) -> [&'static str; 3] {
    match case {
        FactorSpec::ThreeThree => ["l", "l-1", "l^2-l-1"],
        FactorSpec::TwoThree => ["l^2-1", "l^2-2", "l^4-3*l^2+1"],
    }
}

/// The three irreducible factors of the case, in (a,b,c) order.
pub fn target_factors(case: FactorSpec) -> [IntPoly; 3] {
    match case {
        FactorSpec::ThreeThree => {
            [IntPoly::from_i64(&[0, 1]), IntPoly::from_i64(&[-1, 1]), IntPoly::from_i64(&[-1, -1, 1])]
        }
        FactorSpec::TwoThree => [
            IntPoly::from_i64(&[-1, 0, 1]),
            IntPoly::from_i64(&[-2, 0, 1]),
            IntPoly::from_i64(&[1, 0, -3, 0, 1]),
        ],
    }
}

pub fn expand_target(f: &TargetForm) -> IntPoly {
    let [fa, fb, fc] = target_factors(f.case);
    &(&fa.pow(f.a as u32) * &fb.pow(f.b as u32)) * &fc.pow(f.c as u32)
}

/// Recovers (a,b,c) by repeated exact division; `None` unless the
/// polynomial is exactly a target form within the bounds.
pub fn match_target(p: &IntPoly, case: FactorSpec) -> Option<TargetForm> {
    if !p.is_monic() {
        return None;
    }
    let mut rest = p.clone();
    let mut exps = [0u32; 3];
    for (factor, e) in target_factors(case).iter().zip(exps.iter_mut()) {
        loop {
            let (q, r) = rest.div_rem_monic(factor);
            if !r.is_zero() {
                break;
            }
            rest = q;
            *e += 1;
            if *e > 255 {
                return None;
            }
        }
    }
    if rest != IntPoly::one() {
        return None;
    }
    TargetForm::new(case, exps[0] as u8, exps[1] as u8, exps[2] as u8).ok()
}

/// `(−1)^k · p(2 − λ²)`: the trace polynomial of the pushed word.
pub fn transfer_332_to_232(p: &IntPoly, k: usize) -> IntPoly {
    let q = p.compose(&IntPoly::from_i64(&[2, 0, -1]));
    if k % 2 == 1 {
        -&q
    } else {
        q
    }
}

/// `−(k − m)`: the coefficient of λ^{k−2} in the trace polynomial of the
/// word with this pair list, m being the number of (β,γ) pairs.
pub fn second_coefficient(list: &PairList, k: usize) -> BigInt {
    BigInt::from(list.pairs() as i64 - k as i64)
}

/// All forms within the bounds except the constant one, ordered by (a,b,c).
pub fn target_forms(case: FactorSpec) -> Vec<TargetForm> {
    let mut out = Vec::new();
    for a in 0..=1u8 {
        for b in 0..=1u8 {
            for c in 0..=3 * (a + b + 1) {
                if (a, b, c) != (0, 0, 0) {
                    out.push(TargetForm { case, a, b, c });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const T2: FactorSpec = FactorSpec::TwoThree;
    const T3: FactorSpec = FactorSpec::ThreeThree;

    #[test]
    fn expansions() {
        // (λ²−2)(λ⁴−3λ²+1) = λ⁶ − 5λ⁴ + 7λ² − 2
        let p = expand_target(&TargetForm::new(T2, 0, 1, 1).unwrap());
        assert_eq!(p, &IntPoly::from_i64(&[-2, 0, 1]) * &IntPoly::from_i64(&[1, 0, -3, 0, 1]));
        assert_eq!(p, IntPoly::from_i64(&[-2, 0, 7, 0, -5, 0, 1]));
        assert_eq!(expand_target(&TargetForm::new(T3, 0, 0, 0).unwrap()), IntPoly::one());
        let f = TargetForm::new(T3, 1, 0, 3).unwrap();
        assert_eq!(f.factored(), "l*(l^2-l-1)^3");
        assert_eq!(expand_target(&f).degree(), Some(7));
    }

    #[test]
    fn matching() {
        let golden = IntPoly::from_i64(&[1, 0, -3, 0, 1]);
        assert_eq!(match_target(&golden, T2), Some(TargetForm::new(T2, 0, 0, 1).unwrap()));
        assert_eq!(match_target(&IntPoly::from_i64(&[0, 0, 0, 1]), T3), None);
        let g3 = IntPoly::from_i64(&[-1, -1, 1]).pow(3);
        assert_eq!(match_target(&g3, T3), Some(TargetForm::new(T3, 0, 0, 3).unwrap()));
        assert_eq!(match_target(&IntPoly::from_i64(&[-1, -1, 1]).pow(4), T3), None);
        assert_eq!(match_target(&IntPoly::from_i64(&[-1, 0, 1]), T3), None);
    }

    #[test]
    fn every_form_round_trips() {
        for case in [T2, T3] {
            for f in target_forms(case) {
                let p = expand_target(&f);
                assert_eq!(p.degree(), Some(f.degree()));
                assert_eq!(match_target(&p, case), Some(f));
            }
        }
    }

    #[test]
    fn form_list() {
        let forms = target_forms(T2);
        assert_eq!(forms.len(), 27);
        assert!(forms.iter().any(|f| (f.a, f.b, f.c) == (1, 1, 9) && f.degree() == 40));
        assert!(target_forms(T3).iter().any(|f| (f.a, f.b, f.c) == (1, 1, 9) && f.degree() == 20));
        assert!(!forms.iter().any(|f| (f.a, f.b, f.c) == (0, 0, 4)));
    }

    #[test]
    fn transfer_examples() {
        assert_eq!(transfer_332_to_232(&IntPoly::lambda(), 1), IntPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(transfer_332_to_232(&IntPoly::from_i64(&[-1, -1, 1]), 2), IntPoly::from_i64(&[1, 0, -3, 0, 1]));
        assert_eq!(transfer_332_to_232(&IntPoly::one(), 0), IntPoly::one());
        for f in target_forms(T3) {
            let moved = transfer_332_to_232(&expand_target(&f), f.degree());
            assert_eq!(match_target(&moved, T2), Some(f.transferred()));
        }
    }

    #[test]
    fn second_coefficients() {
        let l = |v: Vec<u32>| PairList::new(v).unwrap();
        assert_eq!(second_coefficient(&l(vec![3, 1]), 4), BigInt::from(-3));
        assert_eq!(second_coefficient(&l(vec![4, 2]), 6), BigInt::from(-5));
        assert_eq!(second_coefficient(&l(vec![1, 1]), 2), BigInt::from(-1));
    }
}
