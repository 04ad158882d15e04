//! Which pair-list shapes can carry a given Z2*Z3 target form.
//!
//! Writing b(j) for the pair-list entries, the λ^{k−2} coefficient of the
//! trace polynomial is −(k−m) (m pairs), so matching it against the target
//! pins the number of pairs; the next even coefficient involves
//! Σ b(j)b(j') over pairs of entries and pins how many entries equal 1. The
//! resulting rules are recorded here in closed form.

use serde::{Deserialize, Serialize};

use crate::poly::TargetForm;
use crate::word::FactorSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeRule {
    pub form: TargetForm,
    pub list_length: usize,
    pub ones_count: usize,
}

impl ShapeRule {
    /// The shape for a Z2*Z3 form, or `None` when the form has c = 0 or the
    /// rule gives no valid list (these go to the brute-force path).
    pub fn of(form: TargetForm) -> Option<ShapeRule> {
        if form.case != FactorSpec::TwoThree || form.c == 0 {
            return None;
        }
        let c = form.c as i64;
        let (len, ones) = match (form.a, form.b) {
            (1, 1) => (2 * c + 2, c),
            (1, 0) => (2 * c + 2, c + 1),
            (0, 1) => (2 * c, c - 1),
            _ => (2 * c, c),
        };
        if ones < 0 || len <= 0 || ones > len {
            return None;
        }
        Some(ShapeRule { form, list_length: len as usize, ones_count: ones as usize })
    }

    /// Sum of the entries, i.e. the length parameter k.
    pub fn total(&self) -> u32 {
        self.form.degree() as u32
    }

    /// Number of (β,γ) pairs m.
    pub fn pairs(&self) -> usize {
        self.list_length / 2
    }
}
