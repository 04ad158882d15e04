//! Exact trace polynomials and the target forms they are compared against.

mod eis;
mod intpoly;
pub(crate) mod matrix;
mod target;
mod trace;

pub use eis::{EisPoly, Mat2};
pub use intpoly::IntPoly;
pub use target::{
    expand_target, match_target, second_coefficient, target_factors, target_forms, transfer_332_to_232, TargetForm,
};
pub(crate) use trace::generator;
pub use trace::{eval_trace_int, generator_matrix, trace_polynomial, verify_generators};
