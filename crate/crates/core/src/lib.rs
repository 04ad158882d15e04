//! Trace polynomials, equivalence classes and small-cancellation certificates
//! for one-relator products of Z2*Z3 and Z3*Z3 with relator W(x,y)^2.

pub mod catalog;
pub mod error;
pub mod perm;
pub mod poly;
pub mod sc;
pub mod search;
pub mod word;

pub use error::{Error, Result};
