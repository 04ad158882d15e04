//! Exhaustive search for words whose trace polynomial is a target form.

mod audit;
mod checkpoint;
mod compositions;
mod crude;
mod engine;
mod kernel;
pub mod modp;
mod oracle;
mod shape;

pub use audit::{audit_filters, AuditReport};
pub use checkpoint::{sidecar_path, Checkpoint};
pub use compositions::{binomial, composition_count, compositions, enumerate_pairlists, pairlist_count};
pub use crude::{crude_key, is_crude_fixed};
pub use engine::{
    class_count, lift_all, lift_result, run_all, run_case, run_forms, searched_forms, ClassRecord, Progress, ProgressFn,
    SearchOptions, SearchResult, Stats,
};
pub use oracle::{brute_force_oracle, OracleClass};
pub use shape::ShapeRule;
