//! Small-cancellation certificates for relators W², following the piece
//! definition: a subword V of U is a piece when it has two occurrences in
//! U^{±1} with different completions.

mod certificate;
mod checker;
mod pieces;
mod power;
mod subdivision;

pub use certificate::{certificate_for_cuts, certify, choose_ab, required_n, Generators, ScCase, ScCertificate};
pub use checker::check_certificate;
pub use pieces::{completions, is_non_piece, is_piece, min_non_piece_lengths, occurrences, Direction, Occurrence, Relator};
pub use power::{is_cyclic_conjugate_pm, is_subword_of_power};
pub use subdivision::{all_subdivisions, find_subdivision, segment_lengths, segments, Cuts};
