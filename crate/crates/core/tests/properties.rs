//! Randomized properties of trace polynomials, pieces and certificates.

mod suites;

#[test]
fn trace_is_constant_on_orbits_232() {
    suites::trace_is_constant_on_orbits_232().unwrap();
}

#[test]
fn trace_on_orbits_332_is_tau_or_its_reflection() {
    suites::trace_on_orbits_332_is_tau_or_its_reflection().unwrap();
}

#[test]
fn push_commutes_with_transfer() {
    suites::push_commutes_with_transfer().unwrap();
}

#[test]
fn trace_is_monic_of_degree_k_with_parity() {
    suites::trace_is_monic_of_degree_k_with_parity().unwrap();
}

#[test]
fn trace_332_is_bounded_on_the_interval() {
    suites::trace_332_is_bounded_on_the_interval().unwrap();
}

#[test]
fn second_coefficient_matches() {
    suites::second_coefficient_matches().unwrap();
}

#[test]
fn piece_detector_matches_naive_oracle() {
    suites::piece_detector_matches_naive_oracle().unwrap();
}

#[test]
fn certificates_revalidate_332() {
    suites::certificates_revalidate_332().unwrap();
}

#[test]
fn certificates_revalidate_232() {
    suites::certificates_revalidate_232().unwrap();
}
