//! Acceptance checks, one line per criterion.
//!
//! Runs the complete Z2*Z3 search once (a few minutes on one core), derives
//! the Z3*Z3 results by lifting, and checks them against the embedded tables,
//! the published listing counts, the oracle and the property suites.

mod suites;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gtg_core::catalog::{catalog, classify_word, parse_bracketed, verify_tables, CatalogEntry, Classification, Status};
use gtg_core::poly::{expand_target, match_target, trace_polynomial, TargetForm};
use gtg_core::sc::{certificate_for_cuts, certify, ScCase};
use gtg_core::search::{
    brute_force_oracle, class_count, lift_all, run_forms, searched_forms, SearchOptions, SearchResult,
};
use gtg_core::word::{CanonicalKey, FactorSpec};

/// Largest pair length for the oracle comparison.
const ORACLE_K: usize = 12;
/// Time budgets, in seconds.
const FULL_232_BUDGET: u64 = 2 * 3600;
const FULL_332_BUDGET: u64 = 30 * 60;
const SUBSET_C7_BUDGET: u64 = 10 * 60;
const ORACLE_BUDGET: u64 = 2 * 60;

/// Known failures: the printed bracketing of row 19 of the (3,3) table has a first
/// segment that is a piece of W².
const KNOWN_BAD_BRACKETINGS: &[&str] = &["332 row 19"];

struct Line {
    n: u8,
    pass: bool,
}

fn report(lines: &mut Vec<Line>, n: u8, pass: bool, detail: impl Into<String>) {
    let detail = detail.into();
    println!("criterion {n}: {} | {detail}", if pass { "PASS" } else { "FAIL" });
    lines.push(Line { n, pass });
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

fn keys_by_form(results: &[SearchResult]) -> BTreeMap<CanonicalKey, &gtg_core::search::ClassRecord> {
    results.iter().flat_map(|r| r.classes.iter().map(|c| (c.key.clone(), c))).collect()
}

/// Row-for-row agreement of a table with the search results.
fn table_matches(case: FactorSpec, results: &[SearchResult]) -> (bool, String) {
    let found = keys_by_form(results);
    let mut bad = Vec::new();
    for e in catalog(case) {
        let Some(c) = found.get(&e.key()) else {
            bad.push(format!("{} missing", e.id));
            continue;
        };
        // the class polynomial is exactly a target form, and the stored row
        // and its printed polynomial agree with it up to the a/b exchange
        let form = match_target(&c.tau, case);
        let swap = |f: TargetForm| TargetForm { a: f.b, b: f.a, ..f };
        let same = |f: TargetForm| Some(f) == form || (case == FactorSpec::ThreeThree && Some(swap(f)) == form);
        if form.map(|f| expand_target(&f)) != Some(c.tau.clone()) || trace_polynomial(&c.word) != c.tau {
            bad.push(format!("{} class polynomial", e.id));
        }
        if !same(e.tau) || e.printed_tau.is_some_and(|p| !same(p)) {
            bad.push(format!("{} polynomial {}", e.id, e.tau));
        }
    }
    let n = catalog(case).len();
    let ok = bad.is_empty() && class_count(results) == n;
    (ok, format!("{} classes found, {} rows, mismatches {:?}", class_count(results), n, bad))
}

fn printed_bracketing(e: &CatalogEntry) -> Option<String> {
    let text = e.printed_as.as_deref().filter(|p| p.starts_with('(')).unwrap_or(&e.text);
    let (w, cuts) = parse_bracketed(text, e.case).ok()?;
    let cuts = cuts?;
    Some(match certificate_for_cuts(&w, cuts, ScCase::of_spec(e.case)) {
        Ok(_) => String::new(),
        Err(err) => err.to_string(),
    })
}

fn main() -> ExitCode {
    let mut lines = Vec::new();
    let opts = SearchOptions::default();

    // one search per Z2*Z3 form, timed individually
    let mut res232 = Vec::new();
    let mut times: BTreeMap<TargetForm, Duration> = BTreeMap::new();
    for f in searched_forms(FactorSpec::TwoThree, None) {
        let t = Instant::now();
        res232.extend(run_forms(&[f], &opts).expect("search runs"));
        times.insert(f, t.elapsed());
    }
    let total232: Duration = times.values().sum();
    let t = Instant::now();
    let res332 = lift_all(&res232);
    let lift_time = t.elapsed();
    let subset_c7: Duration = times.iter().filter(|(f, _)| f.c <= 7).map(|(_, d)| *d).sum();

    // 1: the (3,3) table
    let (ok1, detail1) = table_matches(FactorSpec::ThreeThree, &res332);
    let v332 = verify_tables(FactorSpec::ThreeThree, &res332);
    let time332 = total232 + lift_time;
    let pass1 = ok1 && v332.ok() && v332.matched == 19 && time332.as_secs() <= FULL_332_BUDGET;
    report(
        &mut lines,
        1,
        pass1,
        format!("{}; {detail1}; runtime {} (budget {FULL_332_BUDGET}s)", v332.summary(), secs(time332)),
    );

    // 2: the (2,3) table with its parts
    let (ok2, detail2) = table_matches(FactorSpec::TwoThree, &res232);
    let v232 = verify_tables(FactorSpec::TwoThree, &res232);
    let t2 = catalog(FactorSpec::TwoThree);
    let parts: Vec<usize> = (1..=3).map(|p| t2.iter().filter(|e| e.part == Some(p)).count()).collect();
    let sc = ScCase::C23;
    let part2_cert = t2.iter().filter(|e| e.part == Some(2)).all(|e| certify(&e.word, sc).unwrap().is_some());
    let part3_free = t2.iter().filter(|e| e.part == Some(3)).all(|e| certify(&e.word, sc).unwrap().is_none());
    let pass2 = ok2
        && v232.ok()
        && v232.matched == 26
        && parts == [9, 11, 6]
        && part2_cert
        && part3_free
        && total232.as_secs() <= FULL_232_BUDGET
        && subset_c7.as_secs() <= SUBSET_C7_BUDGET;
    report(
        &mut lines,
        2,
        pass2,
        format!(
            "{}; parts {parts:?}; part 2 certified {part2_cert}; part 3 without certificate {part3_free}; {detail2}; \
             runtime {} (budget {FULL_232_BUDGET}s), c <= 7 subset {} (budget {SUBSET_C7_BUDGET}s)",
            v232.summary(),
            secs(total232),
            secs(subset_c7)
        ),
    );

    // 3: per-form counts of the search listings
    let expected: [(&str, u8, u8, &[usize]); 4] = [
        ("A5Poly", 0, 0, &[1, 1, 1]),
        ("A4A5Poly", 1, 0, &[1, 1, 1, 1, 1, 0]),
        ("S4A5Poly", 0, 1, &[1, 1, 1, 1, 1, 0]),
        ("A4S4A5Poly", 1, 1, &[1, 0, 3, 2, 0, 4, 0, 0, 0]),
    ];
    let mut ok3 = v232.listings.iter().all(|a| a.ok()) && v232.listings.len() == 24;
    let mut counts = Vec::new();
    for (name, a, b, want) in expected {
        let got: Vec<usize> = (1..=want.len() as u8)
            .map(|c| {
                let f = TargetForm { case: FactorSpec::TwoThree, a, b, c };
                res232.iter().find(|r| r.form == f).map_or(usize::MAX, |r| r.classes.len())
            })
            .collect();
        ok3 &= got == want;
        counts.push(format!("{name} {got:?}"));
    }
    report(
        &mut lines,
        3,
        ok3,
        format!(
            "{}; listings equivalent to found classes: {}",
            counts.join(", "),
            v232.listings.iter().all(|a| a.lists_match)
        ),
    );

    // 4: certificates and printed bracketings
    let t1 = catalog(FactorSpec::ThreeThree);
    let mut wrong = Vec::new();
    for (i, e) in t1.iter().enumerate() {
        let has = certify(&e.word, ScCase::C33).unwrap().is_some();
        if has != (i >= 8) {
            wrong.push(format!("332 row {} certify {has}", e.id));
        }
    }
    let mut bad_brackets = Vec::new();
    let mut checked = 0;
    for e in t1.iter().chain(t2) {
        if let Some(err) = printed_bracketing(e) {
            checked += 1;
            if !err.is_empty() {
                bad_brackets.push(format!("{} row {}", e.case.label(), e.id));
                println!("  bracketing of {} row {}: {err}", e.case.label(), e.id);
            }
        }
    }
    let certify_ok = wrong.is_empty() && part2_cert && part3_free;
    let pass4 = certify_ok && bad_brackets.is_empty();
    report(
        &mut lines,
        4,
        pass4,
        format!(
            "certify outcomes as tabulated: {certify_ok} {wrong:?}; printed bracketings checked {checked}, invalid {bad_brackets:?}"
        ),
    );

    // 5: oracle against the pipeline
    let mut oracle_ok = true;
    let mut oracle_detail = Vec::new();
    let mut oracle_time = Duration::ZERO;
    for case in [FactorSpec::ThreeThree, FactorSpec::TwoThree] {
        let t = Instant::now();
        let oracle: BTreeSet<_> =
            brute_force_oracle(case, ORACLE_K).into_iter().map(|c| (c.key, c.form, c.tau.to_string())).collect();
        let forms: Vec<TargetForm> =
            searched_forms(case, None).into_iter().filter(|f| f.degree() <= ORACLE_K).collect();
        let results = run_forms(&forms, &opts).expect("search runs");
        oracle_time += t.elapsed();
        let piped: BTreeSet<_> = results
            .iter()
            .flat_map(|r| r.classes.iter().map(move |c| (c.key.clone(), r.form, c.tau.to_string())))
            .collect();
        oracle_ok &= oracle == piped;
        oracle_detail.push(format!("{}: oracle {} pipeline {}", case.label(), oracle.len(), piped.len()));
    }
    let pass5 = oracle_ok && oracle_time.as_secs() <= ORACLE_BUDGET;
    report(
        &mut lines,
        5,
        pass5,
        format!(
            "k <= {ORACLE_K}, {}; runtime {} (budget {ORACLE_BUDGET}s)",
            oracle_detail.join(", "),
            secs(oracle_time)
        ),
    );

    // 6: property suites
    let mut failed = Vec::new();
    let all = suites::all();
    for (name, run) in &all {
        if let Err(e) = run() {
            println!("  suite {name} failed: {e}");
            failed.push(*name);
        }
    }
    report(
        &mut lines,
        6,
        failed.is_empty(),
        format!("{} suites of {} cases, failed {failed:?}", all.len(), suites::CASES),
    );

    // 7: cited statuses are reported with their source and not verified
    let mut issues = Vec::new();
    let mut cited = 0;
    for (e, report) in t1.iter().map(|e| (e, &v332)).chain(t2.iter().map(|e| (e, &v232))) {
        if !e.status.is_cited() {
            continue;
        }
        cited += 1;
        match classify_word(&e.word) {
            Classification::Catalog { status, source, cited: true, .. } if status == e.status && source == e.source => {
            }
            other => issues.push(format!("{} row {} classified as {other:?}", e.case.label(), e.id)),
        }
        if !report.not_verified.iter().any(|n| n.starts_with(&format!("{}: ", e.id))) {
            issues.push(format!("{} row {} not disclosed", e.case.label(), e.id));
        }
    }
    let orders = |case| -> Vec<u64> {
        catalog(case)
            .iter()
            .filter_map(|e| match e.status {
                Status::Finite { order } => Some(order),
                _ => None,
            })
            .collect()
    };
    let orders_ok = orders(FactorSpec::ThreeThree) == [12, 180, 288]
        && orders(FactorSpec::TwoThree) == [24, 24, 120, 576, 2880, 424673280];
    report(
        &mut lines,
        7,
        issues.is_empty() && orders_ok,
        format!(
            "{cited} cited statuses disclosed with sources; finite orders as tabulated {orders_ok}; issues {issues:?}"
        ),
    );

    // Criterion 4 fails only through the known misprinted bracketing; any
    // other failure fails this target.
    let unexpected: Vec<u8> = lines
        .iter()
        .filter(|l| !l.pass)
        .filter(|l| !(l.n == 4 && certify_ok && bad_brackets == KNOWN_BAD_BRACKETINGS))
        .map(|l| l.n)
        .collect();
    let known: Vec<u8> = lines.iter().filter(|l| !l.pass && !unexpected.contains(&l.n)).map(|l| l.n).collect();
    println!(
        "acceptance: {}/{} criteria pass; known deviations {known:?}; unexpected failures {unexpected:?}",
        lines.iter().filter(|l| l.pass).count(),
        lines.len()
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
