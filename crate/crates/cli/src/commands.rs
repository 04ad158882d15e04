use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, Context, Result};
use gtg_core::catalog::{catalog, classify_word, parse_bracketed, verify_tables, Classification};
use gtg_core::poly::{match_target, trace_polynomial, IntPoly, TargetForm};
use gtg_core::sc::{all_subdivisions, certificate_for_cuts, certify, check_certificate, segments, Cuts, ScCase, ScCertificate};
use gtg_core::search::{audit_filters, brute_force_oracle, class_count, run_forms, searched_forms, SearchOptions, SearchResult};
use gtg_core::word::{are_equivalent, canonicalize, infer_spec, parse_word, CanonicalKey, FactorSpec, Word};
use serde::Serialize;

use crate::args::{CaseArg, Command, Global, OracleArgs, ScCertArgs, SearchArgs, VerifyArgs};
use crate::output::{coeff_list, OutputDocument, Report};

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(msg.into())
}

pub fn run(cmd: &Command, g: &Global) -> Result<Report> {
    match cmd {
        Command::Trace { word } => trace(word, g),
        Command::Canon { word } => canon(word, g),
        Command::Equiv { first, second } => equiv(first, second, g),
        Command::Classify { word } => classify(word, g),
        Command::ScCert(a) => sc_cert(a, g),
        Command::Search(a) => search(a, g),
        Command::VerifyTables(a) => verify(a, g),
        Command::Oracle(a) => oracle(a, g),
        Command::Catalog => catalog_cmd(g),
    }
}

fn spec_of(c: CaseArg) -> FactorSpec {
    match c {
        CaseArg::T332 => FactorSpec::ThreeThree,
        CaseArg::T232 => FactorSpec::TwoThree,
    }
}

fn case_or_infer(g: &Global, text: &str) -> Result<FactorSpec> {
    match g.case {
        Some(c) => Ok(spec_of(c)),
        None => infer_spec(text).map_err(|e| usage(format!("cannot infer the case of {text:?}: {e}"))),
    }
}

fn required_case(g: &Global) -> Result<FactorSpec> {
    g.case.map(spec_of).ok_or_else(|| usage("this command needs --case 332|232"))
}

fn word_arg(g: &Global, text: &str) -> Result<Word> {
    let spec = case_or_infer(g, text)?;
    parse_word(text, spec).map_err(|e| usage(format!("invalid word {text:?}: {e}")))
}

fn show(w: &Word, g: &Global) -> String {
    if g.pretty {
        w.pretty()
    } else {
        w.to_string()
    }
}

#[derive(Serialize)]
struct PolyOut {
    coefficients: IntPoly,
    text: String,
    form: Option<TargetForm>,
    factored: Option<String>,
}

fn poly_out(p: IntPoly, case: FactorSpec) -> PolyOut {
    let form = match_target(&p, case);
    PolyOut { text: p.to_string(), factored: form.map(|f| f.factored()), form, coefficients: p }
}

fn trace(text: &str, g: &Global) -> Result<Report> {
    let w = word_arg(g, text)?;
    let case = w.spec();
    let p = poly_out(trace_polynomial(&w), case);
    let form = p.form.map_or("none".to_string(), |f| f.to_string());
    let mut text = format!("word: {}\ntau: {}\nform: {form}\n", show(&w, g), p.text);
    if let Some(f) = &p.factored {
        writeln!(text, "factored: {f}")?;
    }
    let row = vec![show(&w, g), coeff_list(&p.coefficients), p.text.clone(), form];
    #[derive(Serialize)]
    struct Out {
        word: Word,
        tau: PolyOut,
    }
    Ok(Report::new("trace", Some(case.label()), Out { word: w, tau: p })?
        .text(text)
        .table(vec!["word", "coefficients", "tau", "form"], vec![row]))
}

fn canon(text: &str, g: &Global) -> Result<Report> {
    let w = word_arg(g, text)?;
    let key = canonicalize(&w);
    #[derive(Serialize)]
    struct Out<'a> {
        word: &'a Word,
        canonical: &'a CanonicalKey,
    }
    let out = Out { word: &w, canonical: &key };
    Ok(Report::new("canon", Some(w.spec().label()), &out)?
        .text(show(key.word(), g))
        .table(vec!["word", "canonical"], vec![vec![show(&w, g), show(key.word(), g)]]))
}

fn equiv(first: &str, second: &str, g: &Global) -> Result<Report> {
    let a = word_arg(g, first)?;
    let b = word_arg(g, second)?;
    if a.spec() != b.spec() {
        return Err(usage("the two words belong to different cases"));
    }
    let eq = are_equivalent(&a, &b);
    #[derive(Serialize)]
    struct Out {
        first: Word,
        second: Word,
        equivalent: bool,
    }
    let row = vec![show(&a, g), show(&b, g), eq.to_string()];
    Ok(Report::new("equiv", Some(a.spec().label()), Out { first: a, second: b, equivalent: eq })?
        .text(if eq { "equivalent" } else { "not equivalent" }.to_string())
        .table(vec!["first", "second", "equivalent"], vec![row]))
}

fn classify(text: &str, g: &Global) -> Result<Report> {
    let w = word_arg(g, text)?;
    let c = classify_word(&w);
    let (kind, detail) = match &c {
        Classification::FreeSubgroupByTrace { tau } => {
            ("free-subgroup-by-trace", format!("tau = {tau} is not a target form; the group contains a non-abelian free subgroup"))
        }
        Classification::Catalog { id, form, status, source, cited } => {
            let note = if *cited { format!(" [source: {source}]") } else { String::new() };
            ("catalog", format!("table row {id}, form {form}: {status}{note}"))
        }
        Classification::Anomaly { form } => ("anomaly", format!("form {form} but no table row matches")),
        Classification::OutOfScope { reason } => ("out-of-scope", reason.clone()),
    };
    #[derive(Serialize)]
    struct Out<'a> {
        word: &'a Word,
        classification: &'a Classification,
    }
    let row = vec![show(&w, g), kind.to_string(), detail.clone()];
    Ok(Report::new("classify", Some(w.spec().label()), Out { word: &w, classification: &c })?
        .text(detail)
        .table(vec!["word", "kind", "detail"], vec![row]))
}

fn parse_cuts(text: &str) -> Result<Cuts> {
    let v: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| usage(format!("bad cuts {text:?}; expected i1,i2,i3"))))
        .collect::<Result<_>>()?;
    v.try_into().map_err(|_| usage(format!("bad cuts {text:?}; expected i1,i2,i3")))
}

#[derive(Serialize)]
struct CertOut {
    ell: usize,
    certified: bool,
    certificate: Option<ScCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

fn cert_text(c: &ScCertificate, g: &Global) -> String {
    let segs: Vec<String> = c.segments.iter().map(|s| format!("({})", show(s, g))).collect();
    format!(
        "certified ({}, l = {})\nword: {}\ncuts: {:?}\nsegments: {}\nA = {}\nB = {}\nN = {}\nX = {}\nY = {}\n",
        c.case,
        c.case.ell(),
        show(&c.word, g),
        c.cuts,
        segs.concat(),
        c.a,
        c.b,
        c.n,
        c.generators.x,
        c.generators.y
    )
}

fn cert_row(c: &ScCertificate) -> Vec<String> {
    let cuts: Vec<String> = c.cuts.iter().map(|i| i.to_string()).collect();
    let segs: Vec<String> = c.segments.iter().map(|s| s.to_string()).collect();
    vec![c.word.to_string(), cuts.join(","), segs.join(" "), c.a.to_string(), c.b.to_string(), c.n.to_string()]
}

const CERT_HEADERS: [&str; 6] = ["word", "cuts", "segments", "A", "B", "N"];

fn cert_report(word: &Word, out: CertOut, g: &Global, mismatch: bool) -> Result<Report> {
    let (text, rows) = match &out.certificate {
        Some(c) => (cert_text(c, g), vec![cert_row(c)]),
        None => {
            let why = out.reason.clone().unwrap_or_else(|| "no subdivision into three non-pieces".into());
            (format!("not certified (l = {}): {why}\n", out.ell), vec![vec![word.to_string(), String::new(), String::new(), String::new(), String::new(), String::new()]])
        }
    };
    let mut r = Report::new("sc-cert", Some(word.spec().label()), out)?.text(text).table(CERT_HEADERS.to_vec(), rows);
    r.mismatch = mismatch;
    Ok(r)
}

fn sc_cert(a: &ScCertArgs, g: &Global) -> Result<Report> {
    if let Some(path) = &a.verify {
        return sc_verify(path, g);
    }
    let text = a.word.as_deref().expect("clap requires a word");
    let spec = case_or_infer(g, text)?;
    let case = ScCase::of_spec(spec);
    let ell = case.ell();
    if let Some(sub) = &a.subdivision {
        let (w, cuts) = if sub == "brackets" {
            let (w, cuts) = parse_bracketed(text, spec).map_err(|e| usage(format!("invalid word {text:?}: {e}")))?;
            (w, cuts.ok_or_else(|| usage("--subdivision without cuts needs a bracketed word (A)(B)(C)"))?)
        } else {
            (word_arg(g, text)?, parse_cuts(sub)?)
        };
        return match certificate_for_cuts(&w, cuts, case) {
            Ok(c) => cert_report(&w, CertOut { ell, certified: true, certificate: Some(c), reason: None }, g, false),
            Err(e) => cert_report(&w, CertOut { ell, certified: false, certificate: None, reason: Some(e.to_string()) }, g, true),
        };
    }
    let w = word_arg(g, text)?;
    if a.all {
        let subs = all_subdivisions(&w, ell)?;
        #[derive(Serialize)]
        struct Sub {
            cuts: Cuts,
            segments: Vec<Word>,
        }
        let list: Vec<Sub> = subs.iter().map(|&c| Sub { cuts: c, segments: segments(&w, c).to_vec() }).collect();
        let mut text = format!("{} subdivision(s) into non-pieces with segments of length >= {ell}\n", list.len());
        let mut rows = Vec::new();
        for s in &list {
            let segs: Vec<String> = s.segments.iter().map(|x| show(x, g)).collect();
            writeln!(text, "{:?} ({})", s.cuts, segs.join(")("))?;
            let cuts: Vec<String> = s.cuts.iter().map(|i| i.to_string()).collect();
            rows.push(vec![cuts.join(","), segs.join(" ")]);
        }
        #[derive(Serialize)]
        struct Out {
            word: Word,
            ell: usize,
            subdivisions: Vec<Sub>,
        }
        return Ok(Report::new("sc-cert", Some(spec.label()), Out { word: w, ell, subdivisions: list })?
            .text(text)
            .table(vec!["cuts", "segments"], rows));
    }
    let cert = certify(&w, case)?;
    cert_report(&w, CertOut { ell, certified: cert.is_some(), certificate: cert, reason: None }, g, false)
}

/// Reads a bare certificate or the JSON output of `sc-cert`.
fn read_certificate(path: &Path) -> Result<ScCertificate> {
    let data = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(|e| usage(format!("{e:#}")))?;
    let value: serde_json::Value = serde_json::from_str(&data).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let inner = match value.get("payload") {
        Some(p) => p.get("certificate").cloned().unwrap_or(serde_json::Value::Null),
        None => value,
    };
    if inner.is_null() {
        return Err(usage(format!("{} holds no certificate", path.display())));
    }
    serde_json::from_value(inner).map_err(|e| usage(format!("{}: not a certificate: {e}", path.display())))
}

fn sc_verify(path: &Path, g: &Global) -> Result<Report> {
    let cert = read_certificate(path)?;
    let result = check_certificate(&cert);
    #[derive(Serialize)]
    struct Out<'a> {
        valid: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        error: Option<String>,
        certificate: &'a ScCertificate,
    }
    let err = result.err().map(|e| e.to_string());
    let valid = err.is_none();
    let text = match &err {
        None => format!("valid certificate for {}\n", show(&cert.word, g)),
        Some(e) => format!("INVALID certificate for {}: {e}\n", show(&cert.word, g)),
    };
    let row = vec![cert.word.to_string(), valid.to_string(), err.clone().unwrap_or_default()];
    let mut r = Report::new("sc-cert", Some(cert.case.spec().label()), Out { valid, error: err, certificate: &cert })?
        .text(text)
        .table(vec!["word", "valid", "error"], vec![row]);
    r.mismatch = !valid;
    Ok(r)
}

fn search_options(g: &Global, resume: bool) -> SearchOptions {
    let progress: Option<gtg_core::search::ProgressFn> = if g.progress {
        Some(Arc::new(|p: &gtg_core::search::Progress| {
            eprintln!("form {} {}/{} candidates", p.form, p.done, p.total);
        }))
    } else {
        None
    };
    SearchOptions { jobs: g.jobs, checkpoint: g.checkpoint.clone(), resume, progress, progress_every: 0 }
}

fn selected_forms(case: FactorSpec, form: Option<&str>, max_c: Option<u8>) -> Result<Vec<TargetForm>> {
    match form {
        Some(f) => {
            let f = TargetForm::parse(case, f).map_err(|e| usage(e.to_string()))?;
            Ok(vec![f])
        }
        None => Ok(searched_forms(case, max_c)),
    }
}

fn results_rows(results: &[SearchResult]) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for r in results {
        for c in &r.classes {
            let pl = c.pairlist.as_ref().map_or(String::new(), |p| p.to_string());
            rows.push(vec![r.form.to_string(), c.key.to_string(), c.word.to_string(), pl, coeff_list(&c.tau)]);
        }
    }
    rows
}

fn results_text(results: &[SearchResult], g: &Global) -> String {
    let mut t = String::new();
    for r in results {
        let s = &r.stats;
        let _ = writeln!(
            t,
            "form {}: {} class(es); enumerated {}, crude {}, perm {}, eval {}, exact {}",
            r.form,
            r.classes.len(),
            s.enumerated,
            s.after_crude,
            s.after_perm,
            s.after_eval,
            s.exact
        );
        for c in &r.classes {
            let _ = writeln!(t, "  {}", show(c.key.word(), g));
        }
    }
    let _ = writeln!(t, "total: {} class(es)", class_count(results));
    t
}

fn search(a: &SearchArgs, g: &Global) -> Result<Report> {
    let case = required_case(g)?;
    let forms = selected_forms(case, a.form.as_deref(), a.max_c)?;
    if let Some(n) = a.audit {
        let reports: Vec<_> = forms.iter().map(|&f| audit_filters(f, n, g.seed)).collect();
        let mut text = String::new();
        let mut rows = Vec::new();
        for r in &reports {
            writeln!(
                text,
                "form {}: {} samples, {} exact, {} passed the filters, {} exact rejected",
                r.form, r.samples, r.exact_matches, r.filter_passes, r.rejected_matches
            )?;
            rows.push(vec![
                r.form.to_string(),
                r.samples.to_string(),
                r.exact_matches.to_string(),
                r.filter_passes.to_string(),
                r.rejected_matches.to_string(),
            ]);
        }
        let bad = reports.iter().any(|r| r.rejected_matches > 0);
        let mut rep = Report::new("search", Some(case.label()), &reports)?
            .text(text)
            .table(vec!["form", "samples", "exact", "filter_passes", "rejected_exact"], rows);
        rep.mismatch = bad;
        return Ok(rep);
    }
    let results = run_forms(&forms, &search_options(g, a.resume))?;
    Ok(Report::new("search", Some(case.label()), &results)?
        .text(results_text(&results, g))
        .table(vec!["form", "canonical", "word", "pairlist", "tau"], results_rows(&results)))
}

fn read_results(path: &Path) -> Result<Vec<SearchResult>> {
    let data = std::fs::read_to_string(path).map_err(|e| usage(format!("reading {}: {e}", path.display())))?;
    let parsed = match serde_json::from_str::<OutputDocument>(&data) {
        Ok(doc) => serde_json::from_value(doc.payload),
        Err(_) => serde_json::from_str(&data),
    };
    parsed.map_err(|e| usage(format!("{}: not search results: {e}", path.display())))
}

fn verify(a: &VerifyArgs, g: &Global) -> Result<Report> {
    let case = required_case(g)?;
    let results = match &a.results {
        Some(p) => read_results(p)?,
        None => run_forms(&searched_forms(case, a.max_c), &search_options(g, false))?,
    };
    if let Some(r) = results.iter().find(|r| r.form.case != case) {
        return Err(usage(format!("results for form {} are not of case {}", r.form, case.label())));
    }
    let rep = verify_tables(case, &results);
    let mut text = format!("{}\n", rep.summary());
    for m in &rep.missing {
        writeln!(text, "missing: row {m}")?;
    }
    for e in &rep.extra {
        writeln!(text, "extra class: {}", show(e.word(), g))?;
    }
    for e in rep.entries.iter().filter(|e| !e.ok()) {
        writeln!(
            text,
            "row {} fails: found {}, tau matches {}, certificate {} (expected {:?})",
            e.id, e.found, e.tau_matches, e.certificate_found, e.certificate_expected
        )?;
    }
    for ap in &rep.listings {
        writeln!(text, "{}: {}/{} classes{}", ap.name, ap.found, ap.expected, if ap.ok() { "" } else { " MISMATCH" })?;
    }
    for b in &rep.invalid_bracketings {
        writeln!(text, "note: the printed bracketing of row {b} is not a valid subdivision")?;
    }
    for u in &rep.unexpected_certificates {
        writeln!(text, "note: open row {u} has a certificate")?;
    }
    if !rep.not_verified.is_empty() {
        writeln!(text, "not verified here (cited statuses):")?;
        for n in &rep.not_verified {
            writeln!(text, "  {n}")?;
        }
    }
    let rows = rep
        .entries
        .iter()
        .map(|e| {
            vec![
                e.id.clone(),
                e.found.to_string(),
                e.tau_matches.to_string(),
                e.certificate_found.to_string(),
                e.bracketing_valid.map_or(String::new(), |b| b.to_string()),
                e.ok().to_string(),
            ]
        })
        .collect();
    let mut r = Report::new("verify-tables", Some(case.label()), &rep)?
        .text(text)
        .table(vec!["id", "found", "tau_matches", "certificate_found", "bracketing_valid", "ok"], rows);
    r.mismatch = !rep.ok();
    Ok(r)
}

fn oracle(a: &OracleArgs, g: &Global) -> Result<Report> {
    let case = required_case(g)?;
    if a.max_k == 0 || a.max_k > 14 {
        return Err(usage("--max-k must be between 1 and 14"));
    }
    let classes = brute_force_oracle(case, a.max_k);
    let mut text = format!("{} class(es) with pair length <= {}\n", classes.len(), a.max_k);
    for c in &classes {
        writeln!(text, "{} {}", c.form, show(c.key.word(), g))?;
    }
    let rows = classes.iter().map(|c| vec![c.form.to_string(), c.key.to_string(), coeff_list(&c.tau)]).collect();
    let mut comparison = None;
    if a.compare {
        let forms: Vec<TargetForm> =
            searched_forms(case, None).into_iter().filter(|f| f.degree() <= a.max_k).collect();
        let results = run_forms(&forms, &search_options(g, false))?;
        let mut by_form: BTreeMap<TargetForm, BTreeSet<CanonicalKey>> = BTreeMap::new();
        for c in &classes {
            by_form.entry(c.form).or_default().insert(c.key.clone());
        }
        let mut mismatched = Vec::new();
        for r in &results {
            let found: BTreeSet<CanonicalKey> = r.classes.iter().map(|c| c.key.clone()).collect();
            if by_form.remove(&r.form).unwrap_or_default() != found {
                mismatched.push(r.form);
            }
        }
        // oracle forms the search did not cover
        mismatched.extend(by_form.into_keys());
        writeln!(
            text,
            "search agrees on {}/{} form(s)",
            forms.len() - mismatched.iter().filter(|f| forms.contains(f)).count(),
            forms.len()
        )?;
        for f in &mismatched {
            writeln!(text, "MISMATCH at form {f}")?;
        }
        comparison = Some(mismatched);
    }
    #[derive(Serialize)]
    struct Out<'a> {
        max_k: usize,
        classes: &'a [gtg_core::search::OracleClass],
        #[serde(skip_serializing_if = "Option::is_none")]
        mismatched_forms: Option<&'a Vec<TargetForm>>,
    }
    let out = Out { max_k: a.max_k, classes: &classes, mismatched_forms: comparison.as_ref() };
    let mut r = Report::new("oracle", Some(case.label()), &out)?.text(text).table(vec!["form", "canonical", "tau"], rows);
    r.mismatch = comparison.is_some_and(|m| !m.is_empty());
    Ok(r)
}

fn catalog_cmd(g: &Global) -> Result<Report> {
    let cases = match g.case {
        Some(c) => vec![spec_of(c)],
        None => vec![FactorSpec::ThreeThree, FactorSpec::TwoThree],
    };
    let entries: Vec<_> = cases.iter().flat_map(|&c| catalog(c).iter()).collect();
    let mut text = String::new();
    let mut rows = Vec::new();
    for e in &entries {
        let part = e.part.map_or(String::new(), |p| format!(" part {p}"));
        writeln!(text, "{} {:>3}{part} {} {}  {}", e.case.label(), e.id, e.tau, e.text, e.status)?;
        let cuts = e.subdivision.map_or(String::new(), |c| format!("{},{},{}", c[0], c[1], c[2]));
        rows.push(vec![
            e.case.label().to_string(),
            e.id.clone(),
            e.word.to_string(),
            e.text.clone(),
            e.printed_as.clone().unwrap_or_default(),
            cuts,
            e.tau.to_string(),
            e.part.map_or(String::new(), |p| p.to_string()),
            e.scc.map_or(String::new(), |s| s.to_string()),
            e.status.to_string(),
            e.source.clone(),
        ]);
    }
    let case = (cases.len() == 1).then(|| cases[0].label());
    Ok(Report::new("catalog", case, &entries)?.text(text).table(
        vec!["case", "id", "word", "text", "printed_as", "subdivision", "form", "part", "scc", "status", "source"],
        rows,
    ))
}
