//! Comparison of search results with the embedded tables.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{search_listings, catalog, parse_bracketed};
use crate::poly::{match_target, TargetForm};
use crate::sc::{certificate_for_cuts, certify, ScCase};
use crate::search::SearchResult;
use crate::word::{canonicalize, CanonicalKey, FactorSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryCheck {
    pub id: String,
    pub found: bool,
    /// the class found by the search has the entry's trace polynomial
    pub tau_matches: bool,
    /// what the table says about a certificate, when it says anything
    pub certificate_expected: Option<bool>,
    pub certificate_found: bool,
    /// the printed bracketing validates as a certificate; reported, not
    /// counted as a mismatch
    pub bracketing_valid: Option<bool>,
}

impl EntryCheck {
    pub fn ok(&self) -> bool {
        self.found
            && self.tau_matches
            && self.certificate_expected.is_none_or(|e| e == self.certificate_found)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListingCheck {
    pub name: String,
    pub form: TargetForm,
    pub expected: usize,
    pub found: usize,
    /// each printed pair list is equivalent to a distinct found class
    pub lists_match: bool,
}

impl ListingCheck {
    pub fn ok(&self) -> bool {
        self.expected == self.found && self.lists_match
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub case: FactorSpec,
    /// table rows whose form was among the searched forms
    pub expected: usize,
    pub found: usize,
    pub matched: usize,
    /// table rows with no matching class
    pub missing: Vec<String>,
    /// classes matching no table row
    pub extra: Vec<CanonicalKey>,
    pub entries: Vec<EntryCheck>,
    pub listings: Vec<ListingCheck>,
    /// open words for which a certificate was found after all; reported, not
    /// counted as a mismatch
    pub unexpected_certificates: Vec<String>,
    /// rows whose printed bracketing is not a valid subdivision
    pub invalid_bracketings: Vec<String>,
    /// statuses that rest on citations and are not checked here
    pub not_verified: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.missing.is_empty()
            && self.extra.is_empty()
            && self.entries.iter().all(EntryCheck::ok)
            && self.listings.iter().all(ListingCheck::ok)
    }

    pub fn summary(&self) -> String {
        format!("{}/{} classes matched", self.matched, self.expected)
    }
}

/// Checks the results of a search (all forms, or a subset) against the
/// table of the same case.
pub fn verify_tables(case: FactorSpec, results: &[SearchResult]) -> VerifyReport {
    let sc_case = ScCase::of_spec(case);
    let forms: BTreeSet<TargetForm> = results.iter().map(|r| r.form).collect();
    let mut found: BTreeMap<CanonicalKey, TargetForm> = BTreeMap::new();
    for r in results {
        for c in &r.classes {
            found.insert(c.key.clone(), match_target(&c.tau, case).unwrap_or(r.form));
        }
    }
    let mut report = VerifyReport {
        case,
        expected: 0,
        found: found.len(),
        matched: 0,
        missing: Vec::new(),
        extra: Vec::new(),
        entries: Vec::new(),
        listings: Vec::new(),
        unexpected_certificates: Vec::new(),
        invalid_bracketings: Vec::new(),
        not_verified: Vec::new(),
    };
    let mut claimed = BTreeSet::new();
    for e in catalog(case) {
        if e.status.is_cited() {
            report.not_verified.push(format!("{}: {} ({})", e.id, e.status, e.source));
        }
        if !forms.contains(&e.tau) {
            continue;
        }
        report.expected += 1;
        let key = e.key();
        let hit = found.get(&key);
        if hit.is_some() {
            report.matched += 1;
            claimed.insert(key);
        } else {
            report.missing.push(e.id.clone());
        }
        let certificate_found = certify(&e.word, sc_case).ok().flatten().is_some();
        let certificate_expected = match (case, e.part) {
            (FactorSpec::ThreeThree, _) => e.scc,
            (FactorSpec::TwoThree, Some(2)) => Some(true),
            _ => None,
        };
        if e.part == Some(3) && certificate_found {
            report.unexpected_certificates.push(e.id.clone());
        }
        // a printed bracketing is checked on the printed word, even when the
        // stored word differs from it
        let printed = e.printed_as.as_deref().and_then(|p| parse_bracketed(p, case).ok());
        let bracketing_valid = match printed {
            Some((w, Some(cuts))) => Some(certificate_for_cuts(&w, cuts, sc_case).is_ok()),
            _ => e.subdivision.map(|cuts| certificate_for_cuts(&e.word, cuts, sc_case).is_ok()),
        };
        if bracketing_valid == Some(false) {
            report.invalid_bracketings.push(e.id.clone());
        }
        report.entries.push(EntryCheck {
            id: e.id.clone(),
            found: hit.is_some(),
            tau_matches: hit == Some(&e.tau),
            certificate_expected,
            certificate_found,
            bracketing_valid,
        });
    }
    report.extra = found.keys().filter(|k| !claimed.contains(*k)).cloned().collect();
    if case == FactorSpec::TwoThree {
        for listing in search_listings() {
            let Some(res) = results.iter().find(|r| r.form == listing.form) else { continue };
            let keys: BTreeSet<CanonicalKey> = res.classes.iter().map(|c| c.key.clone()).collect();
            let printed: BTreeSet<CanonicalKey> = listing.words().iter().map(canonicalize).collect();
            report.listings.push(ListingCheck {
                name: format!("{}({})", listing.name, listing.form.c),
                form: listing.form,
                expected: listing.lists.len(),
                found: res.classes.len(),
                lists_match: printed.len() == listing.lists.len() && printed == keys,
            });
        }
    }
    report
}
