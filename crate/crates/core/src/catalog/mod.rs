//! The tables of words whose trace polynomial is a target form, with the
//! known status of each group, and classification of arbitrary words
//! against them.
//!
//! Group orders, largeness and abelian-by-finite statuses are recorded
//! citations; only the trace polynomials and small-cancellation outcomes are
//! recomputed here.

mod data;
mod verify;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{match_target, trace_polynomial, IntPoly, TargetForm};
use crate::sc::Cuts;
use crate::word::{canonicalize, parse_reduced, parse_word, word_of_pairlist, CanonicalKey, FactorSpec, PairList, Word};

pub use verify::{verify_tables, ListingCheck, EntryCheck, VerifyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Status {
    /// the group is finite of this order (cited)
    Finite { order: u64 },
    /// the group is large (cited or from a recorded coset computation)
    Large,
    AbelianByFinite,
    /// a non-abelian free subgroup is known from the literature
    FreeSubgroupCited,
    /// a non-abelian free subgroup follows from a small-cancellation certificate
    FreeViaSC,
    Open,
}

impl Status {
    /// True when the status is taken from outside sources rather than computed.
    pub fn is_cited(&self) -> bool {
        !matches!(self, Status::FreeViaSC | Status::Open)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Finite { order } => write!(f, "finite of order {order}"),
            Status::Large => f.write_str("large"),
            Status::AbelianByFinite => f.write_str("abelian-by-finite"),
            Status::FreeSubgroupCited => f.write_str("contains a non-abelian free subgroup (cited)"),
            Status::FreeViaSC => f.write_str("contains a non-abelian free subgroup (small cancellation)"),
            Status::Open => f.write_str("open"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// row label, e.g. `"9b"`
    pub id: String,
    pub case: FactorSpec,
    pub word: Word,
    /// the table text, brackets included
    pub text: String,
    /// the literal printed string when it differs from the stored word
    pub printed_as: Option<String>,
    /// the printed bracketing as cut positions in `word`
    pub subdivision: Option<Cuts>,
    /// form recomputed from the word
    pub tau: TargetForm,
    /// form of the printed trace polynomial, when the row shows one
    pub printed_tau: Option<TargetForm>,
    /// Table part (1, 2 or 3) for the (2,3) case
    pub part: Option<u8>,
    /// the small-cancellation column of the (3,3) table
    pub scc: Option<bool>,
    pub status: Status,
    pub source: String,
}

impl CatalogEntry {
    pub fn key(&self) -> CanonicalKey {
        canonicalize(&self.word)
    }
}

/// Splits `(A)(B)(C)` into the word `ABC` and the cuts `[0, |A|, |A|+|B|]`.
pub fn parse_bracketed(text: &str, spec: FactorSpec) -> Result<(Word, Option<Cuts>)> {
    let inner = text.strip_prefix('(').and_then(|t| t.strip_suffix(')'));
    let groups: Option<Vec<&str>> = inner.map(|t| t.split(")(").collect());
    match groups {
        Some(g) if g.len() == 3 && !g.iter().any(|s| s.contains(['(', ')'])) => {
            let lens: Vec<usize> = g.iter().map(|s| parse_reduced(s, spec).map(|w| w.len())).collect::<Result<_>>()?;
            let word = parse_word(&g.concat(), spec)?;
            Ok((word, Some([0, lens[0], lens[0] + lens[1]])))
        }
        _ => Ok((parse_word(text, spec)?, None)),
    }
}

fn build(spec: FactorSpec, rows: Vec<data::Row>) -> Vec<CatalogEntry> {
    rows.into_iter()
        .map(|r| {
            let (word, subdivision) = parse_bracketed(r.text, spec).expect("embedded table word parses");
            let tau = match_target(&trace_polynomial(&word), spec)
                .unwrap_or_else(|| panic!("table word {} has no target form", r.id));
            CatalogEntry {
                id: r.id.to_string(),
                case: spec,
                word,
                text: r.text.to_string(),
                printed_as: r.printed_as.map(str::to_string),
                subdivision,
                tau,
                printed_tau: r.tau.map(|(a, b, c)| TargetForm { case: spec, a, b, c }),
                part: r.part,
                scc: r.scc,
                status: r.status,
                source: r.source.to_string(),
            }
        })
        .collect()
}

/// All table rows of one case, in table order.
pub fn catalog(case: FactorSpec) -> &'static [CatalogEntry] {
    static T332: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    static T232: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    match case {
        FactorSpec::ThreeThree => T332.get_or_init(|| build(case, data::table_332())),
        FactorSpec::TwoThree => T232.get_or_init(|| build(case, data::table_232())),
    }
}

pub fn lookup(key: &CanonicalKey) -> Option<&'static CatalogEntry> {
    catalog(key.word().spec()).iter().find(|e| e.key() == *key)
}

/// One published search listing: the words found for a single form of the (2,3) case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchListing {
    /// listing function, e.g. `"A4S4A5Poly"`
    pub name: &'static str,
    pub form: TargetForm,
    pub lists: Vec<PairList>,
}

impl SearchListing {
    pub fn words(&self) -> Vec<Word> {
        self.lists.iter().map(|l| word_of_pairlist(l, FactorSpec::TwoThree)).collect()
    }
}

pub fn search_listings() -> Vec<SearchListing> {
    data::listing_data()
        .into_iter()
        .map(|(name, (a, b, c), lists)| SearchListing {
            name,
            form: TargetForm { case: FactorSpec::TwoThree, a, b, c },
            lists: lists.into_iter().map(|l| PairList::new(l).expect("embedded pair list")).collect(),
        })
        .collect()
}

/// What is known about the group `<x,y | x^p, y^q, W^2>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Classification {
    /// τ is not a target form, so the group has a non-abelian free subgroup
    FreeSubgroupByTrace { tau: IntPoly },
    /// τ is a target form and the word is a table entry
    Catalog { id: String, form: TargetForm, status: Status, source: String, cited: bool },
    /// τ is a target form but no table entry matches; cannot happen if the
    /// tables are complete
    Anomaly { form: TargetForm },
    /// the word lies outside the scope of the trace criterion
    OutOfScope { reason: String },
}

pub fn classify_word(w: &Word) -> Classification {
    if w.spec() == FactorSpec::TwoThree && w.pair_length() % 2 == 1 {
        return Classification::OutOfScope { reason: "Z2*Z3 words of odd length are not covered".into() };
    }
    let tau = trace_polynomial(w);
    let Some(form) = match_target(&tau, w.spec()) else {
        return Classification::FreeSubgroupByTrace { tau };
    };
    if form.degree() == 0 {
        return Classification::OutOfScope { reason: "constant trace polynomial".into() };
    }
    match lookup(&canonicalize(w)) {
        Some(e) => Classification::Catalog {
            id: e.id.clone(),
            form,
            status: e.status,
            source: e.source.clone(),
            cited: e.status.is_cited(),
        },
        None => Classification::Anomaly { form },
    }
}
