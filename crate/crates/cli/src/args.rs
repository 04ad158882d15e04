use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "gtg", version, about = "Trace polynomials, word search and small-cancellation certificates for generalised triangle groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Factor orders: 332 for Z3*Z3 (letters x,y), 232 for Z2*Z3 (letters u,v).
    /// Inferred from the letters of a word argument when omitted.
    #[arg(long, global = true, value_enum)]
    pub case: Option<CaseArg>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for the search (default: all hardware threads).
    #[arg(long, global = true, env = "GTG_JOBS")]
    pub jobs: Option<usize>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Checkpoint file for long searches.
    #[arg(long, global = true)]
    pub checkpoint: Option<PathBuf>,
    /// Report search progress on stderr.
    #[arg(long, global = true)]
    pub progress: bool,
    /// Write exponent 2 as `^2` in text and CSV output.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseArg {
    #[value(name = "332")]
    T332,
    #[value(name = "232")]
    T232,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Trace polynomial of a word and its target form, if any.
    Trace { word: String },
    /// Canonical representative of the equivalence class of a word.
    Canon { word: String },
    /// Whether two words are equivalent.
    Equiv { first: String, second: String },
    /// What is known about the group defined by a word.
    Classify { word: String },
    /// Small-cancellation certificate for a word.
    ScCert(ScCertArgs),
    /// Exhaustive search for words with a target-form trace polynomial.
    Search(SearchArgs),
    /// Compare search results with the embedded tables.
    VerifyTables(VerifyArgs),
    /// Brute-force enumeration of all words up to a length.
    Oracle(OracleArgs),
    /// Print the embedded tables.
    Catalog,
}

#[derive(Args, Debug)]
pub struct ScCertArgs {
    /// The word; `(A)(B)(C)` bracketing may be given together with `--subdivision`.
    #[arg(required_unless_present = "verify")]
    pub word: Option<String>,
    /// Use the cuts `--subdivision=i1,i2,i3` instead of searching; without a value the
    /// bracketing of the word argument is used.
    #[arg(long, num_args = 0..=1, require_equals = true, default_missing_value = "brackets")]
    pub subdivision: Option<String>,
    /// List every valid subdivision.
    #[arg(long, conflicts_with = "subdivision")]
    pub all: bool,
    /// Re-check a certificate file (bare certificate or `sc-cert` JSON output).
    #[arg(long, conflicts_with_all = ["word", "subdivision", "all"])]
    pub verify: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Search every target form (the default when no form is given).
    #[arg(long, conflicts_with = "form")]
    pub all: bool,
    /// A single form `a,b,c`.
    #[arg(long)]
    pub form: Option<String>,
    /// Only forms with c at most this value.
    #[arg(long)]
    pub max_c: Option<u8>,
    /// Continue from the checkpoint file.
    #[arg(long, requires = "checkpoint")]
    pub resume: bool,
    /// Instead of searching, test the filters on this many random candidates
    /// per form.
    #[arg(long)]
    pub audit: Option<u64>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// JSON output of an earlier `search` run; the search is run when omitted.
    #[arg(long)]
    pub results: Option<PathBuf>,
    /// Only search forms with c at most this value (ignored with --results).
    #[arg(long, conflicts_with = "results")]
    pub max_c: Option<u8>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    /// Largest number of syllable pairs.
    #[arg(long, default_value_t = 8)]
    pub max_k: usize,
    /// Also run the search for the forms of degree at most max-k and compare.
    #[arg(long)]
    pub compare: bool,
}
