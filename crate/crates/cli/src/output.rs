use std::io::Write;

use anyhow::Result;
use serde::{Deserialize, Serialize};

use crate::args::Format;

pub const SCHEMA_VERSION: &str = "1";

/// Envelope of every JSON document the tool writes.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub case: Option<String>,
    pub payload: serde_json::Value,
}

/// A command's result in all three renderings.
pub struct Report {
    pub doc: OutputDocument,
    pub text: String,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// a verification found a mismatch
    pub mismatch: bool,
}

impl Report {
    pub fn new(command: &str, case: Option<&str>, payload: impl Serialize) -> Result<Self> {
        Ok(Report {
            doc: OutputDocument {
                schema_version: SCHEMA_VERSION.to_string(),
                command: command.to_string(),
                case: case.map(str::to_string),
                payload: serde_json::to_value(payload)?,
            },
            text: String::new(),
            headers: Vec::new(),
            rows: Vec::new(),
            mismatch: false,
        })
    }

    pub fn text(mut self, text: String) -> Self {
        self.text = text;
        self
    }

    pub fn table(mut self, headers: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.headers = headers;
        self.rows = rows;
        self
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.doc)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.headers)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()?;
            }
            Format::Text => {
                out.write_all(self.text.as_bytes())?;
                if !self.text.ends_with('\n') {
                    writeln!(out)?;
                }
            }
        }
        Ok(())
    }
}

/// A polynomial as a bracketed, constant-first coefficient list.
pub fn coeff_list(p: &gtg_core::poly::IntPoly) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}
