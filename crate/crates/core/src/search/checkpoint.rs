//! Resumable progress for long searches.
//!
//! The checkpoint file holds one line, `form=a,b,c idx=N`: every work unit
//! with index below N is complete. The sidecar `PATH.found` records the
//! counters and surviving pair lists of those units.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::kernel::UnitCounts;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Checkpoint {
    pub form: (u8, u8, u8),
    pub idx: usize,
    /// filter counters of the completed units: crude, perm, modular eval
    pub counts: [u64; 3],
    pub lists: Vec<Vec<u32>>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Checkpoint(msg.into())
}

fn parse_form(text: &str) -> Result<(u8, u8, u8)> {
    let v: Vec<u8> = text.split(',').map(|t| t.trim().parse().map_err(|_| bad(format!("bad form {text}")))).collect::<Result<_>>()?;
    match v[..] {
        [a, b, c] => Ok((a, b, c)),
        _ => Err(bad(format!("bad form {text}"))),
    }
}

fn parse_ints<T: std::str::FromStr>(text: &str) -> Result<Vec<T>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| t.trim().parse().map_err(|_| bad(format!("bad number list {text}")))).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".found");
    PathBuf::from(s)
}

fn write_atomic(path: &Path, content: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(content.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

impl Checkpoint {
    pub fn line(&self) -> String {
        let (a, b, c) = self.form;
        format!("form={a},{b},{c} idx={}", self.idx)
    }

    pub fn parse_line(line: &str) -> Result<(u8, u8, u8, usize)> {
        let mut form = None;
        let mut idx = None;
        for tok in line.split_whitespace() {
            match tok.split_once('=') {
                Some(("form", v)) => form = Some(parse_form(v)?),
                Some(("idx", v)) => idx = Some(v.parse::<usize>().map_err(|_| bad(format!("bad index {v}")))?),
                _ => return Err(bad(format!("unexpected token {tok}"))),
            }
        }
        match (form, idx) {
            (Some((a, b, c)), Some(i)) => Ok((a, b, c, i)),
            _ => Err(bad("checkpoint needs form= and idx=")),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let (a, b, c) = self.form;
        let mut side = format!("form={a},{b},{c} stats={}\n", join(&self.counts));
        for l in &self.lists {
            side.push_str(&format!("form={a},{b},{c} list={}\n", join(l)));
        }
        write_atomic(&sidecar_path(path), &side)?;
        write_atomic(path, &format!("{}\n", self.line()))
    }

    /// Reads a checkpoint and its sidecar; `Ok(None)` if the file is absent.
    pub fn load(path: &Path) -> Result<Option<Checkpoint>> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let line = text.lines().next().ok_or_else(|| bad("empty checkpoint"))?;
        let (a, b, c, idx) = Checkpoint::parse_line(line)?;
        let mut cp = Checkpoint { form: (a, b, c), idx, ..Default::default() };
        let side = match fs::read_to_string(sidecar_path(path)) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound && idx == 0 => String::new(),
            Err(e) => return Err(e.into()),
        };
        for line in side.lines().filter(|l| !l.trim().is_empty()) {
            let (form_tok, rest) = line.split_once(' ').ok_or_else(|| bad(format!("bad sidecar line {line}")))?;
            if form_tok.strip_prefix("form=").map(parse_form).transpose()? != Some(cp.form) {
                return Err(bad(format!("sidecar line for another form: {line}")));
            }
            match rest.split_once('=') {
                Some(("stats", v)) => {
                    let n: Vec<u64> = parse_ints(v)?;
                    cp.counts = n.try_into().map_err(|_| bad("stats needs three counters"))?;
                }
                Some(("list", v)) => cp.lists.push(parse_ints(v)?),
                _ => return Err(bad(format!("bad sidecar line {line}"))),
            }
        }
        Ok(Some(cp))
    }

    pub(crate) fn add_counts(&mut self, c: &UnitCounts) {
        self.counts[0] += c.crude;
        self.counts[1] += c.perm;
        self.counts[2] += c.modp;
    }
}
