//! Text syntax for words:
//!
//! ```text
//! word  := term+
//! term  := atom | '(' word ')' pow?
//! atom  := letter digit? pow?
//! letter:= 'x' | 'y' | 'u' | 'v'
//! digit := '2'
//! pow   := '^' [1-9][0-9]*
//! ```
//!
//! `x`,`y` belong to Z3*Z3 and `u`,`v` to Z2*Z3. Whitespace is ignored.

use super::{Factor, FactorSpec, Syllable, Word};
use crate::error::{Error, ParseError, ParseErrorKind, Result};

const MAX_EXPANDED: usize = 1 << 22;

fn err(position: usize, token: impl Into<String>, kind: ParseErrorKind) -> Error {
    Error::Parse(ParseError { position, token: token.into(), kind })
}

fn letter_case(c: char) -> Option<(FactorSpec, Factor)> {
    match c {
        'x' => Some((FactorSpec::ThreeThree, Factor::First)),
        'y' => Some((FactorSpec::ThreeThree, Factor::Second)),
        'u' => Some((FactorSpec::TwoThree, Factor::First)),
        'v' => Some((FactorSpec::TwoThree, Factor::Second)),
        _ => None,
    }
}

/// Decides the factor spec from the letters used in `text`.
pub fn infer_spec(text: &str) -> Result<FactorSpec> {
    let mut found: Option<(FactorSpec, usize, char)> = None;
    for (pos, c) in text.char_indices() {
        if let Some((spec, _)) = letter_case(c) {
            match found {
                None => found = Some((spec, pos, c)),
                Some((s, _, _)) if s != spec => {
                    return Err(err(pos, c.to_string(), ParseErrorKind::MixedLetters))
                }
                _ => {}
            }
        }
    }
    found.map(|(s, _, _)| s).ok_or_else(|| err(text.len(), "", ParseErrorKind::TrivialWord))
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
    spec: FactorSpec,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.text.len(), |(o, _)| o)
    }

    fn word(&mut self, depth: usize) -> Result<Vec<(Factor, u64)>> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                None => break,
                Some((_, ')')) if depth > 0 => break,
                Some((o, ')')) => return Err(err(o, ")", ParseErrorKind::Unbalanced)),
                Some(_) => {
                    let term = self.term(depth)?;
                    if out.len() + term.len() > MAX_EXPANDED {
                        return Err(err(self.offset(), "", ParseErrorKind::TooLong));
                    }
                    out.extend(term);
                }
            }
        }
        if out.is_empty() {
            let o = self.offset();
            let token = self.peek().map(|(_, c)| c.to_string()).unwrap_or_default();
            let kind =
                if self.peek().is_none() { ParseErrorKind::UnexpectedEnd } else { ParseErrorKind::UnexpectedChar };
            return Err(err(o, token, kind));
        }
        Ok(out)
    }

    fn term(&mut self, depth: usize) -> Result<Vec<(Factor, u64)>> {
        let (o, c) = self.peek().expect("term called at end of input");
        if c == '(' {
            self.pos += 1;
            let inner = self.word(depth + 1)?;
            match self.peek() {
                Some((_, ')')) => self.pos += 1,
                Some((o2, c2)) => return Err(err(o2, c2.to_string(), ParseErrorKind::UnexpectedChar)),
                None => return Err(err(self.text.len(), "", ParseErrorKind::Unbalanced)),
            }
            let n = self.pow()?.unwrap_or(1) as usize;
            if inner.len().saturating_mul(n) > MAX_EXPANDED {
                return Err(err(o, "(", ParseErrorKind::TooLong));
            }
            let mut out = Vec::with_capacity(inner.len() * n);
            for _ in 0..n {
                out.extend_from_slice(&inner);
            }
            return Ok(out);
        }
        let Some((spec, factor)) = letter_case(c) else {
            return Err(err(o, c.to_string(), ParseErrorKind::UnexpectedChar));
        };
        if spec != self.spec {
            return Err(err(o, c.to_string(), ParseErrorKind::WrongLetter { expected: self.spec.label() }));
        }
        self.pos += 1;
        let mut exp: u64 = 1;
        if let Some((_, '2')) = self.peek() {
            self.pos += 1;
            exp = 2;
        }
        if let Some(n) = self.pow()? {
            exp *= n;
        }
        let order = self.spec.order(factor) as u64;
        if exp % order == 0 {
            let end = self.offset();
            return Err(err(o, &self.text[o..end], ParseErrorKind::VanishingSyllable));
        }
        Ok(vec![(factor, exp)])
    }

    fn pow(&mut self) -> Result<Option<u64>> {
        match self.peek() {
            Some((_, '^')) => self.pos += 1,
            _ => return Ok(None),
        }
        let start = self.offset();
        let mut digits = String::new();
        while let Some((_, d)) = self.peek().filter(|(_, d)| d.is_ascii_digit()) {
            digits.push(d);
            self.pos += 1;
        }
        if digits.is_empty() || digits.starts_with('0') {
            let token = self.peek().map(|(_, c)| c.to_string()).unwrap_or(digits);
            return Err(err(start, token, ParseErrorKind::BadExponent));
        }
        digits
            .parse::<u64>()
            .map(Some)
            .map_err(|_| err(start, digits.clone(), ParseErrorKind::BadExponent))
    }
}

fn check_letters(text: &str) -> Result<()> {
    let inferred = infer_spec(text);
    if let Err(Error::Parse(ParseError { kind: ParseErrorKind::MixedLetters, .. })) = inferred {
        return inferred.map(|_| ());
    }
    Ok(())
}

fn raw_syllables(text: &str, spec: FactorSpec) -> Result<Vec<(Factor, u64)>> {
    check_letters(text)?;
    let chars = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut parser = Parser { chars, pos: 0, text, spec };
    parser.word(0)
}

fn free_reduce(spec: FactorSpec, raw: &[(Factor, u64)]) -> Vec<Syllable> {
    let mut stack: Vec<Syllable> = Vec::with_capacity(raw.len());
    for &(factor, exp) in raw {
        let order = spec.order(factor) as u64;
        let e = (exp % order) as u8;
        if e == 0 {
            continue;
        }
        match stack.last_mut() {
            Some(top) if top.factor == factor => {
                let merged = (top.exp + e) % order as u8;
                if merged == 0 {
                    stack.pop();
                } else {
                    top.exp = merged;
                }
            }
            _ => stack.push(Syllable::new(factor, e)),
        }
    }
    stack
}

fn cyclic_reduce(spec: FactorSpec, mut syl: Vec<Syllable>) -> Vec<Syllable> {
    while syl.len() >= 2 && syl[0].factor == syl[syl.len() - 1].factor {
        let last = syl.pop().unwrap();
        let order = spec.order(last.factor);
        let merged = (syl[0].exp + last.exp) % order;
        if merged == 0 {
            syl.remove(0);
        } else {
            syl[0].exp = merged;
        }
    }
    syl
}

/// Parses a freely reduced (not necessarily cyclically reduced) word.
pub fn parse_reduced(text: &str, spec: FactorSpec) -> Result<Word> {
    let raw = raw_syllables(text, spec)?;
    let syl = free_reduce(spec, &raw);
    if syl.is_empty() {
        return Err(err(0, text, ParseErrorKind::TrivialWord));
    }
    Ok(Word::from_parts_unchecked(spec, syl))
}

/// Parses a relator: the result is freely and cyclically reduced, alternating,
/// and of length at least 2.
pub fn parse_word(text: &str, spec: FactorSpec) -> Result<Word> {
    let raw = raw_syllables(text, spec)?;
    let syl = cyclic_reduce(spec, free_reduce(spec, &raw));
    match syl.len() {
        0 => Err(err(0, text, ParseErrorKind::TrivialWord)),
        1 => Err(err(0, text, ParseErrorKind::SingleSyllable)),
        _ => Ok(Word::from_parts_unchecked(spec, syl)),
    }
}
