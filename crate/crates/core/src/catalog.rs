//! Text encodings and the sequence catalog.
//!
//! Compact form, one token per entry:
//!
//! | token | entry |
//! |-------|-------|
//! | `+` `-` | `1`, `-1` |
//! | `i` `I` `j` `J` `k` `K` | `±i`, `±j`, `±k` (capital = negated) |
//! | `q` `Q` | `±q`, `q = (1+i+j+k)/2` |
//! | `~x` | `q·x` for `x` one of the eight Q8 tokens (`~+` = `q`, `~-` = `Q`) |
//!
//! Whitespace is ignored. Only entries of `Q+` have a compact token; anything
//! else goes through the JSON form, an array of doubled-coordinate 4-tuples.
//!
//! Catalog files are line oriented: `name length properties sequence`, with
//! `#` starting a comment. The sequence runs to the end of the line and may
//! contain spaces. Properties are a comma separated subset of `palindromic`,
//! `symmetric`, `perfect`, `odd-perfect`, plus at most one alphabet tag `Q8`
//! or `Q+`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::correlation::{odd_perfection_violation, perfection_violation};
use crate::error::{Error, Result};
use crate::quaternion::{Alphabet, HurwitzUnit};
use crate::sequence::{QSeq, Quad};

/// The palindromic odd perfect sequences `P_1 … P_69` (lengths 35, 47, 53,
/// 59, 65 and 67 are absent).
pub const BUILTIN_CATALOG: &str = include_str!("../../../data/appendix.qcat");

const Q8_TOKENS: [(char, HurwitzUnit); 8] = [
    ('+', HurwitzUnit::ONE),
    ('-', HurwitzUnit::NEG_ONE),
    ('i', HurwitzUnit::I),
    ('I', HurwitzUnit::NEG_I),
    ('j', HurwitzUnit::J),
    ('J', HurwitzUnit::NEG_J),
    ('k', HurwitzUnit::K),
    ('K', HurwitzUnit::NEG_K),
];

fn q8_token(c: char) -> Option<HurwitzUnit> {
    Q8_TOKENS.iter().find(|(t, _)| *t == c).map(|(_, u)| *u)
}

/// Parses the compact text form.
pub fn parse_sequence(text: &str) -> Result<QSeq> {
    let mut out = Vec::new();
    let mut chars = text.chars().enumerate().filter(|(_, c)| !c.is_whitespace());
    while let Some((column, c)) = chars.next() {
        let unit = match c {
            'q' => HurwitzUnit::Q,
            'Q' => HurwitzUnit::NEG_Q,
            '~' => {
                let (col, next) = chars.next().ok_or(Error::Parse {
                    column,
                    message: "`~` must be followed by a Q8 token".into(),
                })?;
                let base = q8_token(next).ok_or_else(|| Error::Parse {
                    column: col,
                    message: format!("`~{next}` is not a valid token"),
                })?;
                HurwitzUnit::Q * base
            }
            _ => q8_token(c).ok_or_else(|| Error::Parse {
                column,
                message: format!("unknown token `{c}`"),
            })?,
        };
        out.push(unit);
    }
    if out.is_empty() {
        return Err(Error::Parse {
            column: 0,
            message: "empty sequence".into(),
        });
    }
    QSeq::new(out)
}

/// Token for a single unit, if it lies in `Q+`.
pub fn format_unit(u: HurwitzUnit) -> Option<String> {
    if let Some((c, _)) = Q8_TOKENS.iter().find(|(_, v)| *v == u) {
        return Some(c.to_string());
    }
    if u == HurwitzUnit::Q {
        return Some("q".into());
    }
    if u == HurwitzUnit::NEG_Q {
        return Some("Q".into());
    }
    Q8_TOKENS
        .iter()
        .find(|(_, v)| HurwitzUnit::Q * *v == u)
        .map(|(c, _)| format!("~{c}"))
}

/// Canonical compact form. Fails on entries outside `Q+`.
pub fn format_sequence(seq: &QSeq) -> Result<String> {
    seq.iter()
        .enumerate()
        .map(|(index, &u)| {
            format_unit(u).ok_or(Error::OutsideAlphabet {
                index,
                alphabet: "Q+",
            })
        })
        .collect()
}

/// Comma separated list of sequences, e.g. `"++,+-"`.
pub fn parse_sequence_list(text: &str) -> Result<Vec<QSeq>> {
    text.split(',').map(parse_sequence).collect()
}

pub fn parse_pair(text: &str) -> Result<(QSeq, QSeq)> {
    let mut list = parse_sequence_list(text)?;
    if list.len() != 2 {
        return Err(Error::Parse {
            column: 0,
            message: format!("expected 2 comma separated sequences, found {}", list.len()),
        });
    }
    let b = list.pop().expect("two");
    let a = list.pop().expect("two");
    Ok((a, b))
}

pub fn parse_quad(text: &str) -> Result<Quad> {
    let list = parse_sequence_list(text)?;
    let members: [QSeq; 4] = list.try_into().map_err(|v: Vec<QSeq>| Error::Parse {
        column: 0,
        message: format!("expected 4 comma separated sequences, found {}", v.len()),
    })?;
    Quad::from_array(members)
}

pub fn format_quad(q: &Quad) -> String {
    q.members()
        .iter()
        .map(|m| format_sequence(m).expect("±1 entries always format"))
        .collect::<Vec<_>>()
        .join(",")
}

/// JSON array of `[w2, x2, y2, z2]` tuples.
pub fn sequence_to_json(seq: &QSeq) -> serde_json::Value {
    serde_json::to_value(seq).expect("units serialize")
}

pub fn sequence_from_json(value: &serde_json::Value) -> Result<QSeq> {
    serde_json::from_value(value.clone()).map_err(|e| Error::Parse {
        column: 0,
        message: e.to_string(),
    })
}

/// Properties a catalog line claims for its sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DeclaredProperties {
    pub palindromic: bool,
    pub symmetric: bool,
    pub perfect: bool,
    pub odd_perfect: bool,
    pub alphabet: Option<Alphabet>,
}

impl DeclaredProperties {
    fn parse(field: &str) -> std::result::Result<Self, String> {
        let mut p = DeclaredProperties::default();
        for tag in field.split(',').filter(|t| !t.is_empty()) {
            match tag {
                "palindromic" => p.palindromic = true,
                "symmetric" => p.symmetric = true,
                "perfect" => p.perfect = true,
                "odd-perfect" => p.odd_perfect = true,
                "Q8" | "Q+" => {
                    if p.alphabet.is_some() {
                        return Err("more than one alphabet tag".into());
                    }
                    p.alphabet = Some(if tag == "Q8" {
                        Alphabet::Q8
                    } else {
                        Alphabet::QPlus
                    });
                }
                other => return Err(format!("unknown property `{other}`")),
            }
        }
        Ok(p)
    }
}

impl fmt::Display for DeclaredProperties {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tags = Vec::new();
        for (on, tag) in [
            (self.palindromic, "palindromic"),
            (self.symmetric, "symmetric"),
            (self.perfect, "perfect"),
            (self.odd_perfect, "odd-perfect"),
        ] {
            if on {
                tags.push(tag);
            }
        }
        match self.alphabet {
            Some(Alphabet::Q8) => tags.push("Q8"),
            Some(Alphabet::QPlus) => tags.push("Q+"),
            _ => {}
        }
        f.write_str(&tags.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub line: usize,
    pub declared_length: usize,
    pub properties: DeclaredProperties,
    pub sequence: QSeq,
}

impl CatalogEntry {
    pub fn to_line(&self) -> Result<String> {
        Ok(format!(
            "{} {} {} {}",
            self.name,
            self.declared_length,
            self.properties,
            format_sequence(&self.sequence)?
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

/// Parses a catalog, collecting per-line errors instead of stopping.
pub fn parse_catalog(text: &str) -> (Vec<CatalogEntry>, Vec<LineError>) {
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match parse_line(content, line) {
            Ok(e) => entries.push(e),
            Err(message) => errors.push(LineError { line, message }),
        }
    }
    (entries, errors)
}

fn parse_line(content: &str, line: usize) -> std::result::Result<CatalogEntry, String> {
    let mut fields = content
        .splitn(4, char::is_whitespace)
        .filter(|f| !f.is_empty());
    let (Some(name), Some(len), Some(props)) = (fields.next(), fields.next(), fields.next()) else {
        return Err("expected `name length properties sequence`".into());
    };
    let rest = content
        .splitn(4, char::is_whitespace)
        .nth(3)
        .ok_or("missing sequence")?;
    let declared_length: usize = len
        .parse()
        .map_err(|_| format!("length `{len}` is not an integer"))?;
    let properties = DeclaredProperties::parse(props)?;
    let sequence = parse_sequence(rest).map_err(|e| e.to_string())?;
    Ok(CatalogEntry {
        name: name.to_string(),
        line,
        declared_length,
        properties,
        sequence,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub line: usize,
    pub length: usize,
    pub failures: Vec<String>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryReport>,
    pub parse_errors: Vec<LineError>,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.parse_errors.is_empty() && self.entries.iter().all(EntryReport::passed)
    }

    pub fn failed_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.passed()).count() + self.parse_errors.len()
    }
}

/// Checks every declared property of one entry.
pub fn verify_entry(entry: &CatalogEntry) -> EntryReport {
    let seq = &entry.sequence;
    let p = &entry.properties;
    let mut failures = Vec::new();
    if seq.len() != entry.declared_length {
        failures.push(format!(
            "length: declared {} but sequence has {}",
            entry.declared_length,
            seq.len()
        ));
    }
    if p.palindromic && !seq.is_palindromic() {
        let t = (0..seq.len())
            .find(|&t| seq[t] != seq[seq.len() - 1 - t])
            .unwrap_or(0);
        failures.push(format!(
            "palindromic: entries {t} and {} differ",
            seq.len() - 1 - t
        ));
    }
    if p.symmetric && !seq.is_symmetric() {
        let t = (1..seq.len())
            .find(|&t| seq[t] != seq[seq.len() - t])
            .unwrap_or(0);
        failures.push(format!(
            "symmetric: entries {t} and {} differ",
            seq.len() - t
        ));
    }
    if p.perfect {
        if let Some((t, v)) = perfection_violation(seq) {
            failures.push(format!("perfect: R({t}) = {v}"));
        }
    }
    if p.odd_perfect {
        if let Some((t, v)) = odd_perfection_violation(seq) {
            failures.push(format!("odd-perfect: R̂({t}) = {v}"));
        }
    }
    if let Some(alphabet) = p.alphabet {
        if let Some(index) = seq.first_outside(alphabet) {
            failures.push(format!(
                "alphabet: entry {index} is outside {}",
                alphabet.name()
            ));
        }
    }
    EntryReport {
        name: entry.name.clone(),
        line: entry.line,
        length: seq.len(),
        failures,
    }
}

/// Parses and verifies a whole catalog. Entries are checked in parallel;
/// report order follows the file.
pub fn verify_catalog(text: &str) -> CatalogReport {
    let (entries, parse_errors) = parse_catalog(text);
    let entries = entries.par_iter().map(verify_entry).collect();
    CatalogReport {
        entries,
        parse_errors,
    }
}
