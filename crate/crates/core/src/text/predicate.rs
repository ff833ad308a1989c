//! Predicate parsing and serialization.
//!
//! The canonical quadruple form is `relation(subject, object, start, end)`.
//! Arguments are split on top-level commas; an argument containing commas,
//! parentheses, braces, or quotes must be double-quoted, with backslash
//! escapes for embedded quotes and backslashes. Two alternative renderings
//! exist: a `holds/5` ground atom and a flat key-value dictionary record.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::temporal::{FactSet, IntervalSide, TemporalError, TemporalFact, TimeInterval, TimePoint};

use super::timestamp::normalize_timestamp;
use super::{ParseDiagnostic, TextError};

/// The symbolic fact rendering used in prompts and fact files.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolicFormat {
    /// `relation(subject, object, start, end)`
    #[default]
    Quadruple,
    /// `holds(relation, subject, object, start, end)`
    Fol,
    /// `{relation: ..., subject: ..., object: ..., start: ..., end: ...}`
    Dict,
}

impl fmt::Display for SymbolicFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymbolicFormat::Quadruple => "quadruple",
            SymbolicFormat::Fol => "fol",
            SymbolicFormat::Dict => "dict",
        };
        f.write_str(s)
    }
}

impl FromStr for SymbolicFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "quadruple" => Ok(SymbolicFormat::Quadruple),
            "fol" => Ok(SymbolicFormat::Fol),
            "dict" => Ok(SymbolicFormat::Dict),
            other => Err(format!("unknown symbolic format {other:?}")),
        }
    }
}

fn err(message: impl Into<String>, span: Range<usize>) -> TextError {
    TextError::Parse(ParseDiagnostic::error(message, span))
}

fn needs_quoting(s: &str) -> bool {
    s.chars().any(|c| matches!(c, ',' | '(' | ')' | '"' | '{' | '}'))
}

fn quote_arg(s: &str) -> String {
    if !needs_quoting(s) {
        return s.to_string();
    }
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn render_bound(p: TimePoint) -> String {
    match p {
        TimePoint::NegativeInfinity => "unknown".to_string(),
        TimePoint::PositiveInfinity => "present".to_string(),
        finite => finite.to_string(),
    }
}

/// Renders a fact in the requested format. The quadruple rendering
/// round-trips through [`parse_fact`] up to entity canonicalization.
pub fn serialize_fact(fact: &TemporalFact, format: SymbolicFormat) -> String {
    let s = quote_arg(fact.subject());
    let o = quote_arg(fact.object());
    let ts = render_bound(fact.interval().start());
    let te = render_bound(fact.interval().end());
    match format {
        SymbolicFormat::Quadruple => {
            format!("{}({s}, {o}, {ts}, {te})", fact.relation())
        }
        SymbolicFormat::Fol => {
            format!("holds({}, {s}, {o}, {ts}, {te})", fact.relation())
        }
        SymbolicFormat::Dict => format!(
            "{{relation: {}, subject: {s}, object: {o}, start: {ts}, end: {te}}}",
            fact.relation()
        ),
    }
}

/// Splits `inner` on top-level commas, honoring double quotes with backslash
/// escapes. Returns the byte range and raw text of each argument.
fn split_top_level(inner: &str) -> Result<Vec<(Range<usize>, &str)>, TextError> {
    let bytes = inner.as_bytes();
    let mut args = Vec::new();
    let mut arg_start = 0usize;
    let mut in_quote = false;
    let mut escaped = false;
    let mut quote_start = 0usize;
    for (i, &b) in bytes.iter().enumerate() {
        if in_quote {
            if escaped {
                escaped = false;
            } else if b == b'\\' {
                escaped = true;
            } else if b == b'"' {
                in_quote = false;
            }
            continue;
        }
        match b {
            b'"' => {
                in_quote = true;
                quote_start = i;
            }
            b',' => {
                args.push((arg_start..i, &inner[arg_start..i]));
                arg_start = i + 1;
            }
            _ => {}
        }
    }
    if in_quote {
        return Err(err("unterminated quote", quote_start..inner.len()));
    }
    args.push((arg_start..inner.len(), &inner[arg_start..]));
    Ok(args)
}

/// Strips surrounding double quotes (if any) and resolves backslash escapes.
fn unquote(raw: &str) -> Result<String, String> {
    let trimmed = raw.trim();
    if !trimmed.starts_with('"') {
        return Ok(trimmed.to_string());
    }
    let mut out = String::new();
    let mut chars = trimmed[1..].chars();
    loop {
        match chars.next() {
            None => return Err("unterminated quoted argument".into()),
            Some('\\') => match chars.next() {
                Some(c) => out.push(c),
                None => return Err("dangling escape".into()),
            },
            Some('"') => break,
            Some(c) => out.push(c),
        }
    }
    if chars.next().is_some() {
        return Err("unexpected text after closing quote".into());
    }
    Ok(out)
}

/// Finds the `)` (or `}`) matching the opener at `open`, honoring quotes.
fn find_matching(text: &str, open: usize, open_byte: u8, close_byte: u8) -> Option<usize> {
    let bytes = text.as_bytes();
    let mut depth = 1usize;
    let mut in_quote = false;
    let mut escaped = false;
    for i in open + 1..bytes.len() {
        let b = bytes[i];
        if in_quote {
            if escaped {
                escaped = false;
            } else if b == b'\\' {
                escaped = true;
            } else if b == b'"' {
                in_quote = false;
            }
            continue;
        }
        if b == b'"' {
            in_quote = true;
        } else if b == open_byte {
            depth += 1;
        } else if b == close_byte {
            depth -= 1;
            if depth == 0 {
                return Some(i);
            }
        }
    }
    None
}

struct RawPredicate<'a> {
    relation: &'a str,
    relation_span: Range<usize>,
    args: Vec<(Range<usize>, &'a str)>,
    body_span: Range<usize>,
}

fn parse_predicate_shell(text: &str) -> Result<RawPredicate<'_>, TextError> {
    let lead = text.len() - text.trim_start().len();
    let open = text
        .find('(')
        .ok_or_else(|| err("expected a predicate of the form relation(...)", lead..text.len()))?;
    let relation = text[lead..open].trim_end();
    let relation_span = lead..lead + relation.len();
    let close = find_matching(text, open, b'(', b')')
        .ok_or_else(|| err("unclosed predicate", open..text.len()))?;
    if !text[close + 1..].trim().is_empty() {
        return Err(err("unexpected text after predicate", close + 1..text.len()));
    }
    let inner = &text[open + 1..close];
    let args = split_top_level(inner)?
        .into_iter()
        .map(|(range, s)| (range.start + open + 1..range.end + open + 1, s))
        .collect();
    Ok(RawPredicate {
        relation,
        relation_span,
        args,
        body_span: open..close + 1,
    })
}

fn build_fact(
    relation: &str,
    relation_span: Range<usize>,
    args: &[(Range<usize>, &str)],
) -> Result<TemporalFact, TextError> {
    let field = |i: usize, name: &str| -> Result<String, TextError> {
        unquote(args[i].1).map_err(|m| err(format!("{name}: {m}"), args[i].0.clone()))
    };
    let subject = field(0, "subject")?;
    let object = field(1, "object")?;
    let start = normalize_timestamp(&field(2, "start")?, IntervalSide::Start)
        .map_err(|e| remap(e, &args[2].0))?;
    let end = normalize_timestamp(&field(3, "end")?, IntervalSide::End)
        .map_err(|e| remap(e, &args[3].0))?;
    TemporalFact::new(relation, &subject, &object, TimeInterval::raw(start, end)).map_err(|e| {
        let span = match e {
            TemporalError::InvalidRelation(_) => relation_span,
            TemporalError::EmptyEntity { field: "subject" } => args[0].0.clone(),
            _ => args[1].0.clone(),
        };
        err(e.to_string(), span)
    })
}

fn remap(e: TextError, span: &Range<usize>) -> TextError {
    match e {
        TextError::Parse(d) => TextError::Parse(ParseDiagnostic {
            severity: d.severity,
            message: d.message,
            span: span.clone(),
        }),
        other => other,
    }
}

/// Parses a quadruple predicate `relation(subject, object, start, end)`.
///
/// Timestamps go through [`normalize_timestamp`]; an inverted interval is
/// accepted here and left for the consistency audit to flag.
pub fn parse_fact(text: &str) -> Result<TemporalFact, TextError> {
    let shell = parse_predicate_shell(text)?;
    if shell.args.len() != 4 {
        return Err(err(
            format!("expected 4 arguments, found {}", shell.args.len()),
            shell.body_span,
        ));
    }
    build_fact(shell.relation, shell.relation_span, &shell.args)
}

/// Parses the `holds(relation, subject, object, start, end)` ground atom.
fn parse_fol_fact(text: &str) -> Result<TemporalFact, TextError> {
    let shell = parse_predicate_shell(text)?;
    if !shell.relation.eq_ignore_ascii_case("holds") {
        return Err(err("expected a holds/5 atom", shell.relation_span));
    }
    if shell.args.len() != 5 {
        return Err(err(
            format!("expected 5 arguments, found {}", shell.args.len()),
            shell.body_span,
        ));
    }
    let relation = unquote(shell.args[0].1)
        .map_err(|m| err(format!("relation: {m}"), shell.args[0].0.clone()))?;
    build_fact(&relation, shell.args[0].0.clone(), &shell.args[1..])
}

/// Parses the dictionary rendering.
fn parse_dict_fact(text: &str) -> Result<TemporalFact, TextError> {
    let trimmed = text.trim();
    if !trimmed.starts_with('{') || !trimmed.ends_with('}') {
        return Err(err("expected a {...} record", 0..text.len()));
    }
    let inner = &trimmed[1..trimmed.len() - 1];
    let mut relation = None;
    let mut subject = None;
    let mut object = None;
    let mut start = None;
    let mut end = None;
    for (range, entry) in split_top_level(inner)? {
        let Some((key, value)) = entry.split_once(':') else {
            return Err(err("expected key: value", range));
        };
        let value = unquote(value).map_err(|m| err(m, range.clone()))?;
        match key.trim().to_ascii_lowercase().as_str() {
            "relation" => relation = Some(value),
            "subject" => subject = Some(value),
            "object" => object = Some(value),
            "start" => start = Some((value, range)),
            "end" => end = Some((value, range)),
            _ => {}
        }
    }
    let missing = |name: &str| err(format!("missing key {name:?}"), 0..text.len());
    let relation = relation.ok_or_else(|| missing("relation"))?;
    let subject = subject.ok_or_else(|| missing("subject"))?;
    let object = object.ok_or_else(|| missing("object"))?;
    let (start, start_span) = start.ok_or_else(|| missing("start"))?;
    let (end, end_span) = end.ok_or_else(|| missing("end"))?;
    let start = normalize_timestamp(&start, IntervalSide::Start).map_err(|e| remap(e, &start_span))?;
    let end = normalize_timestamp(&end, IntervalSide::End).map_err(|e| remap(e, &end_span))?;
    TemporalFact::new(&relation, &subject, &object, TimeInterval::raw(start, end))
        .map_err(|e| err(e.to_string(), 0..text.len()))
}

/// Parses a line-oriented block of predicates: one per non-empty line,
/// `#`-prefixed lines ignored. Lines that fail to parse become error
/// diagnostics (spans into the whole block) rather than fatal errors.
/// Parsed facts carry their 0-based line index as provenance.
pub fn parse_fact_block(text: &str) -> (FactSet, Vec<ParseDiagnostic>) {
    let mut facts = FactSet::new();
    let mut diagnostics = Vec::new();
    let mut offset = 0usize;
    for (line_no, line) in text.split('\n').enumerate() {
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            match parse_fact(line) {
                Ok(fact) => facts.push(fact.with_provenance(line_no)),
                Err(e) => match e {
                    TextError::Parse(d) => diagnostics.push(d.offset_by(offset)),
                    other => diagnostics.push(ParseDiagnostic::error(
                        other.to_string(),
                        offset..offset + line.len(),
                    )),
                },
            }
        }
        offset += line.len() + 1;
    }
    (facts, diagnostics)
}

/// Scans free-form text for serialized facts in any of the three formats and
/// returns them in document order. Substrings that fail to parse are skipped.
pub fn scan_facts(text: &str) -> Vec<TemporalFact> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let b = bytes[i];
        if b == b'{' {
            if let Some(close) = find_matching(text, i, b'{', b'}') {
                if let Ok(fact) = parse_dict_fact(&text[i..=close]) {
                    out.push(fact);
                    i = close + 1;
                    continue;
                }
            }
            i += 1;
            continue;
        }
        let at_ident_start = b.is_ascii_alphabetic()
            && (i == 0 || !is_ident_byte(bytes[i - 1]));
        if at_ident_start {
            let mut k = i + 1;
            while k < bytes.len() && is_ident_byte(bytes[k]) {
                k += 1;
            }
            if k < bytes.len() && bytes[k] == b'(' {
                if let Some(close) = find_matching(text, k, b'(', b')') {
                    let slice = &text[i..=close];
                    let parsed = if text[i..k].eq_ignore_ascii_case("holds") {
                        parse_fol_fact(slice)
                    } else {
                        parse_fact(slice)
                    };
                    if let Ok(fact) = parsed {
                        out.push(fact);
                        i = close + 1;
                        continue;
                    }
                }
            }
            i = k;
            continue;
        }
        i += 1;
    }
    out
}

fn is_ident_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}
