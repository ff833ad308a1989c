//! Textual layer: predicate parsing and serialization in three symbolic
//! formats, timestamp normalization, and the five-stage tagged transcript
//! protocol.
//!
//! Fact files are UTF-8 text with one predicate per line; `#`-prefixed lines
//! are comments. Tagged transcripts are UTF-8 text using the five stage tags
//! (`<representation>`, `<inference>`, `<consistency_check>`, `<reflection>`,
//! `<answer>`).

mod predicate;
mod tags;
mod timestamp;

pub use predicate::{parse_fact, parse_fact_block, scan_facts, serialize_fact, SymbolicFormat};
pub use tags::{parse_tagged_output, Stage, StageBlock, TaggedTranscript};
pub(crate) use tags::{extract_stage_blocks, find_answer_positions};
pub use timestamp::normalize_timestamp;

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Warning,
    Error,
}

/// A non-fatal parse finding. `span` is a byte range into the source text,
/// always on character boundaries and within bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseDiagnostic {
    pub severity: Severity,
    pub message: String,
    pub span: Range<usize>,
}

impl ParseDiagnostic {
    pub fn error(message: impl Into<String>, span: Range<usize>) -> Self {
        ParseDiagnostic {
            severity: Severity::Error,
            message: message.into(),
            span,
        }
    }

    pub fn warning(message: impl Into<String>, span: Range<usize>) -> Self {
        ParseDiagnostic {
            severity: Severity::Warning,
            message: message.into(),
            span,
        }
    }

    /// Shifts the span by `offset` bytes (for diagnostics produced on a
    /// substring of a larger source).
    pub fn offset_by(mut self, offset: usize) -> Self {
        self.span = self.span.start + offset..self.span.end + offset;
        self
    }
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        write!(
            f,
            "{sev} at {}..{}: {}",
            self.span.start, self.span.end, self.message
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("{0}")]
    Parse(ParseDiagnostic),
    #[error("transcript contains no <answer> block")]
    MissingAnswer,
}

impl TextError {
    pub fn diagnostic(&self) -> Option<&ParseDiagnostic> {
        match self {
            TextError::Parse(d) => Some(d),
            TextError::MissingAnswer => None,
        }
    }
}
