//! The tagged five-stage transcript protocol.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ParseDiagnostic, TextError};

/// One of the five reasoning stages, in protocol order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Representation,
    Inference,
    ConsistencyCheck,
    Reflection,
    Answer,
}

impl Stage {
    pub const ALL: [Stage; 5] = [
        Stage::Representation,
        Stage::Inference,
        Stage::ConsistencyCheck,
        Stage::Reflection,
        Stage::Answer,
    ];

    /// The tag name, as it appears between angle brackets.
    pub fn tag(&self) -> &'static str {
        match self {
            Stage::Representation => "representation",
            Stage::Inference => "inference",
            Stage::ConsistencyCheck => "consistency_check",
            Stage::Reflection => "reflection",
            Stage::Answer => "answer",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Stage> {
        Stage::ALL
            .into_iter()
            .find(|s| s.tag().eq_ignore_ascii_case(tag))
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Stage {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Stage::from_tag(s).ok_or_else(|| format!("unknown stage {s:?}"))
    }
}

/// A tagged block extracted from a transcript. `body` reproduces the enclosed
/// source characters exactly; `index` is the block's position in its trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageBlock {
    pub stage: Stage,
    pub body: String,
    pub index: usize,
}

/// The result of parsing a full tagged transcript.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedTranscript {
    pub blocks: Vec<StageBlock>,
    pub diagnostics: Vec<ParseDiagnostic>,
}

impl TaggedTranscript {
    pub fn body_of(&self, stage: Stage) -> Option<&str> {
        self.blocks
            .iter()
            .find(|b| b.stage == stage)
            .map(|b| b.body.as_str())
    }
}

/// Case-insensitive match of `needle` at byte position `at`.
fn tag_at(text: &str, at: usize, needle: &str) -> bool {
    text.as_bytes()
        .get(at..at + needle.len())
        .is_some_and(|slice| slice.eq_ignore_ascii_case(needle.as_bytes()))
}

/// The stage whose opening tag starts at `at`, if any.
fn opening_tag_at(text: &str, at: usize) -> Option<(Stage, usize)> {
    if text.as_bytes().get(at) != Some(&b'<') {
        return None;
    }
    for stage in Stage::ALL {
        let open = format!("<{}>", stage.tag());
        if tag_at(text, at, &open) {
            return Some((stage, open.len()));
        }
    }
    None
}

fn find_from(text: &str, from: usize, pred: impl Fn(usize) -> bool) -> Option<usize> {
    (from..text.len()).find(|&i| text.as_bytes()[i] == b'<' && pred(i))
}

/// Extracts every tagged block in document order. Tags are case-insensitive;
/// text outside tags is ignored. A block missing its closing tag runs to the
/// next opening tag (or end of input) and produces a warning diagnostic.
pub(crate) fn extract_stage_blocks(text: &str) -> (Vec<StageBlock>, Vec<ParseDiagnostic>) {
    let mut blocks = Vec::new();
    let mut diagnostics = Vec::new();
    let mut pos = 0usize;
    while let Some(open_at) = find_from(text, pos, |i| opening_tag_at(text, i).is_some()) {
        let (stage, open_len) = opening_tag_at(text, open_at).expect("just matched");
        let body_start = open_at + open_len;
        let close = format!("</{}>", stage.tag());
        let close_at = find_from(text, body_start, |i| tag_at(text, i, &close));
        let (body_end, next_pos) = match close_at {
            Some(at) => (at, at + close.len()),
            None => {
                // Recover: run to the next opening tag, or to end of input.
                let stop = find_from(text, body_start, |i| opening_tag_at(text, i).is_some())
                    .unwrap_or(text.len());
                diagnostics.push(ParseDiagnostic::warning(
                    format!("unclosed <{}> tag", stage.tag()),
                    open_at..stop,
                ));
                (stop, stop)
            }
        };
        blocks.push(StageBlock {
            stage,
            body: text[body_start..body_end].to_string(),
            index: blocks.len(),
        });
        pos = next_pos;
    }
    (blocks, diagnostics)
}

/// Parses a tagged transcript into its stage blocks.
///
/// Every transcript must contain an `<answer>` block somewhere; its absence
/// is the one fatal condition (callers decide whether to retry).
pub fn parse_tagged_output(text: &str) -> Result<TaggedTranscript, TextError> {
    let (blocks, diagnostics) = extract_stage_blocks(text);
    if !blocks.iter().any(|b| b.stage == Stage::Answer) {
        return Err(TextError::MissingAnswer);
    }
    Ok(TaggedTranscript {
        blocks,
        diagnostics,
    })
}
