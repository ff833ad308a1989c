//! Structured temporal queries — the machine-readable side of a question.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{TemporalError, TimeInterval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QueryKind {
    /// Facts whose interval intersects the query interval.
    Overlap,
    /// The fact adjacent before a reference object.
    Before,
    /// The fact adjacent after a reference object.
    After,
    /// The earliest matching fact.
    First,
    /// The latest matching fact.
    Last,
}

impl fmt::Display for QueryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QueryKind::Overlap => "overlap",
            QueryKind::Before => "before",
            QueryKind::After => "after",
            QueryKind::First => "first",
            QueryKind::Last => "last",
        };
        f.write_str(s)
    }
}

impl FromStr for QueryKind {
    type Err = TemporalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "overlap" => Ok(QueryKind::Overlap),
            "before" => Ok(QueryKind::Before),
            "after" => Ok(QueryKind::After),
            "first" => Ok(QueryKind::First),
            "last" => Ok(QueryKind::Last),
            other => Err(TemporalError::InvalidQuery(format!(
                "unknown query kind {other:?}"
            ))),
        }
    }
}

/// A question reduced to its symbolic payload: optional subject, relation,
/// target interval, and — for ordering questions — a reference object.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TemporalQuery {
    pub kind: QueryKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub subject: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub relation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub interval: Option<TimeInterval>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reference_object: Option<String>,
}

impl TemporalQuery {
    pub fn overlap(interval: TimeInterval) -> Self {
        TemporalQuery {
            kind: QueryKind::Overlap,
            subject: None,
            relation: None,
            interval: Some(interval),
            reference_object: None,
        }
    }

    pub fn adjacent(kind: QueryKind, reference_object: &str) -> Self {
        TemporalQuery {
            kind,
            subject: None,
            relation: None,
            interval: None,
            reference_object: Some(reference_object.to_string()),
        }
    }

    pub fn ordered(kind: QueryKind) -> Self {
        TemporalQuery {
            kind,
            subject: None,
            relation: None,
            interval: None,
            reference_object: None,
        }
    }

    pub fn with_subject(mut self, subject: &str) -> Self {
        self.subject = Some(subject.to_string());
        self
    }

    pub fn with_relation(mut self, relation: &str) -> Self {
        self.relation = Some(relation.to_string());
        self
    }

    /// Enforces the kind-specific invariants: `overlap` needs an interval,
    /// `before`/`after` need a reference object.
    pub fn validate(&self) -> Result<(), TemporalError> {
        match self.kind {
            QueryKind::Overlap if self.interval.is_none() => Err(TemporalError::InvalidQuery(
                "overlap queries require an interval".into(),
            )),
            QueryKind::Before | QueryKind::After if self.reference_object.is_none() => {
                Err(TemporalError::InvalidQuery(format!(
                    "{} queries require a reference object",
                    self.kind
                )))
            }
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal::TimePoint;

    #[test]
    fn overlap_requires_interval() {
        let mut q = TemporalQuery::overlap(TimeInterval::at(TimePoint::year(1947)));
        assert!(q.validate().is_ok());
        q.interval = None;
        assert!(q.validate().is_err());
    }

    #[test]
    fn adjacency_requires_reference() {
        let q = TemporalQuery::adjacent(QueryKind::Before, "Concordia Seminary");
        assert!(q.validate().is_ok());
        let mut q = q;
        q.reference_object = None;
        assert!(q.validate().is_err());
    }

    #[test]
    fn first_and_last_need_nothing() {
        assert!(TemporalQuery::ordered(QueryKind::First).validate().is_ok());
        assert!(TemporalQuery::ordered(QueryKind::Last).validate().is_ok());
    }
}
