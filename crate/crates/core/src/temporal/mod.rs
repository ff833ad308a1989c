//! Symbolic temporal core: calendar points, closed intervals, facts, and the
//! deterministic interval logic every other layer builds on.
//!
//! All operations here are pure functions over immutable values and are safe
//! to call concurrently.

mod fact;
mod interval;
mod ops;
mod point;
mod query;

pub use fact::{AnswerCandidate, FactSet, TemporalFact};
pub use interval::TimeInterval;
pub use ops::{
    entails, filter_relevant, filter_subject, find_adjacent, intervals_overlap, Direction,
};
pub use point::{compare_timepoints, widen, IntervalSide, TimePoint};
pub use query::{QueryKind, TemporalQuery};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemporalError {
    #[error("month {0} out of range 1..=12")]
    MonthOutOfRange(u32),
    #[error("day {day} out of range for {year:04}-{month:02}")]
    DayOutOfRange { year: i32, month: u32, day: u32 },
    #[error("day given without a month")]
    DayWithoutMonth,
    #[error("cannot widen an infinite time point")]
    WidenInfinite,
    #[error("empty interval: {start} starts after {end} ends")]
    EmptyInterval { start: String, end: String },
    #[error("{field} must be non-empty")]
    EmptyEntity { field: &'static str },
    #[error("invalid relation identifier: {0:?}")]
    InvalidRelation(String),
    #[error("reference object {0:?} not found among matching facts")]
    ReferenceNotFound(String),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

/// Canonical form used for entity comparison: Unicode lowercase with runs of
/// whitespace collapsed to single spaces. No alias resolution is attempted.
pub fn canonical_entity(s: &str) -> String {
    s.split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase()
}
