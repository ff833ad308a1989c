//! Closed time intervals with granularity-aware bounds.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::point::{EffectiveBound, IntervalSide, TimePoint};
use super::TemporalError;

/// A closed interval `[start, end]` between two time points.
///
/// Bounds keep the granularity they were stated at; comparisons widen them
/// (a year-only bound denotes the whole year). `new` enforces the non-empty
/// invariant; `raw` admits anything so that intervals extracted from
/// untrusted model output can be represented, audited, and repaired rather
/// than rejected at the door.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TimeInterval {
    start: TimePoint,
    end: TimePoint,
}

impl TimeInterval {
    /// Builds an interval, rejecting ones that are empty after widening.
    pub fn new(start: TimePoint, end: TimePoint) -> Result<Self, TemporalError> {
        let iv = Self::raw(start, end);
        if iv.is_inverted() {
            return Err(TemporalError::EmptyInterval {
                start: start.to_string(),
                end: end.to_string(),
            });
        }
        Ok(iv)
    }

    /// Builds an interval without validation.
    pub fn raw(start: TimePoint, end: TimePoint) -> Self {
        TimeInterval { start, end }
    }

    /// The degenerate interval `[p, p]`.
    pub fn at(p: TimePoint) -> Self {
        TimeInterval { start: p, end: p }
    }

    /// `[-inf, +inf]` — overlaps everything.
    pub fn universal() -> Self {
        TimeInterval {
            start: TimePoint::NegativeInfinity,
            end: TimePoint::PositiveInfinity,
        }
    }

    pub fn start(&self) -> TimePoint {
        self.start
    }

    pub fn end(&self) -> TimePoint {
        self.end
    }

    /// True when the widened start falls after the widened end.
    pub fn is_inverted(&self) -> bool {
        self.lower() > self.upper()
    }

    pub(crate) fn lower(&self) -> EffectiveBound {
        self.start.effective(IntervalSide::Start)
    }

    pub(crate) fn upper(&self) -> EffectiveBound {
        self.end.effective(IntervalSide::End)
    }

    /// Both bounds coarsened to year granularity (month and day dropped).
    /// Infinite bounds are unchanged.
    pub fn coarsened_to_year(&self) -> Self {
        let coarsen = |p: TimePoint| match p {
            TimePoint::Finite { year, .. } => TimePoint::year(year),
            other => other,
        };
        TimeInterval {
            start: coarsen(self.start),
            end: coarsen(self.end),
        }
    }

    /// The interval with bounds swapped.
    pub fn swapped(&self) -> Self {
        TimeInterval {
            start: self.end,
            end: self.start,
        }
    }
}

impl fmt::Display for TimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.start, self.end)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(year: i32) -> TimePoint {
        TimePoint::year(year)
    }

    #[test]
    fn same_year_interval_is_valid() {
        // [1949, 1949] widens to [Jan 1, Dec 31].
        assert!(TimeInterval::new(y(1949), y(1949)).is_ok());
    }

    #[test]
    fn inverted_interval_rejected_by_new_but_representable_raw() {
        assert!(TimeInterval::new(y(1953), y(1949)).is_err());
        let raw = TimeInterval::raw(y(1953), y(1949));
        assert!(raw.is_inverted());
        assert!(!raw.swapped().is_inverted());
    }

    #[test]
    fn widening_saves_same_year_mixed_granularity() {
        // start 1949-06 vs end 1949 → Jun 1 ≤ Dec 31.
        let iv = TimeInterval::new(TimePoint::year_month(1949, 6).unwrap(), y(1949)).unwrap();
        assert!(!iv.is_inverted());
        // start 1949-06 vs end 1949-02 → Jun 1 > Feb 28.
        assert!(TimeInterval::new(
            TimePoint::year_month(1949, 6).unwrap(),
            TimePoint::year_month(1949, 2).unwrap()
        )
        .is_err());
    }

    #[test]
    fn infinite_bounds() {
        assert!(TimeInterval::new(TimePoint::NegativeInfinity, y(1949)).is_ok());
        assert!(TimeInterval::new(y(1949), TimePoint::PositiveInfinity).is_ok());
        assert!(TimeInterval::new(TimePoint::PositiveInfinity, y(1949)).is_err());
    }

    #[test]
    fn coarsening_drops_month_and_day() {
        let iv = TimeInterval::new(
            TimePoint::year_month_day(1949, 1, 15).unwrap(),
            TimePoint::year_month(1953, 1).unwrap(),
        )
        .unwrap();
        let coarse = iv.coarsened_to_year();
        assert_eq!(coarse.start(), y(1949));
        assert_eq!(coarse.end(), y(1953));
    }
}
