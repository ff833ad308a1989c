//! Calendar instants at year, month, or day granularity, plus the two
//! infinite bounds used for open-ended facts.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::TemporalError;

/// A normalized calendar instant.
///
/// Finite points carry a year and optionally a month and day; a day is only
/// present when the month is. The raw ordering compares finite points by
/// `(year, month, day)` with a missing component sorting before any present
/// one, so `1949` < `1949-01` < `1949-02`. Interval logic never relies on the
/// raw order directly — it widens bounds first (see [`widen`] and
/// [`super::intervals_overlap`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TimePoint {
    /// Before every finite point; stands in for an unknown start.
    NegativeInfinity,
    Finite {
        year: i32,
        month: Option<u8>,
        day: Option<u8>,
    },
    /// After every finite point; stands in for an ongoing ("present") end.
    PositiveInfinity,
}

/// Which bound of an interval a time point is being resolved for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalSide {
    Start,
    End,
}

impl TimePoint {
    pub fn year(year: i32) -> Self {
        TimePoint::Finite {
            year,
            month: None,
            day: None,
        }
    }

    pub fn year_month(year: i32, month: u32) -> Result<Self, TemporalError> {
        check_month(month)?;
        Ok(TimePoint::Finite {
            year,
            month: Some(month as u8),
            day: None,
        })
    }

    pub fn year_month_day(year: i32, month: u32, day: u32) -> Result<Self, TemporalError> {
        check_month(month)?;
        if day < 1 || day > days_in_month(year, month) {
            return Err(TemporalError::DayOutOfRange { year, month, day });
        }
        Ok(TimePoint::Finite {
            year,
            month: Some(month as u8),
            day: Some(day as u8),
        })
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TimePoint::Finite { .. })
    }

    /// The day-granularity point this bound denotes once widened for `side`,
    /// with infinities mapped onto the matching extreme.
    pub(crate) fn effective(&self, side: IntervalSide) -> EffectiveBound {
        match *self {
            TimePoint::NegativeInfinity => EffectiveBound::NegInf,
            TimePoint::PositiveInfinity => EffectiveBound::PosInf,
            TimePoint::Finite { year, month, day } => {
                let (m, d) = match side {
                    IntervalSide::Start => {
                        let m = month.unwrap_or(1);
                        (m, day.unwrap_or(1))
                    }
                    IntervalSide::End => {
                        let m = month.unwrap_or(12);
                        let d = day.unwrap_or(days_in_month(year, m as u32) as u8);
                        (m, d)
                    }
                };
                EffectiveBound::Day {
                    year,
                    month: m,
                    day: d,
                }
            }
        }
    }
}

/// Total order over time points; delegates to the derived raw ordering.
pub fn compare_timepoints(a: &TimePoint, b: &TimePoint) -> Ordering {
    a.cmp(b)
}

/// Fill the missing components of a finite point: the start side resolves to
/// the first day it could denote (Jan 1 / day 1), the end side to the last
/// (Dec 31 / last day of month, leap years honored).
pub fn widen(p: &TimePoint, side: IntervalSide) -> Result<TimePoint, TemporalError> {
    match p.effective(side) {
        EffectiveBound::Day { year, month, day } => {
            TimePoint::year_month_day(year, month as u32, day as u32)
        }
        _ => Err(TemporalError::WidenInfinite),
    }
}

/// Fully-resolved bound used internally for interval comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum EffectiveBound {
    NegInf,
    Day { year: i32, month: u8, day: u8 },
    PosInf,
}

fn check_month(month: u32) -> Result<(), TemporalError> {
    if (1..=12).contains(&month) {
        Ok(())
    } else {
        Err(TemporalError::MonthOutOfRange(month))
    }
}

pub(crate) fn is_leap_year(year: i32) -> bool {
    year % 4 == 0 && (year % 100 != 0 || year % 400 == 0)
}

pub(crate) fn days_in_month(year: i32, month: u32) -> u32 {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 => {
            if is_leap_year(year) {
                29
            } else {
                28
            }
        }
        _ => 0,
    }
}

impl fmt::Display for TimePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TimePoint::NegativeInfinity => write!(f, "-inf"),
            TimePoint::PositiveInfinity => write!(f, "+inf"),
            TimePoint::Finite { year, month, day } => {
                if year < 0 {
                    write!(f, "-{:04}", -(year as i64))?;
                } else {
                    write!(f, "{year:04}")?;
                }
                if let Some(m) = month {
                    write!(f, "-{m:02}")?;
                    if let Some(d) = day {
                        write!(f, "-{d:02}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl FromStr for TimePoint {
    type Err = TemporalError;

    /// Parses exactly the `Display` grammar: `-inf`, `+inf`, `YYYY`,
    /// `YYYY-MM`, `YYYY-MM-DD`, with an optional leading `-` on the year.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "-inf" => return Ok(TimePoint::NegativeInfinity),
            "+inf" | "inf" => return Ok(TimePoint::PositiveInfinity),
            _ => {}
        }
        let (negative, rest) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let mut parts = rest.split('-');
        let year_part = parts.next().unwrap_or("");
        let bad = || TemporalError::InvalidQuery(format!("unparseable time point {s:?}"));
        let mut year: i32 = year_part.parse().map_err(|_| bad())?;
        if negative {
            year = -year;
        }
        match (parts.next(), parts.next(), parts.next()) {
            (None, _, _) => Ok(TimePoint::year(year)),
            (Some(m), None, _) => {
                TimePoint::year_month(year, m.parse().map_err(|_| bad())?)
            }
            (Some(m), Some(d), None) => TimePoint::year_month_day(
                year,
                m.parse().map_err(|_| bad())?,
                d.parse().map_err(|_| bad())?,
            ),
            _ => Err(bad()),
        }
    }
}

impl Serialize for TimePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TimePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn year_order_dominates() {
        let a = TimePoint::year(1946);
        let b = TimePoint::year_month(1949, 1).unwrap();
        assert_eq!(compare_timepoints(&a, &b), Ordering::Less);
    }

    #[test]
    fn identical_points_equal() {
        let a = TimePoint::year_month(1949, 1).unwrap();
        assert_eq!(compare_timepoints(&a, &a), Ordering::Equal);
    }

    #[test]
    fn negative_infinity_below_finite() {
        assert_eq!(
            compare_timepoints(&TimePoint::NegativeInfinity, &TimePoint::year(1800)),
            Ordering::Less
        );
        assert_eq!(
            compare_timepoints(&TimePoint::year(1800), &TimePoint::PositiveInfinity),
            Ordering::Less
        );
    }

    #[test]
    fn coarser_point_sorts_first_within_prefix() {
        assert!(TimePoint::year(1949) < TimePoint::year_month(1949, 1).unwrap());
        assert!(
            TimePoint::year_month(1949, 1).unwrap()
                < TimePoint::year_month_day(1949, 1, 1).unwrap()
        );
    }

    #[test]
    fn widen_start_fills_first_day() {
        assert_eq!(
            widen(&TimePoint::year(1946), IntervalSide::Start).unwrap(),
            TimePoint::year_month_day(1946, 1, 1).unwrap()
        );
    }

    #[test]
    fn widen_end_fills_last_day() {
        assert_eq!(
            widen(&TimePoint::year(1946), IntervalSide::End).unwrap(),
            TimePoint::year_month_day(1946, 12, 31).unwrap()
        );
    }

    #[test]
    fn widen_end_honors_leap_february() {
        assert_eq!(
            widen(&TimePoint::year_month(2000, 2).unwrap(), IntervalSide::End).unwrap(),
            TimePoint::year_month_day(2000, 2, 29).unwrap()
        );
        assert_eq!(
            widen(&TimePoint::year_month(1900, 2).unwrap(), IntervalSide::End).unwrap(),
            TimePoint::year_month_day(1900, 2, 28).unwrap()
        );
    }

    #[test]
    fn widen_rejects_infinite() {
        assert_eq!(
            widen(&TimePoint::PositiveInfinity, IntervalSide::Start),
            Err(TemporalError::WidenInfinite)
        );
    }

    #[test]
    fn invalid_dates_rejected() {
        assert!(TimePoint::year_month(1949, 13).is_err());
        assert!(TimePoint::year_month_day(2001, 2, 29).is_err());
        assert!(TimePoint::year_month_day(1949, 4, 31).is_err());
    }

    #[test]
    fn display_parse_roundtrip() {
        for p in [
            TimePoint::year(1946),
            TimePoint::year_month(1949, 1).unwrap(),
            TimePoint::year_month_day(2000, 2, 29).unwrap(),
            TimePoint::year(-44),
            TimePoint::NegativeInfinity,
            TimePoint::PositiveInfinity,
        ] {
            assert_eq!(p.to_string().parse::<TimePoint>().unwrap(), p);
        }
    }
}
