//! Timestamp normalization: turn the textual date forms that appear in
//! benchmark contexts into calendar points.

use crate::temporal::{IntervalSide, TimePoint};

use super::{ParseDiagnostic, TextError};

const MONTHS: [&str; 12] = [
    "january",
    "february",
    "march",
    "april",
    "may",
    "june",
    "july",
    "august",
    "september",
    "october",
    "november",
    "december",
];

fn month_number(token: &str) -> Option<u32> {
    let token = token.trim_end_matches('.').to_lowercase();
    MONTHS.iter().position(|m| {
        *m == token || (token.len() == 3 && m.starts_with(&token))
    }).map(|i| i as u32 + 1)
}

fn parse_year(token: &str) -> Option<i32> {
    if token.is_empty() || token.len() > 4 || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

fn parse_number(token: &str) -> Option<u32> {
    if token.is_empty() || token.len() > 2 || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

/// Parses a timestamp string into a [`TimePoint`].
///
/// Accepted forms: `YYYY`, `YYYY-MM`, `YYYY-MM-DD`, English month names
/// (`January 1949`, `1 January 1949`, `January 1, 1949`, three-letter
/// abbreviations included), and the sentinels `unknown` (the widest bound for
/// `side`) and `present` (positive infinity). The result keeps the finest
/// granularity present in the input.
pub fn normalize_timestamp(text: &str, side: IntervalSide) -> Result<TimePoint, TextError> {
    let trimmed = text.trim();
    let fail = |msg: String| {
        TextError::Parse(ParseDiagnostic::error(msg, 0..text.len()))
    };
    if trimmed.is_empty() {
        return Err(fail("empty timestamp".into()));
    }

    match trimmed.to_lowercase().as_str() {
        "unknown" => {
            return Ok(match side {
                IntervalSide::Start => TimePoint::NegativeInfinity,
                IntervalSide::End => TimePoint::PositiveInfinity,
            })
        }
        "present" => return Ok(TimePoint::PositiveInfinity),
        _ => {}
    }

    let point = parse_numeric(trimmed).or_else(|| parse_with_month_name(trimmed));
    match point {
        Some(Ok(p)) => Ok(p),
        Some(Err(e)) => Err(fail(format!("invalid timestamp {trimmed:?}: {e}"))),
        None => Err(fail(format!("unparseable timestamp {trimmed:?}"))),
    }
}

type Parsed = Option<Result<TimePoint, crate::temporal::TemporalError>>;

fn parse_numeric(text: &str) -> Parsed {
    let mut parts = text.split('-');
    let year = parse_year(parts.next()?)?;
    match (parts.next(), parts.next(), parts.next()) {
        (None, _, _) => Some(Ok(TimePoint::year(year))),
        (Some(m), None, _) => Some(TimePoint::year_month(year, parse_number(m)?)),
        (Some(m), Some(d), None) => {
            Some(TimePoint::year_month_day(year, parse_number(m)?, parse_number(d)?))
        }
        _ => None,
    }
}

fn parse_with_month_name(text: &str) -> Parsed {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        // January 1949
        [month, year] => {
            let m = month_number(month)?;
            let y = parse_year(year)?;
            Some(TimePoint::year_month(y, m))
        }
        // 1 January 1949
        [day, month, year] if month_number(month).is_some() && parse_number(day).is_some() => {
            let m = month_number(month)?;
            Some(TimePoint::year_month_day(
                parse_year(year)?,
                m,
                parse_number(day)?,
            ))
        }
        // January 1, 1949
        [month, day, year] => {
            let m = month_number(month)?;
            let d = parse_number(day.trim_end_matches(','))?;
            Some(TimePoint::year_month_day(parse_year(year)?, m, d))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn start(s: &str) -> TimePoint {
        normalize_timestamp(s, IntervalSide::Start).unwrap()
    }

    #[test]
    fn bare_year() {
        assert_eq!(start("1946"), TimePoint::year(1946));
    }

    #[test]
    fn year_month() {
        assert_eq!(start("1949-01"), TimePoint::year_month(1949, 1).unwrap());
    }

    #[test]
    fn month_name_forms() {
        let expected = TimePoint::year_month(1949, 1).unwrap();
        assert_eq!(start("January 1949"), expected);
        assert_eq!(start("jan 1949"), expected);
        let day = TimePoint::year_month_day(1949, 1, 3).unwrap();
        assert_eq!(start("3 January 1949"), day);
        assert_eq!(start("January 3, 1949"), day);
    }

    #[test]
    fn sentinels_resolve_by_side() {
        assert_eq!(
            normalize_timestamp("unknown", IntervalSide::Start).unwrap(),
            TimePoint::NegativeInfinity
        );
        assert_eq!(
            normalize_timestamp("unknown", IntervalSide::End).unwrap(),
            TimePoint::PositiveInfinity
        );
        assert_eq!(
            normalize_timestamp("Present", IntervalSide::Start).unwrap(),
            TimePoint::PositiveInfinity
        );
    }

    #[test]
    fn garbage_is_an_error_with_span() {
        let err = normalize_timestamp("sometime soon", IntervalSide::Start).unwrap_err();
        let diag = err.diagnostic().unwrap();
        assert_eq!(diag.span, 0.."sometime soon".len());
    }

    #[test]
    fn invalid_calendar_dates_rejected() {
        assert!(normalize_timestamp("2001-02-29", IntervalSide::Start).is_err());
        assert!(normalize_timestamp("1949-13", IntervalSide::Start).is_err());
        assert!(normalize_timestamp("12345", IntervalSide::Start).is_err());
    }
}
