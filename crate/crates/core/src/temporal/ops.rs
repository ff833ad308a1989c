//! Interval logic over fact sets: overlap, relevance and subject filtering,
//! adjacency, and entailment.

use serde::{Deserialize, Serialize};

use super::fact::{AnswerCandidate, FactSet, TemporalFact};
use super::interval::TimeInterval;
use super::{canonical_entity, TemporalError};

/// True iff the two closed intervals intersect once their bounds are widened
/// to day granularity: `start(a) ≤ end(b)` and `start(b) ≤ end(a)`. A shared
/// endpoint counts as overlap.
pub fn intervals_overlap(a: &TimeInterval, b: &TimeInterval) -> bool {
    a.lower() <= b.upper() && b.lower() <= a.upper()
}

/// The facts whose interval overlaps `query_interval`, in original order.
pub fn filter_relevant(facts: &FactSet, query_interval: &TimeInterval) -> FactSet {
    facts
        .iter()
        .filter(|f| intervals_overlap(f.interval(), query_interval))
        .cloned()
        .collect()
}

/// The facts whose subject equals `subject` under canonical entity
/// comparison (case-insensitive, whitespace-collapsed), in original order.
pub fn filter_subject(facts: &FactSet, subject: &str) -> FactSet {
    let wanted = canonical_entity(subject);
    facts
        .iter()
        .filter(|f| canonical_entity(f.subject()) == wanted)
        .cloned()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Before,
    After,
}

/// Finds the fact adjacent to a reference fact in time.
///
/// The reference is the first fact (insertion order) with the given relation
/// and subject whose object matches `reference_object` canonically; if none
/// exists this is an error. `Before` returns the fact with the same relation
/// and subject but a different object whose end is maximal while still at or
/// before the reference's start; `After` is symmetric (minimal start at or
/// after the reference's end). Endpoints are compared in the raw point order,
/// so an end of `1949-01` meets a start of `1949-01` exactly. Ties prefer the
/// latest start (`Before`) or earliest end (`After`), then the
/// lexicographically smallest canonical object. No qualifying fact yields
/// `None`.
pub fn find_adjacent<'a>(
    facts: &'a FactSet,
    relation: &str,
    subject: &str,
    reference_object: &str,
    direction: Direction,
) -> Result<Option<&'a TemporalFact>, TemporalError> {
    let subject_key = canonical_entity(subject);
    let reference_key = canonical_entity(reference_object);
    let in_scope = |f: &TemporalFact| {
        f.relation() == relation && canonical_entity(f.subject()) == subject_key
    };

    let reference = facts
        .iter()
        .find(|f| in_scope(f) && canonical_entity(f.object()) == reference_key)
        .ok_or_else(|| TemporalError::ReferenceNotFound(reference_object.to_string()))?;

    let mut best: Option<&TemporalFact> = None;
    for fact in facts.iter() {
        if !in_scope(fact) || canonical_entity(fact.object()) == reference_key {
            continue;
        }
        let qualifies = match direction {
            Direction::Before => fact.interval().end() <= reference.interval().start(),
            Direction::After => fact.interval().start() >= reference.interval().end(),
        };
        if !qualifies {
            continue;
        }
        best = match best {
            None => Some(fact),
            Some(current) => {
                if beats(fact, current, direction) {
                    Some(fact)
                } else {
                    Some(current)
                }
            }
        };
    }
    Ok(best)
}

fn beats(challenger: &TemporalFact, current: &TemporalFact, direction: Direction) -> bool {
    use std::cmp::Ordering;
    let (primary, secondary) = match direction {
        // Maximal end, then latest start.
        Direction::Before => (
            challenger.interval().end().cmp(&current.interval().end()),
            challenger
                .interval()
                .start()
                .cmp(&current.interval().start()),
        ),
        // Minimal start, then earliest end — reversed so Greater means better.
        Direction::After => (
            current.interval().start().cmp(&challenger.interval().start()),
            current.interval().end().cmp(&challenger.interval().end()),
        ),
    };
    match primary {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => match secondary {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => {
                canonical_entity(challenger.object()) < canonical_entity(current.object())
            }
        },
    }
}

/// Eq. of entailment made concrete: the fact supports the candidate when the
/// relation identifiers are equal, subject and object match canonically, and
/// the candidate either claims no interval or claims one overlapping the
/// fact's.
pub fn entails(fact: &TemporalFact, candidate: &AnswerCandidate) -> bool {
    fact.relation() == candidate.relation()
        && canonical_entity(fact.subject()) == canonical_entity(candidate.subject())
        && canonical_entity(fact.object()) == canonical_entity(candidate.object())
        && candidate
            .interval()
            .map_or(true, |iv| intervals_overlap(fact.interval(), iv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal::TimePoint;

    fn years(a: i32, b: i32) -> TimeInterval {
        TimeInterval::new(TimePoint::year(a), TimePoint::year(b)).unwrap()
    }

    fn ym(y: i32, m: u32) -> TimePoint {
        TimePoint::year_month(y, m).unwrap()
    }

    /// The two running-example facts, at year-month granularity.
    fn pelikan_facts() -> FactSet {
        [
            TemporalFact::new(
                "works_for",
                "Jaroslav Pelikan",
                "Valparaiso University",
                TimeInterval::new(ym(1946, 1), ym(1949, 1)).unwrap(),
            )
            .unwrap(),
            TemporalFact::new(
                "works_for",
                "Jaroslav Pelikan",
                "Concordia Seminary",
                TimeInterval::new(ym(1949, 1), ym(1953, 1)).unwrap(),
            )
            .unwrap(),
        ]
        .into_iter()
        .collect()
    }

    fn pelikan_facts_years() -> FactSet {
        [
            TemporalFact::new("works_for", "Jaroslav Pelikan", "Valparaiso University", years(1946, 1949)).unwrap(),
            TemporalFact::new("works_for", "Jaroslav Pelikan", "Concordia Seminary", years(1949, 1953)).unwrap(),
        ]
        .into_iter()
        .collect()
    }

    #[test]
    fn containment_overlaps() {
        assert!(intervals_overlap(&years(1946, 1949), &years(1947, 1948)));
    }

    #[test]
    fn shared_endpoint_overlaps() {
        let a = TimeInterval::new(ym(1946, 1), ym(1949, 1)).unwrap();
        let b = TimeInterval::new(ym(1949, 1), ym(1953, 1)).unwrap();
        assert!(intervals_overlap(&a, &b));
        assert!(intervals_overlap(&b, &a));
    }

    #[test]
    fn disjoint_years_do_not_overlap() {
        assert!(!intervals_overlap(&years(1946, 1949), &years(1950, 1951)));
    }

    #[test]
    fn filter_relevant_keeps_only_overlapping() {
        let facts = pelikan_facts_years();
        let kept = filter_relevant(&facts, &years(1947, 1948));
        assert_eq!(kept.len(), 1);
        assert_eq!(kept.get(0).unwrap().object(), "Valparaiso University");
    }

    #[test]
    fn universal_interval_keeps_everything() {
        let facts = pelikan_facts_years();
        assert_eq!(filter_relevant(&facts, &TimeInterval::universal()).len(), 2);
    }

    #[test]
    fn filter_relevant_on_empty_set_is_empty() {
        assert!(filter_relevant(&FactSet::new(), &years(1, 2)).is_empty());
    }

    #[test]
    fn filter_subject_exact_and_canonical() {
        let facts = pelikan_facts_years();
        assert_eq!(filter_subject(&facts, "Jaroslav Pelikan").len(), 2);
        assert_eq!(filter_subject(&facts, "Jessica Valenti").len(), 0);
        assert_eq!(filter_subject(&facts, "  jaroslav  PELIKAN ").len(), 2);
    }

    #[test]
    fn adjacent_before_matches_end_to_start() {
        let facts = pelikan_facts();
        let found = find_adjacent(
            &facts,
            "works_for",
            "Jaroslav Pelikan",
            "Concordia Seminary",
            Direction::Before,
        )
        .unwrap()
        .unwrap();
        assert_eq!(found.object(), "Valparaiso University");
    }

    #[test]
    fn adjacent_after_is_symmetric() {
        let facts = pelikan_facts();
        let found = find_adjacent(
            &facts,
            "works_for",
            "Jaroslav Pelikan",
            "Valparaiso University",
            Direction::After,
        )
        .unwrap()
        .unwrap();
        assert_eq!(found.object(), "Concordia Seminary");
    }

    #[test]
    fn adjacent_on_singleton_is_none() {
        let facts: FactSet = [TemporalFact::new(
            "works_for",
            "Jaroslav Pelikan",
            "Valparaiso University",
            years(1946, 1949),
        )
        .unwrap()]
        .into_iter()
        .collect();
        let found = find_adjacent(
            &facts,
            "works_for",
            "Jaroslav Pelikan",
            "Valparaiso University",
            Direction::Before,
        )
        .unwrap();
        assert!(found.is_none());
    }

    #[test]
    fn adjacent_unknown_reference_errors() {
        let facts = pelikan_facts();
        let err = find_adjacent(
            &facts,
            "works_for",
            "Jaroslav Pelikan",
            "Yale",
            Direction::Before,
        )
        .unwrap_err();
        assert_eq!(err, TemporalError::ReferenceNotFound("Yale".into()));
    }

    #[test]
    fn adjacent_prefers_maximal_end_then_latest_start_then_object() {
        let mk = |obj: &str, a: TimePoint, b: TimePoint| {
            TemporalFact::new("works_for", "S", obj, TimeInterval::raw(a, b)).unwrap()
        };
        let facts: FactSet = [
            mk("ref", ym(1950, 1), ym(1955, 1)),
            mk("early", TimePoint::year(1940), TimePoint::year(1944)),
            mk("b", TimePoint::year(1941), ym(1950, 1)),
            mk("a", TimePoint::year(1941), ym(1950, 1)),
            mk("shorter", TimePoint::year(1939), ym(1950, 1)),
        ]
        .into_iter()
        .collect();
        let found = find_adjacent(&facts, "works_for", "S", "ref", Direction::Before)
            .unwrap()
            .unwrap();
        // Maximal end 1950-01 beats 1944; latest start 1941 beats 1939;
        // object "a" < "b".
        assert_eq!(found.object(), "a");
    }

    #[test]
    fn entails_definition() {
        let fact = TemporalFact::new("works_for", "JP", "Valparaiso University", years(1946, 1949)).unwrap();
        let supported =
            AnswerCandidate::new("works_for", "JP", "Valparaiso University", Some(years(1947, 1948))).unwrap();
        assert!(entails(&fact, &supported));

        let wrong_object =
            AnswerCandidate::new("works_for", "JP", "Concordia Seminary", Some(years(1947, 1948))).unwrap();
        assert!(!entails(&fact, &wrong_object));

        let no_interval = AnswerCandidate::new("works_for", "JP", "Valparaiso University", None).unwrap();
        assert!(entails(&fact, &no_interval));

        let disjoint =
            AnswerCandidate::new("works_for", "JP", "Valparaiso University", Some(years(1990, 1991))).unwrap();
        assert!(!entails(&fact, &disjoint));
    }
}
