//! Symbolic facts — `relation(subject, object, start, end)` quadruples — and
//! ordered fact sets.

use serde::{Deserialize, Serialize};

use super::{canonical_entity, TemporalError, TimeInterval};

/// A symbolic quadruple: a relation holding between a subject and an object
/// over a time interval, optionally tagged with the index of the source
/// sentence it was extracted from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemporalFact {
    relation: String,
    subject: String,
    object: String,
    interval: TimeInterval,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    provenance: Option<usize>,
}

pub(crate) fn is_valid_relation(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn checked_entity(s: &str, field: &'static str) -> Result<String, TemporalError> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(TemporalError::EmptyEntity { field });
    }
    Ok(trimmed.to_string())
}

impl TemporalFact {
    /// Validates the relation identifier (letters, digits, underscore,
    /// starting with a letter) and trims both entities, which must be
    /// non-empty. The interval is taken as-is; inverted intervals are the
    /// consistency audit's business, not a construction error.
    pub fn new(
        relation: &str,
        subject: &str,
        object: &str,
        interval: TimeInterval,
    ) -> Result<Self, TemporalError> {
        if !is_valid_relation(relation) {
            return Err(TemporalError::InvalidRelation(relation.to_string()));
        }
        Ok(TemporalFact {
            relation: relation.to_string(),
            subject: checked_entity(subject, "subject")?,
            object: checked_entity(object, "object")?,
            interval,
            provenance: None,
        })
    }

    pub fn with_provenance(mut self, index: usize) -> Self {
        self.provenance = Some(index);
        self
    }

    pub fn relation(&self) -> &str {
        &self.relation
    }

    pub fn subject(&self) -> &str {
        &self.subject
    }

    pub fn object(&self) -> &str {
        &self.object
    }

    pub fn interval(&self) -> &TimeInterval {
        &self.interval
    }

    pub fn provenance(&self) -> Option<usize> {
        self.provenance
    }

    /// Returns a copy with the interval replaced (used by repairs).
    pub fn with_interval(&self, interval: TimeInterval) -> Self {
        let mut fact = self.clone();
        fact.interval = interval;
        fact
    }

    /// Returns a copy with the subject replaced (used by repairs).
    pub fn with_subject(&self, subject: &str) -> Result<Self, TemporalError> {
        let mut fact = self.clone();
        fact.subject = checked_entity(subject, "subject")?;
        Ok(fact)
    }

    /// Key under which two facts count as duplicates: relation plus
    /// canonicalized entities plus interval. Provenance is ignored.
    pub fn dedup_key(&self) -> (String, String, String, TimeInterval) {
        (
            self.relation.clone(),
            canonical_entity(&self.subject),
            canonical_entity(&self.object),
            self.interval,
        )
    }
}

/// An inferred conclusion to check against the fact set. The interval is
/// optional: a bare "X worked for Y" claim carries no temporal commitment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnswerCandidate {
    relation: String,
    subject: String,
    object: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    interval: Option<TimeInterval>,
}

impl AnswerCandidate {
    pub fn new(
        relation: &str,
        subject: &str,
        object: &str,
        interval: Option<TimeInterval>,
    ) -> Result<Self, TemporalError> {
        if !is_valid_relation(relation) {
            return Err(TemporalError::InvalidRelation(relation.to_string()));
        }
        Ok(AnswerCandidate {
            relation: relation.to_string(),
            subject: checked_entity(subject, "subject")?,
            object: checked_entity(object, "object")?,
            interval,
        })
    }

    pub fn relation(&self) -> &str {
        &self.relation
    }

    pub fn subject(&self) -> &str {
        &self.subject
    }

    pub fn object(&self) -> &str {
        &self.object
    }

    pub fn interval(&self) -> Option<&TimeInterval> {
        self.interval.as_ref()
    }

    pub fn dedup_key(&self) -> (String, String, String, Option<TimeInterval>) {
        (
            self.relation.clone(),
            canonical_entity(&self.subject),
            canonical_entity(&self.object),
            self.interval,
        )
    }
}

impl From<&TemporalFact> for AnswerCandidate {
    fn from(fact: &TemporalFact) -> Self {
        AnswerCandidate {
            relation: fact.relation().to_string(),
            subject: fact.subject().to_string(),
            object: fact.object().to_string(),
            interval: Some(*fact.interval()),
        }
    }
}

/// An ordered collection of facts. Insertion order is preserved; duplicates
/// are permitted and only flagged by [`FactSet::deduplicate`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FactSet {
    facts: Vec<TemporalFact>,
}

impl FactSet {
    pub fn new() -> Self {
        FactSet::default()
    }

    pub fn push(&mut self, fact: TemporalFact) {
        self.facts.push(fact);
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&TemporalFact> {
        self.facts.get(index)
    }

    pub fn facts(&self) -> &[TemporalFact] {
        &self.facts
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TemporalFact> {
        self.facts.iter()
    }

    /// Keeps the first occurrence of each duplicate group and reports the
    /// indices that were dropped.
    pub fn deduplicate(&self) -> (FactSet, Vec<usize>) {
        let mut seen = std::collections::HashSet::new();
        let mut kept = FactSet::new();
        let mut dropped = Vec::new();
        for (i, fact) in self.facts.iter().enumerate() {
            if seen.insert(fact.dedup_key()) {
                kept.push(fact.clone());
            } else {
                dropped.push(i);
            }
        }
        (kept, dropped)
    }
}

impl FromIterator<TemporalFact> for FactSet {
    fn from_iter<I: IntoIterator<Item = TemporalFact>>(iter: I) -> Self {
        FactSet {
            facts: iter.into_iter().collect(),
        }
    }
}

impl IntoIterator for FactSet {
    type Item = TemporalFact;
    type IntoIter = std::vec::IntoIter<TemporalFact>;

    fn into_iter(self) -> Self::IntoIter {
        self.facts.into_iter()
    }
}

impl<'a> IntoIterator for &'a FactSet {
    type Item = &'a TemporalFact;
    type IntoIter = std::slice::Iter<'a, TemporalFact>;

    fn into_iter(self) -> Self::IntoIter {
        self.facts.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal::TimePoint;

    fn interval(a: i32, b: i32) -> TimeInterval {
        TimeInterval::new(TimePoint::year(a), TimePoint::year(b)).unwrap()
    }

    #[test]
    fn fact_trims_entities() {
        let f = TemporalFact::new("works_for", "  Jaroslav Pelikan ", "Valparaiso University", interval(1946, 1949))
            .unwrap();
        assert_eq!(f.subject(), "Jaroslav Pelikan");
    }

    #[test]
    fn fact_rejects_bad_relation_and_empty_entities() {
        assert!(TemporalFact::new("9works", "a", "b", interval(1, 2)).is_err());
        assert!(TemporalFact::new("works for", "a", "b", interval(1, 2)).is_err());
        assert!(TemporalFact::new("works_for", "   ", "b", interval(1, 2)).is_err());
        assert!(TemporalFact::new("works_for", "a", "", interval(1, 2)).is_err());
    }

    #[test]
    fn dedup_keeps_first_and_flags_rest() {
        let mut set = FactSet::new();
        let f = TemporalFact::new("works_for", "A", "B", interval(1946, 1949)).unwrap();
        set.push(f.clone().with_provenance(0));
        set.push(TemporalFact::new("works_for", "C", "D", interval(1950, 1951)).unwrap());
        set.push(f.with_provenance(7)); // same key, distinct provenance
        let (kept, dropped) = set.deduplicate();
        assert_eq!(kept.len(), 2);
        assert_eq!(dropped, vec![2]);
    }
}
