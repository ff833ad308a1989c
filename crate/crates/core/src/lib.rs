//! Neuro-symbolic temporal reasoning toolkit.
//!
//! The crate combines a deterministic symbolic core for temporal facts with a
//! staged prompting pipeline and an evaluation harness for temporal question
//! answering:
//!
//! - [`temporal`] — calendar points, closed intervals, symbolic facts, and the
//!   interval logic used for relevance filtering, ordering, and entailment.
//! - [`text`] — parsing and serialization of symbolic predicates in three
//!   formats, timestamp normalization, and the tagged five-stage transcript
//!   protocol.
//! - [`audit`] — deterministic consistency checking over facts and answer
//!   candidates, plus abductive repair hypotheses for the reflection loop.
//! - [`pipeline`] — the five-stage orchestrator over a pluggable chat
//!   completion backend (mock or HTTP), with ablation switches.
//! - [`eval`] — dataset adapters, answer normalization, EM / token-F1 scoring,
//!   and multi-run aggregation.

pub mod audit;
pub mod eval;
pub mod pipeline;
pub mod temporal;
pub mod text;

pub use audit::{
    apply_repair, audit, propose_repairs, verify_answer, AuditError, ConsistencyReport,
    ConsistencyStatus, RepairHypothesis, RepairKind, RepairTarget, Violation, ViolationKind,
};
pub use eval::{
    aggregate, exact_match, load_dataset, normalize_answer, token_f1, DatasetId, EvalError,
    EvalRecord, ItemScores, LoadedDataset, RunScore, ScoreReport,
};
pub use pipeline::{
    build_stage_prompt, derive_query, extract_candidates, resolve_symbolic, run_pipeline,
    run_with_repeats, AblationFlags, AblationVariant, BackendError, BackendRequest, MockBackend,
    ModelBackend, PipelineConfig, PipelineError, PipelineTrace, RetryPolicy, SymbolicAnswer,
};
pub use temporal::{
    canonical_entity, compare_timepoints, entails, filter_relevant, filter_subject, find_adjacent,
    intervals_overlap, widen, AnswerCandidate, Direction, FactSet, IntervalSide, QueryKind,
    TemporalError, TemporalFact, TemporalQuery, TimeInterval, TimePoint,
};
pub use text::{
    normalize_timestamp, parse_fact, parse_fact_block, parse_tagged_output, scan_facts,
    serialize_fact, ParseDiagnostic, Severity, Stage, StageBlock, SymbolicFormat, TaggedTranscript,
    TextError,
};
