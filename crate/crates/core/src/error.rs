use thiserror::Error;

use crate::name::Name;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rule {rule} has no redex at {path}")]
    NoRedex { rule: String, path: String },
    #[error("rule {0} is not enabled in this calculus")]
    RuleDisabled(String),
    #[error("fuel exhausted after {steps} steps")]
    FuelExhausted { steps: usize },
    #[error("unbound variable {0}")]
    UnboundVariable(Name),
    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },
    #[error("cannot synthesize a type for {0}; add an ascription")]
    CannotSynthesize(String),
    #[error("inconsistent context: {0} declared twice")]
    InconsistentContext(Name),
    #[error("type {0} is outside its class")]
    ClassViolation(String),
    #[error("linearity violation: {0}")]
    LinearityViolation(String),
    #[error("continuation variable used in the wrong mode: {0}")]
    ModeViolation(String),
    #[error("malformed term: {0}")]
    Malformed(String),
    #[error("freshness violation: {0} is free where it must not be")]
    FreshnessViolation(Name),
    #[error("stage mismatch: {stage} expects {expected}, got {found}")]
    StageMismatch { stage: String, expected: String, found: String },
    #[error("unknown pipeline stage {0}")]
    UnknownStage(String),
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error("unknown calculus {0}")]
    UnknownCalculus(String),
    #[error("unknown rule {0}")]
    UnknownRule(String),
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("reserved name {0} used outside continuation positions")]
    ReservedName(Name),
    #[error("generation failed: {0}")]
    GenerationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
