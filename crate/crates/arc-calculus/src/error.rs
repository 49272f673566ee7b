use orbifold_core::OrbifoldError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArcError {
    #[error("orbifold outside the oracle and catalog scope: {0}")]
    OutOfScope(String),
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("arc is not an isolated essential arc of the orbifold: {0}")]
    NotIsolated(String),
    #[error("not one of the four positive-χ families: {0}")]
    NotThresholdFamily(String),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
}
