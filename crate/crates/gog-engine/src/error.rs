use arc_calculus::ArcError;
use orbifold_core::{OrbifoldError, Violation};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GogError {
    #[error("graph is already completed")]
    AlreadyCompleted,
    #[error("graph is not completed")]
    NotCompleted,
    #[error("no edge with id {0}")]
    UnknownEdge(u32),
    #[error("no vertex with id {0}")]
    UnknownVertex(u32),
    #[error("invalid graph: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error(transparent)]
    Arc(#[from] ArcError),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
}
