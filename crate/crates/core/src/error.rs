use thiserror::Error;

use crate::set::ElementId;

/// Errors raised by oracle construction, solvers and verifiers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("element {element} is outside a ground set of size {universe}")]
    ElementOutOfRange { element: usize, universe: usize },

    #[error("universe size mismatch: expected {expected}, found {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("set is not independent")]
    Dependent,

    #[error("cannot draw {requested} elements from a pool of {available}")]
    SampleTooLarge { requested: usize, available: usize },

    #[error("level count must lie in 1..={max}, got {found}")]
    InvalidLevels { found: usize, max: usize },

    #[error("epsilon must lie in (0, 1), got {0}")]
    InvalidEpsilon(f64),

    #[error("{what} limited to {limit}, got {found}")]
    ScaleExceeded {
        what: &'static str,
        limit: usize,
        found: usize,
    },

    #[error("parts are not pairwise disjoint (element {0} repeated)")]
    OverlappingParts(ElementId),

    #[error("exchange precondition violated: {0}")]
    ExchangePrecondition(&'static str),

    #[error("independent family is not a matroid: {0}")]
    NotAMatroid(String),

    #[error("no perfect exchange matching between the two bases")]
    NoPerfectMatching,

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid report: {0}")]
    InvalidReport(String),
}

pub type Result<T> = std::result::Result<T, Error>;
