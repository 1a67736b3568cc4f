use thiserror::Error;

/// Errors raised by the hive, honeycomb and lift operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("boundary weights do not sum to zero (total {0})")]
    ZeroSumViolation(String),
    #[error("weight {0:?} is not weakly decreasing")]
    NotDominant(Vec<String>),
    #[error("weights have inconsistent lengths")]
    LengthMismatch,
    #[error("counting requires integral boundary data")]
    NonIntegralBoundary,
    #[error("rhombus {0} has negative value")]
    RhombusViolation(String),
    #[error("edge {0} is off-axis or has negative length")]
    DirectionViolation(usize),
    #[error("tinkertoy type {0:?} does not close up")]
    TypeDoesNotClose([i64; 6]),
    #[error("vertex tension does not vanish")]
    TensionViolation,
    #[error("ray pattern matches no vertex type")]
    UnknownPattern,
    #[error("not a honeycomb diagram: {0}")]
    NotADiagram(DiagramDefect),
    #[error("both inputs are unions of parallel lines")]
    ParallelLinesOnly,
    #[error("vertex at {0} is not a simple degeneracy")]
    NotSimplyDegenerate(String),
    #[error("vertex is not degenerate")]
    NotDegenerate,
    #[error("breathing step too large; maximal legal step is {0}")]
    EpsilonTooLarge(String),
    #[error("graph contains a cycle")]
    HasCycle,
    #[error("forest does not determine every edge")]
    Underdetermined,
    #[error("hive polytope is empty")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("optimum is not unique")]
    DegenerateOptimum,
    #[error("problem exceeds the enumeration guard (n = {0})")]
    TooLarge(usize),
    #[error("partition sizes disagree")]
    SizeMismatch,
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Why a measure failed the honeycomb-diagram axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DiagramDefect {
    #[error("tension")]
    Tension,
    #[error("disconnected")]
    Disconnected,
    #[error("parallel-lines")]
    ParallelLines,
    #[error("nonintegral-multiplicity")]
    NonintegralMultiplicity,
    #[error("monodromy")]
    Monodromy,
}

pub type Result<T> = std::result::Result<T, Error>;
