use num::BigInt;

use crate::ineq::Var;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The difference-constraint graph admits a cycle of negative total
    /// length, so the described polyhedron is empty.  Vertices are 1-based.
    #[error("negative cycle {cycle:?} of total length {length}")]
    NegativeCycle { cycle: Vec<usize>, length: BigInt },

    #[error("unknown variable {0}")]
    UnknownVariable(Var),

    #[error("inequality system is infeasible")]
    Infeasible,

    #[error("slice at the pinned coordinate is empty")]
    EmptySlice,

    #[error("index set size mismatch: |I| = {0}, |J| = {1}")]
    SizeMismatch(usize, usize),

    #[error("index sets must be disjoint")]
    NotDisjoint,

    #[error("enumeration volume {volume} exceeds cap {cap}")]
    VolumeCap { volume: u128, cap: u64 },

    /// A description row violates the shape guaranteed by the sum theorems
    /// (coefficients in {-1,0,+1} and balanced index sets).  Seeing this
    /// means a bug, not bad input.
    #[error("description row violates the expected shape: {0}")]
    ShapeViolation(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}
