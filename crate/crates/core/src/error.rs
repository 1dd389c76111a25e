use std::fmt;

use thiserror::Error;

/// One of the four sides of a tile or of the grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    Left,
    Right,
    Up,
    Down,
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Dir::Left => "left",
            Dir::Right => "right",
            Dir::Up => "up",
            Dir::Down => "down",
        };
        f.write_str(s)
    }
}

/// Grid boundary named by a boundary violation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Side::Top => "top",
            Side::Bottom => "bottom",
            Side::Left => "left",
            Side::Right => "right",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge mismatch at ({row},{col}) looking {dir}")]
    EdgeMismatch { row: usize, col: usize, dir: Dir },

    #[error("boundary violation on the {side} side at index {index}")]
    BoundaryViolation { side: Side, index: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix is not an alternating sign matrix: {0}")]
    NotAlternating(String),

    #[error("index {index} out of range 1..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid biword: {0}")]
    InvalidBiword(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("droop/undroop at row {row}, columns [{left},{right}]: {clause}")]
    DroopPreconditionViolated {
        row: usize,
        left: usize,
        right: usize,
        clause: &'static str,
    },

    #[error("no target in row {row}: {clause}")]
    NoTarget { row: usize, clause: String },

    #[error("row pop of the identity pipedream")]
    IdentityInput,

    #[error("row push failed: {0}")]
    PushPreconditionViolated(String),

    #[error("polynomial is not divisible by x{i} - x{j}")]
    NonDivisible { i: usize, j: usize },

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
