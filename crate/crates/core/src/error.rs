use thiserror::Error;

/// Errors raised across the crate.
///
/// Axiom violations carry the lexicographically smallest witness found by a
/// full scan, so messages are reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tables have mismatched orders {add} and {mul}")]
    OrderMismatch { add: usize, mul: usize },
    #[error("order must be positive")]
    EmptyTable,
    #[error("order {order} exceeds the supported bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("entry {value} at ({row},{col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("addition is not associative: ({x}+{y})+{z} != {x}+({y}+{z})")]
    NotAssociativeAdd { x: usize, y: usize, z: usize },
    #[error("addition is not commutative: {x}+{y} != {y}+{x}")]
    NotCommutativeAdd { x: usize, y: usize },
    #[error("multiplication is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociativeMul { x: usize, y: usize, z: usize },
    #[error("left distributivity fails: {x}*({y}+{z}) != {x}*{y}+{x}*{z}")]
    NotLeftDistributive { x: usize, y: usize, z: usize },
    #[error("right distributivity fails: ({y}+{z})*{x} != {y}*{x}+{z}*{x}")]
    NotRightDistributive { x: usize, y: usize, z: usize },

    #[error("multiplication is not a band: {0}")]
    NotABand(String),
    #[error("not a semilattice: {0}")]
    NotASemilattice(String),
    #[error("partition is not a congruence: ({x},{y}) related but {detail}")]
    NotACongruence { x: usize, y: usize, detail: String },
    #[error("invalid partition labels: {0}")]
    InvalidPartition(String),
    #[error("element {element} out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("seed set is empty")]
    EmptySeed,

    #[error("no multiplicatively absorbing element")]
    NoAbsorbingElement,
    #[error("no bi-absorbing element")]
    NoBiAbsorbing,
    #[error("no zero element")]
    NoZero,
    #[error("semilattice has no least element")]
    NoLeastElement,
    #[error("semilattice has no greatest element")]
    NoGreatestElement,
    #[error("map {image:?} is not a semilattice endomorphism")]
    NotAnEndomorphism { image: Vec<usize> },
    #[error("permutation {0:?} is not a bijection")]
    InvalidPermutation(Vec<usize>),

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
