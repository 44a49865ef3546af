use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("array is empty")]
    EmptyArray,
    #[error("adjacent values at positions {position} and {} differ by something other than 1", position + 1)]
    NotPlusMinusOne { position: usize },
    #[error("array of length {len} does not fit 32-bit table entries")]
    TooLarge { len: usize },
    #[error("tree has no vertices")]
    EmptyTree,
    #[error("vertices {first} and {second} are both marked as root")]
    MultipleRoots { first: usize, second: usize },
    #[error("no vertex is marked as root")]
    NoRoot,
    #[error("vertex {vertex} lies on a parent cycle")]
    CycleDetected { vertex: usize },
    #[error("vertex {vertex} has parent {parent}, outside 0..{n}")]
    ParentOutOfRange {
        vertex: usize,
        parent: i64,
        n: usize,
    },
}
