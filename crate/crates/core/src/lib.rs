//! Static level-ancestor, level-descendant and level-successor queries.
//!
//! A rooted tree is flattened into its Euler tour. The tour's level
//! sequence changes by exactly one at every step, and each tree query
//! becomes a "find the next position holding a value at most / at least
//! `x`" query over that sequence. [`LinearFs`] answers those in constant
//! time with linear preprocessing; [`LevelIndex`] wraps the whole thing
//! behind a tree-shaped API.
//!
//! ```
//! use eulerla::{LevelIndex, Tree};
//!
//! let tree = Tree::from_parents(&[-1, 0, 1, 2]).unwrap();
//! let index = LevelIndex::new(&tree);
//! assert_eq!(index.level_ancestor(3, 1), Some(1));
//! assert_eq!(index.level_descendant(0, 2), Some(2));
//! assert_eq!(index.level_successor(3), None);
//! ```

pub mod array;
pub mod bitops;
mod error;
pub mod fs_basic;
pub mod fs_greater;
pub mod fs_linear;
pub mod levels;
pub mod micro;
pub mod oracle;
pub mod tree;

pub use array::PmOneArray;
pub use error::Error;
pub use fs_basic::BasicFs;
pub use fs_greater::GreaterFs;
pub use fs_linear::{LinearFs, LinearOptions, QueryCase, Trace};
pub use levels::LevelIndex;
pub use micro::MicroVariant;
pub use tree::{EulerTour, Tree};

/// Sentinel stored in answer tables for "no qualifying position".
///
/// Every real answer is a position strictly greater than the query
/// position, so zero never collides with one.
pub(crate) const NO_ANSWER: u32 = 0;
