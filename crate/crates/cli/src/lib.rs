//! Command implementations behind the `eulerla` binary.

pub mod bench;
pub mod gen;
pub mod query;
pub mod selftest;

use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{file}:{line}: {reason}")]
    Parse {
        file: String,
        line: usize,
        reason: String,
    },
    #[error("{file}: invalid tree: {source}")]
    Tree {
        file: String,
        source: eulerla::Error,
    },
    #[error("{0}")]
    Usage(String),
    /// The self-test found a disagreement with the brute force.
    #[error("self-test failed\n{0}")]
    Check(String),
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Parses and validates a tree in the text format.
pub fn load_tree(text: &str, file: &str) -> Result<eulerla::Tree, CliError> {
    let parents = eulerla::tree::parse_tree_text(text).map_err(|e| CliError::Parse {
        file: file.to_owned(),
        line: e.line,
        reason: e.reason,
    })?;
    eulerla::Tree::from_parents(&parents).map_err(|source| CliError::Tree {
        file: file.to_owned(),
        source,
    })
}
