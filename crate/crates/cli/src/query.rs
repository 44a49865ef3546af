//! Batch query files: one query per line, `LA v l`, `LD v l` or `LS v`.

use std::fmt::Write as _;

use eulerla::{LevelIndex, LinearOptions};

use crate::{load_tree, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryKind {
    LevelAncestor,
    LevelDescendant,
    LevelSuccessor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueryRecord {
    pub kind: QueryKind,
    pub vertex: usize,
    /// Target level; absent for level-successor queries.
    pub level: Option<usize>,
}

impl std::fmt::Display for QueryRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self.kind {
            QueryKind::LevelAncestor => "LA",
            QueryKind::LevelDescendant => "LD",
            QueryKind::LevelSuccessor => "LS",
        };
        match self.level {
            Some(l) => write!(f, "{tag} {} {l}", self.vertex),
            None => write!(f, "{tag} {}", self.vertex),
        }
    }
}

/// Parses one non-empty query line against a tree of `n` vertices.
pub fn parse_line(line: &str, n: usize) -> Result<QueryRecord, String> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let (kind, arity) = match tokens.first().copied() {
        Some("LA") => (QueryKind::LevelAncestor, 3),
        Some("LD") => (QueryKind::LevelDescendant, 3),
        Some("LS") => (QueryKind::LevelSuccessor, 2),
        Some(other) => return Err(format!("unknown query kind {other:?}")),
        None => return Err("empty query".into()),
    };
    if tokens.len() != arity {
        return Err(format!(
            "{} expects {} argument(s), found {}",
            tokens[0],
            arity - 1,
            tokens.len() - 1
        ));
    }
    let number = |tok: &str, what: &str| {
        tok.parse::<usize>()
            .map_err(|_| format!("{what} {tok:?} is not a non-negative integer"))
    };
    let vertex = number(tokens[1], "vertex")?;
    if vertex >= n {
        return Err(format!("vertex {vertex} out of range for {n} vertices"));
    }
    let level = tokens.get(2).map(|t| number(t, "level")).transpose()?;
    Ok(QueryRecord {
        kind,
        vertex,
        level,
    })
}

/// Parses a whole query file, skipping blank lines.
pub fn parse_queries(text: &str, file: &str, n: usize) -> Result<Vec<QueryRecord>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_line(l, n).map_err(|reason| CliError::Parse {
                file: file.to_owned(),
                line: i + 1,
                reason,
            })
        })
        .collect()
}

pub fn answer(index: &LevelIndex, q: &QueryRecord) -> Option<usize> {
    match q.kind {
        QueryKind::LevelAncestor => index.level_ancestor(q.vertex, q.level.unwrap_or(0)),
        QueryKind::LevelDescendant => index.level_descendant(q.vertex, q.level.unwrap_or(0)),
        QueryKind::LevelSuccessor => index.level_successor(q.vertex),
    }
}

/// One output line per query: the answer vertex, or `-` for none.
pub fn format_answers(index: &LevelIndex, queries: &[QueryRecord]) -> String {
    let mut out = String::with_capacity(queries.len() * 7);
    for q in queries {
        match answer(index, q) {
            Some(v) => writeln!(out, "{v}").unwrap(),
            None => out.push_str("-\n"),
        }
    }
    out
}

/// Full `query` command on in-memory inputs.
pub fn run(
    tree_text: &str,
    tree_file: &str,
    queries_text: &str,
    queries_file: &str,
    opts: LinearOptions,
) -> Result<String, CliError> {
    let tree = load_tree(tree_text, tree_file)?;
    let queries = parse_queries(queries_text, queries_file, tree.len())?;
    let index = LevelIndex::with_options(&tree, opts);
    Ok(format_answers(&index, &queries))
}
