//! Tree ingestion and the Euler tour.

use std::fmt::Write as _;

use crate::Error;

/// A validated rooted tree over vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from a parent array, `-1` marking the root.
    ///
    /// Children of each vertex are kept in ascending id order.
    pub fn from_parents(parents: &[i64]) -> Result<Tree, Error> {
        let n = parents.len();
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        let mut root = None;
        let mut parent = Vec::with_capacity(n);
        let mut children = vec![Vec::new(); n];
        for (v, &p) in parents.iter().enumerate() {
            if p == -1 {
                if let Some(first) = root {
                    return Err(Error::MultipleRoots { first, second: v });
                }
                root = Some(v);
                parent.push(None);
            } else if p < 0 || p as u64 >= n as u64 {
                return Err(Error::ParentOutOfRange {
                    vertex: v,
                    parent: p,
                    n,
                });
            } else {
                parent.push(Some(p as usize));
                children[p as usize].push(v);
            }
        }
        let root = root.ok_or(Error::NoRoot)?;

        // With exactly one root, any vertex unreachable from it sits on a cycle.
        let mut reached = vec![false; n];
        let mut stack = vec![root];
        reached[root] = true;
        while let Some(v) = stack.pop() {
            for &c in &children[v] {
                reached[c] = true;
                stack.push(c);
            }
        }
        if let Some(vertex) = reached.iter().position(|&r| !r) {
            return Err(Error::CycleDetected { vertex });
        }

        Ok(Tree {
            root,
            parent,
            children,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    #[inline]
    pub fn root(&self) -> usize {
        self.root
    }

    #[inline]
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    #[inline]
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// The parent array with `-1` for the root.
    pub fn parents(&self) -> Vec<i64> {
        self.parent
            .iter()
            .map(|p| p.map_or(-1, |p| p as i64))
            .collect()
    }

    /// Serializes to the two-line text format read by [`parse_tree_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.len() * 7 + 16);
        writeln!(out, "{}", self.len()).unwrap();
        for (v, p) in self.parents().into_iter().enumerate() {
            if v > 0 {
                out.push(' ');
            }
            write!(out, "{p}").unwrap();
        }
        out.push('\n');
        out
    }

    pub fn euler_tour(&self) -> EulerTour {
        EulerTour::new(self)
    }
}

/// Failure while reading the tree text format; `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {reason}")]
pub struct TextError {
    pub line: usize,
    pub reason: String,
}

/// Reads the tree text format: the vertex count on the first line, then
/// the parent of every vertex (root as `-1`), whitespace-separated.
pub fn parse_tree_text(text: &str) -> Result<Vec<i64>, TextError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (count_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| TextError {
            line: 1,
            reason: "missing vertex count".into(),
        })?;
    let n: usize = header.trim().parse().map_err(|_| TextError {
        line: count_line,
        reason: format!("invalid vertex count {:?}", header.trim()),
    })?;

    let mut parents = Vec::with_capacity(n);
    let mut last_line = count_line;
    for (line, content) in lines {
        last_line = line;
        for tok in content.split_whitespace() {
            if parents.len() == n {
                return Err(TextError {
                    line,
                    reason: format!("more than {n} parent entries"),
                });
            }
            let p: i64 = tok.parse().map_err(|_| TextError {
                line,
                reason: format!("invalid parent entry {tok:?}"),
            })?;
            parents.push(p);
        }
    }
    if parents.len() != n {
        return Err(TextError {
            line: last_line,
            reason: format!("expected {n} parent entries, found {}", parents.len()),
        });
    }
    Ok(parents)
}

/// The Euler tour of a tree: every vertex visit of a DFS that walks each
/// edge down and back up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTour {
    /// Vertex at each tour position.
    pub vertices: Vec<u32>,
    /// Level of the vertex at each tour position.
    pub levels: Vec<u32>,
    /// Last tour position of each vertex (its representative).
    pub last: Vec<u32>,
    /// First tour position of each vertex.
    pub first: Vec<u32>,
}

impl EulerTour {
    pub fn new(tree: &Tree) -> EulerTour {
        let n = tree.len();
        let tour_len = 2 * n - 1;
        assert!(
            tour_len <= u32::MAX as usize,
            "tree too large for 32-bit tour"
        );
        let mut vertices = Vec::with_capacity(tour_len);
        let mut levels = Vec::with_capacity(tour_len);
        let mut first = vec![u32::MAX; n];
        let mut last = vec![0u32; n];

        let mut visit = |v: usize, level: u32, vertices: &mut Vec<u32>| {
            let pos = vertices.len() as u32;
            if first[v] == u32::MAX {
                first[v] = pos;
            }
            last[v] = pos;
            vertices.push(v as u32);
            levels.push(level);
        };

        // (vertex, index of the next child to descend into)
        let mut stack: Vec<(usize, usize)> = vec![(tree.root(), 0)];
        visit(tree.root(), 0, &mut vertices);
        while let Some(top) = stack.last_mut() {
            let (v, next) = *top;
            if let Some(&c) = tree.children(v).get(next) {
                top.1 += 1;
                stack.push((c, 0));
                visit(c, (stack.len() - 1) as u32, &mut vertices);
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    visit(p, (stack.len() - 1) as u32, &mut vertices);
                }
            }
        }
        debug_assert_eq!(vertices.len(), tour_len);

        EulerTour {
            vertices,
            levels,
            last,
            first,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Tour levels widened for the find-smaller structures.
    pub fn levels_i64(&self) -> Vec<i64> {
        self.levels.iter().map(|&l| l as i64).collect()
    }
}
