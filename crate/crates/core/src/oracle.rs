//! Brute-force reference answers.
//!
//! Every function here is a direct linear scan or parent walk. Nothing is
//! shared with the indexed structures, so tests can compare the two.

use crate::Tree;

/// First position `j > i` with `a[j] <= x`; returns `i` itself when
/// `a[i] <= x` already, matching the indexed query's first case.
pub fn oracle_fs(a: &[i64], i: usize, x: i64) -> Option<usize> {
    if a[i] <= x {
        return Some(i);
    }
    (i + 1..a.len()).find(|&j| a[j] <= x)
}

/// Mirror of [`oracle_fs`] with `>=`.
pub fn oracle_fg(a: &[i64], i: usize, x: i64) -> Option<usize> {
    if a[i] >= x {
        return Some(i);
    }
    (i + 1..a.len()).find(|&j| a[j] >= x)
}

/// Answers to [`oracle_fs`] from position `i` for every target in
/// `lo..=hi`, gathered by a single forward scan of running minima.
pub fn oracle_fs_all(a: &[i64], i: usize, lo: i64, hi: i64) -> Vec<Option<usize>> {
    let mut out = vec![None; (hi - lo + 1).max(0) as usize];
    let mut record = |from: i64, to: i64, pos: usize| {
        for x in from.max(lo)..=to.min(hi) {
            out[(x - lo) as usize] = Some(pos);
        }
    };
    record(a[i], hi, i);
    let mut running = a[i];
    for (j, &v) in a.iter().enumerate().skip(i + 1) {
        if v < running {
            record(v, running - 1, j);
            running = v;
        }
    }
    out
}

/// First position `j` in `i+1 .. limit` with `a[j] <= x`.
pub fn oracle_fs_window(a: &[i64], i: usize, x: i64, limit: usize) -> Option<usize> {
    (i + 1..limit.min(a.len())).find(|&j| a[j] <= x)
}

pub fn depth(tree: &Tree, mut v: usize) -> usize {
    let mut d = 0;
    while let Some(p) = tree.parent(v) {
        v = p;
        d += 1;
    }
    d
}

/// A tree with per-vertex depths and the full preorder precomputed by
/// plain walks, so repeated brute-force queries skip the setup.
#[derive(Debug, Clone)]
pub struct NaiveTree<'a> {
    tree: &'a Tree,
    depth: Vec<usize>,
    preorder: Vec<usize>,
    /// Position of each vertex in `preorder`.
    rank: Vec<usize>,
}

impl<'a> NaiveTree<'a> {
    pub fn new(tree: &'a Tree) -> Self {
        let depth: Vec<usize> = (0..tree.len()).map(|v| depth(tree, v)).collect();
        let mut preorder = Vec::with_capacity(tree.len());
        let mut stack = vec![tree.root()];
        while let Some(u) = stack.pop() {
            preorder.push(u);
            stack.extend(tree.children(u).iter().rev());
        }
        let mut rank = vec![0; tree.len()];
        for (i, &v) in preorder.iter().enumerate() {
            rank[v] = i;
        }
        NaiveTree {
            tree,
            depth,
            preorder,
            rank,
        }
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn level_ancestor(&self, v: usize, l: usize) -> Option<usize> {
        if l > self.depth[v] {
            return None;
        }
        let mut u = v;
        for _ in 0..self.depth[v] - l {
            u = self.tree.parent(u)?;
        }
        Some(u)
    }

    /// Preorder-first descendant of `v` at level `l`.
    pub fn level_descendant(&self, v: usize, l: usize) -> Option<usize> {
        if l < self.depth[v] {
            return None;
        }
        // The subtree of v is the preorder run starting at v, ending at the
        // first later vertex no deeper than v.
        self.preorder[self.rank[v]..]
            .iter()
            .enumerate()
            .take_while(|&(i, &u)| i == 0 || self.depth[u] > self.depth[v])
            .map(|(_, &u)| u)
            .find(|&u| self.depth[u] == l)
    }

    pub fn level_successor(&self, v: usize) -> Option<usize> {
        self.preorder[self.rank[v] + 1..]
            .iter()
            .copied()
            .find(|&u| self.depth[u] == self.depth[v])
    }

    pub fn is_descendant(&self, u: usize, v: usize) -> bool {
        oracle_is_descendant(self.tree, u, v)
    }
}

pub fn oracle_level_ancestor(tree: &Tree, v: usize, l: usize) -> Option<usize> {
    NaiveTree::new(tree).level_ancestor(v, l)
}

/// Preorder-first descendant of `v` at level `l`.
pub fn oracle_level_descendant(tree: &Tree, v: usize, l: usize) -> Option<usize> {
    NaiveTree::new(tree).level_descendant(v, l)
}

/// Next vertex after `v` in preorder on the same level.
pub fn oracle_level_successor(tree: &Tree, v: usize) -> Option<usize> {
    NaiveTree::new(tree).level_successor(v)
}

/// Whether `u` lies in the subtree of `v` (inclusive).
pub fn oracle_is_descendant(tree: &Tree, u: usize, v: usize) -> bool {
    let mut w = Some(u);
    while let Some(x) = w {
        if x == v {
            return true;
        }
        w = tree.parent(x);
    }
    false
}
