//! Tree-level queries on top of the Euler tour.
//!
//! * The level-`l` ancestor of `v` is the first tour vertex after `v`'s
//!   last occurrence whose level is at most `l`.
//! * The first level-`l` descendant of `v` is the first tour vertex after
//!   `v`'s first occurrence whose level is at least `l`, if that vertex
//!   lies in `v`'s subtree.
//! * The level successor of `v` is the first tour vertex after `v`'s last
//!   occurrence whose level is at least `level(v)`.

use crate::fs_greater::GreaterFs;
use crate::fs_linear::{LinearFs, LinearOptions};
use crate::tree::{EulerTour, Tree};

#[derive(Debug, Clone)]
pub struct LevelIndex {
    tour: EulerTour,
    smaller: LinearFs,
    greater: GreaterFs,
}

impl LevelIndex {
    pub fn new(tree: &Tree) -> Self {
        Self::with_options(tree, LinearOptions::default())
    }

    pub fn with_options(tree: &Tree, opts: LinearOptions) -> Self {
        let tour = tree.euler_tour();
        let levels = tour.levels_i64();
        let smaller = LinearFs::build(&levels, opts).expect("tour levels move by one");
        let greater = GreaterFs::build(&levels, opts).expect("tour levels move by one");
        LevelIndex {
            tour,
            smaller,
            greater,
        }
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.tour.first.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tour.first.is_empty()
    }

    #[inline]
    pub fn level(&self, v: usize) -> usize {
        self.tour.levels[self.tour.first[v] as usize] as usize
    }

    pub fn max_level(&self) -> usize {
        self.tour.levels.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn tour(&self) -> &EulerTour {
        &self.tour
    }

    pub fn smaller(&self) -> &LinearFs {
        &self.smaller
    }

    pub fn greater(&self) -> &GreaterFs {
        &self.greater
    }

    /// Ancestor of `v` at level `l`; `v` itself when `l == level(v)`.
    pub fn level_ancestor(&self, v: usize, l: usize) -> Option<usize> {
        let lv = self.level(v);
        if l >= lv {
            return (l == lv).then_some(v);
        }
        let from = self.tour.last[v] as usize;
        self.smaller
            .query(from, l as i64)
            .map(|p| self.tour.vertices[p] as usize)
    }

    /// Preorder-first descendant of `v` at level `l`; `v` itself when
    /// `l == level(v)`.
    pub fn level_descendant(&self, v: usize, l: usize) -> Option<usize> {
        let lv = self.level(v);
        if l <= lv {
            return (l == lv).then_some(v);
        }
        let from = self.tour.first[v] as usize + 1;
        if from >= self.tour.len() {
            return None;
        }
        let u = self.tour.vertices[self.greater.query(from, l as i64)?] as usize;
        self.is_descendant(u, v).then_some(u)
    }

    /// Next vertex after `v` in preorder with the same level.
    pub fn level_successor(&self, v: usize) -> Option<usize> {
        let from = self.tour.last[v] as usize + 1;
        if from >= self.tour.len() {
            return None;
        }
        self.greater
            .query(from, self.level(v) as i64)
            .map(|p| self.tour.vertices[p] as usize)
    }

    /// Whether `u` lies in the subtree of `v`, `v` included.
    #[inline]
    pub fn is_descendant(&self, u: usize, v: usize) -> bool {
        let fu = self.tour.first[u];
        self.tour.first[v] <= fu && fu <= self.tour.last[v]
    }

    /// Vertices at level `l` under `v` in preorder, by chaining level
    /// successors from the first descendant.
    pub fn descendants_at(&self, v: usize, l: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(self.level_descendant(v, l), move |&u| {
            self.level_successor(u)
                .filter(|&w| self.is_descendant(w, v))
        })
    }

    pub fn words(&self) -> usize {
        4 * self.tour.len() + self.smaller.words() + self.greater.words()
    }

    pub fn heap_bytes(&self) -> usize {
        (2 * self.tour.len() + 2 * self.len()) * std::mem::size_of::<u32>()
            + self.smaller.heap_bytes()
            + self.greater.heap_bytes()
    }
}
