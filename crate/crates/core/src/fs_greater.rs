//! Find-greater: the mirror image of find-smaller, served by a
//! [`LinearFs`] over the negated array.

use crate::fs_linear::{LinearFs, LinearOptions};
use crate::Error;

#[derive(Debug, Clone)]
pub struct GreaterFs {
    inner: LinearFs,
}

impl GreaterFs {
    pub fn new(values: &[i64]) -> Result<Self, Error> {
        Self::build(values, LinearOptions::default())
    }

    pub fn build(values: &[i64], opts: LinearOptions) -> Result<Self, Error> {
        let negated: Vec<i64> = values.iter().map(|&v| -v).collect();
        Ok(GreaterFs {
            inner: LinearFs::build(&negated, opts)?,
        })
    }

    /// First position `j > i` with `a[j] >= x`, or `i` itself when
    /// `a[i] >= x`.
    #[inline]
    pub fn query(&self, i: usize, x: i64) -> Option<usize> {
        self.inner.query(i, -x)
    }

    #[inline]
    pub fn query_counted(&self, i: usize, x: i64) -> (Option<usize>, usize) {
        self.inner.query_counted(i, -x)
    }

    /// The find-smaller structure over the negated values.
    pub fn inner(&self) -> &LinearFs {
        &self.inner
    }

    pub fn words(&self) -> usize {
        self.inner.words()
    }

    pub fn heap_bytes(&self) -> usize {
        self.inner.heap_bytes()
    }
}
