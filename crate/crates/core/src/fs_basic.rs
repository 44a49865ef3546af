//! The `O(n log n)`-space find-smaller structure.
//!
//! Position `i` stores the answers for targets `a[i] - 1, a[i] - 2, ...`
//! down to a depth that depends on the height of `i` in the implicit
//! binary tree. A query whose target is deeper than `i` stores is
//! redirected to the binary-tree ancestor that covers the gap; because
//! values move by one per step, that ancestor has the same answer and
//! stores deep enough.

use crate::array::PmOneArray;
use crate::bitops::{lca_bt, rnz};
use crate::{Error, NO_ANSWER};

/// Which branch of the query procedure produced an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicCase {
    /// The target is already met at the query position.
    SelfHit,
    /// Below the global minimum; no table access.
    BelowMin,
    /// Read straight from the query position's table.
    Direct,
    /// Read from the table of binary-tree ancestor `k`.
    ViaAncestor { k: usize },
}

#[derive(Debug, Clone)]
pub struct BasicFs {
    arr: PmOneArray,
    clamp: bool,
    /// `offsets[i]..offsets[i + 1]` is table `i` inside `answers`.
    offsets: Vec<usize>,
    /// `answers[offsets[i] + j - 1]` is the answer for target `a[i] - j`.
    answers: Vec<u32>,
}

/// Table length at position `i` of an array of padded length `n`.
///
/// Unclamped lengths are `n` at position 0 and `3 * 2^rnz(i)` elsewhere.
/// Clamped lengths drop entries whose target falls below the minimum, and
/// cap the rest at `3 * 2^rnz(i) - 2`, the largest depth an ancestor
/// lookup can ever request.
fn table_len(i: usize, n: usize, value: i64, min: i64, clamp: bool) -> usize {
    if !clamp {
        return if i == 0 { n } else { 3 << rnz(i) };
    }
    let above_min = (value - min) as usize;
    let cap = if i == 0 { n } else { (3 << rnz(i)) - 2 };
    cap.min(above_min)
}

impl BasicFs {
    /// Builds with the full table lengths.
    pub fn new(values: &[i64]) -> Result<Self, Error> {
        Self::build(values, false)
    }

    /// Builds with `clamp` choosing the reduced table lengths.
    pub fn build(values: &[i64], clamp: bool) -> Result<Self, Error> {
        let arr = PmOneArray::new(values)?;
        let n = arr.len();
        let min = arr.min();
        let span = (arr.max() - min + 1) as usize;

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for i in 0..n {
            let len = table_len(i, n, arr[i], min, clamp);
            offsets.push(offsets[i] + len);
        }
        let mut answers = vec![NO_ANSWER; offsets[n]];

        // Right-to-left sweep. `first_at[v - min]` is the first position
        // after the current one holding value `v`; with unit steps that is
        // also the first position holding any value <= v.
        let mut first_at = vec![NO_ANSWER; span];
        for i in (0..n).rev() {
            let ai = arr[i];
            let table = &mut answers[offsets[i]..offsets[i + 1]];
            for (slot, j) in table.iter_mut().zip(1i64..) {
                let target = ai - j;
                if target < min {
                    break;
                }
                *slot = first_at[(target - min) as usize];
            }
            first_at[(ai - min) as usize] = i as u32;
        }

        Ok(BasicFs {
            arr,
            clamp,
            offsets,
            answers,
        })
    }

    pub fn array(&self) -> &PmOneArray {
        &self.arr
    }

    pub fn is_clamped(&self) -> bool {
        self.clamp
    }

    /// Stored answers of position `i`; entry `j - 1` answers target `a[i] - j`.
    /// Zero means no answer.
    pub fn table(&self, i: usize) -> &[u32] {
        &self.answers[self.offsets[i]..self.offsets[i + 1]]
    }

    /// First position `j > i` with `a[j] <= x`, or `i` itself when
    /// `a[i] <= x`.
    ///
    /// Panics if `i` is not a position of the original array.
    #[inline]
    pub fn query(&self, i: usize, x: i64) -> Option<usize> {
        self.query_with_case(i, x).0
    }

    pub fn query_with_case(&self, i: usize, x: i64) -> (Option<usize>, BasicCase) {
        assert!(i < self.arr.original_len(), "position {i} out of range");
        let ai = self.arr[i];
        if x >= ai {
            return (Some(i), BasicCase::SelfHit);
        }
        if x < self.arr.min() {
            return (None, BasicCase::BelowMin);
        }
        let d = (ai - x) as usize;
        let table = self.table(i);
        if d <= table.len() {
            return (self.decode(table[d - 1]), BasicCase::Direct);
        }
        let k = lca_bt(i as i64 - d as i64 + 1, i);
        // Nothing in k..=i reaches x, so k has the same answer as i.
        debug_assert!(
            (k..=i).all(|j| self.arr[j] > x),
            "ancestor {k} of {i} skips an answer for {x}"
        );
        let depth = self.arr[k] - x;
        let table = self.table(k);
        debug_assert!(
            depth > 0 && depth as usize <= table.len(),
            "ancestor lookup out of range: i={i} x={x} k={k} depth={depth} len={}",
            table.len()
        );
        let entry = table[depth as usize - 1];
        (self.decode(entry), BasicCase::ViaAncestor { k })
    }

    #[inline]
    fn decode(&self, entry: u32) -> Option<usize> {
        if entry == NO_ANSWER {
            None
        } else {
            self.arr.decode(entry as usize)
        }
    }

    /// Stored entries: values, offsets and answer tables.
    pub fn words(&self) -> usize {
        self.arr.len() + self.offsets.len() + self.answers.len()
    }

    pub fn heap_bytes(&self) -> usize {
        self.arr.len() * std::mem::size_of::<i64>()
            + self.offsets.len() * std::mem::size_of::<usize>()
            + self.answers.len() * std::mem::size_of::<u32>()
    }
}
