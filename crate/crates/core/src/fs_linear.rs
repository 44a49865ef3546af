//! The linear-space find-smaller structure.
//!
//! The array is cut into blocks of `b = floor(log2(n) / 2)` positions.
//! Only block starts carry tables: a *near* table with the first `2b`
//! answers, and a *far* table recording, for every `b`-th target below the
//! start value, the block holding the answer. Queries that start inside a
//! block first ask the micro structure, then fall through to the next
//! block start.
//!
//! A query is a short chain of re-entries at block starts. The chain never
//! has more than three links: next block, binary-tree ancestor, far block,
//! and the last one always resolves through the near table.

use crate::array::PmOneArray;
use crate::bitops::{lca_bt, msb, rnz};
use crate::micro::{Micro, MicroVariant};
use crate::{Error, NO_ANSWER};

/// Upper bound on block-start re-entries during one query.
pub const MAX_REENTRIES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LinearOptions {
    pub variant: MicroVariant,
    /// Shrink far tables to the entries a query can actually reach.
    pub clamp: bool,
    /// Mask window for [`MicroVariant::Mask`]; defaults to the block length.
    pub mask_window: Option<u32>,
    /// Override the block length (testing and benchmarking).
    pub block: Option<usize>,
}

impl LinearOptions {
    pub fn with_variant(variant: MicroVariant) -> Self {
        LinearOptions {
            variant,
            ..Default::default()
        }
    }
}

/// One step of the query procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryCase {
    /// Target already met at the current position.
    SelfHit,
    /// Target below the array minimum.
    BelowMin,
    /// Answered by the micro structure inside the block.
    Micro,
    /// Micro structure had nothing; continue at the next block start.
    NextBlock,
    /// Current block has no successor.
    PastEnd,
    /// Answered by the near table.
    Near,
    /// Far table points at block `block`; continue at its start.
    Far { block: usize },
    /// Far table records that no answer exists.
    FarEmpty,
    /// Target deeper than the far table; continue at the start of
    /// binary-tree ancestor `block`.
    Ancestor { block: usize },
}

impl QueryCase {
    fn is_reentry(self) -> bool {
        matches!(
            self,
            QueryCase::NextBlock | QueryCase::Far { .. } | QueryCase::Ancestor { .. }
        )
    }
}

/// The path a query took.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    pub cases: Vec<QueryCase>,
    pub reentries: usize,
}

trait Tracer {
    fn step(&mut self, case: QueryCase);
}

struct NoTrace;

impl Tracer for NoTrace {
    #[inline(always)]
    fn step(&mut self, _: QueryCase) {}
}

impl Tracer for Trace {
    fn step(&mut self, case: QueryCase) {
        if case.is_reentry() {
            self.reentries += 1;
        }
        self.cases.push(case);
    }
}

struct ReentryCount(usize);

impl Tracer for ReentryCount {
    #[inline(always)]
    fn step(&mut self, case: QueryCase) {
        self.0 += case.is_reentry() as usize;
    }
}

#[derive(Debug, Clone)]
pub struct LinearFs {
    arr: PmOneArray,
    block: usize,
    /// `near[i * 2b + j - 1]` answers target `a[ib] - j`.
    near: Vec<u32>,
    /// `far_offsets[i]..far_offsets[i + 1]` is the far table of block `i`.
    far_offsets: Vec<usize>,
    /// Entry `j - 1` of block `i`'s table is the block of the answer for
    /// target `a[ib] - jb`.
    far: Vec<u32>,
    micro: Micro,
    clamp: bool,
}

/// Default block length for a padded length `n`.
pub fn block_len_for(n: usize) -> usize {
    ((msb(n) / 2) as usize).max(1)
}

fn far_len(i: usize, blocks: usize, block: usize, value: i64, min: i64, clamp: bool) -> usize {
    if !clamp {
        return if i == 0 { blocks } else { 3 << rnz(i) };
    }
    let reachable = ((value - min) / block as i64) as usize;
    let cap = if i == 0 { blocks } else { (3 << rnz(i)) - 2 };
    cap.min(reachable)
}

impl LinearFs {
    pub fn new(values: &[i64]) -> Result<Self, Error> {
        Self::build(values, LinearOptions::default())
    }

    pub fn build(values: &[i64], opts: LinearOptions) -> Result<Self, Error> {
        crate::array::check_plus_minus_one(values)?;
        let pow2 = values.len().next_power_of_two();
        let block = opts.block.unwrap_or_else(|| block_len_for(pow2));
        assert!(block >= 1, "block length must be positive");
        let padded = pow2.div_ceil(block) * block;
        let arr = PmOneArray::padded_to(values, padded)?;
        let blocks = padded / block;
        let min = arr.min();
        let span = (arr.max() - min + 1) as usize;

        let mut far_offsets = Vec::with_capacity(blocks + 1);
        far_offsets.push(0);
        for i in 0..blocks {
            let len = far_len(i, blocks, block, arr[i * block], min, opts.clamp);
            far_offsets.push(far_offsets[i] + len);
        }
        let mut near = vec![NO_ANSWER; blocks * 2 * block];
        let mut far = vec![NO_ANSWER; far_offsets[blocks]];

        // `first_at[v - min]`: first position after the sweep point with
        // value v, which with unit steps answers every target v.
        let mut first_at = vec![NO_ANSWER; span];
        for pos in (0..padded).rev() {
            if pos % block == 0 {
                let i = pos / block;
                let top = arr[pos];
                let near_row = &mut near[i * 2 * block..(i + 1) * 2 * block];
                for (slot, j) in near_row.iter_mut().zip(1i64..) {
                    if top - j < min {
                        break;
                    }
                    *slot = first_at[(top - j - min) as usize];
                }
                let far_row = &mut far[far_offsets[i]..far_offsets[i + 1]];
                for (slot, j) in far_row.iter_mut().zip(1i64..) {
                    let target = top - j * block as i64;
                    if target < min {
                        break;
                    }
                    let answer = first_at[(target - min) as usize];
                    if answer != NO_ANSWER {
                        let k = answer as usize / block;
                        debug_assert!(k > 0, "far answer in block 0 collides with the sentinel");
                        debug_assert!(
                            target <= arr[k * block] && arr[k * block] < target + block as i64,
                            "far entry bounds violated: block {i} j={j} -> {k}"
                        );
                        *slot = k as u32;
                    }
                }
            }
            first_at[(arr[pos] - min) as usize] = pos as u32;
        }

        let micro = Micro::build(&arr, block, opts.variant, opts.mask_window);
        Ok(LinearFs {
            arr,
            block,
            near,
            far_offsets,
            far,
            micro,
            clamp: opts.clamp,
        })
    }

    pub fn array(&self) -> &PmOneArray {
        &self.arr
    }

    #[inline]
    pub fn block_len(&self) -> usize {
        self.block
    }

    pub fn block_count(&self) -> usize {
        self.arr.len() / self.block
    }

    pub fn variant(&self) -> MicroVariant {
        self.micro.variant()
    }

    pub fn micro(&self) -> &Micro {
        &self.micro
    }

    pub fn is_clamped(&self) -> bool {
        self.clamp
    }

    /// Near table of block `i`; entry `j - 1` answers target `a[ib] - j`.
    pub fn near(&self, i: usize) -> &[u32] {
        &self.near[i * 2 * self.block..(i + 1) * 2 * self.block]
    }

    /// Far table of block `i`; entry `j - 1` is the block holding the
    /// answer for target `a[ib] - jb`, zero for none.
    pub fn far(&self, i: usize) -> &[u32] {
        &self.far[self.far_offsets[i]..self.far_offsets[i + 1]]
    }

    /// First position `j > i` with `a[j] <= x`, or `i` itself when
    /// `a[i] <= x`.
    ///
    /// Panics if `i` is not a position of the original array.
    #[inline]
    pub fn query(&self, i: usize, x: i64) -> Option<usize> {
        self.run(i, x, &mut NoTrace)
    }

    /// [`query`](Self::query), recording each step taken.
    pub fn query_traced(&self, i: usize, x: i64) -> (Option<usize>, Trace) {
        let mut trace = Trace::default();
        let answer = self.run(i, x, &mut trace);
        (answer, trace)
    }

    /// [`query`](Self::query), also returning the number of re-entries.
    #[inline]
    pub fn query_counted(&self, i: usize, x: i64) -> (Option<usize>, usize) {
        let mut count = ReentryCount(0);
        let answer = self.run(i, x, &mut count);
        (answer, count.0)
    }

    #[inline]
    fn run<T: Tracer>(&self, start: usize, x: i64, trace: &mut T) -> Option<usize> {
        assert!(
            start < self.arr.original_len(),
            "position {start} out of range"
        );
        let a = &self.arr;
        if x >= a[start] {
            trace.step(QueryCase::SelfHit);
            return Some(start);
        }
        if x < a.min() {
            trace.step(QueryCase::BelowMin);
            return None;
        }
        let b = self.block;
        let mut pos = start;
        let mut hops = 0;
        loop {
            debug_assert!(
                hops <= MAX_REENTRIES,
                "query chain too long from {start} for {x}"
            );
            if x >= a[pos] {
                trace.step(QueryCase::SelfHit);
                return a.decode(pos);
            }
            let i = pos / b;
            if !pos.is_multiple_of(b) {
                if let Some(m) = self.micro.query(a, b, pos, x) {
                    trace.step(QueryCase::Micro);
                    return a.decode(m);
                }
                let next = (i + 1) * b;
                if next >= a.len() {
                    trace.step(QueryCase::PastEnd);
                    return None;
                }
                trace.step(QueryCase::NextBlock);
                pos = next;
                hops += 1;
                continue;
            }

            let depth = (a[pos] - x) as usize;
            if depth <= 2 * b {
                trace.step(QueryCase::Near);
                return self.decode(self.near[i * 2 * b + depth - 1]);
            }
            let d = depth / b;
            let far = self.far(i);
            if d <= far.len() {
                let k = far[d - 1] as usize;
                if k == NO_ANSWER as usize {
                    trace.step(QueryCase::FarEmpty);
                    return None;
                }
                debug_assert!(
                    a[k * b] >= x && a[k * b] - x <= 2 * b as i64,
                    "far hop from block {i} to {k} does not land within 2b of {x}"
                );
                trace.step(QueryCase::Far { block: k });
                pos = k * b;
            } else {
                let k = lca_bt(i as i64 - d as i64 + 1, i);
                debug_assert!(
                    (k * b..=pos).all(|j| a[j] > x),
                    "ancestor block {k} of {i} skips an answer for {x}"
                );
                debug_assert!(
                    {
                        let reach = a[k * b] - x;
                        reach > 0
                            && (reach <= 2 * b as i64 || (reach as usize / b) <= self.far(k).len())
                    },
                    "ancestor hop from block {i} to {k} out of table range for {x}"
                );
                trace.step(QueryCase::Ancestor { block: k });
                pos = k * b;
            }
            hops += 1;
        }
    }

    #[inline]
    fn decode(&self, entry: u32) -> Option<usize> {
        if entry == NO_ANSWER {
            None
        } else {
            self.arr.decode(entry as usize)
        }
    }

    /// Stored entries: values, near and far tables, offsets and micro structure.
    pub fn words(&self) -> usize {
        self.arr.len()
            + self.near.len()
            + self.far.len()
            + self.far_offsets.len()
            + self.micro.words()
    }

    pub fn heap_bytes(&self) -> usize {
        self.arr.len() * std::mem::size_of::<i64>()
            + (self.near.len() + self.far.len()) * std::mem::size_of::<u32>()
            + self.far_offsets.len() * std::mem::size_of::<usize>()
            + self.micro.heap_bytes()
    }
}
