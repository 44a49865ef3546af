//! Constant-time find-smaller answers for targets reached inside a block.
//!
//! Two interchangeable implementations:
//!
//! * [`BvMicro`] normalizes each block to start at zero. A block of length
//!   `b` is then determined by its `b - 1` step signs, so one answer matrix
//!   per possible sign pattern covers every block of every array.
//! * [`MaskMicro`] stores, for each position `i`, a bitmask of the
//!   following positions that are strict running minima from `i`. With unit
//!   steps the `k`-th such position is the first to reach `a[i] - k`, so a
//!   query is one select.

use crate::array::PmOneArray;
use crate::bitops::select_bit;

/// Which micro structure backs a [`LinearFs`](crate::LinearFs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum MicroVariant {
    /// Per-pattern answer matrices indexed by block identifier.
    #[default]
    Bv,
    /// Per-position running-minimum masks with select.
    Mask,
}

impl std::str::FromStr for MicroVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bv" => Ok(MicroVariant::Bv),
            "mask" => Ok(MicroVariant::Mask),
            other => Err(format!(
                "unknown micro variant {other:?} (expected bv or mask)"
            )),
        }
    }
}

impl std::fmt::Display for MicroVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MicroVariant::Bv => "bv",
            MicroVariant::Mask => "mask",
        })
    }
}

/// Step-sign pattern of the block starting at `start`: bit `t` is set when
/// `a[start + t + 1] = a[start + t] + 1`.
pub fn block_id(a: &[i64], start: usize, block: usize) -> u32 {
    (0..block - 1).fold(0, |id, t| {
        id | (((a[start + t + 1] > a[start + t]) as u32) << t)
    })
}

#[derive(Debug, Clone)]
pub struct BvMicro {
    block: usize,
    ids: Vec<u32>,
    /// Row-major `[id][j][x + block - 1]` in-block answer offsets, 0 for none.
    tables: Vec<u8>,
}

impl BvMicro {
    pub fn build(arr: &PmOneArray, block: usize) -> BvMicro {
        assert!(
            (1..=16).contains(&block),
            "block length {block} unsupported"
        );
        assert_eq!(arr.len() % block, 0, "array not padded to whole blocks");
        let a = arr.values();
        let ids = (0..arr.len() / block)
            .map(|i| block_id(a, i * block, block))
            .collect();

        let cols = 2 * block - 1;
        let patterns = 1usize << (block - 1);
        let mut tables = vec![0u8; patterns * block * cols];
        let mut normalized = vec![0i64; block];
        for id in 0..patterns {
            for t in 0..block - 1 {
                let step = if id >> t & 1 == 1 { 1 } else { -1 };
                normalized[t + 1] = normalized[t] + step;
            }
            for j in 0..block {
                let row = (id * block + j) * cols;
                // Each new running minimum after j answers exactly the
                // targets between it and the previous minimum.
                let mut running = normalized[j];
                for (o, &v) in normalized.iter().enumerate().skip(j + 1) {
                    if v < running {
                        for x in v..running {
                            tables[row + (x + block as i64 - 1) as usize] = o as u8;
                        }
                        running = v;
                    }
                }
            }
        }
        BvMicro { block, ids, tables }
    }

    #[inline]
    pub fn block_len(&self) -> usize {
        self.block
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn pattern_count(&self) -> usize {
        1 << (self.block - 1)
    }

    /// In-block answer offset for pattern `id`, in-block position `j` and
    /// normalized target `x`.
    #[inline]
    pub fn entry(&self, id: u32, j: usize, x: i64) -> Option<usize> {
        let b = self.block as i64;
        if x <= -b || x >= b {
            return None;
        }
        let cols = 2 * self.block - 1;
        let idx = (id as usize * self.block + j) * cols + (x + b - 1) as usize;
        match self.tables[idx] {
            0 => None,
            o => Some(o as usize),
        }
    }

    /// Answer to find-smaller from `pos` if it lies inside `pos`'s block.
    /// Only meaningful for `x < a[pos]`.
    #[inline]
    pub fn query(&self, arr: &PmOneArray, pos: usize, x: i64) -> Option<usize> {
        let (i, j) = (pos / self.block, pos % self.block);
        let start = i * self.block;
        self.entry(self.ids[i], j, x - arr[start])
            .map(|o| start + o)
    }

    pub fn words(&self) -> usize {
        // Table bytes packed into 8-byte words.
        self.ids.len() + self.tables.len().div_ceil(8)
    }

    pub fn heap_bytes(&self) -> usize {
        self.ids.len() * std::mem::size_of::<u32>() + self.tables.len()
    }
}

#[derive(Debug, Clone)]
pub struct MaskMicro {
    window: u32,
    masks: Vec<u64>,
}

impl MaskMicro {
    /// Bit `t` of mask `i` covers position `i + t + 1`, for `t < window`.
    pub fn build(arr: &PmOneArray, window: u32) -> MaskMicro {
        Self::build_observed(arr.values(), window, |_, _| {}).0
    }

    /// Builds and also reports the number of stack pushes plus pops.
    pub fn build_counting(arr: &PmOneArray, window: u32) -> (MaskMicro, usize) {
        Self::build_observed(arr.values(), window, |_, _| {})
    }

    /// Right-to-left sweep keeping a stack of the running-minimum positions
    /// after `i`, smallest position on top. Stepping from `i + 1` to `i`
    /// either pushes `i + 1` (a step down) or pops the top (a step up: the
    /// top held `a[i]` and is no longer strictly below it).
    fn build_observed(
        a: &[i64],
        window: u32,
        mut observe: impl FnMut(usize, &[usize]),
    ) -> (MaskMicro, usize) {
        assert!(
            (1..=64).contains(&window),
            "mask window {window} unsupported"
        );
        let keep = if window == 64 {
            u64::MAX
        } else {
            (1u64 << window) - 1
        };
        let n = a.len();
        let mut masks = vec![0u64; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut ops = 0;
        let mut mask = 0u64;
        observe(n - 1, &stack);
        for i in (0..n - 1).rev() {
            if a[i + 1] < a[i] {
                stack.push(i + 1);
                ops += 1;
                mask = ((mask << 1) | 1) & keep;
            } else {
                mask = (mask << 1) & keep;
                if let Some(top) = stack.pop() {
                    ops += 1;
                    let bit = top - i - 1;
                    if bit < window as usize {
                        mask &= !(1u64 << bit);
                    }
                }
            }
            masks[i] = mask;
            observe(i, &stack);
        }
        (MaskMicro { window, masks }, ops)
    }

    #[inline]
    pub fn window(&self) -> u32 {
        self.window
    }

    #[inline]
    pub fn mask(&self, i: usize) -> u64 {
        self.masks[i]
    }

    /// Answer to find-smaller from `pos` if it lies within the window.
    /// Requires `x < a[pos]`.
    #[inline]
    pub fn query(&self, arr: &PmOneArray, pos: usize, x: i64) -> Option<usize> {
        let k = arr[pos] - x;
        debug_assert!(k >= 1);
        if k > self.window as i64 {
            return None;
        }
        select_bit(self.masks[pos], k as u32).map(|p| pos + 1 + p as usize)
    }

    pub fn words(&self) -> usize {
        self.masks.len()
    }

    pub fn heap_bytes(&self) -> usize {
        self.masks.len() * std::mem::size_of::<u64>()
    }
}

/// Either micro structure, answering under the strict in-block contract.
#[derive(Debug, Clone)]
pub enum Micro {
    Bv(BvMicro),
    Mask(MaskMicro),
}

impl Micro {
    pub fn build(
        arr: &PmOneArray,
        block: usize,
        variant: MicroVariant,
        window: Option<u32>,
    ) -> Micro {
        match variant {
            MicroVariant::Bv => Micro::Bv(BvMicro::build(arr, block)),
            MicroVariant::Mask => {
                let window = window.unwrap_or(block as u32).max(block as u32);
                Micro::Mask(MaskMicro::build(arr, window))
            }
        }
    }

    pub fn variant(&self) -> MicroVariant {
        match self {
            Micro::Bv(_) => MicroVariant::Bv,
            Micro::Mask(_) => MicroVariant::Mask,
        }
    }

    /// First position after `pos` with value `<= x`, provided it lies
    /// strictly before the end of `pos`'s block. Requires `x < a[pos]`.
    #[inline]
    pub fn query(&self, arr: &PmOneArray, block: usize, pos: usize, x: i64) -> Option<usize> {
        match self {
            Micro::Bv(m) => m.query(arr, pos, x),
            Micro::Mask(m) => {
                let end = (pos / block + 1) * block;
                m.query(arr, pos, x).filter(|&p| p < end)
            }
        }
    }

    pub fn words(&self) -> usize {
        match self {
            Micro::Bv(m) => m.words(),
            Micro::Mask(m) => m.words(),
        }
    }

    pub fn heap_bytes(&self) -> usize {
        match self {
            Micro::Bv(m) => m.heap_bytes(),
            Micro::Mask(m) => m.heap_bytes(),
        }
    }
}
