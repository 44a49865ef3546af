//! Word-level primitives used on every query path.
//!
//! The "binary tree" here is the implicit complete binary tree whose nodes
//! are numbered in symmetric (in-order) order: node `k` sits at height
//! `rnz(k)` and its subtree covers `k - 2^h + 1 ..= k + 2^h - 1`.

/// Position of the lowest set bit of `i`, i.e. the height of node `i`.
#[inline]
pub fn rnz(i: usize) -> u32 {
    debug_assert!(i != 0, "rnz(0) is undefined");
    i.trailing_zeros()
}

/// Position of the highest set bit of `i`.
#[inline]
pub fn msb(i: usize) -> u32 {
    debug_assert!(i != 0, "msb(0) is undefined");
    usize::BITS - 1 - i.leading_zeros()
}

/// Least common ancestor of nodes `j` and `i` (`j <= i`) in the implicit
/// symmetric-order binary tree.
///
/// Any `j <= 0` maps to node 0, the boundary sentinel.
#[inline]
pub fn lca_bt(j: i64, i: usize) -> usize {
    debug_assert!(i >= 1);
    if j <= 0 {
        return 0;
    }
    let j = j as usize;
    debug_assert!(j <= i, "lca_bt expects j <= i, got j={j} i={i}");
    if j == i {
        return i;
    }
    // Nodes in [j, i] share every bit above `top`; the ancestor is the
    // member of the range with the most trailing zeros.
    let top = msb(j ^ i);
    let low = (1usize << (top + 1)) - 1;
    if j & low == 0 {
        j
    } else {
        (i >> top) << top
    }
}

const fn build_select_table() -> [[u8; 8]; 256] {
    let mut table = [[u8::MAX; 8]; 256];
    let mut byte = 0;
    while byte < 256 {
        let mut seen = 0;
        let mut bit = 0;
        while bit < 8 {
            if byte & (1 << bit) != 0 {
                table[byte][seen] = bit as u8;
                seen += 1;
            }
            bit += 1;
        }
        byte += 1;
    }
    table
}

/// `SELECT_IN_BYTE[w][k]` is the position of the `(k+1)`-th set bit of byte `w`.
static SELECT_IN_BYTE: [[u8; 8]; 256] = build_select_table();

/// Position of the `k`-th lowest set bit of `w` (`k` counts from 1), or
/// `None` if `w` has fewer than `k` set bits.
///
/// Walks the eight bytes of the word with a byte-level lookup table, so the
/// cost is bounded independently of `w`.
#[inline]
pub fn select_bit(w: u64, k: u32) -> Option<u32> {
    debug_assert!(k >= 1);
    let mut k = k;
    for byte_idx in 0..8u32 {
        let byte = ((w >> (byte_idx * 8)) & 0xff) as usize;
        let ones = byte.count_ones();
        if k <= ones {
            return Some(byte_idx * 8 + SELECT_IN_BYTE[byte][(k - 1) as usize] as u32);
        }
        k -= ones;
    }
    None
}

/// Same contract as [`select_bit`], by clearing low bits one at a time.
#[inline]
pub fn select_bit_loop(mut w: u64, k: u32) -> Option<u32> {
    debug_assert!(k >= 1);
    for _ in 1..k {
        if w == 0 {
            return None;
        }
        w &= w - 1;
    }
    if w == 0 {
        None
    } else {
        Some(w.trailing_zeros())
    }
}
