//! Deterministic tree generators.
//!
//! Random draws come from ChaCha8 seeded with `seed_from_u64(seed)`. A
//! uniform draw from `0..v` is `(next_u64() * v) >> 64` in 128-bit
//! arithmetic, so the sequence is reproducible from the seed alone.

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `v`'s parent is `v - 1`.
    Path,
    /// Every vertex hangs off vertex 0.
    Star,
    /// A path over the first `ceil(n/2)` vertices, each remaining vertex a
    /// leaf on one spine vertex.
    Caterpillar,
    /// Binary heap order: `v`'s parent is `(v - 1) / 2`.
    Balanced,
    /// `v`'s parent drawn uniformly from `0..v`.
    Random,
}

impl Shape {
    pub const ALL: [Shape; 5] = [
        Shape::Path,
        Shape::Star,
        Shape::Caterpillar,
        Shape::Balanced,
        Shape::Random,
    ];
}

impl std::str::FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "path" => Shape::Path,
            "star" => Shape::Star,
            "caterpillar" => Shape::Caterpillar,
            "balanced" => Shape::Balanced,
            "random" => Shape::Random,
            other => {
                return Err(format!(
                    "unknown shape {other:?} (expected path, star, caterpillar, balanced or random)"
                ))
            }
        })
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Shape::Path => "path",
            Shape::Star => "star",
            Shape::Caterpillar => "caterpillar",
            Shape::Balanced => "balanced",
            Shape::Random => "random",
        })
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw from `0..bound` (`bound >= 1`).
#[inline]
pub fn below(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    ((rng.next_u64() as u128 * bound as u128) >> 64) as usize
}

/// Parent array (root 0 marked `-1`) of an `n`-vertex tree.
pub fn generate(shape: Shape, n: usize, seed: u64) -> Vec<i64> {
    assert!(n >= 1, "a tree needs at least one vertex");
    let mut rng = rng(seed);
    let spine = n.div_ceil(2);
    (0..n)
        .map(|v| {
            if v == 0 {
                return -1;
            }
            (match shape {
                Shape::Path => v - 1,
                Shape::Star => 0,
                Shape::Caterpillar if v < spine => v - 1,
                Shape::Caterpillar => v - spine,
                Shape::Balanced => (v - 1) / 2,
                Shape::Random => below(&mut rng, v),
            }) as i64
        })
        .collect()
}

/// Renames vertices by a random permutation, keeping the shape.
pub fn relabel(parents: &[i64], rng: &mut ChaCha8Rng) -> Vec<i64> {
    let n = parents.len();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, below(rng, i + 1));
    }
    let mut out = vec![-1; n];
    for (v, &p) in parents.iter().enumerate() {
        out[perm[v]] = if p < 0 { -1 } else { perm[p as usize] as i64 };
    }
    out
}
