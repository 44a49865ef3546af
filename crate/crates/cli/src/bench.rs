//! Build time, space and query time of the find-smaller structures on
//! tour level arrays.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use eulerla::{BasicFs, LinearFs, LinearOptions, Tree};

use crate::gen::{self, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    Linear,
    Basic,
    Both,
}

impl std::str::FromStr for Structure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "linear" => Ok(Structure::Linear),
            "basic" => Ok(Structure::Basic),
            "both" => Ok(Structure::Both),
            other => Err(format!(
                "unknown structure {other:?} (expected linear, basic or both)"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    pub shape: Shape,
    pub sizes: Vec<usize>,
    pub opts: LinearOptions,
    pub structure: Structure,
    /// Timing repetitions; the fastest is reported.
    pub reps: usize,
    pub queries: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub structure: &'static str,
    pub n: usize,
    pub tour_len: usize,
    pub build_ms: f64,
    pub bytes: usize,
    pub words_per_n: f64,
    pub query_ns: f64,
    /// Most block-start re-entries seen; linear structure only.
    pub max_reentries: Option<usize>,
}

pub const HEADER: &str =
    "structure\tn\ttour_len\tbuild_ms\tbytes\twords_per_n\tquery_ns\tmax_reentries";

impl std::fmt::Display for Row {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{:.3}\t{}\t{:.2}\t{:.1}\t",
            self.structure,
            self.n,
            self.tour_len,
            self.build_ms,
            self.bytes,
            self.words_per_n,
            self.query_ns
        )?;
        match self.max_reentries {
            Some(r) => write!(f, "{r}"),
            None => f.write_str("-"),
        }
    }
}

/// Level-ancestor style workload: start at a vertex's last tour position,
/// target a level strictly above it.
fn workload(
    tree: &Tree,
    levels: &[i64],
    last: &[u32],
    count: usize,
    seed: u64,
) -> Vec<(usize, i64)> {
    let mut rng = gen::rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let n = tree.len();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = gen::below(&mut rng, n);
        let pos = last[v] as usize;
        let lv = levels[pos];
        if lv == 0 {
            if n == 1 {
                // Nothing above the root; a self-hit query keeps the loop finite.
                out.push((pos, 0));
            }
            continue;
        }
        out.push((pos, gen::below(&mut rng, lv as usize) as i64));
    }
    out
}

fn time_queries(
    reps: usize,
    queries: &[(usize, i64)],
    f: impl Fn(usize, i64) -> Option<usize>,
) -> f64 {
    let mut best = f64::INFINITY;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        for &(i, x) in queries {
            black_box(f(black_box(i), black_box(x)));
        }
        let ns = start.elapsed().as_nanos() as f64 / queries.len().max(1) as f64;
        best = best.min(ns);
    }
    best
}

fn time_build<T>(reps: usize, mut build: impl FnMut() -> T) -> (T, f64) {
    let mut best = f64::INFINITY;
    let mut built = None;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let value = build();
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
        built = Some(value);
    }
    (built.expect("at least one repetition"), best)
}

pub fn run(cfg: &Config) -> Vec<Row> {
    let mut rows = Vec::new();
    for &n in &cfg.sizes {
        let tree = Tree::from_parents(&gen::generate(cfg.shape, n, cfg.seed))
            .expect("generated trees are valid");
        let tour = tree.euler_tour();
        let levels = tour.levels_i64();
        let queries = workload(&tree, &levels, &tour.last, cfg.queries, cfg.seed);

        if matches!(cfg.structure, Structure::Linear | Structure::Both) {
            let (fs, build_ms) = time_build(cfg.reps, || {
                LinearFs::build(&levels, cfg.opts).expect("tour levels move by one")
            });
            let query_ns = time_queries(cfg.reps, &queries, |i, x| fs.query(i, x));
            let max_reentries = queries
                .iter()
                .map(|&(i, x)| fs.query_counted(i, x).1)
                .max()
                .unwrap_or(0);
            rows.push(Row {
                structure: "linear",
                n,
                tour_len: levels.len(),
                build_ms,
                bytes: fs.heap_bytes(),
                words_per_n: fs.words() as f64 / n as f64,
                query_ns,
                max_reentries: Some(max_reentries),
            });
        }
        if matches!(cfg.structure, Structure::Basic | Structure::Both) {
            let (fs, build_ms) = time_build(cfg.reps, || {
                BasicFs::build(&levels, cfg.opts.clamp).expect("tour levels move by one")
            });
            let query_ns = time_queries(cfg.reps, &queries, |i, x| fs.query(i, x));
            rows.push(Row {
                structure: "basic",
                n,
                tour_len: levels.len(),
                build_ms,
                bytes: fs.heap_bytes(),
                words_per_n: fs.words() as f64 / n as f64,
                query_ns,
                max_reentries: None,
            });
        }
    }
    rows
}

pub fn format(rows: &[Row]) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for row in rows {
        writeln!(out, "{row}").unwrap();
    }
    out
}
