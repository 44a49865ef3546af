//! Cross-checks the level index against brute-force answers on
//! exhaustively enumerated small trees and seeded random trees.

use std::fmt;

use eulerla::oracle::NaiveTree;
use eulerla::{LevelIndex, LinearOptions, Tree};

use crate::gen::{self, Shape};
use crate::query::{self, QueryKind, QueryRecord};

#[derive(Debug, Clone, Copy)]
pub struct Config {
    /// Largest random tree.
    pub n_max: usize,
    /// Random trees per shape.
    pub seeds: u64,
    /// Every labelled tree up to this many vertices is checked.
    pub exhaustive: usize,
    pub opts: LinearOptions,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            n_max: 200,
            seeds: 20,
            exhaustive: 6,
            opts: LinearOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub trees: u64,
    pub queries: u64,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OK: {} trees, {} queries", self.trees, self.queries)
    }
}

/// A query on which the index disagrees with the brute force.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub parents: Vec<i64>,
    /// The query in file syntax, or `DESC u v` for a descendance test.
    pub query: String,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tree = Tree::from_parents(&self.parents).expect("failures hold valid trees");
        writeln!(f, "FAIL: {}", self.query)?;
        writeln!(f, "expected: {}", self.expected)?;
        writeln!(f, "got: {}", self.got)?;
        write!(f, "tree:\n{}", tree.to_text().trim_end())
    }
}

fn show(answer: Option<usize>) -> String {
    answer.map_or_else(|| "-".to_owned(), |v| v.to_string())
}

/// Calls `f` with every rooted tree on vertices `0..n`, each once.
pub fn for_each_tree(n: usize, mut f: impl FnMut(&[i64])) {
    if n == 0 {
        return;
    }
    let mut parents = vec![0i64; n];
    for root in 0..n {
        parents.fill(0);
        parents[root] = -1;
        // Odometer over parent choices of the non-root vertices, skipping
        // self-loops; cycles are filtered afterwards.
        let others: Vec<usize> = (0..n).filter(|&v| v != root).collect();
        let first_choice = |v: usize| if v == 0 { 1 } else { 0 };
        for &v in &others {
            parents[v] = first_choice(v);
        }
        loop {
            if is_acyclic(&parents) {
                f(&parents);
            }
            let mut carried = true;
            for &v in &others {
                let mut next = parents[v] + 1;
                if next as usize == v {
                    next += 1;
                }
                if (next as usize) < n {
                    parents[v] = next;
                    carried = false;
                    break;
                }
                parents[v] = first_choice(v);
            }
            if carried {
                break;
            }
        }
    }
}

fn is_acyclic(parents: &[i64]) -> bool {
    let n = parents.len();
    (0..n).all(|v| {
        let mut u = v;
        for _ in 0..n {
            match parents[u] {
                -1 => return true,
                p => u = p as usize,
            }
        }
        false
    })
}

/// Compares every query on `tree`; returns the number checked.
fn check_tree<F>(tree: &Tree, opts: LinearOptions, answerer: &F) -> Result<u64, Failure>
where
    F: Fn(&LevelIndex, &QueryRecord) -> Option<usize>,
{
    let index = LevelIndex::with_options(tree, opts);
    let naive = NaiveTree::new(tree);
    let n = tree.len();
    let max_level = (0..n).map(|v| naive.depth(v)).max().unwrap_or(0);
    let fail = |query: String, expected: String, got: String| Failure {
        parents: tree.parents(),
        query,
        expected,
        got,
    };
    let mut count = 0;
    for v in 0..n {
        let mut records = Vec::with_capacity(2 * max_level + 5);
        for l in 0..=max_level + 1 {
            records.push(QueryRecord {
                kind: QueryKind::LevelAncestor,
                vertex: v,
                level: Some(l),
            });
            records.push(QueryRecord {
                kind: QueryKind::LevelDescendant,
                vertex: v,
                level: Some(l),
            });
        }
        records.push(QueryRecord {
            kind: QueryKind::LevelSuccessor,
            vertex: v,
            level: None,
        });
        for q in &records {
            let l = q.level.unwrap_or(0);
            let expected = match q.kind {
                QueryKind::LevelAncestor => naive.level_ancestor(v, l),
                QueryKind::LevelDescendant => naive.level_descendant(v, l),
                QueryKind::LevelSuccessor => naive.level_successor(v),
            };
            let got = answerer(&index, q);
            if got != expected {
                return Err(fail(q.to_string(), show(expected), show(got)));
            }
        }
        count += records.len() as u64;
        for u in 0..n {
            let expected = naive.is_descendant(u, v);
            let got = index.is_descendant(u, v);
            if got != expected {
                return Err(fail(
                    format!("DESC {u} {v}"),
                    expected.to_string(),
                    got.to_string(),
                ));
            }
        }
        count += n as u64;
    }
    Ok(count)
}

/// Removes leaf `w`, shifting higher labels down by one.
fn remove_leaf(parents: &[i64], w: usize) -> Vec<i64> {
    parents
        .iter()
        .enumerate()
        .filter(|&(v, _)| v != w)
        .map(|(_, &p)| if p > w as i64 { p - 1 } else { p })
        .collect()
}

/// Deletes leaves while the failure persists.
fn shrink<F>(mut failure: Failure, opts: LinearOptions, answerer: &F) -> Failure
where
    F: Fn(&LevelIndex, &QueryRecord) -> Option<usize>,
{
    'outer: loop {
        let n = failure.parents.len();
        if n == 1 {
            return failure;
        }
        let mut is_leaf = vec![true; n];
        for &p in &failure.parents {
            if p >= 0 {
                is_leaf[p as usize] = false;
            }
        }
        for w in (0..n).filter(|&w| is_leaf[w]) {
            let smaller = remove_leaf(&failure.parents, w);
            let tree = Tree::from_parents(&smaller).expect("removing a leaf keeps a tree");
            if let Err(f) = check_tree(&tree, opts, answerer) {
                failure = f;
                continue 'outer;
            }
        }
        return failure;
    }
}

/// Runs the self-test with the real query procedure.
pub fn run(cfg: &Config) -> Result<Report, Failure> {
    run_with(cfg, query::answer)
}

/// Runs the self-test with `answerer` standing in for the query procedure,
/// so a deliberately broken answerer can show that faults are caught.
pub fn run_with<F>(cfg: &Config, answerer: F) -> Result<Report, Failure>
where
    F: Fn(&LevelIndex, &QueryRecord) -> Option<usize>,
{
    let mut report = Report {
        trees: 0,
        queries: 0,
    };
    let mut outcome = Ok(());
    for n in 1..=cfg.exhaustive {
        for_each_tree(n, |parents| {
            if outcome.is_err() {
                return;
            }
            let tree = Tree::from_parents(parents).expect("enumerated trees are valid");
            match check_tree(&tree, cfg.opts, &answerer) {
                Ok(q) => {
                    report.trees += 1;
                    report.queries += q;
                }
                Err(f) => outcome = Err(f),
            }
        });
        outcome.clone()?;
    }

    let mut failures = Vec::new();
    for seed in 0..cfg.seeds {
        for shape in Shape::ALL {
            let mut rng = gen::rng(seed);
            let n = 1 + gen::below(&mut rng, cfg.n_max.max(1));
            let parents = gen::relabel(&gen::generate(shape, n, seed), &mut rng);
            let tree = Tree::from_parents(&parents).expect("generated trees are valid");
            match check_tree(&tree, cfg.opts, &answerer) {
                Ok(q) => {
                    report.trees += 1;
                    report.queries += q;
                }
                Err(f) => failures.push(f),
            }
        }
    }
    match failures.into_iter().min_by_key(|f| f.parents.len()) {
        Some(f) => Err(shrink(f, cfg.opts, &answerer)),
        None => Ok(report),
    }
}
