use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn eulerla(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eulerla"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn query_examples() {
    let dir = TempDir::new().unwrap();
    let star = write(&dir, "star.txt", "3\n-1 0 0\n");
    let chain = write(&dir, "chain.txt", "4\n-1 0 1 2\n");

    let out = eulerla(&["query", "--tree", &star], Some("LA 2 0\n"));
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");

    let queries = write(&dir, "q.txt", "LD 0 2\n");
    let out = eulerla(&["query", "--tree", &chain, "--queries", &queries], None);
    assert_eq!(stdout(&out), "2\n");

    for variant in ["bv", "mask"] {
        let out = eulerla(
            &["query", "--tree", &star, "--variant", variant, "--clamp"],
            Some("LS 2\n"),
        );
        assert_eq!(stdout(&out), "-\n");
    }
}

#[test]
fn query_errors_exit_nonzero_with_location() {
    let dir = TempDir::new().unwrap();
    let star = write(&dir, "star.txt", "3\n-1 0 0\n");
    let queries = write(&dir, "bad.txt", "LA 1 0\nLD 1\n");
    let out = eulerla(&["query", "--tree", &star, "--queries", &queries], None);
    assert!(!out.status.success());
    assert!(stdout(&out).is_empty());
    let err = stderr(&out);
    assert!(err.starts_with("error: "), "{err}");
    assert!(err.contains("bad.txt:2:"), "{err}");

    let bad_tree = write(&dir, "cycle.txt", "3\n-1 2 1\n");
    let out = eulerla(&["query", "--tree", &bad_tree], Some("LS 0\n"));
    assert!(!out.status.success());
    assert!(stderr(&out).contains("cycle.txt"));

    let out = eulerla(&["query", "--tree", "/nonexistent/tree.txt"], Some(""));
    assert!(!out.status.success());
    assert!(stderr(&out).contains("/nonexistent/tree.txt"));
}

#[test]
fn gen_is_deterministic() {
    let out = eulerla(&["gen", "--shape", "path", "--n", "3", "--seed", "9"], None);
    assert_eq!(stdout(&out), "3\n-1 0 1\n");
    let out = eulerla(&["gen", "--shape", "star", "--n", "3"], None);
    assert_eq!(stdout(&out), "3\n-1 0 0\n");

    let args = ["gen", "--shape", "random", "--n", "100", "--seed", "42"];
    let a = eulerla(&args, None);
    let b = eulerla(&args, None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let out = eulerla(&["gen", "--shape", "spiral", "--n", "3"], None);
    assert!(!out.status.success());
    let out = eulerla(&["gen", "--shape", "path", "--n", "0"], None);
    assert!(!out.status.success());
}

#[test]
fn generated_tree_feeds_query() {
    let dir = TempDir::new().unwrap();
    let out = eulerla(&["gen", "--shape", "balanced", "--n", "7"], None);
    let tree = write(&dir, "t.txt", stdout(&out));
    let out = eulerla(
        &["query", "--tree", &tree],
        Some("LA 6 1\nLD 0 2\nLS 3\nLS 6\n"),
    );
    assert_eq!(stdout(&out), "2\n3\n4\n-\n");
}

#[test]
fn selftest_reports_ok() {
    let out = eulerla(
        &[
            "selftest",
            "--n-max",
            "50",
            "--seeds",
            "2",
            "--exhaustive",
            "5",
        ],
        None,
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).starts_with("OK: "));
}

#[test]
fn bench_prints_table() {
    let out = eulerla(
        &[
            "bench",
            "--n",
            "64,256",
            "--reps",
            "1",
            "--queries",
            "100",
            "--structure",
            "both",
        ],
        None,
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("structure\tn\t"));
    assert!(lines.iter().skip(1).all(|l| l.split('\t').count() == 8));
}
