use std::io::Write;
use std::process::{Command, Output, Stdio};

use halin_bench::parse_csv;
use halin_core::format::{parse_coloring, write_graph};
use halin_core::generator::gen_wheel;

fn halin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_halin"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn halin");
    child
        .stdin
        .take()
        .expect("piped stdin")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("wait for halin")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn wheel(k: usize) -> String {
    write_graph(&gen_wheel(k).unwrap())
}

#[test]
fn generate_wheel_matches_library() {
    let out = halin(&["generate", "--family", "wheel", "--leaves", "5"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), wheel(5));
    assert!(stderr(&out).contains("n_total=6 max_degree=5"));
}

#[test]
fn generate_is_deterministic() {
    let a = halin(&["generate", "--leaves", "100", "--seed", "42"], "");
    let b = halin(&["generate", "--leaves", "100", "--seed", "42"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = halin(&["generate", "--leaves", "100", "--seed", "43"], "");
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn generate_caterpillar_has_requested_leaves() {
    let out = halin(
        &["generate", "--family", "cubic-caterpillar", "--leaves", "5"],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("n_total=8 max_degree=3"));
}

#[test]
fn generate_rejects_bad_flags() {
    assert_eq!(
        halin(&["generate", "--max-degree", "2"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        halin(&["generate", "--leaves", "2"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        halin(&["generate", "--family", "tree"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        halin(&["generate", "-o", "/no/such/dir/g.txt"], "")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn color_w5() {
    let out = halin(&["color", "--trace"], &wheel(5));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "COLORING 1\n0 1\n1 1p\n2 2a\n3 1p\n4 2b\n5 2c\n"
    );
    assert!(stderr(&out).contains("stage recoloring all_same=true offset=0 case=2"));
}

#[test]
fn color_rejects_w6_and_bad_input() {
    let out = halin(&["color"], &wheel(6));
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("Δ = 6"));

    let bad = wheel(5).replace("HALIN 1", "HALIN 2");
    assert_eq!(halin(&["color"], &bad).status.code(), Some(2));
    assert_eq!(
        halin(&["color", "-i", "/no/such/file"], "").status.code(),
        Some(2)
    );
}

#[test]
fn verify_accepts_colorer_output() {
    let dir = tempfile::tempdir().unwrap();
    let coloring = dir.path().join("c.txt");
    let colored = halin(&["color", "-o", coloring.to_str().unwrap()], &wheel(5));
    assert_eq!(colored.status.code(), Some(0));
    let out = halin(&["verify", "-c", coloring.to_str().unwrap()], &wheel(5));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "");
}

#[test]
fn verify_reports_k4_all_ones() {
    let dir = tempfile::tempdir().unwrap();
    let coloring = dir.path().join("c.txt");
    std::fs::write(&coloring, "COLORING 1\n0 1\n1 1\n2 1\n3 1\n").unwrap();
    let out = halin(&["verify", "-c", coloring.to_str().unwrap()], &wheel(3));
    assert_eq!(out.status.code(), Some(1));
    let lines: Vec<_> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "VIOLATION 1 0 1 1");
    assert!(lines
        .iter()
        .all(|l| l.starts_with("VIOLATION 1 ") && l.ends_with(" 1")));
}

#[test]
fn verify_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let partial = dir.path().join("partial.txt");
    std::fs::write(&partial, "COLORING 1\n0 1\n1 2a\n2 2b\n").unwrap();
    let out = halin(&["verify", "-c", partial.to_str().unwrap()], &wheel(3));
    assert_eq!(out.status.code(), Some(2));

    let unmapped = dir.path().join("unmapped.txt");
    std::fs::write(&unmapped, "COLORING 1\n0 1\n1 2a\n2 2b\n3 9z\n").unwrap();
    let out = halin(&["verify", "-c", unmapped.to_str().unwrap()], &wheel(3));
    assert_eq!(out.status.code(), Some(2));

    let custom = halin(
        &[
            "verify",
            "-c",
            unmapped.to_str().unwrap(),
            "--classes",
            "1:1,2a:2,2b:2,9z:5",
        ],
        &wheel(3),
    );
    assert_eq!(custom.status.code(), Some(0));

    let both = halin(&["verify", "-c", "-"], &wheel(3));
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn oracle_on_w5() {
    let out = halin(&["oracle", "--sequence", "1,2,2,2"], &wheel(5));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "INFEASIBLE\n");

    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.txt");
    let out = halin(
        &[
            "oracle",
            "--sequence",
            "1,1,2,2,2",
            "--witness",
            witness.to_str().unwrap(),
        ],
        &wheel(5),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "FEASIBLE\n");
    let labeled = parse_coloring(&std::fs::read_to_string(&witness).unwrap()).unwrap();
    assert_eq!(labeled.entries.len(), 6);

    let check = halin(&["verify", "-c", witness.to_str().unwrap()], &wheel(5));
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn oracle_generic_witness_names() {
    let out = halin(
        &["oracle", "--sequence", "1,2,2,2,2", "--witness", "-"],
        &wheel(4),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("FEASIBLE\nCOLORING 1\n"));
    assert!(text
        .lines()
        .skip(2)
        .all(|l| l.split(' ').nth(1).unwrap().starts_with('c')));
}

#[test]
fn oracle_guard_and_parse_errors() {
    let out = halin(&["oracle"], &wheel(49));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("50 vertices"));
    assert_eq!(
        halin(&["oracle", "--max-vertices", "60"], &wheel(12))
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        halin(&["oracle", "--sequence", "2,1"], &wheel(5))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        halin(&["oracle", "--sequence", "x"], &wheel(5))
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bench_small_sizes_round_trip() {
    let out = halin(
        &[
            "bench",
            "--sizes",
            "200,400,800",
            "--repeats",
            "3",
            "--seed",
            "4",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let records = parse_csv(&stdout(&out)).unwrap();
    assert_eq!(records.len(), 3);
    assert!(records.windows(2).all(|w| w[0].n_total < w[1].n_total));
}

#[test]
fn bench_rejects_bad_flags() {
    assert_eq!(
        halin(&["bench", "--repeats", "1"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        halin(&["bench", "--sizes", "400,200"], "").status.code(),
        Some(2)
    );
    assert_eq!(halin(&["bench", "--sizes", "a"], "").status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(halin(&[], "").status.code(), Some(2));
    assert_eq!(halin(&["paint"], "").status.code(), Some(2));
}
