use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use rtclosure::{cmd_certify, cmd_check_cert, cmd_close, parse_edge_list, Method};
use rtclosure_core::derivation::RuleSet;
use rtclosure_core::{Relation, Universe};
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_rtclosure");

fn run(input: Option<&Path>, args: &[&str]) -> Output {
    let mut cmd = Command::new(BIN);
    if let Some(path) = input {
        cmd.arg("-i").arg(path);
    }
    cmd.args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

#[test]
fn close_empty_file_prints_nothing() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "empty.txt", "# nothing here\n\n");
    let out = run(Some(&input), &["close", "--method", "warshall"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");
}

#[test]
fn close_reads_stdin_by_default() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(BIN)
        .args(["close"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"x y\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "x x\nx y\ny y\n");
}

#[test]
fn close_is_deterministic_and_follows_first_appearance_order() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "r.txt", "c a\na b\n");
    let first = run(Some(&input), &["close", "--method", "hereditary"]);
    let second = run(Some(&input), &["close", "--method", "hereditary"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout(&first), "c c\nc a\nc b\na a\na b\nb b\n");
}

#[test]
fn close_dot_is_well_formed() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "r.txt", "a b\nb \"q\"\n");
    let out = run(Some(&input), &["close", "--dot"]);
    let text = stdout(&out);
    assert!(text.starts_with("digraph closure {\n") && text.ends_with("}\n"));
    assert!(text.contains(r#"  "\"q\"";"#));
    assert!(text.contains(r#"  "a" -> "\"q\"" [style=dashed];"#));
    assert!(text.contains(r#"  "a" -> "b";"#));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let malformed = write(&dir, "bad.txt", "a\n");
    let out = run(Some(&malformed), &["close"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    let four = write(&dir, "four.txt", "a b\nc d\n");
    let out = run(Some(&four), &["close", "--method", "intersection"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("intersection"));

    let example = write(&dir, "ex.txt", "a b\nb c\n");
    assert_eq!(run(Some(&example), &["certify", "a", "q"]).status.code(), Some(2));
    assert_eq!(run(None, &["laws", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(None, &["close", "--method", "nonsense"]).status.code(), Some(2));

    let garbage = write(&dir, "garbage.cert", "(tx \"a\"");
    let out = run(Some(&example), &["check-cert", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let mixed = write(&dir, "mixed.txt", "a b 1\nb c\n");
    assert_eq!(run(Some(&mixed), &["shortest"]).status.code(), Some(2));
    let negative = write(&dir, "neg.txt", "a b -1\n");
    assert_eq!(run(Some(&negative), &["shortest"]).status.code(), Some(2));
}

#[test]
fn certify_unrelated_pair_reports_not_derivable() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ex.txt", "a b\nb c\n");
    let out = run(Some(&input), &["certify", "b", "a"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not derivable"));
}

#[test]
fn check_cert_respects_rule_flags() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ex.txt", "a b\nb c\n");
    let cert = write(&dir, "trx.cert", r#"(trx (in "a" "b") (in "b" "c"))"#);
    let path = cert.to_str().unwrap();
    let out = run(Some(&input), &["check-cert", path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL: "));
    assert_eq!(run(Some(&input), &["check-cert", path, "--allow-in"]).status.code(), Some(1));
    let out = run(Some(&input), &["check-cert", path, "--allow-in", "--allow-trx"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "PASS\n");
}

#[test]
fn shortest_matrix() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "w.txt", "a b 1\nb c 2\na c 7\n");
    let out = run(Some(&input), &["shortest"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "# a b c\na 0 1 3\nb INF 0 2\nc INF INF 0\n");
}

#[test]
fn star_lang_examples() {
    let dir = TempDir::new().unwrap();
    let words = write(&dir, "l.txt", "ab\n");
    let out = run(Some(&words), &["star-lang", "--alphabet", "ab", "--max-len", "4"]);
    assert_eq!(stdout(&out), "<eps>\nab\nabab\n");

    let empty = write(&dir, "empty.txt", "");
    let out = run(Some(&empty), &["star-lang", "--alphabet", "ab", "--max-len", "4"]);
    assert_eq!(stdout(&out), "<eps>\n");

    let bad = write(&dir, "bad.txt", "ac\n");
    let out = run(Some(&bad), &["star-lang", "--alphabet", "ab", "--max-len", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn laws_relation_n2_all_pass() {
    let out = run(None, &["laws", "quantale-relation-n2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

/// Every emitted pair certifies and checks; every other pair neither
/// certifies nor accepts a forged one-step certificate.
#[test]
fn certificates_match_closure_exhaustively_up_to_four_points() {
    for n in 1..=4 {
        let u = Universe::numbered(n);
        for r in Relation::enumerate(&u).unwrap() {
            let text: String = r.labeled_pairs().iter().map(|(x, y)| format!("{x} {y}\n")).collect();
            let doc = parse_edge_list(&text).unwrap();
            let emitted = cmd_close(&doc, Method::Powers, false).unwrap();
            let emitted: Vec<(&str, &str)> =
                emitted.lines().map(|l| l.split_once(' ').unwrap()).collect();
            for x in &doc.labels {
                for y in &doc.labels {
                    let cert = cmd_certify(&doc, x, y).unwrap();
                    if emitted.contains(&(x.as_str(), y.as_str())) {
                        assert_eq!(cert.code, 0, "{x} {y} in {text}");
                        let verdict = cmd_check_cert(&doc, &cert.stdout, RuleSet::MINIMAL).unwrap();
                        assert_eq!(verdict.stdout, "PASS\n");
                    } else {
                        assert_eq!(cert.code, 1, "{x} {y} in {text}");
                        let forged = format!("(tx {x:?} {y:?} (id {y:?}))");
                        let verdict = cmd_check_cert(&doc, &forged, RuleSet::WITH_TRX).unwrap();
                        assert_eq!(verdict.code, 1);
                    }
                }
            }
        }
    }
}
