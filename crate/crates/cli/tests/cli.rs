use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const CHORDED_CHAIN: &str = "n 5\n0 1\n1 2\n2 3\n3 4\n1 4\n0 3\n";

fn dagx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dagx"))
        .args(args)
        .env_remove("DAGX_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

#[test]
fn analyze_reports_classes() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "chorded.txt", CHORDED_CHAIN);
    let out = dagx(&["analyze", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(field(&text, "reduced"), "true");
    assert_eq!(field(&text, "strongly_reduced"), "false");
    assert_eq!(field(&text, "extremely_reduced"), "false");
    assert_eq!(field(&text, "ell"), "4");

    let chain = write(&dir, "chain.txt", "n 3\n0 1\n1 2\n");
    let out = dagx(&["analyze", "--format", "json", chain.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["reduced", "strongly_reduced", "extremely_reduced"] {
        assert_eq!(v["predicates"][key], true, "{key}");
    }
    assert_eq!(v["bound"], 3);
    assert_eq!(v["slack"], 1);
}

#[test]
fn analyze_rejects_cycles_and_garbage() {
    let dir = TempDir::new().unwrap();
    let cyc = write(&dir, "cyc.txt", "n 3\n0 1\n1 2\n2 0\n");
    let out = dagx(&["analyze", cyc.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("0 -> 1 -> 2 -> 0"), "{}", stderr(&out));

    let bad = write(&dir, "bad.txt", "n 3\n0 one\n");
    let out = dagx(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let out = dagx(&["analyze", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn closure_output() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "chorded.txt", CHORDED_CHAIN);
    let out = dagx(&["closure", path.to_str().unwrap()]);
    assert!(out.status.success());
    let closed = stdout(&out);
    assert_eq!(closed.lines().count(), 11);

    let again = write(&dir, "closed.txt", &closed);
    let out = dagx(&["closure", again.to_str().unwrap()]);
    assert_eq!(stdout(&out), closed);
}

#[test]
fn generators_feed_analyze() {
    let dir = TempDir::new().unwrap();
    let cases: [(&[&str], usize); 5] = [
        (&["gen", "extremal", "--n", "5", "--ell", "2"], 8),
        (&["gen", "extremal", "--r", "2", "--l", "3", "--s", "1"], 2 * 2 + 1 + 2 + 2),
        (&["gen", "extremal", "--n", "6", "--ell", "1"], 9),
        (&["gen", "turan-dag", "--n", "6", "--k", "3"], 12),
        (&["gen", "random", "--n", "7", "--p", "0.5", "--seed", "9"], usize::MAX),
    ];
    for (i, (args, edges)) in cases.iter().enumerate() {
        let out = dagx(args);
        assert!(out.status.success(), "{args:?}: {}", stderr(&out));
        let text = stdout(&out);
        if *edges != usize::MAX {
            assert_eq!(text.lines().count() - 1, *edges, "{args:?}");
        }
        let path = write(&dir, &format!("g{i}.txt"), &text);
        let out = dagx(&["analyze", path.to_str().unwrap()]);
        assert!(out.status.success(), "{args:?}: {}", stderr(&out));
        if args[1] == "extremal" {
            assert_eq!(field(&stdout(&out), "slack"), "0", "{args:?}");
        }
    }

    let a = dagx(&["gen", "random", "--n", "7", "--p", "0.5", "--seed", "9"]);
    let b = dagx(&["gen", "random", "--n", "7", "--p", "0.5", "--seed", "9"]);
    assert_eq!(stdout(&a), stdout(&b));

    let out = dagx(&["gen", "random", "--n", "7", "--p", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = dagx(&["gen", "extremal", "--n", "3", "--ell", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn box_family_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = dagx(&["gen", "boxes-extremal", "--r", "2", "--l", "2", "--s", "2"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert_eq!(csv.lines().count(), 6);
    let path = write(&dir, "boxes.csv", &csv);
    let out = dagx(&["boxes-graph", "--require-transverse", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let expected = dagx(&["gen", "extremal", "--r", "2", "--l", "2", "--s", "2"]);
    assert_eq!(stdout(&out), stdout(&expected));
    assert!(stderr(&out).contains("transverse family: yes"));
}

#[test]
fn boxes_graph_checks() {
    let dir = TempDir::new().unwrap();
    let nested = write(&dir, "nested.csv", "id,ix_lo,ix_hi,jy_lo,jy_hi\na,0,4,0,4\nb,1,2,1,2\n");
    let out = dagx(&["boxes-graph", nested.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("a and b meet without crossing"));
    let out = dagx(&["boxes-graph", "--require-transverse", nested.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    let apart = write(&dir, "apart.csv", "id,ix_lo,ix_hi,jy_lo,jy_hi\na,0,1,0,1\nb,2,3,0,1\n");
    let out = dagx(&["boxes-graph", "--require-transverse", apart.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n 2\n");

    let flat = write(&dir, "flat.csv", "id,ix_lo,ix_hi,jy_lo,jy_hi\na,1,1,0,1\n");
    let out = dagx(&["boxes-graph", flat.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_separations_reports_witnesses() {
    let out = dagx(&["verify", "separations", "--max-n", "5"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["claim"], "separations");
    let witnesses = v["witnesses"].as_array().unwrap();
    assert!(witnesses.iter().any(|w| w["instance"] == "n 5\n0 1\n0 3\n1 2\n1 4\n2 3\n3 4\n"));
    assert!(v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn verify_limits() {
    let out = dagx(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = dagx(&["verify", "turan", "--max-n", "12"]);
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_dagx"))
        .args(["verify", "turan"])
        .env("DAGX_MAX_N", "4")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["params"]["max_n"], 4);
}
