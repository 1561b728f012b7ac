use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn regma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regma")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn check(p: &Path) -> i32 {
    regma(&["--check", p.to_str().unwrap()]).status.code().unwrap()
}

#[test]
fn petersen_systole_and_its_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("p.json");
    let out = regma(&["systole", "builtin:petersen", "--certificate", cert.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["value"], "1/3");
    assert_eq!(v["kind"], "systole");
    assert_eq!(read_json(&cert), v);
    assert_eq!(check(&cert), 0);

    // Tampering with the value is caught.
    let mut bad = v.clone();
    bad["result"]["value"] = "1/2".into();
    std::fs::write(&cert, bad.to_string()).unwrap();
    assert_eq!(check(&cert), 1);
}

#[test]
fn output_is_deterministic() {
    let a = regma(&["systole", "builtin:k33"]);
    let b = regma(&["systole", "builtin:k33"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    // Keys come out sorted.
    let keys: Vec<usize> = ["\"command\"", "\"graph\"", "\"input\"", "\"kind\"", "\"result\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn weighted_systole() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    std::fs::write(&w, "1 1 1 1 1 2\n").unwrap();
    let cert = dir.path().join("c.json");
    let out =
        regma(&["systole", "builtin:k4", "--weights", w.to_str().unwrap(), "--certificate", cert.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json(&out)["value"], "3/7");
    assert_eq!(check(&cert), 0);
}

#[test]
fn f13_reaches_euler_characteristic_zero() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("e.json");
    let out = regma(&["embed", "builtin:f13", "--chi", "0", "--nonorientable", "--out", cert.to_str().unwrap()]);
    assert!(out.status.success());
    let v = read_json(&cert);
    assert_eq!(v["found"], true);
    assert_eq!(v["certificate"]["chi"], 0);
    assert_eq!(check(&cert), 0);
}

#[test]
fn missing_embedding_exits_one() {
    let out = regma(&["embed", "builtin:k33", "--chi", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["found"], false);
    let out = regma(&["embed", "builtin:k33", "--max", "--nonorientable"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["certificate"]["chi"], 1);
}

#[test]
fn pinned_face() {
    let out = regma(&["embed", "builtin:k4", "--chi", "2", "--face", "0,1,2"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["certificate"]["faces"].as_array().unwrap().len(), 4);
}

#[test]
fn tables_up_to_six() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("t.json");
    let out = regma(&["verify-tables", "--max-b", "6", "--jobs", "2", "--out", report.to_str().unwrap()]);
    assert!(out.status.success());
    let v = read_json(&report);
    assert_eq!(v["status"], "ok");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r["status"] == "ok"));
    assert_eq!(rows[5]["computed"], "1/3");
    // A report is not a certificate.
    assert_eq!(check(&report), 2);
}

#[test]
fn cogirth_and_c_rep_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let out = regma(&["cogirth", "r10", "--certificate", cert.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json(&out)["value"], "2/5");
    assert_eq!(check(&cert), 0);

    let mult = dir.path().join("m.txt");
    std::fs::write(&mult, "1 1 1 1 1 1\n").unwrap();
    let out = regma(&[
        "c-rep",
        "graphic(builtin:k4)",
        "--mult",
        mult.to_str().unwrap(),
        "--certificate",
        cert.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["value"], "1/2");
    assert_eq!(check(&cert), 0);
}

#[test]
fn involutions_with_a_check() {
    let dir = tempfile::tempdir().unwrap();
    let mult = dir.path().join("m.txt");
    std::fs::write(&mult, vec!["1"; 15].join(" ")).unwrap();
    let cert = dir.path().join("i.json");
    let out = regma(&[
        "involutions6",
        "cographic(builtin:petersen)",
        "--mult",
        mult.to_str().unwrap(),
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = read_json(&cert);
    assert_eq!(v["set"]["vs"].as_array().unwrap().len(), 6);
    assert_eq!(v["check"]["result"]["ok"], true);
    assert_eq!(check(&cert), 0);
}

#[test]
fn generator_and_reduction() {
    let out = regma(&["gen-cubic", "--n", "10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.split("\n\n").count(), 19);
    let out = regma(&["gen-cubic", "--n", "10", "--min-girth", "5"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().split("\n\n").count(), 1);

    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    // Two triangles joined by a bridge, plus a pendant vertex.
    std::fs::write(&g, "7 8\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n2 3\n5 6\n").unwrap();
    let cert = dir.path().join("r.json");
    let out = regma(&["reduce", g.to_str().unwrap(), "--out", cert.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(!read_json(&cert)["steps"].as_array().unwrap().is_empty());
    assert_eq!(check(&cert), 0);
}

#[test]
fn matroid_build_prints_a_file() {
    let out = regma(&["matroid-build", "dual(graphic(builtin:k4))"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("3 6\n"));
    assert!(text.contains("LIFT"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &[][..],
        &["bogus"][..],
        &["systole"][..],
        &["systole", "builtin:nonesuch"][..],
        &["gen-cubic", "--n", "7"][..],
        &["verify-tables", "--max-b", "0"][..],
        &["embed", "builtin:k4"][..],
        &["embed", "builtin:k4", "--max", "--chi", "1"][..],
    ] {
        assert_eq!(regma(args).status.code(), Some(2), "{args:?}");
    }
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "not json").unwrap();
    assert_eq!(check(&junk), 2);
}
