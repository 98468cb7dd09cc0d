//! End-to-end runs of the `edr` binary.

use std::path::Path;
use std::process::{Command, Output};

use edr_cli::parse_element;
use edr_core::sample::{Bounds, Sampler};
use edr_core::RingId;
use serde_json::Value;

fn edr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edr"))
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(path: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

const TRIANGULAR: &str = r#"{"ring": "integers", "rows": [["2", "0"], ["1", "3"]]}"#;

#[test]
fn snf_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", TRIANGULAR);
    let c = dir.path().join("c.json").to_str().unwrap().to_string();
    let o = edr(&["snf", "--ring", "integers", "--in", &m, "--out", &c]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let cert = json(&c);
    assert_eq!(cert["D"], serde_json::json!([["1", "0"], ["0", "6"]]));
    assert_eq!(cert["checks"]["detQ_unit"], true);
    assert_eq!(code(&edr(&["verify", "--in", &m, "--cert", &c])), 0);

    // Swapped diagonal: the chain and the product both break.
    let mut bad = cert.clone();
    bad["D"] = serde_json::json!([["6", "0"], ["0", "1"]]);
    let b = write(dir.path(), "bad.json", &bad.to_string());
    assert_eq!(code(&edr(&["verify", "--in", &m, "--cert", &b])), 4);

    // Certificate for a different matrix.
    let other = write(
        dir.path(),
        "other.json",
        r#"{"ring": "integers", "rows": [["2", "0"], ["1", "5"]]}"#,
    );
    assert_eq!(code(&edr(&["verify", "--in", &other, "--cert", &c])), 4);

    let hm = write(
        dir.path(),
        "h.json",
        r#"{"ring": "henriksen", "rows": [["2", "0"], ["1", "3"]]}"#,
    );
    assert_eq!(code(&edr(&["verify", "--in", &hm, "--cert", &c])), 3);
    assert_eq!(code(&edr(&["snf", "--ring", "ratpoly", "--in", &m])), 3);
}

#[test]
fn oracle_findings_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json").to_str().unwrap().to_string();
    let o = edr(&["gelfand-check", "--ring", "henriksen", "x", "--out", &w]);
    assert_eq!(code(&o), 0);
    let r = json(&w);
    assert_eq!(r["verdict"], false);
    assert_eq!(
        (r["witness"]["b"].as_str(), r["witness"]["c"].as_str()),
        (Some("2"), Some("3"))
    );

    let o = edr(&["oracle", "s-member", "--a", "0"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["witness"], serde_json::json!({"a": 2, "b": 5}));
    for args in [
        &["oracle", "pm", "--n", "12"][..],
        &["oracle", "sr1", "--n", "100"],
        &["oracle", "clean", "--n", "6"],
        &["oracle", "s-closure", "--bound", "6"],
        &["oracle", "avoidable", "--a", "-12", "--bound", "10"],
        &["gelfand-check", "--ring", "integers", "6", "--bound", "8"],
    ] {
        let o = edr(args);
        assert_eq!(code(&o), 0, "{args:?}");
        let r: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(r["verdict"], true, "{args:?}");
    }
}

#[test]
fn exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", TRIANGULAR);
    assert_eq!(
        code(&edr(&["xgcd", "--ring", "henriksen", "4 + x", "6 + x"])),
        0
    );
    assert_eq!(code(&edr(&["xgcd", "--ring", "henriksen", "1/2", "x"])), 2);
    assert_eq!(code(&edr(&["xgcd", "--ring", "integers", "1 +", "2"])), 2);
    assert_eq!(
        code(&edr(&[
            "snf",
            "--ring",
            "integers",
            "--in",
            "/nonexistent/m.json"
        ])),
        2
    );
    let ragged = write(
        dir.path(),
        "r.json",
        r#"{"ring": "integers", "rows": [["1"], ["1", "2"]]}"#,
    );
    assert_eq!(
        code(&edr(&["snf", "--ring", "integers", "--in", &ragged])),
        2
    );
    let garbage = write(dir.path(), "g.json", "not json");
    assert_eq!(
        code(&edr(&["snf", "--ring", "integers", "--in", &garbage])),
        2
    );
    assert_eq!(code(&edr(&["frobnicate"])), 2);
    assert_eq!(
        code(&edr(&["gelfand-shift", "--ring", "henriksen", "2", "4"])),
        3
    );
    assert_eq!(
        code(&edr(&[
            "gelfand-factor",
            "--ring",
            "henriksen",
            "x",
            "2",
            "3"
        ])),
        3
    );
    assert_eq!(code(&edr(&["oracle", "sr1", "--n", "1"])), 3);
    assert_eq!(
        code(&edr(&[
            "snf",
            "--ring",
            "integers",
            "--in",
            &m,
            "--out",
            "/nonexistent/dir/c.json"
        ])),
        1
    );
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.json",
        r#"{"ring": "henriksen", "rows": [["x", "2 + x", "0"], ["3", "1 + x", "x^2"], ["1/2*x", "4", "6"]]}"#,
    );
    let snf = || edr(&["snf", "--ring", "henriksen", "--in", &m]).stdout;
    let first = snf();
    assert!(!first.is_empty());
    assert_eq!(first, snf());
    let check = || {
        edr(&[
            "gelfand-check",
            "--ring",
            "henriksen",
            "3 - x",
            "--samples",
            "20",
            "--seed",
            "7",
        ])
        .stdout
    };
    assert_eq!(check(), check());
}

#[test]
fn grammar_roundtrip() {
    for ring in RingId::ALL {
        let mut s = Sampler::new(99);
        let b = Bounds::small(4);
        for _ in 0..200 {
            let e = s.element(ring, &b);
            let text = e.to_string();
            assert_eq!(parse_element(ring, &text).unwrap(), e, "{text}");
        }
    }
}
