//! End-to-end runs of the `numsgps` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn numsgps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numsgps"))
        .args(args)
        .env_remove("NUMSGPS_GENUS_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = numsgps(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

fn code(args: &[&str]) -> Option<i32> {
    numsgps(args).status.code()
}

#[test]
fn opened_text_line() {
    assert_eq!(
        stdout(&["opened", "5", "11"]),
        "F=11 g=6 t=1 m=5 gens=5,7,8,9\n"
    );
}

#[test]
fn info_json_block() {
    let v = json(&["info", "5,8,11,12"]);
    assert_eq!(v["generators"], serde_json::json!([5, 8, 11, 12]));
    assert_eq!(v["frobenius"], 14);
    assert_eq!(v["genus"], 8);
    assert_eq!(v["pf"], serde_json::json!([7, 14]));
    assert_eq!(v["type"], 2);
    assert_eq!(v["apery"], serde_json::json!([0, 8, 11, 12, 19]));
}

#[test]
fn shared_block_everywhere() {
    let runs: &[&[&str]] = &[
        &["info", "3,4,5"],
        &["classify", "3,4,5"],
        &["dual", "3,4,5"],
        &["medcover", "3,4,5"],
        &["modular", "5:11:1"],
        &["opened", "5", "11"],
        &["interval", "[11/5..11/4]"],
        &["threegen", "5,7,16"],
        &["glue", "--h1", "2,3", "--h2", "1", "--x", "2", "--y", "9"],
        &["decompose", "4,6,9"],
        &["ci", "4,6,9"],
    ];
    for args in runs {
        let v = json(args);
        for key in [
            "generators",
            "frobenius",
            "genus",
            "type",
            "pf",
            "multiplicity",
        ] {
            assert!(v.get(key).is_some(), "{args:?} lacks {key}");
        }
    }
}

#[test]
fn glue_large_example() {
    let args = [
        "glue",
        "--h1",
        "6,10,11,13,14",
        "--h2",
        "7,8,10,13",
        "--x",
        "14",
        "--y",
        "17",
    ];
    let text = stdout(&args);
    assert!(text.contains("pf=659,673,771"), "{text}");
    assert!(text.contains("almost_symmetric=false"), "{text}");
    let v = json(&args);
    assert_eq!(
        v["generators"],
        serde_json::json!([84, 119, 136, 140, 154, 170, 182, 196, 221])
    );
    assert_eq!(v["pf"], serde_json::json!([659, 673, 771]));
    assert_eq!(v["almost_symmetric"], false);
}

#[test]
fn classify_reports_class() {
    assert!(stdout(&["classify", "5,7,16"]).starts_with("class=pseudo-symmetric t=2"));
    assert!(stdout(&["classify", "5,7,9,11,13"]).starts_with("class=almost-symmetric t=4"));
    let v = json(&["classify", "4,5,11"]);
    assert_eq!(v["class"], "none");
    assert_eq!(v["violation"]["index"], 1);
}

#[test]
fn dual_and_medcover() {
    assert!(stdout(&["dual", "5,6,8,9"]).starts_with("dual: F=2 g=2 t=2 m=3 gens=3,4,5\n"));
    assert!(stdout(&["medcover", "3,4,5"]).starts_with("F=5 g=4 t=2 m=3 gens=3,7,8\n"));
    assert!(stdout(&["medcover", "3,4,5", "--element", "5"]).contains("gens=5,8,9,11,12"));
}

#[test]
fn threegen_layout() {
    let text = stdout(&["threegen", "5,7,16"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("X^1  Y^1  Z^1"));
    assert_eq!(lines.next(), Some("Y^2  Z^1  X^5"));
    assert!(text.contains("pf=9,18 pseudo_symmetric=true"));
    assert!(text.contains("arrangement a=5 b=7 c=16 d=3"));
}

#[test]
fn modular_and_intervals() {
    let text = stdout(&["modular", "5:11:1"]);
    assert!(
        text.starts_with("F=6 g=5 t=4 m=5 gens=5,7,8,9,11\n"),
        "{text}"
    );
    assert!(text.contains("delta=2 F_formula=6"));
    assert!(stdout(&["interval", "]11/5..11/4["]).starts_with("F=11 g=6 t=1 m=5 gens=5,7,8,9\n"));
    assert!(stdout(&["interval", "(11/5..11/4)"]).contains("gens=5,7,8,9\n"));
}

#[test]
fn decompositions_and_ci() {
    assert_eq!(
        stdout(&["decompose", "4,6,9"]),
        "x=2 H1=2,3 y=9 H2=1\nx=4 H1=1 y=3 H2=2,3\n"
    );
    assert_eq!(stdout(&["decompose", "5,7,16"]), "no decomposition\n");
    assert_eq!(stdout(&["ci", "4,6,9"]), "complete_intersection=true\n");
    assert_eq!(stdout(&["ci", "5,7,16"]), "complete_intersection=false\n");
}

#[test]
fn verify_emits_tap() {
    let text = stdout(&["verify", "5,8,11,12"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# 5,8,11,12"));
    let plan = lines.next().unwrap();
    let n: usize = plan.strip_prefix("1..").unwrap().parse().unwrap();
    assert_eq!(lines.clone().count(), n);
    assert!(lines.all(|l| l.starts_with("ok ")));
    assert!(stdout(&["verify", "--opened", "5", "11"])
        .lines()
        .skip(2)
        .all(|l| l.starts_with("ok ")));
    assert!(stdout(&["verify", "--genus", "6"]).ends_with("0 failing semigroups\n"));
}

#[test]
fn enumerate_streams() {
    assert_eq!(
        stdout(&["enumerate", "--genus", "2"]),
        "1\n2,3\n3,4,5\n2,5\n"
    );
    let sym = stdout(&["enumerate", "--genus", "6", "--filter", "symmetric"]);
    assert!(sym.lines().all(|l| !l.is_empty()));
    let almost = stdout(&["enumerate", "--genus", "10", "--filter", "almost-symmetric"]);
    let parallel = stdout(&[
        "--jobs",
        "3",
        "enumerate",
        "--genus",
        "10",
        "--filter",
        "almost-symmetric",
    ]);
    assert_eq!(almost, parallel);
    let lines: Vec<Value> = stdout(&["enumerate", "--genus", "3", "--json"])
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|v| v["genus"].as_i64().unwrap() <= 3));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["dual", "5,8,11,12", "--json"][..],
        &["threegen", "5,7,16"],
        &["enumerate", "--genus", "7"],
    ] {
        assert_eq!(numsgps(args).stdout, numsgps(args).stdout);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["info", "4,6"]), Some(2));
    assert_eq!(code(&["opened", "6", "5"]), Some(2));
    assert_eq!(code(&["threegen", "5,8,11,12"]), Some(2));
    assert_eq!(code(&["threegen", "4,6,9"]), Some(2));
    assert_eq!(
        code(&["glue", "--h1", "2,3", "--h2", "2,3", "--x", "5", "--y", "5"]),
        Some(2)
    );
    assert_eq!(code(&["dual", "1"]), Some(2));
    assert_eq!(code(&["enumerate", "--genus", "26"]), Some(2));
    assert_eq!(code(&["info", "4,x"]), Some(1));
    assert_eq!(code(&["info"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["modular", "1:2"]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));
    let err = String::from_utf8(numsgps(&["info", "4,6"]).stderr).unwrap();
    assert!(err.contains("gcd 2"), "{err}");
}

#[test]
fn genus_cap_sources() {
    assert_eq!(
        code(&["--genus-cap", "3", "enumerate", "--genus", "4"]),
        Some(2)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_numsgps"))
        .args(["enumerate", "--genus", "4"])
        .env("NUMSGPS_GENUS_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let path = std::env::temp_dir().join(format!("numsgps-cli-{}.toml", std::process::id()));
    std::fs::write(&path, "genus_cap = 3\njobs = 2\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(code(&["--config", p, "enumerate", "--genus", "4"]), Some(2));
    assert_eq!(
        code(&[
            "--config",
            p,
            "--genus-cap",
            "4",
            "enumerate",
            "--genus",
            "4"
        ]),
        Some(0)
    );
    std::fs::write(&path, "depth = 3\n").unwrap();
    assert_eq!(code(&["--config", p, "info", "2,3"]), Some(1));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(
        code(&["--config", "/nonexistent/numsgps.toml", "info", "2,3"]),
        Some(1)
    );
}
