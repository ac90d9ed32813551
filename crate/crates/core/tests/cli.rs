use std::process::Command;

use altq::config::{Group, RunConfig};
use altq::runner::{run, to_json};
use altq::{Error, RatFuncQ};

fn altq(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_altq")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write_tmp(name: &str, text: &str) -> String {
    let path = format!("{}/{name}", env!("CARGO_TARGET_TMPDIR"));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn zero_k_plus_is_rejected() {
    let e = RunConfig::from_json(r#"{ "params": { "k_plus": "0" } }"#).unwrap_err();
    assert!(matches!(e, Error::ConfigInvalid(_)), "{e}");
}

#[test]
fn config_fields_and_scalars() {
    let cfg = RunConfig::from_json(
        r#"{ "order": 2, "params": { "k_plus": "q^2", "k_minus": "-q^-1", "eps_plus": "3/2" },
             "dress": [ { "spins": ["1/2", "1"], "v": ["2", "-1/3"] } ], "groups": ["pbw", "ybe", "pbw"] }"#,
    )
    .unwrap();
    assert_eq!(cfg.order, 2);
    assert_eq!(cfg.params.eps_plus, RatFuncQ::from_ratio(3, 2));
    assert_eq!(cfg.dress.len(), 1);
    assert_eq!(cfg.dress[0].v[1], RatFuncQ::from_ratio(-1, 3));
    assert_eq!(cfg.groups, vec![Group::Ybe, Group::Pbw]);
    assert_eq!(RunConfig::from_json("{}").unwrap().groups, Group::ALL.to_vec());
}

#[test]
fn malformed_configs_are_rejected() {
    for text in [
        r#"{ "groups": ["nope"] }"#,
        r#"{ "order": 1 }"#,
        r#"{ "colour": 1 }"#,
        r#"{ "params": { "k_minus": "q^" } }"#,
        r#"{ "dress": [ { "spins": ["1/2"], "v": ["0"] } ] }"#,
        r#"{ "dress": [ { "spins": ["0"], "v": ["1"] } ] }"#,
        "not json",
    ] {
        assert!(matches!(RunConfig::from_json(text), Err(Error::ConfigInvalid(_))), "{text}");
    }
}

#[test]
fn group_filter_selects_only_that_group() {
    let mut cfg = RunConfig::default();
    cfg.set_groups(&["ybe"]).unwrap();
    let reports = run(&cfg);
    assert_eq!(reports.len(), 1);
    assert!(reports.iter().all(|r| r.check_id.starts_with("ybe.") && r.passed()));
}

#[test]
fn reports_are_sorted_and_stable() {
    let mut cfg = RunConfig::default();
    cfg.set_groups(&["pbw", "dictionary", "serre", "classical"]).unwrap();
    let a = run(&cfg);
    let ids: Vec<&str> = a.iter().map(|r| r.check_id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(to_json(&a), to_json(&run(&cfg)));
}

#[test]
fn verify_exit_codes() {
    let (code, out, err) = altq(&["verify", "ybe", "--json", "-"]);
    assert_eq!(code, 0, "{err}");
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.as_array().unwrap().len(), 1);
    assert_eq!(doc[0]["status"], "pass");
    assert!(err.contains("PASS ybe.r-matrix"));

    let bad = write_tmp("bad.json", r#"{ "params": { "k_plus": "0" } }"#);
    let (code, _, err) = altq(&["verify", "all", "--config", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("invalid configuration"), "{err}");

    assert_eq!(altq(&["verify", "everything"]).0, 1);
    assert_eq!(altq(&["verify", "pbw", "--order", "x"]).0, 1);
    assert_eq!(altq(&["frobnicate"]).0, 1);
}

#[test]
fn verify_group_flag_and_overrides() {
    let (code, out, _) = altq(&["verify", "all", "--group", "pbw", "--max-degree", "5", "--json", "-"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let ids: Vec<&str> = doc.as_array().unwrap().iter().map(|r| r["check_id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["pbw.census.central", "pbw.census.quotient"]);
    assert_eq!(doc[0]["details"]["max_total_degree"], 5);
}

#[test]
fn dump_commands() {
    let (code, out, _) = altq(&["dump", "generator", "G1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("G1 = "));
    assert!(out.contains("D1"));
    let (code, out, _) = altq(&["dump", "generator", "W-2", "--nmax", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("W-2 = "));
    let (code, out, _) = altq(&["dump", "delta", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("D1 = G1 + Gt1"), "{out}");
    assert_eq!(altq(&["dump", "delta", "0"]).0, 1);
    assert_eq!(altq(&["dump", "generator", "E0"]).0, 1);
    assert_eq!(altq(&["dump", "generator", "X7"]).0, 1);
}
