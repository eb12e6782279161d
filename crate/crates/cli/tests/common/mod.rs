#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// Commands with checked-in expected output under `tests/golden/`.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("pants_rp3_sum", &["pants", "2,-2,0"]),
    ("pants_identity", &["pants", "0,0,0"]),
    ("pants_sphere", &["pants", "1,1,0"]),
    ("pants_poincare", &["pants", "2,3,5"]),
    ("pants_lens_5_2", &["pants", "1,1,2"]),
    ("dbc_trefoil", &["dbc", "1 2 1 2"]),
    ("dbc_unknot", &["dbc", "", "--strands", "1"]),
    ("dbc_hopf_sum", &["dbc", "1 1 2 2"]),
    ("dbc_four_strands_page", &["dbc", "1 2 3", "--page-only"]),
    ("plumb_annulus_annulus", &["plumb", "annulus,annulus"]),
    ("plumb_disk_pants", &["plumb", "disk,pants"]),
    ("plumb_pants_pants", &["plumb", "pants,pants"]),
    ("snf_reduction", &["snf", "[[-6,2],[-3,0]]"]),
    ("snf_zero", &["snf", "[[0,0],[0,0]]"]),
    ("snf_three", &["snf", "[[3]]"]),
    ("braid_info_trefoil", &["braid-info", "1 2 1 2"]),
];

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_obgenus")).args(args).output().expect("binary runs")
}

pub fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8 output")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

pub fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).expect("valid JSON")
}
