mod common;

use common::{golden_path, json, run, stdout, GOLDEN};
use serde_json::{json, Value};

#[test]
fn golden_outputs() {
    for (name, args) in GOLDEN {
        let expected = std::fs::read_to_string(golden_path(name)).expect("golden file present");
        assert_eq!(stdout(args), expected, "{name}");
    }
}

#[test]
fn rp3_sum() {
    let v = json(&["pants", "2,-2,0"]);
    assert_eq!(
        v["class"],
        json!({"type": "ConnectedSum", "summands": [
            {"type": "Lens", "p": 2, "q": 1},
            {"type": "Lens", "p": -2, "q": 1},
        ]})
    );
    assert_eq!(v["h1"], json!({"rank": 0, "torsion": [2, 2]}));
    assert_eq!(v["obg"]["exact"], 2);
}

#[test]
fn key_order_is_fixed() {
    let text = stdout(&["pants", "2,3,5"]);
    let keys = ["\"input\"", "\"class\"", "\"h1\"", "\"obg\"", "\"witnesses\""];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["class"]["fibers"], json!([[2, 1], [3, 1], [5, 1]]));
    assert_eq!(v["h1"]["torsion"], json!([31]));
}

#[test]
fn pants_examples() {
    let v = json(&["pants", "0,0,0"]);
    assert_eq!(v["class"]["summands"], json!([{"type": "S1xS2"}, {"type": "S1xS2"}]));
    assert_eq!(v["h1"]["rank"], 2);
    let v = json(&["pants", "1,1,0"]);
    assert_eq!(v["class"]["type"], "S3");
    assert_eq!(v["obg"], json!({"lower": 0, "upper": 0, "exact": 0}));
    let v = json(&["pants", "-1,-1,-1"]);
    assert_eq!(v["class"], json!({"type": "Lens", "p": 3, "q": 1}));
}

#[test]
fn dbc_examples() {
    let v = json(&["dbc", "1 2 1 2"]);
    assert_eq!(v["page"]["genus"], 1);
    assert_eq!(v["page"]["boundary"], 1);
    assert_eq!(v["obg"]["upper"], 2);
    assert_eq!(v["h1"]["torsion"], json!([3]));
    let v = json(&["dbc", "", "--strands", "1"]);
    assert_eq!(v["class"]["type"], "S3");
    assert_eq!(v["obg"]["upper"], 0);
    let v = json(&["dbc", "1,1,2,2"]);
    assert_eq!(v["class"]["summands"], json!([{"type": "Lens", "p": 2, "q": 1}, {"type": "Lens", "p": 2, "q": 1}]));
    let v = json(&["dbc", "-1 -1", "-n", "2"]);
    assert_eq!(v["class"], json!({"type": "Lens", "p": -2, "q": 1}));
}

#[test]
fn plumb_examples() {
    for (pages, bound) in [("annulus,annulus", 2), ("disk,pants", 2), ("pants,pants", 4), ("torus,1:2,disk", 5)] {
        let v = json(&["plumb", pages]);
        assert_eq!(v["obg"]["upper"], bound, "{pages}");
        assert_eq!(v["page"]["heegaard_genus"], bound, "{pages}");
    }
    assert_eq!(json(&["plumb", "annulus", "annulus"]), json(&["plumb", "annulus,annulus"]));
    let v = json(&["plumb", "annulus,annulus", "--annuli", "pants"]);
    assert_eq!((v["page"]["genus"].clone(), v["page"]["boundary"].clone()), (json!(0), json!(3)));
}

#[test]
fn snf_examples() {
    assert_eq!(json(&["snf", "[[-6,2],[-3,0]]"])["invariant_factors"], json!([1, 6]));
    assert_eq!(json(&["snf", "-6 2; -3 0"])["invariant_factors"], json!([1, 6]));
    assert_eq!(json(&["snf", "[[0,0],[0,0]]"])["cokernel"], json!({"rank": 2, "torsion": []}));
    assert_eq!(json(&["snf", "[[3]]"])["cokernel"], json!({"rank": 0, "torsion": [3]}));
    let big = json(&["snf", "[[100000000000000000000000,0],[0,6]]"]);
    assert_eq!(big["invariant_factors"], serde_json::from_str::<Value>("[2, 300000000000000000000000]").unwrap());
}

#[test]
fn braid_info() {
    let v = json(&["braid-info", "1 -2 1 -2"]);
    assert_eq!(v["determinant"], 5);
    assert_eq!(v["components"], 1);
    let v = json(&["braid-info", "1 1 2 2"]);
    assert_eq!(v["components"], 3);
    assert_eq!(v["torus_sum"], json!([2, 2]));
    assert_eq!(v["braid_index"]["exact"], 3);
    let v = json(&["braid-info", "1 1 1", "-n", "2"]);
    assert!(v.get("burau").is_none());
    assert_eq!(v["braid_index"]["exact"], 2);
}

fn assert_error(args: &[&str], code: i32, kind: &str) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    assert!(out.stdout.is_empty(), "{args:?}");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    let v: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"], kind, "{args:?}");
}

#[test]
fn exit_codes() {
    assert_error(&["pants", "1,2"], 2, "parse");
    assert_error(&["pants", "a,b,c"], 2, "parse");
    assert_error(&["dbc", "1 x"], 2, "parse");
    assert_error(&["dbc", "3", "--strands", "3"], 2, "parse");
    assert_error(&["snf", "[[1,2],[3]]"], 2, "parse");
    assert_error(&["snf", "1 2; 3"], 2, "parse");
    assert_error(&["plumb", "disk,sphere"], 2, "parse");
    assert_error(&["plumb", "pants"], 2, "usage");
    assert_error(&["frobnicate"], 2, "usage");
    assert_error(&["dbc", "1 2 3"], 3, "domain");
    assert_error(&["dbc", "1", "--strands", "5"], 3, "domain");
}

#[test]
fn pretty_is_text() {
    let text = stdout(&["pants", "2,-2,0", "--pretty"]);
    assert!(text.starts_with("manifold: L(2,1) # L(-2,1)"), "{text}");
    assert!(text.contains("open book genus: 2"));
    assert_eq!(stdout(&["--json", "pants", "2,-2,0"]), stdout(&["pants", "2,-2,0"]));
}
