use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples-data").join(name).to_str().unwrap().to_string()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(name)
}

fn etheta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etheta"))
        .args(args)
        .args(["--format", "json-lines"])
        .env_remove("ETHETA_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

/// The line whose `key` field equals `name`.
fn entry<'a>(rows: &'a [Value], key: &str, name: &str) -> &'a Value {
    rows.iter().find(|r| r[key] == name).unwrap_or_else(|| panic!("no {key} {name}"))
}

fn labels(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect()
}

/// Compares against a checked-in file; `ETHETA_BLESS=1` rewrites it.
fn assert_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("ETHETA_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "{name}");
}

#[test]
fn three_point_theta_closed_sets() {
    let rows = lines(&stdout(&etheta(&["analyze", &data("example2.space")])));
    assert_eq!(rows.len(), 8);
    let closed = |set: &[&str]| {
        let row = rows.iter().find(|r| labels(&r["set"]) == set).unwrap();
        row["families"].as_array().unwrap().iter().any(|f| f == "e*-theta-closed")
    };
    assert!(closed(&["1"]));
    assert!(closed(&["2"]));
    assert!(!closed(&["1", "2"]));
}

#[test]
fn star_space_theta_closure_of_ab() {
    let out = stdout(&etheta(&["analyze", &data("example4.space"), "--set", "a,b", "--op", "e*-cl_theta"]));
    let rows = lines(&out);
    assert_eq!(labels(&rows[0]["operators"]["e*-cl_theta"]), ["a", "b"]);
}

#[test]
fn star_space_families() {
    let rows = lines(&stdout(&etheta(&["analyze", &data("example4.space"), "--families", "e*-theta-open,e*-theta-d"])));
    let open = entry(&rows, "family", "e*-theta-open");
    assert_eq!(open["size"], 15);
    assert!(!open["sets"].as_array().unwrap().iter().any(|s| labels(s) == ["b"]));
    let d = entry(&rows, "family", "e*-theta-d");
    assert_eq!(d["size"], 15);
    assert!(!d["sets"].as_array().unwrap().iter().any(|s| labels(s) == ["a", "b", "c", "d"]));
}

#[test]
fn chain_space_families_and_kernels() {
    let rows = lines(&stdout(&etheta(&["analyze", &data("example5.space"), "--families"])));
    for kind in ["e*-regular", "e*-theta-open", "e*-open"] {
        assert_eq!(entry(&rows, "family", kind)["size"], 16, "{kind}");
    }
    let beta_theta = entry(&rows, "family", "beta-theta-open");
    assert_eq!(beta_theta["sets"], serde_json::json!([[], ["a", "b", "c", "d"]]));
    let beta_open: Vec<Vec<&str>> = entry(&rows, "family", "beta-open")["sets"].as_array().unwrap().iter().map(labels).collect();
    let expected: Vec<Vec<&str>> = vec![
        vec![],
        vec!["a"],
        vec!["a", "b"],
        vec!["a", "c"],
        vec!["a", "d"],
        vec!["a", "b", "c"],
        vec!["a", "b", "d"],
        vec!["a", "c", "d"],
        vec!["a", "b", "c", "d"],
    ];
    assert_eq!(beta_open, expected);

    let ker = lines(&stdout(&etheta(&["analyze", &data("example5.space"), "--set", "a,b", "--op", "e*-ker_theta,beta-ker_theta"])));
    assert_eq!(labels(&ker[0]["operators"]["e*-ker_theta"]), ["a", "b"]);
    assert_eq!(labels(&ker[0]["operators"]["beta-ker_theta"]), ["a", "b", "c", "d"]);
}

#[test]
fn axiom_tables() {
    let star = stdout(&etheta(&["axioms", &data("example4.space")]));
    assert_golden("axioms-example4.jsonl", &star);
    let rows = lines(&star);
    assert_eq!(entry(&rows, "axiom", "e*-R1")["holds"], true);
    assert_eq!(entry(&rows, "axiom", "beta-R1")["holds"], false);

    let rows = lines(&stdout(&etheta(&["axioms", &data("example5.space")])));
    assert_eq!(entry(&rows, "axiom", "slightly-e*-theta-R0")["holds"], true);
    assert_eq!(entry(&rows, "axiom", "slightly-beta-theta-R0")["holds"], false);

    let rows = lines(&stdout(&etheta(&["axioms", &data("point1.space")])));
    assert_eq!(rows.len(), 14);
    for r in &rows[..13] {
        let name = r["axiom"].as_str().unwrap();
        if name.contains("-D") {
            assert_eq!(r["holds"], false, "{name}");
        }
        if name.contains("-T") {
            assert_eq!(r["holds"], true, "{name}");
        }
    }
    assert_eq!(labels(&rows[13]["cc-points"]), ["x"]);
}

#[test]
fn constant_map_properties() {
    let inline = stdout(&etheta(&["map", &data("example4.space"), &data("example4.space"), "--map", "a:c,b:c,c:c,d:c"]));
    assert_golden("map-constant-c.jsonl", &inline);
    let rows = lines(&inline);
    assert_eq!(entry(&rows, "property", "S-e*-continuous")["holds"], true);
    assert_eq!(entry(&rows, "property", "S-continuous")["holds"], false);
    let document = stdout(&etheta(&["map", &data("constant-c.map")]));
    assert_eq!(inline, document);
}

#[test]
fn enumeration_lines_are_space_documents() {
    let out = stdout(&etheta(&["enumerate", "--points", "3"]));
    assert_eq!(out.lines().count(), 29);
    // relation code 0 is the identity preorder, so the discrete space comes first
    let first = out.lines().next().unwrap();
    assert_eq!(first, r#"{"points":["a","b","c"],"opens":[[],["a"],["b"],["c"],["a","b"],["a","c"],["b","c"],["a","b","c"]]}"#);
    assert!(out.lines().any(|l| l == r#"{"points":["a","b","c"],"opens":[[],["a","b","c"]]}"#));
    let t0 = stdout(&etheta(&["enumerate", "--points", "4", "--t0"]));
    assert_eq!(t0.lines().count(), 219);
}

#[test]
fn kapanis_claim_report() {
    let out = stdout(&etheta(&["verify", "--claim", "T2.8-kapanis", "--max-points", "4"]));
    assert_eq!(out, "{\"id\":\"T2.8-kapanis\",\"tier\":\"core\",\"status\":\"CONFIRMED\",\"instances\":389,\"substantive\":389,\"vacuous\":0}\n");
}

#[test]
fn open_question_is_independent_of_workers() {
    let run = |workers: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_etheta"))
            .args(["verify", "--claim", "Q5.1", "--max-points", "3", "--format", "json-lines"])
            .env("ETHETA_WORKERS", workers)
            .output()
            .unwrap();
        stdout(&out)
    };
    let one = run("1");
    assert_eq!(one, run("8"));
    let report = &lines(&one)[0];
    assert_eq!(report["instances"], 22_707);
    assert!(report["status"] == "EXHAUSTED_NO_WITNESS" || report["status"] == "CONFIRMED");
}

#[test]
fn budget_exit_code_and_resume() {
    let out = etheta(&["verify", "--claim", "Q5.1", "--max-points", "3", "--budget", "5000"]);
    assert_eq!(out.status.code(), Some(3));
    let partial = String::from_utf8(out.stdout).unwrap();
    assert_eq!(lines(&partial)[0]["status"], "BUDGET_EXCEEDED");
    let dir = std::env::temp_dir().join(format!("etheta-cursor-{}", std::process::id()));
    std::fs::write(&dir, &partial).unwrap();
    let resumed = stdout(&etheta(&["verify", "--resume", dir.to_str().unwrap()]));
    std::fs::remove_file(&dir).ok();
    let full = stdout(&etheta(&["verify", "--claim", "Q5.1", "--max-points", "3"]));
    assert_eq!(resumed, full);
}

#[test]
fn usage_and_parse_errors_exit_one() {
    let out = etheta(&["verify", "--claim", "no-such-claim"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown claim"));

    let bad = std::env::temp_dir().join(format!("etheta-bad-{}.space", std::process::id()));
    std::fs::write(&bad, "{\"points\": [\"a\"],\n \"opens\": [[\"b\"]]}").unwrap();
    let out = etheta(&["axioms", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown point label"));
    std::fs::write(&bad, "{\"points\": [\"a\"],\n \"opens\": [[\"a\"]").unwrap();
    let out = etheta(&["axioms", bad.to_str().unwrap()]);
    std::fs::remove_file(&bad).ok();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2:"), "{}", String::from_utf8_lossy(&out.stderr));

    assert_eq!(etheta(&["analyze"]).status.code(), Some(1));
    assert_eq!(etheta(&["map", &data("example4.space"), "--map", "a:c"]).status.code(), Some(1));
}
