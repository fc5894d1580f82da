use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use theta_core::graph::ThetaGraph;
use theta_core::groups::GroupSpec;
use theta_core::properties::{components_after_removal, validate_cycle};

fn theta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta"))
        .args(args)
        .env("THETA_LOG", "error")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn analyze_cyclic_six() {
    let out = theta(&["analyze", "--cyclic", "6", "--no-timestamp"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let r = json(&out);
    assert_eq!(r["report_version"], 1);
    assert!(r.get("generated_at_unix_ms").is_none());
    assert_eq!(r["properties"]["hamiltonian"]["status"], "yes");
    assert_eq!(r["properties"]["connectivity"]["kappa"], 4);
    assert_eq!(r["properties"]["prime_order_set"]["size"], 4);
    assert_eq!(r["properties"]["diameter"]["value"], 2);
    assert_eq!(r["properties"]["open_problem"]["class"], "kappa_equals_S");
    assert_eq!(r["spectrum"]["match"], true);
    for key in ["connected", "diameter", "girth", "eulerian", "complete", "planar"] {
        assert!(r["properties"][key]["method"].is_string(), "{key} has no method");
    }
}

#[test]
fn analyze_dicyclic_three() {
    let r = json(&theta(&["analyze", "--dicyclic", "3", "--no-timestamp"]));
    assert_eq!(r["properties"]["open_problem"]["class"], "kappa_exceeds_S");
    assert_eq!(r["properties"]["open_problem"]["kappa"], 6);
    assert_eq!(r["properties"]["open_problem"]["s_size"], 4);
    assert_eq!(r["spectrum"]["closed_form"], "unsupported");
}

#[test]
fn analyze_trivial_group_warns() {
    let out = theta(&["analyze", "--cyclic", "1", "--no-timestamp"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let codes: Vec<&str> = r["warnings"].as_array().unwrap().iter().map(|w| w["code"].as_str().unwrap()).collect();
    assert!(codes.contains(&"small_group"));
}

#[test]
fn reports_are_deterministic() {
    for sel in [["--cyclic", "12"], ["--dihedral", "6"], ["--heisenberg", "3"]] {
        let args = ["analyze", sel[0], sel[1], "--no-timestamp"];
        assert_eq!(theta(&args).stdout, theta(&args).stdout);
    }
    let with_ts = json(&theta(&["analyze", "--cyclic", "5"]));
    assert!(with_ts["generated_at_unix_ms"].as_u64().unwrap() > 0);
}

#[test]
fn witnesses_revalidate_on_fresh_graphs() {
    let dir = tempfile::tempdir().unwrap();
    for (sel, n, group) in [
        ("--cyclic", "10", GroupSpec::cyclic(10).unwrap()),
        ("--cyclic", "15", GroupSpec::cyclic(15).unwrap()),
        ("--dicyclic", "3", GroupSpec::dicyclic(3).unwrap()),
    ] {
        let path = dir.path().join(format!("{sel}{n}.json"));
        let out = theta(&["analyze", sel, n, "--no-timestamp", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        let r: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        let t = ThetaGraph::build(&group);
        let idx = |v: &Value| -> Vec<usize> {
            v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect()
        };
        let ham = &r["properties"]["hamiltonian"];
        if !ham["cycle"].is_null() {
            assert!(validate_cycle(&t, &idx(&ham["cycle"])));
        }
        if !ham["toughness_witness"].is_null() {
            let w = idx(&ham["toughness_witness"]);
            assert!(components_after_removal(&t, &w) > w.len());
        }
        let cut = &r["properties"]["connectivity"]["witness_cut"];
        if !cut.is_null() {
            let cut = idx(cut);
            assert_eq!(cut.len() as u64, r["properties"]["connectivity"]["kappa"].as_u64().unwrap());
            assert!(components_after_removal(&t, &cut) >= 2);
        }
        let dom = idx(&r["properties"]["domination"]["witness"]);
        assert_eq!(t.degree(dom[0]).unwrap() + 1, t.n_vertices());
    }
}

#[test]
fn spectrum_subcommand() {
    let r = json(&theta(&["spectrum", "--cyclic", "9"]));
    assert_eq!(r["match"], true);
    let cf: Vec<(String, u64)> = r["closed_form"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["value_display"].as_str().unwrap().to_string(), e["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(cf, [("12".into(), 1), ("7".into(), 2), ("3".into(), 5), ("1".into(), 1)]);

    let r = json(&theta(&["spectrum", "--dihedral", "6"]));
    assert_eq!(r["match"], true);
    assert_eq!(r["closed_form"][0]["value_display"], "15+3*sqrt(5)");
    assert_eq!(r["closed_form"][1]["multiplicity"], 10);

    let r = json(&theta(&["spectrum", "--cyclic", "30"]));
    assert_eq!(r["closed_form"], "unsupported");
    assert_eq!(r["numeric"].as_array().unwrap().iter().map(|e| e["multiplicity"].as_u64().unwrap()).sum::<u64>(), 30);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(theta(&["analyze"]).status.code(), Some(1));
    assert_eq!(theta(&["analyze", "--cyclic", "6", "--dihedral", "6"]).status.code(), Some(1));
    assert_eq!(theta(&["analyze", "--cyclic", "0"]).status.code(), Some(1));
    assert_eq!(theta(&["analyze", "--product", "cyclic:4", "bogus:2"]).status.code(), Some(1));
    assert_eq!(theta(&["export", "--cyclic", "3", "--format", "svg"]).status.code(), Some(1));
    assert_eq!(theta(&["search", "--max-order", "2"]).status.code(), Some(1));
    assert_eq!(theta(&["analyze", "--custom", "/nonexistent.json"]).status.code(), Some(1));
    assert_eq!(theta(&["--help"]).status.code(), Some(0));
}

#[test]
fn product_selector() {
    let r = json(&theta(&["analyze", "--product", "cyclic:2", "dicyclic:3", "--no-timestamp"]));
    assert_eq!(r["group"]["size"], 24);
    assert_eq!(r["group"]["family"], "product");
}

#[test]
fn export_formats() {
    let out = theta(&["export", "--cyclic", "3", "--format", "dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph {"));
    assert_eq!(dot.matches(" -- ").count(), 3);

    let r = json(&theta(&["export", "--cyclic", "6", "--format", "json"]));
    assert_eq!(r["edge_count"], 14);
    assert_eq!(r["edges"].as_array().unwrap().len(), 14);
}

#[test]
fn custom_group_round_trips_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    fs::write(&path, r#"{"labels": ["e", "a", "a\"2", "b"], "orders": [1, 4, 2, 4]}"#).unwrap();
    let p = path.to_str().unwrap();
    let dot = String::from_utf8(theta(&["export", "--custom", p, "--format", "dot"]).stdout).unwrap();
    for label in ["\"e\"", "\"a\"", "\"a\\\"2\"", "\"b\""] {
        assert!(dot.contains(&format!("label={label}")), "{dot}");
    }
    let out = theta(&["export", "--custom", p, "--format", "json"]);
    let t = ThetaGraph::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let labels: Vec<&str> = t.group().labels().collect();
    assert_eq!(labels, ["e", "a", "a\"2", "b"]);
    // 4 and 4 share the composite factor 4
    assert!(!t.has_edge(1, 3));
}

#[test]
fn custom_non_group_reports_instead_of_failing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    // a triangle, so the degree-side criteria say Eulerian and complete
    // while the order-side criteria say neither
    fs::write(&path, r#"{"labels": ["e", "x", "y"], "orders": [1, 2, 4]}"#).unwrap();
    let out = theta(&["analyze", "--custom", path.to_str().unwrap(), "--no-timestamp"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let r = json(&out);
    let codes: Vec<&str> = r["warnings"].as_array().unwrap().iter().map(|w| w["code"].as_str().unwrap()).collect();
    assert!(codes.contains(&"lagrange"));
    assert!(codes.contains(&"eulerian_criteria_disagree"));
    assert!(codes.contains(&"completeness_criteria_disagree"));
    assert_eq!(r["properties"]["eulerian"]["value"], true);
}

#[test]
fn verify_suites_pass() {
    for suite in ["spectra", "connectivity", "equitable"] {
        let out = theta(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
        assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed"));
    }
}

#[test]
fn verify_negative_controls() {
    let out = theta(&["verify", "--suite", "all", "--corrupt-edge", "0", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let table = String::from_utf8_lossy(&out.stdout);
    assert!(table.contains("FAIL"));
    assert!(stderr(&out).contains("structure_universal"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixture.json");
    let bad = ThetaGraph::build(&GroupSpec::cyclic(6).unwrap()).with_toggled_edge(1, 5).unwrap();
    fs::write(&path, bad.export_json()).unwrap();
    let out = theta(&["verify", "--fixture", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("adjacency_rule"));

    let good = ThetaGraph::build(&GroupSpec::cyclic(6).unwrap());
    fs::write(&path, good.export_json()).unwrap();
    assert_eq!(theta(&["verify", "--fixture", path.to_str().unwrap()]).status.code(), Some(0));
}

fn read_lines(p: &Path) -> Vec<String> {
    fs::read_to_string(p).unwrap().lines().map(str::to_string).collect()
}

#[test]
fn search_outputs_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("run.csv");
    let jsonl = dir.path().join("run.jsonl");
    let c = csv.to_str().unwrap();

    let out = theta(&["search", "--max-order", "20", "--families", "cyclic", "--out", c]);
    assert_eq!(out.status.code(), Some(0));
    let lines = read_lines(&csv);
    assert_eq!(lines[0], "family,params,order,complete,kappa,s_size,class,ms");
    assert_eq!(lines.len(), 1 + 18);
    for line in &lines[1..] {
        let f: Vec<&str> = line.split(',').collect();
        let n: u64 = f[2].parse().unwrap();
        let prime = (2..n).all(|d| !n.is_multiple_of(d));
        assert_eq!(f[6], if prime { "complete" } else { "kappa_equals_S" }, "{line}");
    }
    assert_eq!(read_lines(&jsonl).len(), 18);

    // resuming with more families appends only the new groups
    let out = theta(&["search", "--max-order", "20", "--families", "cyclic,dicyclic", "--out", c, "--skip-completed"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = read_lines(&csv);
    assert_eq!(lines.len(), 1 + 18 + 4);
    assert_eq!(lines.iter().filter(|l| l.starts_with("family,")).count(), 1);
    assert!(lines.iter().any(|l| l.starts_with("dicyclic,n=3,12,false,6,4,kappa_exceeds_S,")));
    let j = read_lines(&jsonl);
    assert_eq!(j.len(), 22);
    let rec: Value = serde_json::from_str(&j[19]).unwrap();
    assert_eq!(rec["family"], "dicyclic");

    // a second resume has nothing left to do
    theta(&["search", "--max-order", "20", "--families", "cyclic,dicyclic", "--out", c, "--skip-completed"]);
    assert_eq!(read_lines(&csv).len(), 23);
}

#[test]
fn search_examples() {
    let text = String::from_utf8(theta(&["search", "--max-order", "9", "--families", "elementary_abelian"]).stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("elementary_abelian,p=3;m=2,9,true,8,9,complete,")));

    let text = String::from_utf8(theta(&["search", "--max-order", "12", "--families", "dicyclic"]).stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("dicyclic,n=3,12,false,6,4,kappa_exceeds_S,")));

    let out = theta(&["search", "--max-order", "5", "--out", "/nonexistent/dir/out.csv"]);
    assert_eq!(out.status.code(), Some(1));
}
