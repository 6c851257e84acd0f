use std::fs;
use std::path::Path;

use quartic_sharp::cli::{run, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK};

/// Runs the command line in-process and returns (exit code, stdout, stderr).
fn invoke(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("quartic-sharp").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn named_graph_round_trips_through_curvature() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("k5.txt");
    let (code, out, _) = invoke(&["named", "K5", "--emit-edges", path(&edges)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "name\tvertices\tedges\tdiameter\nK5\t5\t10\t1\n");

    let (code, out, _) = invoke(&["curvature", "--input", path(&edges), "--all"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "vertex\tk_infinity\tupper_bound\tsharp\ttriangles_vertex\tdegree");
    assert_eq!(lines.len(), 6);
    for (v, line) in lines[1..].iter().enumerate() {
        assert_eq!(*line, format!("{v}\t3.5\t3.5\ttrue\t6\t4"));
    }

    let (code, out, _) = invoke(&["curvature", "--input", path(&edges), "--vertex", "2", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), r#"{"k_infinity":3.5,"upper_bound":3.5,"sharp":true,"triangles_vertex":6,"degree":4}"#);
}

#[test]
fn enumerate_filters_and_is_byte_stable() {
    let (code, sharp, _) = invoke(&["enumerate", "--filter", "sharp"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(sharp.lines().count(), 1 + 22);
    assert!(sharp.lines().skip(1).all(|l| l.split('\t').nth(3) == Some("true")));

    let (_, nonneg, _) = invoke(&["enumerate", "--filter", "nonneg", "--jobs", "2"]);
    assert_eq!(nonneg.lines().count(), 1 + 204);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("all.tsv");
    let (code, out, _) = invoke(&["enumerate", "--out", path(&file), "--jobs", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let first = fs::read_to_string(&file).unwrap();
    assert_eq!(first.lines().count(), 1 + 365);
    let (_, again, _) = invoke(&["enumerate", "--jobs", "1"]);
    assert_eq!(first, again);
}

#[test]
fn ball_command_reports_a_non_sharp_centre() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ball.json");
    fs::write(&file, r#"{"s1":[0,1,0,0,1,0],"s1s2":[[1,3],[1,3],[2,4],[2],[4]]}"#).unwrap();
    let (code, out, _) = invoke(&["ball", "--json", path(&file), "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sharp"], false);
    assert_eq!(v["degree"], 4);
    assert_eq!(v["triangles_vertex"], 2);
    assert!(v["k_infinity"].as_f64().unwrap() < v["upper_bound"].as_f64().unwrap());
}

#[test]
fn verify_classification_succeeds() {
    let (code, out, err) = invoke(&["verify-classification"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "name\t|V|\tK_infinity\tdiameter\tsharp_everywhere\tball_type\tbonnet_myers_slack");
    assert_eq!(lines.len(), 9);
    assert!(lines[1..].iter().all(|l| l.split('\t').nth(4) == Some("true")));
}

#[test]
fn search_writes_graphs_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, err) = invoke(&["search", "--seed", "4.5", "--jobs", "2", "--out-dir", path(dir.path())]);
    assert_eq!(code, EXIT_OK, "{err}");
    let summary: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(summary["seed"], "4.5");
    let mut names: Vec<String> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["seed_4.5_D14.txt", "seed_4.5_Q4.txt", "summary.json"]);
    let q4 = quartic_sharp::Graph::parse_edge_list(&fs::read_to_string(dir.path().join("seed_4.5_Q4.txt")).unwrap()).unwrap();
    assert!(quartic_sharp::canon::are_isomorphic(&q4, &quartic_sharp::NamedGraph::Q4.build()));
}

#[test]
fn truncated_search_is_reported_as_a_mismatch() {
    let (code, _, _) = invoke(&["search", "--seed", "4.5", "--max-vertices", "17"]);
    assert_eq!(code, EXIT_MISMATCH);
}

#[test]
fn bad_input_exits_with_the_input_code() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.txt");
    let garbage = dir.path().join("garbage.txt");
    fs::write(&garbage, "3\n0 1\n1 7\n").unwrap();
    for args in [
        vec!["curvature", "--input", path(&missing)],
        vec!["curvature", "--input", path(&garbage)],
        vec!["named", "Petersen"],
        vec!["search", "--seed", "9.9"],
        vec!["search", "--seed", "4.5", "--max-vertices", "3"],
        vec!["enumerate", "--jobs", "0"],
        vec!["frobnicate"],
    ] {
        let (code, _, err) = invoke(&args);
        assert_eq!(code, EXIT_INPUT, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify-classification"));
}
