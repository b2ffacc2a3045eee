use std::path::Path;
use std::process::{Command, Output};

use vnc_core::Graph;

fn vnc_verify(args: &[&str], data_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_vnc-verify"));
    cmd.args(args).env_remove("VNC_DATA_DIR");
    if let Some(dir) = data_dir {
        cmd.env("VNC_DATA_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn certify_nc9_job() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = vnc_verify(&["--graph", "NC9", "--p", "5", "--report", report.to_str().unwrap()], None);
    assert!(out.status.success(), "{}", stdout(&out));
    let json = read_json(&report);
    let cert = &json["jobs"][0]["certification"];
    assert_eq!(cert["order"], 60);
    assert_eq!(cert["aut_order"], 120);
    assert_eq!(cert["cayley_verdict"]["verdict"], "non_cayley");
    assert_eq!(json["passed"], true);
}

#[test]
fn missing_path_exits_non_zero() {
    let out = vnc_verify(&["--graph", "/definitely/not/here.edges"], None);
    assert!(!out.status.success());
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn unknown_name_is_a_usage_error() {
    let out = vnc_verify(&["--graph", "NC11"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn isomorphism_classes_of_order_sixty() {
    let out = vnc_verify(
        &["--graph", "NC0", "--graph", "NC1", "--graph", "NC9", "--p", "5", "--checks", "isomorphism-class"],
        None,
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("isomorphism-class"));
}

#[test]
fn suite_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, jobs) in [(&a, "1"), (&b, "4")] {
        let out = vnc_verify(
            &["--suite", "theorem61", "--p", "3,5,7", "--jobs", jobs, "--report", path.to_str().unwrap()],
            None,
        );
        assert!(out.status.success(), "{}", stdout(&out));
    }
    let (mut ja, mut jb) = (read_json(&a), read_json(&b));
    ja.as_object_mut().unwrap().remove("timings");
    jb.as_object_mut().unwrap().remove("timings");
    assert_eq!(ja, jb);
    let notes = ja["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("p = 3")));
    let names: Vec<&str> = ja["jobs"].as_array().unwrap().iter().map(|j| j["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"isomorphism-class order-60 set"));
    assert!(names.contains(&"certify+s-regularity F084"));
}

#[test]
fn export_edges_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = vnc_verify(&["--graph", "X3", "--graph", "F024", "--export", d, "--format", "edges"], None);
    assert!(out.status.success(), "{}", stdout(&out));
    let g = Graph::read_edge_list(&dir.path().join("F024.edges")).unwrap();
    assert_eq!(g.n(), 24);
    let out = vnc_verify(&["--graph", "petersen", "--export", d, "--format", "dot"], None);
    assert!(out.status.success());
    assert!(dir.path().join("petersen.dot").exists());
}

#[test]
fn exported_file_can_be_certified() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.edges");
    Graph::petersen().write_edge_list(&path, &["petersen"]).unwrap();
    let out = vnc_verify(&["--graph", path.to_str().unwrap()], None);
    assert!(out.status.success());
    assert!(stdout(&out).contains("non-Cayley"));
}

#[test]
fn data_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("F084.edges"), Graph::petersen().to_edge_list(&[])).unwrap();
    let out = vnc_verify(&["--graph", "F084"], Some(dir.path()));
    assert!(!out.status.success());
    let good = vnc_core::constructions::foster::foster_graph("F084").unwrap().graph;
    std::fs::write(dir.path().join("F084.edges"), good.to_edge_list(&["copy"])).unwrap();
    let out = vnc_verify(&["--graph", "F084", "--checks", "certify,s-regularity"], Some(dir.path()));
    assert!(out.status.success(), "{}", stdout(&out));
}
