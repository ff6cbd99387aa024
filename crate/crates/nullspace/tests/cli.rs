//! End-to-end runs of the `nullspace` binary.

use std::path::Path;
use std::process::{Command, Output};

use nullspace::formats::{read_region, region_json, to_pretty, AuditReportJson, IntervalJson};
use nullspace_core::region::Region;

const BOX: &str = r#"[{"m":["0","closed","2","closed"],"r":["0","closed","1","closed"]}]"#;
const STRIP: &str = r#"[{"m":["1","open","3","open"],"r":["0","closed","inf","open"]}]"#;

fn nullspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nullspace"))
        .args(args)
        .env_remove("NULLSPACE_SEED")
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = nullspace(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn region(stdout: &str) -> Region {
    read_region(stdout).unwrap()
}

#[test]
fn eval_prints_endpoints() {
    let v: IntervalJson = serde_json::from_str(&ok(&["eval", "[1,2] + [3,5]"])).unwrap();
    assert_eq!(v, IntervalJson { lo: "4".into(), hi: "7".into() });
    assert_eq!(ok(&["--format", "table", "eval", "1/2 * [1,3]"]).trim(), "[1/2, 3/2]");
    let v: IntervalJson = serde_json::from_str(&ok(&["eval", "-2 * [1,3]"])).unwrap();
    assert_eq!((v.lo.as_str(), v.hi.as_str()), ("-6", "-2"));
}

#[test]
fn metric_reports_null_witnesses() {
    let v: serde_json::Value = serde_json::from_str(&ok(&["metric", "[0,2]", "[-1,3]"])).unwrap();
    assert_eq!(v["d"], "0");
    assert_eq!(v["omega_equal"], true);
    assert!(v["witness"]["omega1"].is_object());
    let v: serde_json::Value = serde_json::from_str(&ok(&["metric", "[0,2]", "[3,3]"])).unwrap();
    assert_eq!(v["d"], "4");
    assert!(v.get("witness").is_none());
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["eval", "[0.5, 1]"][..],
        &["eval", "[2,1]"],
        &["ball", "--center", "[0,1]", "--epsilon", "0"],
        &["interior", "--in", "/nonexistent.json"],
    ] {
        let out = nullspace(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    }
    let out = nullspace(&["eval", "[0.5, 1]"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("3/2"));
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", BOX);
    assert_eq!(nullspace(&["interior", "--in", &a, "--kind", "IV"]).status.code(), Some(2));
    let junk = write(dir.path(), "junk.json", "{");
    assert_eq!(nullspace(&["closure", "--in", &junk]).status.code(), Some(2));
}

#[test]
fn interior_of_a_low_box() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", BOX);
    assert!(region(&ok(&["interior", "--in", &a])).is_empty());
    let two = region(&ok(&["interior", "--in", &a, "--kind", "II"]));
    let json = serde_json::to_string(&region_json(&two)).unwrap();
    assert_eq!(json, r#"[{"m":["0","open","2","open"],"r":["0","closed","1","closed"]}]"#);
    let cl = region(&ok(&["closure", "--in", &a, "--kind", "III"]));
    assert_eq!(cl, read_region(r#"[{"m":["0","closed","2","closed"],"r":["0","closed","inf","open"]}]"#).unwrap());
}

#[test]
fn region_operations_agree_with_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let (a_txt, b_txt) = (write(dir.path(), "a.json", BOX), write(dir.path(), "b.json", STRIP));
    let (a, b) = (read_region(BOX).unwrap(), read_region(STRIP).unwrap());
    let run = |args: &[&str]| region(&ok(args));
    assert_eq!(run(&["region", "union", "--in", &a_txt, "--in2", &b_txt]), a.union(&b));
    assert_eq!(run(&["region", "intersect", "--in", &a_txt, "--in2", &b_txt]), a.intersect(&b));
    assert_eq!(run(&["region", "difference", "--in", &a_txt, "--in2", &b_txt]), a.difference(&b));
    assert_eq!(run(&["region", "complement", "--in", &a_txt]), a.complement());
    assert_eq!(run(&["region", "upward", "--in", &a_txt]), a.upward_closure());
    assert_eq!(run(&["region", "normalize", "--in", &a_txt]), a);
    let by = nullspace::expr::eval("[1,2]").unwrap();
    assert_eq!(run(&["region", "translate", "--in", &a_txt, "--by", "[1,2]"]), a.translate(&by));
    let alpha = nullspace::expr::scalar("-3/2").unwrap();
    assert_eq!(run(&["region", "scale", "--in", &a_txt, "--alpha", "-3/2"]), a.scale(&alpha));
    assert_eq!(nullspace(&["region", "union", "--in", &a_txt]).status.code(), Some(2));
}

#[test]
fn output_reads_back_as_the_same_region() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok(&["ball", "--center", "[0,2]", "--epsilon", "3/2", "--closed"]);
    let ball = region(&out);
    let path = write(dir.path(), "ball.json", &out);
    assert_eq!(ok(&["region", "normalize", "--in", &path]), out);
    assert_eq!(out.trim_end(), to_pretty(&region_json(&ball)));
}

#[test]
fn topology_checks_a_family() {
    let dir = tempfile::tempdir().unwrap();
    let fam = format!("[[], {STRIP}, [{{\"m\":[\"-inf\",\"open\",\"inf\",\"open\"],\"r\":[\"0\",\"closed\",\"inf\",\"open\"]}}]]");
    let path = write(dir.path(), "fam.json", &fam);
    let v: serde_json::Value = serde_json::from_str(&ok(&["topology", "--in", &path, "--class", "tau0"])).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["members"], 3);
    let low = format!("[[], {BOX}, [{{\"m\":[\"-inf\",\"open\",\"inf\",\"open\"],\"r\":[\"0\",\"closed\",\"inf\",\"open\"]}}]]");
    let path = write(dir.path(), "low.json", &low);
    let v: serde_json::Value = serde_json::from_str(&ok(&["topology", "--in", &path, "--class", "tauII"])).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", BOX);
    let (s1, s2) = (dir.path().join("1.svg"), dir.path().join("2.svg"));
    ok(&["render", "--in", &a, "--out", s1.to_str().unwrap()]);
    ok(&["render", "--in", &a, "--out", s2.to_str().unwrap(), "--r-max", "10"]);
    let (p1, p2) = (std::fs::read_to_string(&s1).unwrap(), std::fs::read_to_string(&s2).unwrap());
    assert_eq!(p1, p2);
    assert!(p1.starts_with("<svg"));
    assert_eq!(nullspace(&["render", "--in", &a, "--out", s1.to_str().unwrap(), "--r-max", "0"]).status.code(), Some(2));
}

#[test]
fn audit_seed_comes_from_flag_or_environment() {
    let rep: AuditReportJson = serde_json::from_str(&ok(&["audit", "--trials", "1"])).unwrap();
    assert_eq!((rep.seed, rep.trials, rep.verdict.as_str()), (42, 1, "GREEN"));
    let out = Command::new(env!("CARGO_BIN_EXE_nullspace"))
        .args(["audit", "--trials", "1"])
        .env("NULLSPACE_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rep: AuditReportJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep.seed, 9);
    assert_eq!(nullspace(&["audit", "--trials", "0"]).status.code(), Some(2));
    let table = ok(&["--format", "table", "audit", "--trials", "1", "--seed", "3"]);
    assert!(table.contains("GREEN"));
}
