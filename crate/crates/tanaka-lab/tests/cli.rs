use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tanaka_lab::abnormal::AbnormalError;
use tanaka_lab::cli::CliError;
use tanaka_lab::dist::{DistributionSpec, PolyVectorField};

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tanaka-lab"))
        .args(args)
        .env("TANAKA_LAB_THREADS", "2")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (c, s) = bin(args);
    (c, serde_json::from_str(&s).unwrap_or_else(|e| panic!("{e}: {s}")))
}

fn scratch(name: &str) -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    d.join(name)
}

#[test]
fn gdim_examples() {
    let (c, v) = json(&["gdim", "--k", "2", "--l", "0"]);
    assert_eq!(c, 0);
    assert_eq!(v["total"], 21);
    assert_eq!(v["per_degree"], serde_json::json!({"-2": 1, "-1": 6, "0": 7, "1": 6, "2": 1}));
    assert!(v["anchor"].is_string());
    let (_, v) = json(&["gdim", "--k", "4"]);
    assert_eq!(v["total"], 22);
}

#[test]
fn diagram_flat_21_is_deterministic() {
    let args = ["diagram", "--model", "flat:2,1", "--seed", "5", "--samples", "4"];
    let (c, a) = bin(&args);
    let (_, b) = bin(&args);
    assert_eq!(c, 0);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["young"], serde_json::json!({"k": 2, "l": 1}));
    assert_eq!(v["maximal_class"], true);
    assert_eq!(v["seed"], 5);
}

#[test]
fn fields_file_and_exit_codes() {
    let d = DistributionSpec::new((0..3).map(|i| PolyVectorField::coordinate(3, i)).collect()).unwrap();
    let f = scratch("abelian.json");
    std::fs::write(&f, serde_json::to_string(&d).unwrap()).unwrap();
    let (c, v) = json(&["diagram", "--fields", f.to_str().unwrap()]);
    assert_eq!(c, 2);
    assert_eq!(v["classification"]["case"], "degenerate");

    let (c, v) = json(&["gdim", "--k", "1"]);
    assert_eq!(c, 1);
    assert_eq!(v["error"]["code"], "invalid_params");
    let (c, _) = json(&["growth", "--model", "flat:x"]);
    assert_eq!(c, 1);
    assert_eq!(CliError::from(AbnormalError::Budget(4)).exit_code(), 3);
}

#[test]
fn growth_with_point_and_output_file() {
    let p = scratch("point.json");
    std::fs::write(&p, r#"["1/2", "-1", "3", "0", "2/7", "5", "-4/3"]"#).unwrap();
    let out = scratch("growth.json");
    let (c, s) = bin(&["growth", "--model", "flat:2,1", "--point", p.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!((c, s.as_str()), (0, ""));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["growth"], serde_json::json!([3, 6, 7]));

    let (_, v) = json(&["growth", "--model", "flat:3,2"]);
    let g: Vec<u64> = v["growth"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(&g[..2], &[3, 6]);
    assert_eq!(*g.last().unwrap(), 10);
}

#[test]
fn text_format_and_other_commands() {
    let (c, s) = bin(&["prolong", "--csp", "2", "--diagonal", "--format", "text"]);
    assert_eq!(c, 0);
    assert!(s.contains("agreement.first_modified_is_all_of_hom: true"));
    let (_, v) = json(&["ideal", "--r", "4", "--variety", "curve", "--degree", "2"]);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["verified"], true);
    let (_, v) = json(&["bsuite", "--k-max", "3", "--l-max", "2"]);
    assert_eq!(v["all_ok"], true);
    let (_, v) = json(&["flat-model", "--k", "2", "--l", "1", "--emit", "fields"]);
    assert_eq!(v["growth"], serde_json::json!([3, 6, 7]));
    let d: DistributionSpec = serde_json::from_value(v["distribution"].clone()).unwrap();
    assert_eq!(d.ambient_dim, 7);
}

#[test]
fn selftest_is_byte_identical() {
    let (c, a) = bin(&["selftest", "--seed", "9"]);
    let (_, b) = bin(&["selftest", "--seed", "9"]);
    assert_eq!(c, 0, "{a}");
    assert_eq!(a, b);
    let (_, t) = bin(&["selftest", "--seed", "9", "--format", "text"]);
    assert_eq!(t.lines().filter(|l| l.starts_with("PASS")).count(), 10);
}

#[test]
fn inline_point() {
    let (c, v) = json(&["growth", "--model", "flat:3,2", "--point", "[1,0,\"2/3\",0,0,0,0,0,0,1]"]);
    assert_eq!(c, 0);
    assert_eq!(v["growth"], serde_json::json!([3, 6, 8, 9, 10]));
    let (c, v) = json(&["growth", "--model", "flat:3,2", "--point", "[1,2]"]);
    assert_eq!(c, 1);
    assert_eq!(v["error"]["code"], "invalid_params");
}
