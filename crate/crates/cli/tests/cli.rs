use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn comsc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comsc"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn catalog_file(dir: &TempDir, name: &str) -> PathBuf {
    let p = dir.path().join(format!("{name}.json"));
    let out = comsc(&["catalog", name, "-o", s(&p)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compress_and_reconstruct_p4() {
    let dir = TempDir::new().unwrap();
    let p4 = catalog_file(&dir, "com-p4");
    for sample in ["+++0", "++0+"] {
        let out = comsc(&["compress", s(&p4), "--sample", sample]);
        assert_eq!(code(&out), 0);
        assert_eq!(json(&out), "++00");
    }
    let out = comsc(&["reconstruct", s(&p4), "--label", "++00"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out), "++++");
}

#[test]
fn foreign_label_exits_one_with_payload() {
    let dir = TempDir::new().unwrap();
    let m3 = catalog_file(&dir, "om-hexagon");
    let out = comsc(&["reconstruct", s(&m3), "--label", "++-"]);
    assert_eq!(code(&out), 1);
    assert!(json(&out)["reconstruction_error"].is_string());
}

#[test]
fn roundtrip_reports() {
    let dir = TempDir::new().unwrap();
    let e = catalog_file(&dir, "ample-e311");
    let out = comsc(&["roundtrip", s(&e), "--all"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["samples"], 128);
    assert_eq!(v["vcd"], 2);
    assert!(v["max_label_size"].as_u64().unwrap() <= 2);
    assert!(v["first_counterexample"].is_null());
    assert_eq!(json(&comsc(&["roundtrip", s(&e)])), v);

    let p4 = catalog_file(&dir, "com-p4");
    let v = json(&comsc(&["roundtrip", s(&p4), "--sample", "+++0"]));
    assert_eq!(v["proper"], true);
    assert_eq!(v["label"], "++00");
    assert_eq!(v["reconstruction"], "++++");
}

#[test]
fn graph_edge_list() {
    let dir = TempDir::new().unwrap();
    let m2 = catalog_file(&dir, "om-square");
    let out = comsc(&["graph", s(&m2)]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "++ +- 2\n++ -+ 1\n+- -- 1\n-+ -- 2\n"
    );
    let v = json(&comsc(&["graph", s(&m2), "--json"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["edges"][0], serde_json::json!(["++", "+-", "2"]));
}

#[test]
fn vcdim_and_lemmas() {
    let dir = TempDir::new().unwrap();
    let e = catalog_file(&dir, "ample-e311");
    let v = json(&comsc(&["vcdim", s(&e)]));
    assert_eq!(v["vcd"], 2);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
    let out = comsc(&["lemmas", s(&e)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["passed"], true);
    let out = comsc(&["lemmas", s(&e), "--suite", "gates"]);
    assert_eq!(json(&out)["suites"].as_array().unwrap().len(), 1);
    assert_eq!(code(&comsc(&["lemmas", s(&e), "--suite", "nope"])), 2);
}

#[test]
fn gen_from_arrangement_file() {
    let dir = TempDir::new().unwrap();
    let arr = write(
        &dir,
        "arr.json",
        r#"{"dim":2,"hyperplanes":[
            {"a":[1,0],"b":0,"label":"1"},
            {"a":[0,1],"b":0,"label":"2"},
            {"a":[1,1],"b":0,"label":"3"}]}"#,
    );
    let out = comsc(&["gen", "--arrangement", s(&arr)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["covectors"].as_array().unwrap().len(), 13);

    let sys = dir.path().join("m3.json");
    let v = json(&comsc(&["gen", "--arrangement", s(&arr), "-o", s(&sys)]));
    assert_eq!(v["topes"], 6);
    let out = comsc(&["verify", s(&sys)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["classification"]["om"], true);
}

#[test]
fn outputs_are_byte_stable() {
    let dir = TempDir::new().unwrap();
    let r3 = catalog_file(&dir, "om-r3-planes4");
    for args in [
        vec!["roundtrip", s(&r3)],
        vec!["graph", s(&r3)],
        vec!["verify", s(&r3)],
    ] {
        assert_eq!(comsc(&args).stdout, comsc(&args).stdout);
    }
    let a = std::fs::read(&r3).unwrap();
    let again = catalog_file(&dir, "om-r3-planes4");
    assert_eq!(std::fs::read(again).unwrap(), a);
}

#[test]
fn non_com_fails_verification() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        &dir,
        "bad.json",
        r#"{"ground":["1","2"],"covectors":["00","++","--","+-"]}"#,
    );
    let out = comsc(&["verify", s(&bad)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["classification"]["com"], false);
    assert!(!out.stderr.is_empty());
    assert_eq!(code(&comsc(&["graph", s(&bad)])), 2);
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let p4 = catalog_file(&dir, "com-p4");
    assert_eq!(code(&comsc(&["compress", s(&p4), "--sample", "++x0"])), 2);
    assert_eq!(code(&comsc(&["compress", s(&p4), "--sample", "++"])), 2);
    assert_eq!(code(&comsc(&["verify", "/nonexistent.json"])), 2);
    assert_eq!(code(&comsc(&["catalog", "no-such-instance"])), 2);
    assert_eq!(code(&comsc(&["frobnicate"])), 2);
    let junk = write(&dir, "junk.json", "{\"ground\": 3}");
    assert_eq!(code(&comsc(&["verify", s(&junk)])), 2);
}

#[test]
fn enumeration_cap_exits_three() {
    let dir = TempDir::new().unwrap();
    let planes: Vec<String> = (0..13)
        .map(|i| format!(r#"{{"a":[1],"b":{i},"label":"h{i}"}}"#))
        .collect();
    let arr = write(
        &dir,
        "line.json",
        &format!(r#"{{"dim":1,"hyperplanes":[{}]}}"#, planes.join(",")),
    );
    let out = comsc(&["gen", "--arrangement", s(&arr)]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}
