use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn eqcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqcodes")).args(args).output().expect("run eqcodes")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn build(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_str().unwrap().to_string();
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let out = eqcodes(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn every_construction_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("fano", vec!["fano"]),
        ("sf2", vec!["sunflower", "--n", "4"]),
        ("sf3", vec!["sunflower", "--q", "3", "--n", "4"]),
        ("sfc", vec!["sunflower", "--n", "4", "--center", "[[0,1,1,0]]"]),
        ("hyp", vec!["hyperplane", "--q", "3"]),
        ("planes", vec!["sts-lift", "--q", "4", "--n", "3"]),
        ("small", vec!["sts-lift", "--q", "2", "--n", "5", "--size", "3"]),
    ];
    for (name, args) in cases {
        let path = build(dir.path(), name, &args);
        let out = eqcodes(&["verify", "code", &path]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let r = json(&out);
        assert_eq!(r["structure"]["equidistant"], true, "{name}");
        let lemmas = eqcodes(&["lemmas", &path]);
        assert_eq!(lemmas.status.code(), Some(0), "{name}");
    }
}

#[test]
fn output_is_byte_identical() {
    let a = eqcodes(&["search", "--q", "2", "--n", "4", "--k", "2", "--lambda", "1"]);
    let b = eqcodes(&["search", "--q", "2", "--n", "4", "--k", "2", "--lambda", "1", "--threads", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(eqcodes(&["construct", "fano"]).stdout, eqcodes(&["construct", "fano"]).stdout);
}

#[test]
fn seed_order_certifies_the_maximum() {
    for order in ["lex", "reverse", "degree"] {
        let r = json(&eqcodes(&["search", "--q", "2", "--n", "4", "--k", "2", "--lambda", "1", "--seed-order", order]));
        assert_eq!(r["max_size"], 7, "{order}");
        assert_eq!(r["witness_count"], 30, "{order}");
    }
}

#[test]
fn corrupted_code_names_the_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), "fano.json", &["fano"]);
    let mut file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    file["table"][1][2] = Value::from(0);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, file.to_string()).unwrap();
    let out = eqcodes(&["verify", "code", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let failed: Vec<&Value> = r["verification"]["checks"].as_array().unwrap().iter().filter(|c| c["pass"] == false).collect();
    assert_eq!(failed[0]["axiom"], "commutativity");
    assert_eq!(failed[0]["counterexample"], serde_json::json!([1, 2]));
    let lemmas = eqcodes(&["lemmas", bad.to_str().unwrap()]);
    assert_eq!(lemmas.status.code(), Some(1));
    assert_eq!(json(&lemmas)["pass"], false);
    file["codewords"][2] = file["codewords"][1].clone();
    std::fs::write(&bad, file.to_string()).unwrap();
    let dup = eqcodes(&["verify", "code", bad.to_str().unwrap()]);
    assert_eq!(dup.status.code(), Some(1));
    assert!(json(&dup)["error"].as_str().unwrap().contains("duplicate"));
}

#[test]
fn steiner_and_design_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("fano_sts.json");
    std::fs::write(&good, r#"{"v":7,"triples":[[0,1,3],[1,2,4],[2,3,5],[3,4,6],[0,4,5],[1,5,6],[0,2,6]]}"#).unwrap();
    let out = eqcodes(&["verify", "sts", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["associative_lift"], true);
    let bad = dir.path().join("bad_sts.json");
    std::fs::write(&bad, r#"{"v":7,"triples":[[0,1,3],[1,2,4]]}"#).unwrap();
    assert_eq!(eqcodes(&["verify", "sts", bad.to_str().unwrap()]).status.code(), Some(1));

    let design = dir.path().join("triangle.json");
    std::fs::write(&design, r#"{"v":3,"blocks":[[0,1],[1,2],[0,2]]}"#).unwrap();
    let r = json(&eqcodes(&["verify", "design", design.to_str().unwrap()]));
    assert_eq!(r["projective_plane_order"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(eqcodes(&["table", "3"]).status.code(), Some(2));
    assert_eq!(eqcodes(&["search", "--q", "6", "--n", "3", "--k", "2", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(eqcodes(&["verify", "code", "/no/such/file.json"]).status.code(), Some(3));
    let budget = eqcodes(&["search", "--q", "2", "--n", "5", "--k", "2", "--lambda", "1", "--budget", "10"]);
    assert_eq!(budget.status.code(), Some(1));
    assert_eq!(json(&budget)["exhausted"], false);
}

#[test]
fn table_text_layout() {
    let out = eqcodes(&["table", "1", "--q", "2,17", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, " q  q^2+q+1  E_q(3)\n 2        7       8\n17      307     256\n");
    let csv = String::from_utf8(eqcodes(&["table", "2", "--n", "3,8", "--format", "csv"]).stdout).unwrap();
    assert_eq!(csv, "n,E_3(n,1),|P_3(n)|\n3,8,28\n8,1024,127902864\n");
}

#[test]
fn small_commands() {
    let r = json(&eqcodes(&["grassmannian", "--q", "2", "--n", "4", "--k", "2", "--list"]));
    assert_eq!(r["size"], 35);
    assert_eq!(r["subspaces"].as_array().unwrap().len(), 35);
    let r = json(&eqcodes(&["field", "--q", "9", "--op", "inv", "--a", "3"]));
    assert_eq!(eqcodes(&["field", "--q", "9", "--op", "mul", "--a", "3", "--b", &r["result"].to_string()]).status.code(), Some(0));
    let prod = json(&eqcodes(&["field", "--q", "9", "--op", "mul", "--a", "3", "--b", &r["result"].to_string()]));
    assert_eq!(prod["result"], 1);
    let d = json(&eqcodes(&["distance", "--q", "3", "--n", "3", "--x", "[[1,0,0]]", "--y", "[[0,1,0],[0,0,1]]"]));
    assert_eq!(d["distance"], 3);
    let h = json(&eqcodes(&["check", "halfspace", "--q", "2"]));
    assert_eq!(h["reports"][0]["pairing_step_holds"], false);
    assert_eq!(h["pass"], true);
    let s = json(&eqcodes(&["check", "sts", "--v", "3,7"]));
    assert_eq!(s["counts"][1]["count"], 30);
    let p5 = eqcodes(&["check", "p5", "--n", "4,5,6"]);
    assert_eq!(p5.status.code(), Some(0));
}
