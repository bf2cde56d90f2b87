use std::process::{Command, Output};

use serde_json::Value;

fn coxcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let o = coxcat(args);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or(Value::Null);
    (o.status.code().unwrap(), v)
}

#[test]
fn table_values() {
    let (code, v) = json(&["table", "A3", "B3", "E6", "I2(12)", "H3", "--json"]);
    assert_eq!(code, 0);
    let f: Vec<u64> = v.as_array().unwrap().iter().map(|r| r["f_counted"].as_u64().unwrap()).collect();
    assert_eq!(f, vec![1, 3, 7, 10, 8]);
    assert!(v.as_array().unwrap().iter().all(|r| r["match"] == true));
}

#[test]
fn table_text_has_header() {
    let o = coxcat(&["table", "G2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("type"));
    assert!(text.contains("G2"));
}

#[test]
fn verify_all_a2() {
    let (code, v) = json(&["verify", "all", "A2", "--json"]);
    assert_eq!(code, 0);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 8);
    for r in reports {
        assert_ne!(r["status"], "fail");
        assert_eq!(r["witnesses"].as_array().unwrap().is_empty(), r["status"] != "fail");
    }
}

#[test]
fn verify_examples_exit_zero() {
    for (check, ty) in [("hf", "B3"), ("main", "A3"), ("b-lemmas", "B2"), ("p-mobius", "D4"), ("formula", "H4")] {
        let o = coxcat(&["verify", check, ty]);
        assert_eq!(o.status.code(), Some(0), "{check} {ty}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("PASS"));
    }
}

#[test]
fn verify_report_shape() {
    let (code, v) = json(&["verify", "main", "B2", "--json"]);
    assert_eq!(code, 0);
    for key in ["check", "type_label", "status", "witnesses", "timing_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["status"], "pass");
    assert_eq!(v["timing_ms"], Value::Null);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(coxcat(&["roots", "Q7"]).status.code(), Some(2));
    assert_eq!(coxcat(&["verify", "nonsense", "A2"]).status.code(), Some(2));
    assert_eq!(coxcat(&["verify", "b-lemmas", "A2"]).status.code(), Some(2));
    assert_eq!(coxcat(&["antichains", "H3"]).status.code(), Some(2));
    assert_eq!(coxcat(&["fpoly", "E7"]).status.code(), Some(2));
    assert_eq!(coxcat(&["os-character", "E8"]).status.code(), Some(2));
    assert_eq!(coxcat(&["table"]).status.code(), Some(2));
}

#[test]
fn fpoly_a2_json() {
    let (code, v) = json(&["fpoly", "A2", "--json"]);
    assert_eq!(code, 0);
    let expected: Value =
        serde_json::from_str(r#"[[0,0,"1/1"],[0,1,"2/1"],[0,2,"1/1"],[1,0,"3/1"],[1,1,"2/1"],[2,0,"2/1"]]"#).unwrap();
    assert_eq!(v["f"]["terms"], expected);
}

#[test]
fn antichains_a2_h_polynomial() {
    let (code, v) = json(&["antichains", "A2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 5);
    let expected: Value = serde_json::from_str(r#"[[0,0,"1/1"],[1,0,"1/1"],[1,1,"2/1"],[2,2,"1/1"]]"#).unwrap();
    assert_eq!(v["h"]["terms"], expected);
}

#[test]
fn os_character_b2_identity() {
    let (code, v) = json(&["os-character", "B2", "--json"]);
    assert_eq!(code, 0);
    let identity = &v["classes"][0];
    assert_eq!(identity["size"], 1);
    let coeffs: Vec<&str> = identity["chi"]["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs, vec!["1/1", "-4/1", "3/1"]);
}

#[test]
fn gerst_command() {
    let (code, v) = json(&["gerst", "--max-degree", "5", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["calibration"]["twist"], "omega");
    assert_eq!(v["degrees"].as_array().unwrap().len(), 5);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    for args in [
        vec!["antichains", "E6", "--json"],
        vec!["fpoly", "D5", "--json"],
        vec!["verify", "all", "B3", "--json"],
    ] {
        let one = stdout(&coxcat(&[args.as_slice(), &["--threads", "1"]].concat()));
        let four = stdout(&coxcat(&[args.as_slice(), &["--threads", "4"]].concat()));
        let again = stdout(&coxcat(&args));
        assert_eq!(one, four);
        assert_eq!(one, again);
    }
}

#[test]
fn odd_dihedral_main_conjecture() {
    let o = coxcat(&["verify", "main", "I2(7)"]);
    assert_eq!(o.status.code(), Some(0));
}
