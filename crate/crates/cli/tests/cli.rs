use std::io::Write;
use std::process::{Command, Output};

use serde_json::{Map, Value};
use weylchar::{CharacterPolynomial, ClassFunction, Family, FiwSharpModule, Group};

fn weylchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylchar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn sequence_file(values: impl Iterator<Item = (usize, ClassFunction)>) -> tempfile::NamedTempFile {
    let mut obj = Map::new();
    for (n, chi) in values {
        obj.insert(n.to_string(), chi.to_json());
    }
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(Value::Object(obj).to_string().as_bytes()).unwrap();
    file
}

#[test]
fn irr_text_output() {
    let out = weylchar(&["irr", "--label", "1|1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("binomial: 2*C(X1,2) - 2*C(Y1,2) - X1 + Y1"), "{text}");
    assert!(text.contains("expanded: X1^2 - Y1^2 - 2*X1 + 2*Y1"), "{text}");
}

#[test]
fn irr_json_parses_back() {
    let out = weylchar(&["irr", "--label", "-|1,1", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let p = CharacterPolynomial::from_json(&v["terms"]).unwrap();
    let expected = weylchar::hyperoct_char::irr_char_poly(&weylchar::IrreducibleLabel::new(
        "".parse().unwrap(),
        "1,1".parse().unwrap(),
    ));
    assert_eq!(p, expected);
}

#[test]
fn table_csv_has_one_row_per_irrep() {
    let out = weylchar(&["table", "--group", "BC", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("irrep,"));
    for line in &lines[1..] {
        let (_, values) = line.rsplit_once('"').unwrap();
        assert_eq!(values.split(',').count(), 6, "{line}");
    }
}

#[test]
fn table_json_symmetric_group() {
    let out = weylchar(&["table", "--group", "A", "--n", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["characters"]["2,1"]["1,1,1"], "2");
    assert_eq!(v["characters"]["1,1,1"]["2,1"], "-1");
    assert_eq!(v["class_sizes"]["2,1"], "3");
}

#[test]
fn fit_recovers_polynomial() {
    let p = weylchar::hyperoct_char::irr_char_poly(&weylchar::IrreducibleLabel::new(
        "1".parse().unwrap(),
        "1".parse().unwrap(),
    ));
    let file = sequence_file((0..=4).map(|n| (n, ClassFunction::from_polynomial(Group::bc(n), &p))));
    let out = weylchar(&["fit", "--degree", "2", "--data", file.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("expanded: X1^2 - Y1^2 - 2*X1 + 2*Y1"));
}

#[test]
fn module_recovery_round_trips() {
    let module = FiwSharpModule::from_irreducibles(
        Family::BC,
        &[(1, [("1|-".parse().unwrap(), 1i64)].into()), (2, [("-|2".parse().unwrap(), 2)].into())].into(),
    )
    .unwrap();
    let file = sequence_file((0..=3).map(|n| (n, module.realize(n).unwrap())));
    let out = weylchar(&["module", "--recover", file.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(FiwSharpModule::from_json(&v).unwrap(), module);
}

#[test]
fn app_json_report() {
    let out = weylchar(&["app", "--pipeline", "psigma", "--family", "BC", "--m", "1", "--range", "0..4", "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["polynomial"]["binomial"], "2*C(X1,2) - 2*C(Y1,2)");
    assert_eq!(v["restriction"]["binomial"], "2*C(X1,2)");
}

#[test]
fn app_output_is_deterministic() {
    let args = ["app", "--pipeline", "os", "--family", "D", "--m", "1", "--format", "json"];
    let first = weylchar(&args);
    let second = weylchar(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(weylchar(&["irr", "--label", "1,2|"]).status.code(), Some(2));
    assert_eq!(weylchar(&["table", "--group", "E", "--n", "2"]).status.code(), Some(2));
    assert_eq!(weylchar(&["table", "--group", "D", "--n", "2"]).status.code(), Some(2));
    assert_eq!(weylchar(&["app", "--pipeline", "os", "--family", "BC", "--m", "3"]).status.code(), Some(2));
    assert_eq!(weylchar(&["app", "--pipeline", "os", "--family", "BC", "--m", "1", "--range", "1..4"]).status.code(), Some(2));
    assert_eq!(weylchar(&["fit", "--degree", "1", "--data", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(weylchar(&["bogus"]).status.code(), Some(2));
}

#[test]
fn degenerate_fit_exits_one() {
    let file = sequence_file((0..=1).map(|n| (n, ClassFunction::constant(Group::bc(n), weylchar::q(1)))));
    let out = weylchar(&["fit", "--degree", "3", "--data", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_suites_pass() {
    for suite in ["orthogonality", "oracle", "roundtrip"] {
        let out = weylchar(&["verify", "--suite", suite, "--max-n", "3"]);
        assert!(out.status.success(), "{suite}: {}", stdout(&out));
        assert!(stdout(&out).contains("0 failed"));
    }
}
