use std::process::{Command, Output};

fn ellq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellq")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn eval_reference_values() {
    let out = ellq(&["eval", "--fn", "kr", "--params", "r=1", "--digits", "30"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "0.707106781186547524400844362105");

    let out = ellq(&["eval", "--fn", "K", "--params", "k=0", "--digits", "20"]);
    assert_eq!(stdout(&out).trim(), "1.5707963267948966192");

    // mpmath: R(e^{-2 pi}), the Rogers-Ramanujan fraction
    let out = ellq(&["eval", "--fn", "rq", "--params", "a=1,b=2,p=5", "--q", "r=4"]);
    assert!(stdout(&out).starts_with("0.2840790438404122960282918323931261690910"));
}

#[test]
fn nome_forms_agree() {
    let a = ellq(&["eval", "--fn", "rr", "--q", "r=4", "--digits", "40"]);
    let b = ellq(&["eval", "--fn", "rr", "--q", "exp(-pi*sqrt(4))", "--digits", "40"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn more_digits_extend_the_printed_value() {
    let short = stdout(&ellq(&["eval", "--fn", "agile", "--params", "a=1,p=5", "--q", "r=1", "--digits", "40"]));
    let long = stdout(&ellq(&["eval", "--fn", "agile", "--params", "a=1,p=5", "--q", "r=1", "--digits", "50"]));
    let short = short.trim();
    // the last printed digit may round differently
    assert!(long.starts_with(&short[..short.len() - 1]), "{short} vs {long}");
}

#[test]
fn verify_exit_codes() {
    let out = ellq(&["verify", "--suite", "thm8", "--digits", "50"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("thm8.magnitude"));
    assert!(text.contains("all normative checks pass"));

    let out = ellq(&["verify", "--suite", "bogus"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
}

#[test]
fn verify_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = ellq(&[
        "verify", "--suite", "lemma1", "--digits", "40", "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["digits"], 40);
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn minpoly_from_functions() {
    let out = ellq(&["minpoly", "--fn", "kr", "--params", "r=2", "--degree", "4", "--digits", "80"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "-1 + 2*t + t^2");
    assert!(text.contains("confidence: verified"));

    let out = ellq(&[
        "minpoly", "--fn", "drq-normalized", "--params", "a=1,b=2,p=5", "--q", "r=1", "--degree", "8", "--digits", "120",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out).lines().next().unwrap(),
        "16 - 240*t^2 + 800*t^3 - 2900*t^4 - 6000*t^5 - 6500*t^6 + 17500*t^7 + 625*t^8"
    );
}

#[test]
fn minpoly_json() {
    let out = ellq(&["minpoly", "--fn", "kr", "--params", "r=2", "--degree", "4", "--digits", "80", "--format", "json"]);
    let body: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(body["coeffs"], serde_json::json!(["-1", "2", "1"]));
    assert_eq!(body["confidence"], "verified");
}

#[test]
fn minpoly_from_literals() {
    // 30 digits cannot support a degree-2 search
    let thirds = format!("0.{}", "3".repeat(30));
    let out = ellq(&["minpoly", "--value", &thirds, "--degree", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("precision"));

    let thirds = format!("0.{}", "3".repeat(70));
    let out = ellq(&["minpoly", "--value", &thirds, "--degree", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "-1 + 3*t");
    assert!(text.contains("confidence: unverified"));
}

#[test]
fn minpoly_not_found() {
    let out = ellq(&["minpoly", "--fn", "K", "--params", "k=0", "--degree", "3", "--height", "100", "--digits", "80"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn table_matches() {
    let out = ellq(&["table", "--digits", "40"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("  ok").count(), 7);
    assert!(!text.contains("MISMATCH"));
    assert_eq!(code(&ellq(&["table", "--digits", "20"])), 2);
}

#[test]
fn bad_input_exits_2() {
    for args in [
        &["eval", "--fn", "nope"][..],
        &["eval", "--fn", "kr", "--params", "r=x"],
        &["eval", "--fn", "kr"],
        &["eval", "--fn", "rr", "--q", "1.5"],
        &["eval", "--fn", "rr", "--q", "r=-1"],
        &["eval", "--fn", "kr", "--params", "r=1,zz=2"],
        &["eval", "--fn", "kr", "--params", "r=1", "--digits", "3"],
        &["frobnicate"],
    ] {
        let out = ellq(args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}
