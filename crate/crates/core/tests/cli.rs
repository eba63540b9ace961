use std::process::{Command, Output};

fn qdt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdt"))
        .args(args)
        .output()
        .expect("qdt runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn normalize_prints_parseable_normal_form() {
    let o = qdt(&["normalize", "c*b"]);
    assert_eq!(o.status.code(), Some(0));
    let nf = stdout(&o).trim().to_string();
    assert_eq!(nf, "-q^-1*D + q^-1*D*z");
    let again = qdt(&["normalize", &nf]);
    assert_eq!(stdout(&again).trim(), nf);
}

#[test]
fn syntax_errors_are_usage_errors() {
    let o = qdt(&["normalize", "a^(1/2)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&o.stderr).contains("syntax error at 2"),
        "{o:?}"
    );
    assert_eq!(qdt(&["normalize", "a*u"]).status.code(), Some(2));
    assert_eq!(qdt(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn json_report_schema() {
    let o = qdt(&["verify", "cocycle", "--range", "2", "--report", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in [
        "suite",
        "params",
        "checks",
        "duration_ms",
        "cleaving_convention",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["suite"], "cocycle");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn planted_defects_fail_with_witness() {
    let o = qdt(&[
        "verify", "gns", "--window", "4", "--mutate", "pi", "--report", "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    assert!(v["witness"].as_str().is_some_and(|w| !w.is_empty()));

    let o = qdt(&["verify", "diagram", "--range", "2", "--mutate", "relation"]);
    assert_eq!(o.status.code(), Some(1));

    let o = qdt(&[
        "verify",
        "cocycle",
        "--range",
        "2",
        "--convention",
        "printed",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("does not lie in the image"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn algebra_commands() {
    assert_eq!(
        stdout(&qdt(&["coproduct", "z"])).trim(),
        "1 ⊗ 1 + (-1)*1 ⊗ z + (-1)*z ⊗ 1 + (2)*z ⊗ z"
    );
    assert_eq!(stdout(&qdt(&["antipode", "a"])).trim(), "D^-1*d");
    assert_eq!(stdout(&qdt(&["star", "b"])).trim(), "-q*D^-1*c");
    assert!(stdout(&qdt(&["haar", "z + a"])).starts_with("1/2\n"));
    let o = qdt(&["decompose", "(a + d)*(a + d)"]);
    assert_eq!(stdout(&o).trim(), "1·w(0,2) + 1·chi(1) + 1·chiz(1)");
    assert!(stdout(&qdt(&["character", "w(1,2)"])).contains("unitary yes"));
    assert_eq!(
        stdout(&qdt(&["normalize", "v^-1*u", "--algebra", "AT2"])).trim(),
        "u*v^-1"
    );
    let o = qdt(&["fdquot", "2", "--q-root", "4"]);
    assert!(stdout(&o).starts_with("dimension 8"), "{}", stdout(&o));
    assert_eq!(
        qdt(&["fdquot", "2", "--q-root", "3"]).status.code(),
        Some(2)
    );
    let o = qdt(&["gns", "a", "--window", "5"]);
    assert!(stdout(&o).contains("‖π(a)‖ ≈ 1.0000"), "{}", stdout(&o));
}
