use std::process::{Command, Output};

fn qlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlie")).args(args).env_remove("QLIE_DEGREE_CAP").output().expect("run qlie")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn bracket_of_cartan_with_itself() {
    let o = qlie(&["bracket", "sl2", "H", "H"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(q^-2 − q^2)·H");
}

#[test]
fn bracket_of_equal_raising_vectors_vanishes() {
    let o = qlie(&["bracket", "sl2", "X+", "X+"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn unknown_label_is_a_usage_error() {
    let o = qlie(&["bracket", "sl2", "H", "Y"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_algebra_is_a_usage_error() {
    assert_eq!(qlie(&["construct", "g2"]).status.code(), Some(2));
}

#[test]
fn bad_degree_cap_is_a_usage_error() {
    for v in ["0", "abc", "1000"] {
        let o = Command::new(env!("CARGO_BIN_EXE_qlie")).args(["bracket", "sl2", "H", "H"]).env("QLIE_DEGREE_CAP", v).output().unwrap();
        assert_eq!(o.status.code(), Some(2), "cap {}", v);
    }
}

#[test]
fn bad_root_order_is_a_usage_error() {
    assert_eq!(qlie(&["construct", "a2", "--d-override", "4"]).status.code(), Some(2));
}

#[test]
fn sl2_verification_passes() {
    let o = qlie(&["verify", "sl2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("golden-table"));
}

#[test]
fn relation_filter() {
    let o = qlie(&["verify", "sl2", "--gauge", "canonical", "--relations", "llt,qas"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 2);
    assert!(out.starts_with("llt"));
    assert_eq!(qlie(&["verify", "sl2", "--relations", "nope"]).status.code(), Some(2));
}

#[test]
fn failing_relation_gives_exit_one() {
    let o = qlie(&["verify", "sl2", "--gauge", "canonical", "--relations", "rbh"]);
    assert_eq!(o.status.code(), Some(1));
    let o = qlie(&["verify", "sl2", "--gauge", "canonical", "--relations", "rbh-derived"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn documents_are_deterministic_and_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("one.json");
    let p2 = dir.path().join("two.json");
    for p in [&p1, &p2] {
        let o = qlie(&["construct", "sl2", "--json", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (a, b) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    assert_eq!(a, b);

    let direct = qlie(&["verify", "sl2"]);
    let from = qlie(&["verify", "--from", p1.to_str().unwrap()]);
    assert_eq!(from.status.code(), direct.status.code());
    let out = stdout(&from);
    assert!(out.starts_with(&stdout(&direct)));
    assert!(out.contains("document constants match"));
    assert!(out.contains("document verdicts match"));
}

#[test]
fn tampered_document_is_flagged() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("doc.json");
    qlie(&["construct", "sl2", "--json", p.to_str().unwrap()]);
    let text = std::fs::read_to_string(&p).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["verification"][0]["status"] = serde_json::Value::String("fail".into());
    std::fs::write(&p, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = qlie(&["verify", "--from", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdicts DIFFER"));

    std::fs::write(&p, "{\"schema_version\": \"99\"}").unwrap();
    assert_eq!(qlie(&["verify", "--from", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn classical_limit_of_sl2() {
    let o = qlie(&["classical", "sl2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("quantities agree"));
}

#[test]
fn c2_lattice_is_reported_as_non_closure() {
    let o = qlie(&["verify", "c2", "--relations", "lattice"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("lattice"));
}
