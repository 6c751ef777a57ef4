use std::process::{Command, Output};

fn f1qt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_f1qt"))
        .args(args)
        .env_remove("F1QT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn delete_prob_json() {
    let out = f1qt(&["delete", "prob", "--m", "2", "--l", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["probability"]["num"], 3);
    assert_eq!(v["probability"]["den"], 4);
    assert_eq!(v["limits"]["m_inf"]["num"], 2);
    assert_eq!(v["limits"]["m_inf"]["den"], 3);
}

#[test]
fn delete_prob_csv() {
    let out = f1qt(&["delete", "prob", "--m", "3", "--l", "2", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("m,l,num,den,approx\n3,2,9,13,"));
}

#[test]
fn noclone_all_rays() {
    let out = f1qt(&["noclone", "--m", "2", "--l", "2", "--scope", "all", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["unitaries_checked"], 384);
    assert_eq!(v["blanks_checked"], 8);
    assert_eq!(v["search_space"], 3072);
    assert_eq!(v["cloner_found"], false);
}

#[test]
fn noclone_simple_rays_has_witness() {
    let out = f1qt(&["noclone", "--m", "2", "--l", "2", "--scope", "simple", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cloner_found"], true);
    assert_eq!(v["witness"]["blank"], "(w^0,0)@2");
}

#[test]
fn involutions_of_f1_8() {
    let out = f1qt(&["involutions", "--m", "8", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let valid: Vec<u64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|row| row["valid"] == true)
        .map(|row| row["r"].as_u64().unwrap())
        .collect();
    assert_eq!(valid, [2, 4, 6]);
}

#[test]
fn unitary_group_counts() {
    for (m, r, expected) in [("2", "1", 18), ("3", "1", 162), ("2", "2", 32)] {
        let out = f1qt(&["unitary-group", "--m", m, "--r", r, "--json"]);
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["filtered_count"], expected);
    }
}

#[test]
fn dictionary_formats() {
    let md = f1qt(&["dictionary", "--q", "2"]);
    assert!(stdout(&md).contains("| Absolute Quantum Theory | F_1^3 | v -> v^2 | F_1^1 |"));
    let csv = f1qt(&["dictionary", "--q", "2", "--csv"]);
    assert_eq!(stdout(&csv).lines().count(), 5);
    let json = f1qt(&["dictionary", "--q", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["modulus"], "x^2+x+1");
}

#[test]
fn workers_do_not_change_payload() {
    for args in [
        &["noclone", "--m", "2", "--l", "2", "--scope", "simple", "--json"][..],
        &["unitary-group", "--m", "3", "--r", "1", "--enumerate", "--json"][..],
        &["observables", "--m", "4", "--l", "2", "--json"][..],
        &["selftest", "--json"][..],
    ] {
        let one = f1qt(&[args, &["--workers", "1"]].concat());
        let four = f1qt(&[args, &["--workers", "4"]].concat());
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(f1qt(&["noclone", "--m", "2"]).status.code(), Some(2));
    assert_eq!(f1qt(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(f1qt(&["dictionary", "--q", "4"]).status.code(), Some(2));
    assert_eq!(f1qt(&["observables", "--m", "2", "--l", "2", "--r", "1"]).status.code(), Some(2));
    assert_eq!(f1qt(&["noclone", "--m", "2", "--l", "2", "--csv"]).status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_3() {
    let out = f1qt(&["unitary-group", "--m", "4", "--r", "2", "--budget", "100", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "budget-exceeded");

    let env = Command::new(env!("CARGO_BIN_EXE_f1qt"))
        .args(["noclone", "--m", "2", "--l", "2"])
        .env("F1QT_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
}

#[test]
fn selftest_passes() {
    let out = f1qt(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("PASS")).count(), 6);
}
