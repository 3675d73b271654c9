use assert_cmd::Command;
use serde_json::Value;

fn run(args: &[&str]) -> assert_cmd::assert::Assert {
    Command::cargo_bin("seshadri").unwrap().args(args).assert()
}

fn json(args: &[&str]) -> Value {
    let out = run(args).success().get_output().stdout.clone();
    serde_json::from_slice(&out).unwrap()
}

#[test]
fn epsilon_nocm() {
    let v = json(&["epsilon", "--surface", "nocm", "--coeffs", "7,6,-3"]);
    assert_eq!(v["epsilon"], 1);
    assert_eq!(v["l_squared"], 6);
    assert_eq!(v["witnesses"], serde_json::json!(["N_{1,1}"]));
    assert_eq!(v["weak_submaximal"], serde_json::json!(["N_{1,1}"]));
}

#[test]
fn epsilon_gaussian_with_oracle() {
    let v = json(&["epsilon", "--surface", "cm-i", "--coeffs", "1,1,1,1", "--check-oracle"]);
    assert_eq!(v["epsilon"], 3);
    assert_eq!(v["witnesses"], serde_json::json!(["F1", "F2"]));
    assert!(v.get("weak_submaximal").is_none());
}

#[test]
fn epsilon_eisenstein() {
    let v = json(&["epsilon", "--surface", "cm-rho", "--coeffs", "1,1,1,1", "--check-oracle"]);
    let e = v["epsilon"].as_i64().unwrap();
    let l2 = v["l_squared"].as_i64().unwrap();
    assert!(e > 0 && e * e <= l2);
}

#[test]
fn exit_codes() {
    let err = run(&["epsilon", "--surface", "nocm", "--coeffs", "1,0,0"]).code(2).get_output().stderr.clone();
    assert!(!err.is_empty());
    run(&["epsilon", "--surface", "nocm", "--coeffs", "1,2"]).code(64);
    run(&["epsilon", "--surface", "nocm", "--coeffs", "1,x,2"]).code(64);
    run(&["epsilon", "--surface", "elsewhere", "--coeffs", "1,1,1"]).code(64);
    run(&["cross-section", "--lambda", "3/2"]).code(2);
    run(&["cross-section", "--lambda", "-1/2"]).code(2);
    run(&["cross-section", "--lambda", "one"]).code(64);
    run(&["table", "--which", "3"]).code(64);
    run(&["curves", "--surface", "cm-i", "--coeffs", "1,1,1,1"]).code(64);
    run(&["--help"]).code(0);
}

#[test]
fn curves_listing() {
    let v = json(&["curves", "--coeffs", "10,7,-4", "--weak"]);
    assert_eq!(v["curves"], serde_json::json!(["N_{1,1}", "N_{2,1}"]));
    let v = json(&["curves", "--coeffs", "10,7,-4"]);
    assert_eq!(v["curves"], serde_json::json!(["N_{1,1}"]));
}

#[test]
fn cross_section_json() {
    let v = json(&["cross-section", "--lambda", "1/1"]);
    assert_eq!(v["mu_max"], "1/2");
    assert_eq!(v["breakpoints"], serde_json::json!(["-1/1", "1/3"]));
    assert_eq!(v["segments"].as_array().unwrap().len(), 3);

    let v = json(&["cross-section", "--lambda", "8/11"]);
    let segs = v["segments"].as_array().unwrap();
    assert_eq!(segs.len(), 6);
    assert_eq!(segs[5]["slope"], "-361/1");
    assert_eq!(segs[5]["intercept"], "152/1");
}

#[test]
fn cross_section_csv() {
    let out = run(&["cross-section", "--lambda", "1/2", "--format", "csv", "--samples", "7"]).success().get_output().stdout.clone();
    let text = String::from_utf8(out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("mu,value,slope,intercept,witness,breakpoint"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().any(|r| r.starts_with("5/16,") && r.ends_with(",true")));
    assert!(rows.last().unwrap().starts_with("1/3,0/1,"));
    assert!(!text.contains('\r'));
}

fn golden(which: &str, file: &str) {
    let out = run(&["table", "--which", which]).success().get_output().stdout.clone();
    let want = std::fs::read_to_string(format!("{}/tests/golden/{file}", env!("CARGO_MANIFEST_DIR"))).unwrap();
    assert_eq!(String::from_utf8(out).unwrap(), want);
}

#[test]
fn table_one_matches_golden() {
    golden("1", "table1.csv");
}

#[test]
fn table_two_matches_golden() {
    golden("2", "table2.csv");
}

#[test]
fn output_does_not_depend_on_threads() {
    for which in ["1", "2"] {
        let outs: Vec<Vec<u8>> = ["1", "4"]
            .iter()
            .map(|t| {
                Command::cargo_bin("seshadri")
                    .unwrap()
                    .env("SESHADRI_THREADS", t)
                    .args(["table", "--which", which])
                    .assert()
                    .success()
                    .get_output()
                    .stdout
                    .clone()
            })
            .collect();
        assert_eq!(outs[0], outs[1]);
    }
}

#[test]
fn check_command() {
    let v = json(&["check", "--seed", "11", "--count", "15"]);
    assert_eq!(v["checked"], 45);
    assert_eq!(v["mismatches"], serde_json::json!([]));
}
