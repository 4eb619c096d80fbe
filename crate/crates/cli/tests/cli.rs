use naples_cli::cli_main;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["naples"];
    argv.extend_from_slice(args);
    let code = cli_main(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    // emitted JSON round-trips byte-for-byte
    assert_eq!(format!("{}\n", serde_json::to_string(&v).unwrap()), out);
    v
}

#[test]
fn count_methods_agree() {
    for method in ["recursive", "permsum"] {
        let v = json(&["count", "--n", "4", "--k", "1", "--method", method]);
        assert_eq!(v["count"], 203);
    }
    assert_eq!(json(&["count", "--n", "5", "--method", "closed"])["count"], 1296);
    let (code, _, _) = run(&["count", "--n", "5", "--k", "1", "--method", "closed"]);
    assert_eq!(code, 2);
}

#[test]
fn huge_counts_are_exact() {
    let v = json(&["count", "--n", "30", "--k", "0"]);
    let expected = num_bigint::BigUint::from(31u32).pow(29);
    assert_eq!(v["count"].to_string(), expected.to_string());
}

#[test]
fn fiber_size_and_members() {
    let v = json(&["fiber", "--sigma", "23514", "--k", "0"]);
    assert_eq!(v["size"], 12);
    assert!(v.get("members").is_none());
    let v = json(&["fiber", "--sigma", "51423", "--k", "2", "--list"]);
    assert_eq!(v["members"].as_array().unwrap().len(), 9);
    assert_eq!(v["members"][0], "24531");
    let (code, out, _) = run(&["fiber", "--sigma", "23514", "--format", "latex"]);
    assert_eq!((code, out.as_str()), (0, "12\n"));
    let (code, _, _) = run(&["fiber", "--sigma", "2351", "--k", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn generating_functions() {
    let (_, out, _) = run(&["gf", "--n", "3", "--format", "latex"]);
    assert_eq!(out, "q+3q^2+q^3+q^6\n");
    let v = json(&["gf", "--n", "4", "--log"]);
    assert_eq!(v["series"], "G");
    assert_eq!(v["terms"][7], serde_json::json!([24, 1]));
    let (_, out, _) = run(&["gf", "--n", "2", "--format", "csv"]);
    assert_eq!(out, "key,coeff\n1,1\n2,1\n");
}

#[test]
fn qdist_formats() {
    let (_, out, _) = run(&["qdist", "--n", "5", "--k", "4", "--format", "latex"]);
    assert_eq!(
        out,
        "5q^{10}+25q^9+75q^8+175q^7+325q^6+500q^5+600q^4+550q^3+450q^2+300q+120\n"
    );
    let v = json(&["qdist", "--n", "2", "--k", "0"]);
    assert_eq!(v["distribution"], serde_json::json!({"coeffs": [2, 1]}));
}

#[test]
fn area_command() {
    assert_eq!(json(&["area", "--pref", "322", "--k", "1"])["area"], 1);
    assert_eq!(json(&["area", "--pref", "331422"])["area"], 6);
    let (code, _, err) = run(&["area", "--pref", "322", "--k", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("Naples"));
}

#[test]
fn path_command() {
    let v = json(&["path", "--pref", "331422"]);
    assert_eq!(v["kind"], "labeled-dyck");
    assert_eq!(v["labels"], serde_json::json!([3, 5, 6, 1, 2, 4]));
    let v = json(&["path", "--pref", "664422", "--k", "2"]);
    assert_eq!(v["steps"], "SEESSEESSEES");
    let (code, out, _) = run(&["path", "--pref", "664422", "--k", "2", "--render", "svg"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("<svg"));
    let (code, _, _) = run(&["path", "--pref", "123", "--k", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn resource_limits() {
    let (code, _, _) = run(&["qdist", "--n", "11", "--k", "0"]);
    assert_eq!(code, 3);
    let (code, _, _) = run(&["count", "--n", "6", "--method", "permsum", "--max-n", "5"]);
    assert_eq!(code, 3);
    let (code, _, _) = run(&["verify", "--n-max", "9"]);
    assert_eq!(code, 3);
    let (code, _, _) = run(&["fiber", "--sigma", "1,2,3,4,5,6,7,8,9,10", "--list"]);
    assert_eq!(code, 3);
}

#[test]
fn invalid_input() {
    assert_eq!(run(&["count"]).0, 2);
    assert_eq!(run(&["count", "--n", "3", "--seed", "42"]).0, 2);
    assert_eq!(run(&["count", "--n", "3", "--threads", "0"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn verify_report() {
    let v = json(&["verify", "--n-max", "4"]);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c.get("elapsed_ms").is_none()));
    let (code, out, _) = run(&["verify", "--n-max", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("name,range,passed,counterexample\n"));
}

#[test]
fn thread_count_does_not_change_output() {
    for args in [
        &["qdist", "--n", "6", "--k", "2"][..],
        &["gf", "--n", "6"][..],
        &["count", "--n", "7", "--k", "3", "--method", "permsum"][..],
    ] {
        let one = run(&[args, &["--threads", "1"]].concat());
        let four = run(&[args, &["--threads", "4"]].concat());
        assert_eq!(one, four);
    }
}
