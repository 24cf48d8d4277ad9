use gosper::cli::{catalog, run_command, verify_record, Status, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn check_schema(v: &Value) {
    let obj = v.as_object().expect("object");
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(
        keys,
        ["elapsed_ms", "first_nonzero", "grid_denominator", "name", "status", "truncation_exponent"]
    );
    assert!(v["name"].is_string());
    let status = v["status"].as_str().unwrap();
    assert!(["verified", "failed", "error"].contains(&status));
    assert!(v["elapsed_ms"].is_u64());
    if status == "error" {
        assert!(v["grid_denominator"].is_null() && v["truncation_exponent"].is_null());
    } else {
        assert!(v["grid_denominator"].as_i64().unwrap() >= 1);
        let t = v["truncation_exponent"].as_str().unwrap();
        assert!(t.parse::<gosper::Exponent>().is_ok(), "{t}");
    }
    match &v["first_nonzero"] {
        Value::Null => assert_ne!(status, "failed"),
        fnz => {
            assert_eq!(status, "failed");
            assert!(fnz["exponent"].is_string() && fnz["coefficient"].is_string());
        }
    }
}

#[test]
fn verify_all_json() {
    let (code, out) = run_command(["verify", "--all", "--json"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), catalog().len());
    let mut names = Vec::new();
    for l in lines {
        let v: Value = serde_json::from_str(l).unwrap();
        check_schema(&v);
        assert_eq!(v["status"], "verified");
        names.push(v["name"].as_str().unwrap().to_string());
    }
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn failure_and_error_reports_follow_the_schema() {
    let (code, out) = run_command(["verify", "--expr", "z^3 + 4*g*z^2 - 3*g^2*z - g*(g^4 + 4*g^2 + 49) + 1 == 0", "--json"]);
    assert_eq!(code, EXIT_FAILED);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    check_schema(&v);
    assert_eq!(v["first_nonzero"]["exponent"], "0");
    assert_eq!(v["first_nonzero"]["coefficient"], "1");
    let (code, out) = run_command(["verify", "--expr", "sqrt(3) == 1", "--json"]);
    assert_eq!(code, EXIT_FAILED);
    check_schema(&serde_json::from_str(out.trim()).unwrap());
}

#[test]
fn exit_codes() {
    assert_eq!(run_command(["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run_command(["verify", "--all", "--order", "0"]).0, EXIT_USAGE);
    assert_eq!(run_command(["verify", "--expr", "z =="]).0, EXIT_USAGE);
    assert_eq!(run_command(["ord-table", "eta:14:1^x"]).0, EXIT_USAGE);
    assert_eq!(run_command(["find-relation", "--x", "z^2"]).0, EXIT_USAGE);
    assert_eq!(run_command(["find-relation", "--x", "g^2", "--y", "g^4", "--order", "40"]).0, EXIT_USAGE);
    assert_eq!(run_command(["numeric-check", "--tol", "-1"]).0, EXIT_USAGE);
    assert_eq!(run_command(["numeric-check"]).0, EXIT_OK);
    assert_eq!(run_command(["numeric-check", "--tol", "1e-30"]).0, EXIT_FAILED);
    assert_eq!(run_command(["verify", "--list"]).0, EXIT_OK);
}

#[test]
fn cusps_and_tables() {
    let (code, out) = run_command(["cusps", "14"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<Vec<&str>> = out.lines().skip(2).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.iter().map(|r| r[0]).collect::<Vec<_>>(), ["0", "1/2", "1/7", "∞"]);
    assert_eq!(rows.iter().map(|r| r[2]).collect::<Vec<_>>(), ["14", "7", "2", "1"]);
    let (code, out) = run_command(["ord-table", "tables/3.1"]);
    assert_eq!(code, EXIT_OK);
    let cells: Vec<String> = out
        .lines()
        .filter(|l| l.starts_with("Ord "))
        .flat_map(|l| l.split_whitespace().skip(2).map(String::from).collect::<Vec<_>>())
        .collect();
    assert_eq!(cells, ["0", "1", "0", "-5", "0", "1", "0", "-1", "0", "1", "0", "3"]);
    for id in ["g-squares", "g-products", "level-28", "mixed-level", "tables/4.2", "geta:28:14:14^2,7^-2"] {
        assert_eq!(run_command(["ord-table", id]).0, EXIT_OK, "{id}");
    }
}

#[test]
fn expand_eliminate_and_relation() {
    let (code, out) = run_command(["expand", "z", "--order", "6"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("q^(-5/2) + 2*q^(-3/2) + 4*q^(-1/2) + 4*q^(1/2) + 6*q^(3/2) + 8*q^(5/2)"), "{out}");
    let (code, out) = run_command(["find-relation", "--x", "t", "--y", "g^2", "--order", "50"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, out) = run_command(["eliminate"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("monomial content: G^6"), "{out}");
    assert!(out.contains("cofactor K (45 terms"), "{out}");
}

/// Verified at T implies verified at every smaller T.
#[test]
fn verify_is_monotone() {
    for name in ["thm-1.1", "gosper-1.3", "eq-4.8", "lemma-4.1-product"] {
        let record = catalog().into_iter().find(|r| r.name == name).unwrap();
        assert_eq!(verify_record(&record, None).status, Status::Verified);
        for t in [1, 2, 5, 11, 23, record.order - 1] {
            assert_eq!(verify_record(&record, Some(t)).status, Status::Verified, "{name} at {t}");
        }
    }
}
