use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringcodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["validate", "--ring", "z4", "--group", "3^1,5^1"]), 0);
    assert_eq!(code(&["validate", "--ring", "z4", "--group", "7^1"]), 2);
    assert_eq!(code(&["validate", "--group", "4^1"]), 1);
    assert_eq!(code(&["validate", "--ring", "z6", "--group", "3^1"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["idempotents", "--group", "7^1"]), 2);
    assert_eq!(code(&["code", "--group", "3^1,5^1", "--block", "1,1", "--split", "9"]), 1);
    assert_eq!(code(&["code", "--group", "3^1,5^1", "--block", "1,1", "--budget", "16"]), 3);
    assert_eq!(code(&["table", "--group", "3^1,5^1"]), 1);
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [
        &["idempotents", "--ring", "f2u2", "--group", "3^1,5^1,11^1"][..],
        &["code", "--group", "3^1,5^1", "--block", "1,1", "--split", "2", "--k", "1"][..],
        &["table", "--group", "3^1,5^1,11^1", "--k", "1"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn idempotent_counts() {
    for (ring, group, want) in [("z4", "3^1,5^1", 5), ("z2", "3^1", 2), ("f2u2", "3^1,5^1,11^1", 14)] {
        let out = run(&["idempotents", "--ring", ring, "--group", group]);
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["records"].as_array().unwrap().len(), want);
        let checks = &v["verification"];
        for key in ["count_matches", "all_idempotent", "pairwise_orthogonal", "sums_to_one", "reduces_to_oracle"] {
            assert_eq!(checks[key], true, "{ring} {group} {key}");
        }
    }
}

#[test]
fn code_reports() {
    let report = |args: &[&str]| -> serde_json::Value {
        let mut full = vec!["code", "--ring", "z4", "--group", "3^1,5^1"];
        full.extend_from_slice(args);
        serde_json::from_slice(&run(&full).stdout).unwrap()
    };
    let r = report(&["--block", "0,0", "--k", "1"]);
    assert_eq!((r["size"].as_str(), r["min_weight"].as_u64()), (Some("2"), Some(15)));
    let r = report(&["--block", "1,0", "--k", "0"]);
    assert_eq!((r["size"].as_str(), r["min_weight"].as_u64()), (Some("16"), Some(10)));
    let r = report(&["--block", "1,1", "--split", "1", "--k", "0"]);
    assert_eq!(r["size"], "256");
    assert_eq!(r["lower_bound"], 4);
    assert_eq!(r["min_weight"], 8);
    assert_eq!(r["weight_method"], "enumeration");
    let r = report(&["--block", "1,0", "--block", "0,1", "--k", "0;1"]);
    assert_eq!(r["size_log2"], 4 + 4);
    assert_eq!(r["min_weight"], 6);
}

#[test]
fn csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("ringcodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = run(&[
        "table", "--group", "3^1,5^1,11^1", "--k", "1", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 7);
    std::fs::remove_dir_all(&dir).unwrap();
}
