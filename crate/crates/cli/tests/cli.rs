use std::process::{Command, Output};

fn kron(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kron"))
        .args(args)
        .output()
        .expect("run kron")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_compute(l: &str, m: &str, n: &str, method: &str) -> serde_json::Value {
    let o = kron(&[
        "compute", "--lambda", l, "--mu", m, "--nu", n, "--method", method, "--format", "json",
    ]);
    assert!(o.status.success(), "{o:?}");
    serde_json::from_str(stdout(&o).trim()).unwrap()
}

#[test]
fn compute_plain() {
    let o = kron(&["compute", "--lambda", "3,1", "--mu", "3,1", "--nu", "3,1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("gamma=1"), "{s}");
    assert!(s.contains("provenance=TwoRowTwoRow"), "{s}");
}

#[test]
fn compute_json_schema() {
    let v = json_compute("4", "2,2", "2,1,1", "auto");
    assert_eq!(v["gamma"], "0");
    assert_eq!(v["provenance"], "DeltaRule");
    assert_eq!(v["lambda"], serde_json::json!([4]));
    assert_eq!(v["nu"], serde_json::json!([2, 1, 1]));
    assert!(v["moves"].is_array());
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn methods_agree() {
    let a = json_compute("2,2,1", "2,1,1,1", "3,2", "auto");
    let b = json_compute("2,2,1", "2,1,1,1", "3,2", "oracle");
    assert_eq!(a["gamma"], b["gamma"]);
    assert_eq!(b["provenance"], "Oracle");
}

#[test]
fn moves_are_reported() {
    // Needs a symmetry move before a closed form applies.
    let v = json_compute("3,2", "2,2,1", "4,1", "auto");
    assert_ne!(v["provenance"], "Oracle");
    assert!(!v["moves"].as_array().unwrap().is_empty(), "{v}");
}

#[test]
fn exit_codes() {
    let parse = kron(&["compute", "--lambda", "3,a", "--mu", "3,1", "--nu", "3,1"]);
    assert_eq!(parse.status.code(), Some(2));
    let negative = kron(&["compute", "--lambda", "3,-1", "--mu", "3,1", "--nu", "3,1"]);
    assert_eq!(negative.status.code(), Some(2));
    let size = kron(&["compute", "--lambda", "3,1", "--mu", "3", "--nu", "3,1"]);
    assert_eq!(size.status.code(), Some(3));
    let method = kron(&[
        "compute", "--lambda", "1", "--mu", "1", "--nu", "1", "--method", "fast",
    ]);
    assert_eq!(method.status.code(), Some(2));
}

#[test]
fn table_all_has_one_row_per_triple() {
    let o = kron(&["table", "--n", "3", "--family", "all"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 27);
}

#[test]
fn table_csv_header_and_filter() {
    let o = kron(&[
        "table",
        "--n",
        "4",
        "--family",
        "hook-hook",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["lambda", "mu", "nu", "gamma", "provenance"]);
    let mut rows = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        assert_ne!(&rec[1], "2,2");
        assert_ne!(&rec[2], "2,2");
        let g: u64 = rec[3].parse().unwrap();
        assert!(g <= 2);
        rows += 1;
    }
    assert_eq!(rows, 5 * 4 * 4);
}

#[test]
fn table_json_round_trips() {
    let o = kron(&[
        "table",
        "--n",
        "4",
        "--family",
        "hook-two-row",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    for line in stdout(&o).lines().step_by(7) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let part = |key: &str| {
            v[key]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let again = json_compute(&part("lambda"), &part("mu"), &part("nu"), "oracle");
        assert_eq!(again["gamma"], v["gamma"], "{line}");
    }
}

#[test]
fn verify_families() {
    for (family, bound) in [("two-row", u64::MAX), ("hook-hook", 2), ("hook-two-row", 3)] {
        let o = kron(&[
            "verify", "--family", family, "--n-max", "9", "--format", "json",
        ]);
        assert_eq!(o.status.code(), Some(0), "{family}");
        let lines: Vec<serde_json::Value> = stdout(&o)
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(lines.len(), 9);
        for r in lines {
            assert!(r["mismatches"].as_array().unwrap().is_empty());
            assert!(r["max_gamma"].as_str().unwrap().parse::<u64>().unwrap() <= bound);
        }
    }
}

#[test]
fn verify_parallel() {
    let o = kron(&["verify", "--family", "all", "--n-max", "6", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mismatches=0"));
}

#[test]
fn selftest_passes() {
    let o = kron(&["selftest", "--seed", "17"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}
