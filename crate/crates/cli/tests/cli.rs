use std::process::{Command, Output};

use mip_core::invariants::Fingerprint;
use serde_json::Value;

fn mip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mip"))
        .args(args)
        .output()
        .expect("failed to run mip")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by signal")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn report_json_round_trips_byte_for_byte() {
    for spec in ["D8", "Q8", "T:1,4", "Meta:2,3,1,0,5"] {
        let out = mip(&["report", spec, "--json"]);
        assert_eq!(code(&out), 0);
        let text = String::from_utf8(out.stdout).unwrap();
        let parsed = Fingerprint::from_json(&text).unwrap();
        assert_eq!(format!("{}\n", parsed.to_json()), text, "{spec}");
    }
}

#[test]
fn report_values() {
    let v = json(&mip(&["report", "D8", "--field", "2^2"]));
    assert_eq!(v["field"]["k"], 2);
    assert_eq!(v["jennings_dims"], serde_json::json!([2, 2, 2, 1]));
    assert_eq!(v["hh1_dim"], 9);
    let v = json(&mip(&["report", "T:4,4"]));
    assert_eq!(v["hh1_dim"], 28);
    assert_eq!(v["order"], 81);
}

#[test]
fn report_csv_lists_every_entry() {
    let out = mip(&["report", "Q8", "--csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("entry,value"));
    let names: Vec<&str> = lines
        .map(|l| match l.strip_prefix('"') {
            Some(rest) => rest.split('"').next().unwrap(),
            None => l.split(',').next().unwrap(),
        })
        .collect();
    let kernel: Vec<&str> = names
        .iter()
        .copied()
        .filter(|n| n.starts_with("kernel_sizes"))
        .collect();
    assert_eq!(
        kernel,
        [
            "kernel_sizes(1,2,1)",
            "kernel_sizes(1,3,1)",
            "kernel_sizes(2,3,1)",
            "kernel_sizes(1,3,2)"
        ]
    );
    let mut top: Vec<&str> = names.iter().map(|n| n.split('(').next().unwrap()).collect();
    top.dedup();
    assert_eq!(top, Fingerprint::ENTRIES);
}

#[test]
fn compare_and_assert_distinguished() {
    let out = mip(&["compare", "D8", "Q8", "--assert-distinguished"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verdict"]["outcome"], "distinguished");
    let entries: Vec<&str> = v["verdict"]["differences"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["entry"].as_str().unwrap())
        .collect();
    assert!(entries.contains(&"hh1_dim"));

    let out = mip(&["compare", "T:2,5", "T:3,5", "--assert-distinguished"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["verdict"]["outcome"], "indistinguishable");

    let out = mip(&["compare", "D8", "T:1,4"]);
    assert_eq!(code(&out), 65, "characteristic mismatch");
}

#[test]
fn kernel_size_command() {
    let out = mip(&["kernel-size", "Q8", "1", "3", "1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["kernel"], 4);
    assert_eq!(v["nonzero"], 12);
    let v = json(&mip(&["kernel-size", "D8", "1", "3", "1"]));
    assert_eq!(v["nonzero"], 4);
    assert_eq!(code(&mip(&["kernel-size", "D8", "0", "3", "1"])), 65);
}

#[test]
fn iso_command_exit_codes() {
    let out = mip(&["iso", "T:2,5", "T:3,5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["outcome"], "isomorphic");
    assert_eq!(v["witness"]["verified"], true);

    assert_eq!(code(&mip(&["iso", "D8", "Q8"])), 3);
    let args = ["iso", "D8", "Q8", "--mode", "algebra:1,3", "--field"];
    assert_eq!(code(&mip(&[&args[..], &["2"]].concat())), 3);
    let out = mip(&[&args[..], &["2^2"]].concat());
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["witness"]["verified"], true);

    let out = mip(&[
        "iso",
        "T:1,6",
        "T:1,6",
        "--mode",
        "algebra:1,2",
        "--field",
        "3",
    ]);
    assert_eq!(code(&out), 4);
    assert_eq!(json(&out)["outcome"], "cap_exceeded");
}

#[test]
fn usage_errors() {
    assert_eq!(code(&mip(&["report", "Z:9"])), 64);
    assert_eq!(code(&mip(&["tables", "table9"])), 64);
    assert_eq!(code(&mip(&["frobnicate"])), 64);
    assert_eq!(code(&mip(&["--help"])), 0);
    let out = mip(&["--caps", "/nonexistent/caps.json", "report", "D8"]);
    assert_eq!(code(&out), 64);
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/caps.json"));
    assert_eq!(code(&mip(&["report", "T:5,4"])), 65);
}

#[test]
fn caps_file_is_honoured() {
    let dir = std::env::temp_dir().join(format!("mip-caps-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("caps.json");
    std::fs::write(&path, r#"{"algebra_order": 4}"#).unwrap();
    let v = json(&mip(&["--caps", path.to_str().unwrap(), "report", "D8"]));
    assert_eq!(v["jennings_dims"]["unavailable"], "algebra_order");
    std::fs::write(&path, r#"{"no_such_cap": 1}"#).unwrap();
    assert_eq!(
        code(&mip(&["--caps", path.to_str().unwrap(), "report", "D8"])),
        64
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tables_json_output() {
    let out = mip(&["tables", "example-d8q8", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let cells = v["cells"].as_array().unwrap();
    let corrected: Vec<&Value> = cells
        .iter()
        .filter(|c| c["status"] == "corrected")
        .collect();
    assert_eq!(corrected.len(), 1);
    assert_eq!(corrected[0]["expected"], "8");
    assert_eq!(corrected[0]["computed"], "12");
    assert!(cells.iter().all(|c| c["status"] != "fail"));
}
