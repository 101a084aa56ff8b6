#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// Fixture name and arguments for every committed golden report.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("klein_analyze", &["analyze", "--small", "0,3,5"]),
    (
        "klein_order_bound",
        &["order-bound", "--small", "0,3,5", "--l", "1..10"],
    ),
    (
        "klein_profile",
        &["profile", "--small", "0,3,5", "--n", "10"],
    ),
    ("tower_q2_n4_analyze", &["analyze", "--tower", "2", "4"]),
    (
        "tower_q2_n4_order_bound",
        &["order-bound", "--tower", "2", "4"],
    ),
    ("tower_q2_n4_tower", &["tower", "--tower", "2", "4"]),
    (
        "tower_q2_n4_profile",
        &["profile", "--tower", "2", "4", "--n", "32"],
    ),
];

pub const FORMATS: &[(&str, &str)] = &[("text", "txt"), ("json", "json"), ("csv", "csv")];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

pub fn arfcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arfcodes"))
        .args(args)
        .env_remove("ARFCODES_FORMAT")
        .output()
        .expect("binary runs")
}

pub fn stdout_of(args: &[&str]) -> String {
    let out = arfcodes(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

/// Compares every fixture in every format against its golden file and
/// returns the mismatches. With `UPDATE_GOLDENS` set the files are rewritten.
pub fn golden_mismatches() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDENS").is_some();
    let mut bad = Vec::new();
    for (name, args) in GOLDEN_CASES {
        for (format, ext) in FORMATS {
            let mut full = args.to_vec();
            full.extend(["--format", format]);
            let got = stdout_of(&full);
            let path = golden_dir().join(format!("{name}.{ext}"));
            if update {
                std::fs::write(&path, &got).expect("write golden");
                continue;
            }
            match std::fs::read(&path) {
                Ok(want) if want == got.as_bytes() => {}
                Ok(_) => bad.push(format!("{} differs", path.display())),
                Err(e) => bad.push(format!("{}: {e}", path.display())),
            }
        }
    }
    bad
}
