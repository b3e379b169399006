//! Acceptance gate for the CLI: determinism.
//!
//! Companion to the library's acceptance suite; this covers the final
//! criterion — `spectrum`, `bounds`, and `verify` must produce byte-identical
//! output across two runs, both on stdout and through `--output` files. Like
//! the library gate, it bypasses the libtest harness so its `[PASS]`/`[FAIL]`
//! line always reaches the terminal, and a failure flips the exit code.

use std::process::Command;

fn stdout_bytes(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_r2r"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn criterion_10_reruns_are_byte_identical() {
    let commands: &[&[&str]] = &[
        &["spectrum", "--n", "5"],
        &["spectrum", "--evaluation", "2,2,1", "--format", "csv"],
        &["bounds", "--n", "5", "--c", "1", "--t-max", "40"],
        &[
            "bounds", "--n", "1000", "--c", "2", "--t-max", "5", "--format", "csv",
        ],
        &["verify", "--n-max", "4"],
        &["verify", "--suite", "identities", "--n-max", "8"],
    ];
    for args in commands {
        let first = stdout_bytes(args);
        let second = stdout_bytes(args);
        assert!(!first.is_empty(), "{args:?} wrote nothing");
        assert_eq!(first, second, "stdout differs across reruns of {args:?}");
    }

    let dir = tempfile::tempdir().unwrap();
    for (name_a, name_b) in [("a.json", "b.json"), ("a.csv", "b.csv")] {
        let format = if name_a.ends_with("json") {
            "json"
        } else {
            "csv"
        };
        for name in [name_a, name_b] {
            let out = Command::new(env!("CARGO_BIN_EXE_r2r"))
                .args(["spectrum", "--n", "6", "--format", format, "--output", name])
                .env("R2R_OUTPUT_DIR", dir.path())
                .output()
                .unwrap();
            assert!(out.status.success());
        }
        let a = std::fs::read(dir.path().join(name_a)).unwrap();
        let b = std::fs::read(dir.path().join(name_b)).unwrap();
        assert!(!a.is_empty());
        assert_eq!(a, b, "file output differs across reruns ({format})");
    }
}

fn main() {
    let label = "criterion 10 — spectrum, bounds, and verify reruns are byte-identical \
                 (stdout and --output files)";
    match std::panic::catch_unwind(criterion_10_reruns_are_byte_identical) {
        Ok(()) => println!("[PASS] {label}"),
        Err(_) => {
            println!("[FAIL] {label}");
            std::process::exit(1);
        }
    }
}
