use std::fs;
use std::process::Command;

use clap::Parser;
use ncinv::cli::{run, Cli, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};

fn run_args(args: &[&str]) -> ncinv::cli::Outcome {
    let cli = Cli::try_parse_from(std::iter::once("ncinv").chain(args.iter().copied())).unwrap();
    run(&cli).unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run_args(&[&["--no-cache"], args].concat());
    assert_eq!(out.code, EXIT_OK, "{args:?}");
    out.stdout
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ncinv"))
        .arg("--no-cache")
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn dim_and_hilbert_rows() {
    assert_eq!(stdout(&["dim", "--d", "2", "--m", "4"]), "3\n");
    assert_eq!(stdout(&["dim", "--d", "3", "--m", "3"]), "0\n");
    assert_eq!(
        stdout(&[
            "hilbert",
            "--d",
            "2",
            "--max-m",
            "7",
            "--method",
            "enumeration"
        ]),
        "1,0,1,1,3,6,15,36\n"
    );
    assert_eq!(
        stdout(&[
            "hilbert",
            "--d",
            "1",
            "--max-m",
            "6",
            "--method",
            "chebyshev"
        ]),
        "1,0,1,0,2,0,5\n"
    );
    let csv = stdout(&["hilbert", "--d", "4", "--max-m", "8"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("m,enum,cheb,quad,abs_err"));
    let last: Vec<&str> = lines.last().unwrap().split(',').collect();
    assert_eq!(&last[..3], &["8", "1085", "1085"]);
}

#[test]
fn basis_text_and_json() {
    assert_eq!(
        stdout(&["basis", "--d", "2", "--m", "2"]),
        "a2·a0 − 2·a1·a1 + a0·a2\n"
    );
    assert_eq!(stdout(&["basis", "--d", "1", "--m", "3"]), "");
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "basis", "--d", "2", "--m", "4", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json.as_array().unwrap().len(), 3);
}

#[test]
fn verify_exit_codes() {
    let ok = bin(&["verify", "--d", "2", "--m", "4"]);
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let text = String::from_utf8(ok.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 3);

    let extra = run_args(&[
        "--no-cache",
        "verify",
        "--d",
        "3",
        "--m",
        "2",
        "--matrix",
        "2",
        "-1",
        "1",
        "0",
    ]);
    assert_eq!(extra.code, EXIT_OK);
    assert_ne!(EXIT_VERIFY_FAILED, EXIT_OK);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        bin(&["dim", "--d", "two", "--m", "2"]).status.code(),
        Some(EXIT_USAGE)
    );
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(EXIT_USAGE));
    // singular matrix
    let singular = bin(&[
        "verify", "--d", "2", "--m", "2", "--matrix", "1", "2", "2", "4",
    ]);
    assert_eq!(singular.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&singular.stderr).starts_with("error:"));
    assert_eq!(bin(&["--help"]).status.code(), Some(EXIT_OK));
}

#[test]
fn moments_and_psi() {
    assert_eq!(
        stdout(&["moments", "--rule", "semicircle", "--n", "8"]),
        "1,0,1,0,2,0,5,0,14\n"
    );
    assert_eq!(
        stdout(&["moments", "--rule", "free-poisson", "--n", "4"]),
        "1,1,2,5,14\n"
    );
    assert_eq!(
        stdout(&["psi", "--rule", "semicircle", "--k", "2,2"]),
        "1\n"
    );
    assert_eq!(
        stdout(&["psi", "--rule", "semicircle", "--k", "1,2"]),
        "0\n"
    );
}

#[test]
fn cached_output_matches_fresh() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    for args in [
        vec!["dim", "--d", "4", "--m", "6"],
        vec!["basis", "--d", "3", "--m", "4"],
        vec!["hilbert", "--d", "3", "--max-m", "6"],
    ] {
        let fresh = stdout(&args);
        let first = run_args(&[&["--cache-dir", cache], &args[..]].concat());
        let files = fs::read_dir(dir.path()).unwrap().count();
        let second = run_args(&[&["--cache-dir", cache], &args[..]].concat());
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), files);
        assert_eq!(first.stdout, fresh);
        assert_eq!(second.stdout, fresh);
    }
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 3);
}

#[test]
fn rewrite_files() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let path = dir.path().join(name);
        fs::write(&path, body).unwrap();
        path.to_str().unwrap().to_owned()
    };

    let crossing = write(
        "crossing.json",
        r#"{"m":4,"d":1,"terms":[{"coeff":"1","chords":[[1,3],[2,4]]}]}"#,
    );
    let out: serde_json::Value = serde_json::from_str(&stdout(&["rewrite", &crossing])).unwrap();
    assert_eq!(out["terms"].as_array().unwrap().len(), 2);

    let nested = write(
        "nested.json",
        r#"{"m":2,"d":2,"terms":[{"coeff":"3/2","chords":[[1,4],[2,3]]}]}"#,
    );
    let out: serde_json::Value = serde_json::from_str(&stdout(&["rewrite", &nested])).unwrap();
    assert_eq!(out["terms"][0]["coeff"], "3/2");
    assert_eq!(
        out["terms"][0]["chords"],
        serde_json::json!([[1, 4], [2, 3]])
    );

    let vanishing = write(
        "vanishing.json",
        r#"{"m":2,"d":2,"terms":[{"coeff":"1","chords":[[1,2],[3,4]]}]}"#,
    );
    assert_eq!(
        bin(&["rewrite", &vanishing]).status.code(),
        Some(EXIT_USAGE)
    );
    assert_eq!(
        bin(&["rewrite", "/nonexistent/x.json"]).status.code(),
        Some(EXIT_USAGE)
    );
}
