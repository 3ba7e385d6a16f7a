use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leadlag::TimeStamp;
use leadlag_cli::{ingest, CliError, Frame, TickFileSpec, TimeUnit};
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_leadlag");

fn leadlag(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN).current_dir(dir).args(args).output().expect("binary runs")
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = leadlag(dir, args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fails(dir: &Path, args: &[&str]) -> String {
    let out = leadlag(dir, args);
    assert!(!out.status.success(), "{args:?} should fail");
    String::from_utf8(out.stderr).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

/// Data rows of a CSV artifact, skipping the config line and header.
fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().filter(|l| !l.starts_with('#')).skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn micro() -> Frame {
    Frame::new(TimeUnit::Seconds, 1_000_000).unwrap()
}

#[test]
fn ingests_the_three_row_example_in_milliseconds() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "t.csv", "t,p\n0.000,100.0\n0.001,100.5\n0.002,100.25\n");
    let frame = Frame::new(TimeUnit::Milliseconds, 1_000_000).unwrap();
    let s = ingest(&TickFileSpec::new(&p), &frame).unwrap();
    assert_eq!(s.len(), 3);
    assert_eq!(s.times(), &[TimeStamp(0), TimeStamp(1), TimeStamp(2)]);
    assert_eq!(s.prices(), &[100.0, 100.5, 100.25]);
}

#[test]
fn ingest_names_the_offending_row() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "t.csv", "t,p\n0.1,1\n0.3,2\n0.2,3\n");
    match ingest(&TickFileSpec::new(&p), &micro()) {
        Err(CliError::UnsortedTime { row, .. }) => assert_eq!(row, 4),
        other => panic!("{other:?}"),
    }
    let p = write(dir.path(), "d.csv", "t,p\n0.1,1\n0.2,2\n0.2,3\n");
    match ingest(&TickFileSpec::new(&p), &micro()) {
        Err(CliError::DuplicateTime { row, .. }) => assert_eq!(row, 4),
        other => panic!("{other:?}"),
    }
    let p = write(dir.path(), "x.csv", "t,p\n0.1,1\n0.2,abc\n");
    match ingest(&TickFileSpec::new(&p), &micro()) {
        Err(CliError::Parse { row, .. }) => assert_eq!(row, 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn ingest_rejects_empty_files() {
    let dir = TempDir::new().unwrap();
    for body in ["", "t,p\n", "# only a comment\n"] {
        let p = write(dir.path(), "e.csv", body);
        let err = ingest(&TickFileSpec::new(&p), &micro()).unwrap_err();
        assert_eq!(err.code(), "empty_input", "{body:?}");
    }
}

#[test]
fn ingest_rejects_times_finer_than_a_tick() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "t.csv", "t,p\n0.1,1\n0.1000001,2\n");
    let err = ingest(&TickFileSpec::new(&p), &micro()).unwrap_err();
    assert_eq!(err.code(), "time_precision");
}

#[test]
fn ingest_honours_columns_delimiter_and_comments() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "t.csv", "# venue A\nsym;price;time\nZ;1.5;10\nZ;2.5;20\n# gap\nZ;4;30\n");
    let spec = TickFileSpec {
        time_column: "time".parse().unwrap(),
        price_column: "price".parse().unwrap(),
        delimiter: ';',
        ..TickFileSpec::new(&p)
    };
    let s = ingest(&spec, &Frame::new(TimeUnit::Milliseconds, 1_000).unwrap()).unwrap();
    assert_eq!(s.times(), &[TimeStamp(10), TimeStamp(20), TimeStamp(30)]);
    assert_eq!(s.prices(), &[1.5, 2.5, 4.0]);

    let p = write(dir.path(), "n.csv", "5,1\n6,2\n");
    let spec = TickFileSpec { header: false, ..TickFileSpec::new(&p) };
    let s = ingest(&spec, &micro()).unwrap();
    assert_eq!(s.times(), &[TimeStamp(5_000_000), TimeStamp(6_000_000)]);
}

#[test]
fn curve_over_seven_shifts_has_seven_rows() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(d, &["simulate", "--seed", "1", "--out", "sim"]);
    let out = ok(
        d,
        &[
            "curve",
            "--x",
            "sim/x.csv",
            "--y",
            "sim/y.csv",
            "--grid-min",
            "-0.003",
            "--grid-max",
            "0.003",
            "--grid-mesh",
            "0.001",
        ],
    );
    assert!(out.lines().nth(1) == Some("shift,contrast"), "{out}");
    let r = rows(&out);
    assert_eq!(r.len(), 7);
    assert_eq!(r[0][0], "-0.003000");
    assert_eq!(r[6][0], "0.003000");
}

#[test]
fn estimate_on_identical_series_is_zero() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(d, &["simulate", "--seed", "2", "--out", "sim"]);
    let out = ok(
        d,
        &[
            "estimate",
            "--x",
            "sim/x.csv",
            "--y",
            "sim/x.csv",
            "--grid-min",
            "-0.05",
            "--grid-max",
            "0.05",
            "--grid-mesh",
            "0.001",
        ],
    );
    assert_eq!(rows(&out)[0][0], "0.000000");
}

#[test]
fn json_mirrors_embed_the_config() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(d, &["simulate", "--seed", "4", "--out", "sim"]);
    let curve = ok(
        d,
        &[
            "curve",
            "--x",
            "sim/x.csv",
            "--y",
            "sim/y.csv",
            "--grid-min",
            "0.098",
            "--grid-max",
            "0.102",
            "--grid-mesh",
            "0.001",
            "--format",
            "json",
        ],
    );
    let v: serde_json::Value = serde_json::from_str(&curve).unwrap();
    assert_eq!(v["config"]["command"], "curve");
    assert_eq!(v["config"]["grid"]["mesh"], 1000);
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert_eq!(v["rows"][2]["shift"].as_f64(), Some(0.1));

    let sig = ok(d, &["sigplot", "--input", "sim/x.csv", "--ks", "1,3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&sig).unwrap();
    assert_eq!(v["config"]["ks"], serde_json::json!([1, 3]));
    assert_eq!(v["rows"][1]["k"], 3);

    let mc = ok(d, &["montecarlo", "--runs", "1", "--grid-mesh", "0.01", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&mc).unwrap();
    assert_eq!(v["n_runs"], 1);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["count"], 1);
}

#[test]
fn simulated_files_round_trip_exactly() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(d, &["simulate", "--seed", "9", "--scheme-x", "uniform:500", "--scheme-y", "sync:0.004", "--out", "sim"]);
    let text = fs::read_to_string(d.join("sim/x.csv")).unwrap();
    let series = ingest(&TickFileSpec::new(d.join("sim/x.csv")), &micro()).unwrap();
    assert_eq!(series.len(), 500);
    let again = leadlag_cli::render_ticks(&series, &micro(), &text[..text.find('\n').unwrap() + 1]);
    assert_eq!(again, text);
}

#[test]
fn every_command_replays_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(d, &["simulate", "--seed", "5", "--out", "sim"]);
    ok(d, &["replay", "sim/x.csv", "--out", "again"]);
    assert_eq!(fs::read(d.join("sim/x.csv")).unwrap(), fs::read(d.join("again/x.csv")).unwrap());
    assert_eq!(fs::read(d.join("sim/y.csv")).unwrap(), fs::read(d.join("again/y.csv")).unwrap());

    let pair = ["--x", "sim/x.csv", "--y", "sim/y.csv", "--grid-min", "0", "--grid-max", "0.2", "--grid-mesh", "0.01"];
    let runs: Vec<Vec<&str>> = vec![
        [&["estimate"][..], &pair].concat(),
        [&["curve"][..], &pair, &["--format", "json"]].concat(),
        vec!["sigplot", "--input", "sim/y.csv"],
        vec!["montecarlo", "--runs", "3", "--grid-mesh", "0.005", "--seed", "8"],
    ];
    for (i, args) in runs.iter().enumerate() {
        let name = format!("a{i}.out");
        let mut with_out = args.clone();
        with_out.extend(["--out", &name]);
        ok(d, &with_out);
        let first = fs::read(d.join(&name)).unwrap();
        assert_eq!(ok(d, args).into_bytes(), first, "{args:?} is not deterministic");
        assert_eq!(ok(d, &["replay", &name]).into_bytes(), first, "{args:?} replay differs");
    }
}

#[test]
fn errors_are_one_line_with_a_code() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    write(d, "a.csv", "t,p\n0,1\n1,2\n2,0\n");
    write(d, "bad.csv", "t,p\n0,1\n2,2\n1,0\n");
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (
            vec![
                "estimate",
                "--x",
                "a.csv",
                "--y",
                "a.csv",
                "--grid-min",
                "-1",
                "--grid-max",
                "1",
                "--grid-mesh",
                "0.5",
                "--delta",
                "1",
            ],
            "shift_out_of_range",
        ),
        (
            vec![
                "estimate",
                "--x",
                "a.csv",
                "--y",
                "bad.csv",
                "--grid-min",
                "0",
                "--grid-max",
                "0",
                "--grid-mesh",
                "1",
            ],
            "unsorted_time",
        ),
        (
            vec![
                "estimate",
                "--x",
                "a.csv",
                "--y",
                "missing.csv",
                "--grid-min",
                "0",
                "--grid-max",
                "0",
                "--grid-mesh",
                "1",
            ],
            "io",
        ),
        (vec!["estimate", "--x", "a.csv", "--y", "a.csv", "--grid-max", "0", "--grid-mesh", "1"], "invalid_argument"),
        (
            vec![
                "curve",
                "--x",
                "a.csv",
                "--y",
                "a.csv",
                "--grid-min",
                "0",
                "--grid-max",
                "0.0000001",
                "--grid-mesh",
                "1",
            ],
            "time_precision",
        ),
        (vec!["simulate", "--rho", "1.5", "--out", "s"], "invalid_params"),
        (vec!["simulate", "--scheme-x", "poisson:3", "--out", "s"], "invalid_argument"),
        (vec!["simulate"], "invalid_argument"),
        (vec!["sigplot", "--input", "a.csv", "--ks", "3,2"], "invalid_argument"),
        (vec!["replay", "a.csv"], "bad_config"),
        (vec!["estimate", "--frobnicate"], "usage"),
    ];
    for (args, code) in cases {
        let err = fails(d, &args);
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with(&format!("error[{code}]: ")), "{args:?}: {err}");
    }
}

#[test]
fn help_states_the_sign_convention() {
    let dir = TempDir::new().unwrap();
    let help = ok(dir.path(), &["estimate", "--help"]);
    assert!(help.contains("positive theta_hat means the X asset leads"), "{help}");
    for flag in ["--grid-min", "--grid-max", "--grid-mesh", "--horizon", "--delta", "--format", "--out"] {
        assert!(help.contains(flag), "{flag}");
    }
    let help = ok(dir.path(), &["montecarlo", "--help"]);
    assert!(help.contains("--seed"));
}
