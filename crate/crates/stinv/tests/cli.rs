//! End-to-end tests of the `stinv` binary: subcommand outputs, the exit-code
//! contract (0 ok, 2 parse, 3 shape, 4 parameters), and agreement with
//! direct library calls.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use stinv::{
    add_area_occupied, fold_time, serialize_invariant, Invariant, Mode, ModelDocument,
    TimeIteration,
};

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stinv"))
        .args(args)
        .output()
        .expect("spawn stinv")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn fold_time_matches_the_library() {
    let output = stinv(&[
        "fold-time",
        "--in",
        &fixture("time_series.stinv"),
        "--start",
        "1",
        "--stop",
        "3",
        "--step",
        "1",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "342\n");

    let series = Invariant::big_and(vec![
        Invariant::implies(
            Invariant::time_point(1),
            Invariant::occupy_box(1, 1, 10, 10),
        ),
        Invariant::implies(
            Invariant::time_point(2),
            Invariant::occupy_box(5, 5, 15, 15),
        ),
        Invariant::implies(
            Invariant::time_point(3),
            Invariant::occupy_box(10, 10, 20, 20),
        ),
    ]);
    let iter = TimeIteration::new(1, 3, 1).unwrap();
    assert_eq!(fold_time(&series, 0, &iter, add_area_occupied), 342);
}

#[test]
fn fold_time_single_step_and_empty_model() {
    let output = stinv(&[
        "fold-time",
        "--in",
        &fixture("time_series.stinv"),
        "--start",
        "1",
        "--stop",
        "1",
        "--step",
        "1",
    ]);
    assert_eq!(stdout(&output), "100\n");

    let empty = ModelDocument::new(Invariant::big_and(vec![])).to_text(Mode::Compact);
    let output = run_with_stdin(
        &[
            "fold-time",
            "--in",
            "-",
            "--start",
            "1",
            "--stop",
            "3",
            "--step",
            "1",
        ],
        &empty,
    );
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "0\n");
}

#[test]
fn fold_space_per_owner_counts() {
    let base = [
        "fold-space",
        "--in",
        &fixture("space_series.stinv"),
        "--start-box",
        "1,1,5,5",
        "--stop-box",
        "26,26,30,30",
        "--step",
        "5,5",
    ];
    let cloud = stinv(&[&base[..], &["--agg", "owner-points:cloud"]].concat());
    assert_eq!(cloud.status.code(), Some(0));
    assert_eq!(stdout(&cloud), "76\n");

    // Per-box enumeration: boxes 1 and 2 lie inside the first mountain box
    // and boxes 5 and 6 inside the second, 25 points each.
    let mountain = stinv(&[&base[..], &["--agg", "owner-points:mountain"]].concat());
    assert_eq!(mountain.status.code(), Some(0));
    assert_eq!(stdout(&mountain), "100\n");
}

#[test]
fn filter_time_prints_the_surviving_implication() {
    let output = stinv(&[
        "filter-time",
        "--in",
        &fixture("time_series.stinv"),
        "--start",
        "1",
        "--stop",
        "2",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let expected = serialize_invariant(
        &Invariant::implies(
            Invariant::time_point(1),
            Invariant::occupy_box(1, 1, 10, 10),
        ),
        Mode::Compact,
    );
    assert_eq!(stdout(&output), format!("{expected}\n"));

    // An empty window turns every time point into a miss.
    let output = stinv(&[
        "filter-time",
        "--in",
        &fixture("time_series.stinv"),
        "--start",
        "5",
        "--stop",
        "5",
    ]);
    assert_eq!(stdout(&output), "{\"op\":\"TRUE\"}\n");
}

#[test]
fn normalize_std_of_a_trivial_document() {
    let doc = ModelDocument::new(Invariant::True).to_text(Mode::Pretty);
    let output = run_with_stdin(&["normalize", "--in", "-", "--pipeline", "std"], &doc);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "{\"op\":\"TRUE\"}\n");
}

#[test]
fn query_reports_per_owner_counts() {
    let output = stinv(&[
        "query",
        "--in",
        &fixture("time_series.stinv"),
        "--time",
        "2",
        "--grid",
        "0,0,30,30",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "<anonymous>\t121\n");

    let output = stinv(&[
        "query",
        "--in",
        &fixture("space_series.stinv"),
        "--time",
        "0",
        "--grid",
        "0,0,30,30",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "cloud\t206\nmountain\t200\n");

    // Clipping to a smaller grid.
    let output = stinv(&[
        "query",
        "--in",
        &fixture("space_series.stinv"),
        "--time",
        "0",
        "--grid",
        "0,0,9,9",
    ]);
    assert_eq!(stdout(&output), "cloud\t25\nmountain\t81\n");

    let empty = ModelDocument::new(Invariant::big_and(vec![])).to_text(Mode::Compact);
    let output = run_with_stdin(
        &["query", "--in", "-", "--time", "0", "--grid", "0,0,5,5"],
        &empty,
    );
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "");
}

#[test]
fn exit_code_2_on_unparseable_input() {
    let output = run_with_stdin(&["normalize", "--in", "-"], "{\"op\":");
    assert_eq!(output.status.code(), Some(2));
    assert!(!output.stderr.is_empty());

    let output = run_with_stdin(&["normalize", "--in", "-"], "{\"op\":\"Nope\"}");
    assert_eq!(output.status.code(), Some(2));

    let output = stinv(&["normalize", "--in", "/no/such/file.stinv"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn exit_code_3_on_shape_errors() {
    // Owner pipeline on a model that is not a conjunction of implications.
    let doc = ModelDocument::new(Invariant::True).to_text(Mode::Compact);
    let output = run_with_stdin(&["normalize", "--in", "-", "--pipeline", "owner"], &doc);
    assert_eq!(output.status.code(), Some(3));

    // Query over atoms outside the oracle fragment.
    let circle = ModelDocument::new(Invariant::big_and(vec![Invariant::implies(
        Invariant::owner("a"),
        Invariant::occupy_circle(0, 0, 3),
    )]))
    .to_text(Mode::Compact);
    let output = run_with_stdin(
        &["query", "--in", "-", "--time", "0", "--grid", "0,0,5,5"],
        &circle,
    );
    assert_eq!(output.status.code(), Some(3));

    let output = run_with_stdin(
        &[
            "fold-space",
            "--in",
            "-",
            "--start-box",
            "0,0,1,1",
            "--stop-box",
            "2,0,3,1",
            "--step",
            "2,0",
            "--agg",
            "owner-points:cloud",
        ],
        &doc,
    );
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn exit_code_4_on_invalid_parameters() {
    let path = fixture("time_series.stinv");

    // Reversed window.
    let output = stinv(&["filter-time", "--in", &path, "--start", "3", "--stop", "1"]);
    assert_eq!(output.status.code(), Some(4));

    // Non-positive step.
    let output = stinv(&[
        "fold-time",
        "--in",
        &path,
        "--start",
        "1",
        "--stop",
        "3",
        "--step",
        "0",
    ]);
    assert_eq!(output.status.code(), Some(4));

    // Zero translation.
    let space = fixture("space_series.stinv");
    let output = stinv(&[
        "fold-space",
        "--in",
        &space,
        "--start-box",
        "1,1,5,5",
        "--stop-box",
        "26,26,30,30",
        "--step",
        "0,0",
        "--agg",
        "owner-points:cloud",
    ]);
    assert_eq!(output.status.code(), Some(4));

    // Unreachable stop box.
    let output = stinv(&[
        "fold-space",
        "--in",
        &space,
        "--start-box",
        "1,1,5,5",
        "--stop-box",
        "27,26,31,30",
        "--step",
        "5,5",
        "--agg",
        "owner-points:cloud",
    ]);
    assert_eq!(output.status.code(), Some(4));

    // Unknown aggregator.
    let output = stinv(&[
        "fold-time",
        "--in",
        &path,
        "--start",
        "1",
        "--stop",
        "3",
        "--step",
        "1",
        "--agg",
        "nope",
    ]);
    assert_eq!(output.status.code(), Some(4));

    // Malformed flag value.
    let output = stinv(&["query", "--in", &path, "--time", "0", "--grid", "0,0,5"]);
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn miss_polarity_flag_is_threaded_through() {
    // With miss=false an out-of-window point rewrites to TRUE, so the
    // implication collapses to TRUE instead of being dropped via FALSE.
    let doc = ModelDocument::new(Invariant::time_point(5)).to_text(Mode::Compact);
    let as_false = run_with_stdin(
        &["filter-time", "--in", "-", "--start", "0", "--stop", "3"],
        &doc,
    );
    assert_eq!(stdout(&as_false), "{\"op\":\"FALSE\"}\n");
    let as_true = run_with_stdin(
        &[
            "filter-time",
            "--in",
            "-",
            "--start",
            "0",
            "--stop",
            "3",
            "--miss",
            "false",
        ],
        &doc,
    );
    assert_eq!(stdout(&as_true), "{\"op\":\"TRUE\"}\n");
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stinv"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn stinv");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("wait for stinv")
}
