use std::path::Path;
use std::process::{Command, Output};

fn lrck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn single_coefficient() {
    let out = lrck(&[
        "lrc", "--k", "3", "--n", "6", "--alpha", "2,1", "--beta", "2,1", "--gamma", "3,2,1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn schur_rectangle_expansion() {
    let out = lrck(&["schur", "--alpha", "1", "--beta", "1", "--rect", "2x2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "s(2) + s(1,1)\n");
}

#[test]
fn ktheory_expansion_is_signed() {
    let out = lrck(&[
        "ktheory", "--k", "2", "--n", "4", "--alpha", "1", "--beta", "1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "O(2) + O(1,1) - O(2,1)\n");
}

#[test]
fn schur_stable_matches_large_rectangle() {
    let stable = lrck(&["schur", "--alpha", "2,1", "--beta", "2,1", "--stable"]);
    let boxed = lrck(&["schur", "--alpha", "2,1", "--beta", "2,1", "--rect", "6x6"]);
    assert!(stable.status.success() && boxed.status.success());
    assert_eq!(stdout(&stable), stdout(&boxed));
}

#[test]
fn tournament_count() {
    let out = lrck(&[
        "tournament",
        "--k",
        "2",
        "--n",
        "4",
        "--classes",
        "1",
        "1",
        "1",
        "1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn games_lists_outcomes_deterministically() {
    let a = lrck(&["games", "--k", "2", "--n", "4", "--a", "2,4", "--b", "2,4"]);
    let b = lrck(&["games", "--k", "2", "--n", "4", "--a", "2,4", "--b", "2,4"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    assert!(text.contains("gamma {1,4}"));
    assert!(text.contains("gamma {2,3}"));
    assert!(text.contains("2 game(s)"));
}

#[test]
fn trace_round_trips_through_replay() {
    let dir = std::env::temp_dir().join("lrck-trace-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trace.json");
    let write = lrck(&[
        "games",
        "--k",
        "2",
        "--n",
        "5",
        "--a",
        "2,4",
        "--b",
        "3,5",
        "--ktheory",
        "--trace",
        path.to_str().unwrap(),
    ]);
    assert!(write.status.success());
    let replay = lrck(&[
        "games",
        "--k",
        "2",
        "--n",
        "5",
        "--a",
        "2,4",
        "--b",
        "3,5",
        "--ktheory",
        "--replay",
        path.to_str().unwrap(),
    ]);
    assert!(replay.status.success());
    assert!(stdout(&replay).contains("replay ok"));
}

#[test]
fn replay_against_wrong_mode_fails_with_exit_2() {
    let dir = std::env::temp_dir().join("lrck-replay-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trace.json");
    let write = lrck(&[
        "games",
        "--k",
        "2",
        "--n",
        "4",
        "--a",
        "2,4",
        "--b",
        "2,4",
        "--trace",
        path.to_str().unwrap(),
    ]);
    assert!(write.status.success());
    let replay = lrck(&[
        "games",
        "--k",
        "2",
        "--n",
        "4",
        "--a",
        "2,4",
        "--b",
        "2,4",
        "--ktheory",
        "--replay",
        path.to_str().unwrap(),
    ]);
    assert_eq!(replay.status.code(), Some(2));
}

#[test]
fn puzzles_writes_one_svg_per_puzzle() {
    let dir = std::env::temp_dir().join("lrck-puzzle-svg-test");
    let _ = std::fs::remove_dir_all(&dir);
    let out = lrck(&[
        "puzzles",
        "--k",
        "2",
        "--n",
        "4",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--svg",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("2 puzzle(s)"));
    let files: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(files.len(), 2);
    assert!(Path::new(&dir).join("puzzle-000.svg").exists());
}

#[test]
fn verify_suites_pass_on_small_boards() {
    for suite in [
        "oracle",
        "triality",
        "commutativity",
        "stability",
        "pieri",
        "bijection",
        "midsort",
        "ktheory",
    ] {
        let out = lrck(&["verify", "--suite", suite, "--max-n", "4", "--jobs", "2"]);
        assert!(
            out.status.success(),
            "suite {suite} failed: {}",
            stdout(&out)
        );
    }
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(lrck(&["nonsense"]).status.code(), Some(1));
    assert_eq!(lrck(&["lrc", "--k", "2"]).status.code(), Some(1));
    assert_eq!(
        lrck(&["lrc", "--k", "2", "--n", "4", "--alpha", "x", "--beta", "1"])
            .status
            .code(),
        Some(1)
    );
}
