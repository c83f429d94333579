use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn uaclose(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uaclose"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn z4() -> String {
    fixture("z4ring.ua").to_string_lossy().into_owned()
}

#[test]
fn ind_fixpoint_golden() {
    let out = uaclose(&["ind", &z4(), "--set", "2", "--fixpoint"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{0,2}\nchain {2} ⊂ {0,2}\nfixpoint 1\n");
}

#[test]
fn ded_single_step() {
    let out = uaclose(&["ded", &z4(), "--set", "1", "--steps", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{0,1,2,3}\nchain {1} ⊂ {0,1,2,3}\nfixpoint not reached after 1 steps\n"
    );
}

#[test]
fn empty_set_and_top_override() {
    let out = uaclose(&["clot", &z4(), "--set", "-"]);
    assert_eq!(stdout(&out), "{0}\n");
    let out = uaclose(&["clot", &z4(), "--set", "-", "--top", "2"]);
    assert_eq!(stdout(&out), "{2}\n");
}

#[test]
fn normal_and_relations() {
    let out = uaclose(&["normal", &z4(), "--set", "0,2"]);
    assert_eq!(stdout(&out), "normal\nclass {0,2}\n");
    let out = uaclose(&["normal", &z4(), "--set", "2"]);
    assert_eq!(stdout(&out), "not-normal\nclass {0,2}\n");
    let out = uaclose(&["cong", &z4(), "--set", "2"]);
    assert_eq!(stdout(&out), "0 0\n0 2\n1 1\n1 3\n2 0\n2 2\n3 1\n3 3\n");
    let p = fixture("pointed3.ua");
    let out = uaclose(&["semicong", p.to_str().unwrap(), "--set", "1"]);
    assert_eq!(stdout(&out), "0 0\n1 0\n1 1\n2 2\n");
}

#[test]
fn rank_output() {
    let p = fixture("pointed3.ua");
    let out = uaclose(&["rank", p.to_str().unwrap(), "--mode", "ded"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "rank ded 1 (per-algebra)\nwitness {1}\nchain {1} ⊂ {0,1} ⊂ {0,1}\n"
    );
    let out = uaclose(&["rank", p.to_str().unwrap(), "--mode", "ind"]);
    assert!(stdout(&out).starts_with("rank ind 0 (per-algebra)\n"));
}

#[test]
fn verify_passing_suite() {
    let out = uaclose(&["verify", "--suite", "theorem-a", "--limit", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let fields: Vec<&str> = text.trim().split(' ').collect();
    assert_eq!(fields[0], "PASS");
    assert_eq!(fields[1], "theorem-a");
    assert!(fields[2].parse::<usize>().unwrap() > 0);
    assert_eq!(fields[3], "0");
}

#[test]
fn verify_failing_suite_exits_one() {
    // The converse of the subalgebra containment has counterexamples.
    let out = uaclose(&["verify", "--suite", "theorem-b", "--limit", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("FAIL theorem-b "));
    assert!(text.contains("algebra=z2-monoid top=0 set={1}"));
}

#[test]
fn verify_with_user_algebra() {
    let out = uaclose(&["verify", "--suite", "theorem-a", "--limit", "2", "--algebra", &z4()]);
    assert_eq!(out.status.code(), Some(0));
    let out = uaclose(&["verify", "--suite", "semiring", "--limit", "2", "--algebra", &z4()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn chain_output() {
    let out = uaclose(&["chain", "--primes", "2,3,5,7", "--depth", "2"]);
    assert_eq!(
        stdout(&out),
        "stage 0 {2,6,15,35}\nstage 1 {1,2,3,6,15,35}\nstage 2 {1,2,3,5,6,15,35}\n"
    );
    let out = uaclose(&["chain", "--primes", "2,4", "--depth", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_round_trips_through_commands() {
    let out = uaclose(&["catalog", "z4-ring"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ring.ua");
    std::fs::write(&path, &out.stdout).unwrap();
    let out = uaclose(&["ind", path.to_str().unwrap(), "--set", "2", "--fixpoint"]);
    assert_eq!(stdout(&out).lines().next(), Some("{0,2}"));
}

#[test]
fn input_errors_exit_two() {
    let out = uaclose(&["ind", "missing.ua", "--set", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.ua"));
    assert!(out.stdout.is_empty());

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ua");
    std::fs::write(&bad, "algebra z2\nsize 2\nop add 2\n0 1\n1 2\nend\n").unwrap();
    let out = uaclose(&["ind", bad.to_str().unwrap(), "--set", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("5:3"));

    let no_top = dir.path().join("no_top.ua");
    std::fs::write(&no_top, "algebra s\nsize 2\nend\n").unwrap();
    assert_eq!(
        uaclose(&["ind", no_top.to_str().unwrap(), "--set", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        uaclose(&["ind", no_top.to_str().unwrap(), "--set", "1", "--top", "0"])
            .status
            .code(),
        Some(0)
    );

    assert_eq!(uaclose(&["ind", &z4(), "--set", "9"]).status.code(), Some(2));
    assert_eq!(
        uaclose(&["ind", &z4(), "--set", "1", "--top", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(uaclose(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        uaclose(&["ind", &z4(), "--set", "1", "--steps", "2", "--fixpoint"])
            .status
            .code(),
        Some(2)
    );
}
