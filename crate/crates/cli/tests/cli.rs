use std::path::Path;
use std::process::{Command, Output};

use burnkit::gadgets::make_c;
use burnkit::io::{read_graph, write_dot, write_graph};
use burnkit::solvers::burning_number_exact;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burnkit"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix('\t'))
        .unwrap_or_else(|| panic!("no `{key}` in\n{report}"))
}

#[test]
fn gen_gadget_and_solve_match_library() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["gen-gadget", "C", "4", "-o", "c4.g", "-l", "c4.lm"],
    );
    assert!(o.status.success());
    assert_eq!(value(&stdout(&o), "vertices"), "23");
    let text = std::fs::read_to_string(dir.path().join("c4.g")).unwrap();
    assert_eq!(text, write_graph(&make_c(4).unwrap().graph));

    let o = run(dir.path(), &["solve-burn", "c4.g", "-o", "c4.seq"]);
    assert!(o.status.success());
    let lib = burning_number_exact(&read_graph(&text).unwrap(), None).unwrap();
    assert_eq!(value(&stdout(&o), "value"), "4");
    assert_eq!(
        std::fs::read_to_string(dir.path().join("c4.seq")).unwrap(),
        lib.witness.to_text()
    );
    let o = run(dir.path(), &["burn", "c4.g", "c4.seq"]);
    assert_eq!(value(&stdout(&o), "outcome"), "complete at step 4");
}

#[test]
fn dot_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p3.g"), "a b\nb c\n").unwrap();
    let o = run(dir.path(), &["dot", "p3.g"]);
    let g = read_graph("a b\nb c\n").unwrap();
    assert_eq!(stdout(&o), write_dot(&g, None));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        run(dir.path(), &["gen-gadget", "T", "1", "-o", "t.g"])
            .status
            .code(),
        Some(2)
    );

    let o = run(
        dir.path(),
        &["gen-gadget", "BTP", "5", "1", "7", "-o", "b.g"],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ParamInequalityViolated"));

    std::fs::write(dir.path().join("p.g"), "a b\nb c\n").unwrap();
    let o = run(dir.path(), &["reduce", "p.g", "-o", "h.g"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotCubic"));

    std::fs::write(dir.path().join("s.seq"), "a\n").unwrap();
    let o = run(dir.path(), &["burn", "p.g", "s.seq"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(value(&stdout(&o), "status"), "error:IncompleteSchedule");

    std::fs::write(dir.path().join("bad.seq"), "b\nc\na\n").unwrap();
    let o = run(dir.path(), &["burn", "p.g", "bad.seq"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("InvalidSequence"));
}

#[test]
fn timings_stay_in_their_section() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["gen-gadget", "K4", "-o", "k4.g", "--timings"]);
    let out = stdout(&o);
    let (head, tail) = out.split_once("[timings]\n").unwrap();
    assert!(!head.contains("_ms"));
    assert!(tail.starts_with("total_ms\t"));
}
