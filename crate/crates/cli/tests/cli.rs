use std::fs;
use std::process::{Command, Output};

fn melograph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_melograph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn tables_are_written_and_stable() {
    let dir = tempfile::tempdir().unwrap();
    let (one, two) = (dir.path().join("one"), dir.path().join("two"));
    for d in [&one, &two] {
        let o = melograph(&["tables", "--out", d.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let names: Vec<String> = {
        let mut v: Vec<String> = fs::read_dir(&one)
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        v.sort();
        v
    };
    assert_eq!(names.len(), 11);
    for n in &names {
        assert_eq!(
            fs::read(one.join(n)).unwrap(),
            fs::read(two.join(n)).unwrap(),
            "{n}"
        );
    }
    let census = fs::read_to_string(one.join("table06.csv")).unwrap();
    assert!(census.contains("262,457,1"));
    let tie = fs::read_to_string(one.join("table04.csv")).unwrap();
    assert_eq!(tie.matches("0.64384").count(), 2);
}

#[test]
fn tdfd_prints_each_transposition() {
    let o = melograph(&["tdfd", "@examples", "a2", "b2", "--window", "-5..1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    for row in ["-5,8.944", "-2,5.099", "0,7.280", "1,8.544"] {
        assert!(out.lines().any(|l| l == row), "missing {row} in\n{out}");
    }
    assert!(out.contains("# minimum t=-2 distance=5.099"));
}

#[test]
fn slopes_of_bundled_anthems() {
    let o = melograph(&["slope", "@anthems"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for (name, s) in [
        ("Austria", "0.460"),
        ("Israel", "0.743"),
        ("New Zealand", "-0.197"),
    ] {
        let line = out
            .lines()
            .find(|l| l.starts_with(&format!("{name}\t")))
            .unwrap();
        assert_eq!(line.split('\t').nth(3), Some(s), "{line}");
    }
}

#[test]
fn symmetry_and_dot() {
    let o = melograph(&["symmetry", "@rows"]);
    assert!(stdout(&o).contains("Schoenberg\t(1,0,4,5,9,8,3,2,6,7,11,10)\ttrue"));
    let o = melograph(&["graph", "@rows", "--dot", "--axis", "--name", "Schoenberg"]);
    let out = stdout(&o);
    assert!(out.starts_with("digraph \"Schoenberg\""));
    assert!(out.contains("y = -x + 11"));
}

#[test]
fn dfd_and_enumerate() {
    let o = melograph(&["dfd", "@examples", "a1", "b1"]);
    let out = stdout(&o);
    assert!(out.contains("distance\t2.000"), "{out}");
    assert!(out.contains("squared\t4"));
    let o = melograph(&["enumerate", "--first", "0", "--set", "2,4,5,7,9,11"]);
    assert!(stdout(&o).ends_with("positive,negative,zero\n262,457,1\n"));
}

#[test]
fn cluster_trace_on_user_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.jsonl");
    fs::write(
        &path,
        "{\"name\": \"x\", \"pitches\": [0, 2, 4, 5, 7]}\n\
         {\"name\": \"y\", \"pitches\": [2, 4, 6, 7, 9]}\n\
         {\"name\": \"z\", \"pitches\": [0, 7, 2, 5, 4]}\n",
    )
    .unwrap();
    let o = melograph(&["cluster", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("1,0.000,x,y"));
}

fn assert_single_line_error(o: &Output, code: i32) {
    assert_eq!(o.status.code(), Some(code), "{}", stderr(o));
    let err = stderr(o);
    assert!(err.starts_with("error"), "{err}");
    assert_eq!(err.trim_end().lines().count(), 1, "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_single_line_error(&melograph(&["dfd", "@examples", "a1", "nobody"]), 2);
    assert_single_line_error(&melograph(&["slope", "@missing"]), 2);
    let o = melograph(&["tdfd", "@examples", "a2", "b2", "--window", "3..-3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = melograph(&["tdfd", "@examples", "a2", "b2", "--window", "five"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn data_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.jsonl");
    fs::write(&path, "{\"name\": \"x\", \"pitches\": [0, 2]}\n{oops\n").unwrap();
    let p = path.to_str().unwrap();
    let o = melograph(&["slope", p, "--fail-fast"]);
    assert_single_line_error(&o, 3);
    assert!(stderr(&o).contains("line 2"));

    let o = melograph(&["slope", p]);
    assert!(o.status.success());
    assert!(stderr(&o).starts_with("warning"));
    assert!(stdout(&o).contains("x\t(0,2)\tundefined"));

    assert_single_line_error(&melograph(&["slope", "/nonexistent.jsonl"]), 3);
}
