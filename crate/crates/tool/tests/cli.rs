use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn sqwalk(args: &[&str]) -> Run {
    sqwalk_with_stdin(args, "")
}

fn sqwalk_with_stdin(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sqwalk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn graph_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const P4: &str = "n=4\n0 1\n1 2\n2 3\n";
const C4: &str = "# four-cycle\nn=4\n0 1\n1 2\n2 3\n3 0\n";

#[test]
fn generate_golden() {
    let cases = [
        ("thue", 27, "012021012102012021020121012"),
        ("tournament5", 7, "0123014"),
        ("c4-uniform", 12, "010301210323"),
        ("claw", 6, "102030"),
        ("p5", 8, "21012321"),
    ];
    for (stream, n, expected) in cases {
        let r = sqwalk(&["generate", stream, "--length", &n.to_string()]);
        assert_eq!(r.code, 0, "{stream}: {}", r.stderr);
        assert_eq!(r.stdout, format!("{expected}\n"), "{stream}");
    }
    let r = sqwalk(&["generate", "p5", "--length", "0"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "\n"));
}

#[test]
fn generate_claw_on_another_graph() {
    let star = graph_file("n=5\n3 0\n3 1\n3 2\n3 4\n0 4\n");
    let path = star.path().to_str().unwrap();
    let r = sqwalk(&[
        "generate", "claw", "--length", "6", "--graph", path, "--hub", "3",
    ]);
    assert_eq!(r.stdout, "031323\n");
    // Default hub is the first vertex of degree at least 3.
    assert_eq!(
        sqwalk(&["generate", "claw", "--length", "6", "--graph", path]).stdout,
        "031323\n"
    );
    assert_eq!(
        sqwalk(&["generate", "claw", "--length", "6", "--graph", path, "--hub", "0"]).code,
        2
    );
    assert_eq!(
        sqwalk(&["generate", "claw", "--length", "6", "--graph", "p4"]).code,
        2
    );
}

#[test]
fn generate_errors() {
    assert_eq!(sqwalk(&["generate", "fibonacci", "--length", "3"]).code, 2);
    assert_eq!(sqwalk(&["generate", "cycle:2", "--length", "3"]).code, 2);
    assert_eq!(sqwalk(&["generate", "cycle:x", "--length", "3"]).code, 2);
    assert_eq!(sqwalk(&["generate", "thue"]).code, 2);
    assert_eq!(sqwalk(&["generate", "thue", "--length", "-1"]).code, 2);
    assert_eq!(
        sqwalk(&["generate", "thue", "--length", "3", "--hub", "0"]).code,
        2
    );
}

#[test]
fn check_predicates() {
    let r = sqwalk(&["check", "square-free", "012101232101210"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "ok\n"));
    let r = sqwalk(&["check", "square-free", "0101"]);
    assert_eq!(
        (r.code, r.stdout.as_str()),
        (1, "square (01)^2 at position 0\n")
    );
    let r = sqwalk(&["check", "tournament", "010"]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "both 01 and 10 occur\n"));
    assert_eq!(sqwalk(&["check", "tournament", "0123014"]).code, 0);
    let r = sqwalk(&["check", "g-word", "01213", "--graph", "p4"]);
    assert_eq!(
        (r.code, r.stdout.as_str()),
        (1, "non-edge 13 at position 3\n")
    );
    assert_eq!(
        sqwalk(&["check", "g-word", "0121", "--graph", "p4"]).code,
        0
    );
    let r = sqwalk(&["check", "reduced", "0132"]);
    assert_eq!(
        (r.code, r.stdout.as_str()),
        (1, "cancelling pair 13 at position 1\n")
    );
    assert_eq!(sqwalk(&["check", "reduced", "0123"]).code, 0);
}

#[test]
fn check_reads_stdin_in_either_format() {
    assert_eq!(
        sqwalk_with_stdin(&["check", "square-free"], "0,1,2,0\n").code,
        0
    );
    assert_eq!(
        sqwalk_with_stdin(&["check", "square-free", "-"], "012012\n").code,
        1
    );
    let r = sqwalk_with_stdin(&["check", "square-free"], "0,11,0,11\n");
    assert_eq!(
        (r.code, r.stdout.as_str()),
        (1, "square (0,11)^2 at position 0\n")
    );
}

#[test]
fn check_usage_errors() {
    assert_eq!(sqwalk(&["check", "square-free", "01a"]).code, 2);
    assert_eq!(sqwalk(&["check", "g-word", "0121"]).code, 2);
    assert_eq!(
        sqwalk(&["check", "g-word", "0141", "--graph", "p4"]).code,
        2
    );
    assert_eq!(sqwalk(&["check", "reduced", "0145"]).code, 2);
    assert_eq!(sqwalk(&["check", "palindrome", "0"]).code, 2);
}

#[test]
fn classify_files_and_builtins() {
    let c4 = graph_file(C4);
    let r = sqwalk(&["classify", "--graph", c4.path().to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout.lines().next(),
        Some("exists=true gamma=4 witness=C4")
    );
    let p4 = graph_file(P4);
    let r = sqwalk(&["classify", "--graph", p4.path().to_str().unwrap()]);
    assert!(r.stdout.starts_with("exists=false"));
    let r = sqwalk(&["classify", "--graph", "p5"]);
    assert!(r.stdout.starts_with("exists=true gamma=3 witness=P5\n"));
    let r = sqwalk(&["classify", "--graph", "c3", "--human"]);
    assert!(r.stdout.contains("colour number 3"));
}

#[test]
fn classify_reports_parse_errors() {
    for bad in ["0 1\n", "n=3\n0 3\n", "n=3\n1 1\n", "n=3\n0 1 2\n"] {
        let f = graph_file(bad);
        let r = sqwalk(&["classify", "--graph", f.path().to_str().unwrap()]);
        assert_eq!(r.code, 2, "{bad:?}");
        assert!(r.stderr.starts_with("error: line"), "{}", r.stderr);
    }
    assert_eq!(sqwalk(&["classify", "--graph", "/no/such/file"]).code, 2);
}

#[test]
fn search_golden() {
    let p4 = graph_file(P4);
    let r = sqwalk(&[
        "search",
        "walk",
        "--graph",
        p4.path().to_str().unwrap(),
        "--cap",
        "20",
    ]);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(
        lines[..3],
        [
            "outcome=max_length 15",
            "witness=012101232101210",
            "witness=321232101232123"
        ]
    );
    let r = sqwalk(&["search", "tournament", "--alphabet", "4", "--cap", "30"]);
    assert!(r.stdout.starts_with("outcome=max_length 20\n"));
    assert_eq!(
        r.stdout
            .lines()
            .filter(|l| l.starts_with("witness="))
            .count(),
        24
    );
    assert!(r.stdout.contains("witness=01201320120320132032\n"));
    let r = sqwalk(&["search", "tournament", "--alphabet", "5"]);
    assert!(r.stdout.starts_with("outcome=bound_exceeded 200\n"));
    let c4 = graph_file(C4);
    let r = sqwalk(&[
        "search",
        "gamma-lower",
        "--graph",
        c4.path().to_str().unwrap(),
        "--colours",
        "3",
        "--cap",
        "100",
    ]);
    assert!(r.stdout.ends_with(&format!(
        "verdict=true\n{}\n",
        r.stdout.lines().last().unwrap()
    )));
    let r = sqwalk(&["search", "gamma-lower", "--graph", "p5", "--colours", "2"]);
    assert!(r.stdout.contains("\nverdict=true\n"));
    let r = sqwalk(&["search", "gamma-lower", "--graph", "p5", "--colours", "3"]);
    assert!(r.stdout.contains("\nverdict=false\n"));
}

#[test]
fn search_output_does_not_depend_on_threads() {
    for args in [
        vec!["search", "walk", "--graph", "c5", "--cap", "40"],
        vec!["search", "tournament", "--alphabet", "4", "--cap", "30"],
        vec!["search", "gamma-lower", "--graph", "claw", "--colours", "3"],
    ] {
        let outputs: Vec<String> = ["1", "2", "7"]
            .iter()
            .map(|t| {
                let mut a = args.clone();
                a.extend(["--threads", t]);
                sqwalk(&a).stdout
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn search_usage_errors() {
    assert_eq!(sqwalk(&["search", "walk"]).code, 2);
    assert_eq!(sqwalk(&["search", "tournament"]).code, 2);
    assert_eq!(sqwalk(&["search", "gamma-lower", "--graph", "c4"]).code, 2);
    assert_eq!(
        sqwalk(&["search", "walk", "--graph", "p4", "--cap", "0"]).code,
        2
    );
}

#[test]
fn morphism_actions() {
    let r = sqwalk(&["morphism", "apply", "tau", "012"]);
    assert_eq!(r.stdout, "012021\n");
    assert_eq!(
        sqwalk(&["morphism", "apply", "alpha-t5", "0"]).stdout,
        "0123014\n"
    );
    assert_eq!(
        sqwalk(&["morphism", "crochemore", "alpha-c4-repaired"]).stdout,
        "pass\n"
    );
    let r = sqwalk(&["morphism", "preserve", "alpha-p5", "--max-len", "3"]);
    assert_eq!(r.code, 0);
    assert!(
        r.stdout.starts_with("fail counterexample=010 "),
        "{}",
        r.stdout
    );
    let r = sqwalk(&[
        "morphism",
        "preserve",
        "alpha-p5",
        "--max-len",
        "7",
        "--forbid",
        "010",
        "--forbid",
        "212",
    ]);
    assert!(r.stdout.starts_with("pass words_checked="));
    assert_eq!(
        sqwalk(&["morphism", "align", "alpha-p5", "--letters", "01"]).stdout,
        "pass\n"
    );
    assert!(sqwalk(&["morphism", "align", "alpha-p5", "--letters", "2"])
        .stdout
        .starts_with("fail letter=2 "));
}

#[test]
fn morphism_printed_data_is_reported_honestly() {
    // The printed uniform C4 morphism maps 012 onto a word with a square.
    let r = sqwalk(&["morphism", "crochemore", "alpha-c4"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("fail counterexample=012 "));
    // Forbidding 010 alone is not enough at length 5.
    let r = sqwalk(&[
        "morphism",
        "preserve",
        "alpha-p5",
        "--max-len",
        "5",
        "--forbid",
        "010",
    ]);
    assert!(r.stdout.starts_with("fail counterexample=02120 "));
}

#[test]
fn morphism_from_file() {
    let f = graph_file("0 -> 012\n1 -> 02\n2 -> 1\n");
    let path = f.path().to_str().unwrap();
    assert_eq!(sqwalk(&["morphism", "apply", path, "0"]).stdout, "012\n");
    assert_eq!(
        sqwalk_with_stdin(&["morphism", "apply", path], "1,2\n").stdout,
        "021\n"
    );
    let bad = graph_file("0 => 1\n");
    assert_eq!(
        sqwalk(&["morphism", "apply", bad.path().to_str().unwrap(), "0"]).code,
        2
    );
    assert_eq!(sqwalk(&["morphism", "crochemore", "tau"]).code, 2);
    assert_eq!(sqwalk(&["morphism", "apply", "nope", "0"]).code, 2);
}

#[test]
fn help_lists_builtins() {
    let r = sqwalk(&["--help"]);
    assert_eq!(r.code, 0);
    for name in [
        "p4",
        "claw",
        "alpha-p5",
        "alpha-c4",
        "tournament5",
        "cycle:<n>",
        "dean",
    ] {
        assert!(r.stdout.contains(name), "{name}");
    }
    assert_eq!(sqwalk(&[]).code, 2);
}

#[test]
fn every_output_ends_with_one_newline() {
    let runs = [
        sqwalk(&["generate", "dean", "--length", "30"]),
        sqwalk(&["check", "square-free", "0101"]),
        sqwalk(&["classify", "--graph", "claw", "--human"]),
        sqwalk(&["search", "walk", "--graph", "p3"]),
        sqwalk(&["morphism", "align", "alpha-p5"]),
    ];
    for r in runs {
        assert!(
            r.stdout.ends_with('\n') && !r.stdout.ends_with("\n\n"),
            "{:?}",
            r.stdout
        );
    }
}

type Checks = &'static [(&'static str, Option<&'static str>)];

#[test]
fn generated_streams_pass_their_checks() {
    let cases: [(&str, Checks); 8] = [
        ("thue", &[("square-free", None), ("g-word", Some("c3"))]),
        ("p5", &[("square-free", None), ("g-word", Some("p5"))]),
        (
            "cycle:4",
            &[
                ("square-free", None),
                ("g-word", Some("c4")),
                ("reduced", None),
            ],
        ),
        ("cycle:6", &[("square-free", None), ("g-word", Some("c6"))]),
        (
            "c4-uniform",
            &[("square-free", None), ("g-word", Some("c4"))],
        ),
        ("claw", &[("square-free", None), ("g-word", Some("claw"))]),
        (
            "tournament5",
            &[("square-free", None), ("tournament", None)],
        ),
        ("dean", &[("square-free", None), ("reduced", None)]),
    ];
    for (stream, checks) in cases {
        let word = sqwalk(&["generate", stream, "--length", "3000"]).stdout;
        for &(predicate, graph) in checks {
            let mut args = vec!["check", predicate];
            if let Some(g) = graph {
                args.extend(["--graph", g]);
            }
            let r = sqwalk_with_stdin(&args, &word);
            assert_eq!(r.code, 0, "{stream} {predicate}: {}", r.stdout);
        }
    }
}
