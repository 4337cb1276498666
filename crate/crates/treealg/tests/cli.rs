//! End-to-end tests of the `treealg` binary: exact output bytes and exit
//! codes for every command.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn treealg(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_treealg"));
    cmd.args(args);
    cmd.stdout(Stdio::piped());
    cmd.stderr(Stdio::piped());
    match stdin {
        Some(input) => {
            cmd.stdin(Stdio::piped());
            let mut child = cmd.spawn().expect("spawn treealg");
            child
                .stdin
                .as_mut()
                .expect("stdin piped")
                .write_all(input.as_bytes())
                .expect("write stdin");
            child.wait_with_output().expect("collect output")
        }
        None => {
            cmd.stdin(Stdio::null());
            cmd.output().expect("run treealg")
        }
    }
}

fn stdout_line(output: &Output) -> String {
    String::from_utf8(output.stdout.clone())
        .expect("utf8 stdout")
        .trim_end()
        .to_string()
}

const X1_STAR_C_TABLE: &str = r#"{"alphabet":"abc","arity":1,"entries":[
    {"args":["a"],"value":["0a","1c"]},
    {"args":["b"],"value":["0b","1c"]},
    {"args":["c"],"value":["0c","1c"]}
]}"#;

#[test]
fn synth_reconstructs_the_polynomial() {
    let out = treealg(&["synth"], Some(X1_STAR_C_TABLE));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_line(&out), r#"{"arity":1,"body":["0x1","1c"]}"#);
}

#[test]
fn check_wcp_reports_the_witness() {
    let table = r#"{"alphabet":"abc","arity":1,"entries":[
        {"args":["a"],"value":["a"]},
        {"args":["b"],"value":["b"]},
        {"args":["c"],"value":["a"]}
    ]}"#;
    let out = treealg(&["check-wcp"], Some(table));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout_line(&out),
        r#"{"error":"NOT_WCP","witness":{"args":["c"],"position":1,"letter":"b"}}"#
    );

    let ok = treealg(&["check-wcp"], Some(X1_STAR_C_TABLE));
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout_line(&ok), r#"{"wcp":true}"#);
}

#[test]
fn decompose_accepts_bare_word_arrays() {
    let out = treealg(&["decompose"], Some(r#"["a"]"#));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_line(&out), r#"{"error":"DECOMPOSITION_UNDEFINED"}"#);

    let out = treealg(&["decompose"], Some(r#"{"alphabet":"abc","tree":["00b","1a"]}"#));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_line(&out),
        r#"{"alphabet":"abc","left":["0b"],"right":["a"]}"#
    );
}

#[test]
fn eval_applies_the_polynomial() {
    let input = r#"{"polynomial":{"arity":1,"body":["0x1","1c"]},"args":[["a"]]}"#;
    let out = treealg(&["eval"], Some(input));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_line(&out), r#"{"alphabet":"abc","tree":["0a","1c"]}"#);

    // Erasing arguments collapse: (x1 ⋆ x1)(0) = 0.
    let collapse = r#"{"polynomial":{"arity":1,"body":["0x1","1x1"]},"args":[[]]}"#;
    let out = treealg(&["eval"], Some(collapse));
    assert_eq!(stdout_line(&out), r#"{"alphabet":"abc","tree":[]}"#);

    let mismatch = r#"{"polynomial":{"arity":2,"body":["0x1","1x2"]},"args":[["a"]]}"#;
    let out = treealg(&["eval"], Some(mismatch));
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_line(&out).contains("ARITY_MISMATCH"));
}

#[test]
fn graft_replaces_the_letter() {
    let input = r#"{"letter":"a","tau":["0c","1c"],"tree":["00b","1a"]}"#;
    let out = treealg(&["graft"], Some(input));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_line(&out),
        r#"{"alphabet":"abc","tree":["00b","10c","11c"]}"#
    );
}

#[test]
fn classify_identifies_shapes() {
    let projection = r#"{"alphabet":"abc","arity":1,"entries":[
        {"args":["a"],"value":["a"]},
        {"args":["b"],"value":["b"]},
        {"args":["c"],"value":["c"]}
    ]}"#;
    let out = treealg(&["classify"], Some(projection));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_line(&out), r#"{"classification":"projection","index":1}"#);

    let constant = r#"{"alphabet":"abc","arity":1,"entries":[
        {"args":["a"],"value":["b"]},
        {"args":["b"],"value":["b"]},
        {"args":["c"],"value":["b"]}
    ]}"#;
    let out = treealg(&["classify"], Some(constant));
    assert_eq!(
        stdout_line(&out),
        r#"{"classification":"constant","value":["b"]}"#
    );

    let not_wcp = r#"{"alphabet":"abc","arity":1,"entries":[
        {"args":["a"],"value":["a"]},
        {"args":["b"],"value":["b"]},
        {"args":["c"],"value":["a"]}
    ]}"#;
    let out = treealg(&["classify"], Some(not_wcp));
    assert_eq!(stdout_line(&out), r#"{"classification":"not-wcp"}"#);

    let small = r#"{"alphabet":"ab","arity":1,"entries":[
        {"args":["a"],"value":["a"]},
        {"args":["b"],"value":["b"]}
    ]}"#;
    let out = treealg(&["classify"], Some(small));
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_line(&out).contains("ALPHABET_TOO_SMALL"));
}

#[test]
fn similar_compares_skeletons() {
    let out = treealg(
        &["similar"],
        Some(r#"{"t1":["00b","10c","11c"],"t2":["00a","10b","11c"]}"#),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_line(&out), r#"{"similar":true}"#);

    // The d leaf is outside the default alphabet.
    let out = treealg(
        &["similar"],
        Some(r#"{"t1":["00b","01c","11d"],"t2":["00a","10b","11c"]}"#),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_line(&out).contains("INVALID_WORD_SET"));

    let out = treealg(
        &["similar", "--alphabet", "abcd"],
        Some(r#"{"t1":["00b","01c","11d"],"t2":["00a","10b","11c"]}"#),
    );
    assert_eq!(stdout_line(&out), r#"{"similar":false}"#);

    let out = treealg(
        &["similar"],
        Some(r#"{"alphabet":"abcd","t1":["00b","01c","11d"],"t2":["00b","01c","11d"]}"#),
    );
    assert_eq!(stdout_line(&out), r#"{"similar":true}"#);
}

#[test]
fn enum_trees_lists_the_universe() {
    let out = treealg(&["enum-trees", "--max-size", "1"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_line(&out),
        r#"{"alphabet":"abc","max_size":1,"count":4,"trees":[[],["a"],["b"],["c"]]}"#
    );
}

#[test]
fn verify_single_proposition_reports_pass() {
    let out = treealg(
        &[
            "verify",
            "--proposition",
            "unique-decomposition",
            "--max-size",
            "4",
            "--jobs",
            "1",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    assert_eq!(report["result"], "PASS");
    assert_eq!(report["instances"], 109);

    let unknown = treealg(&["verify", "--proposition", "flat-earth"], None);
    assert_eq!(unknown.status.code(), Some(1));
    assert!(stdout_line(&unknown).contains("UNKNOWN_PROPOSITION"));
}

#[test]
fn verify_output_is_seed_deterministic() {
    let args = [
        "verify",
        "--proposition",
        "similarity-lemma",
        "--seed",
        "7",
        "--max-size",
        "2",
    ];
    let first = treealg(&args, None);
    let second = treealg(&args, None);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout_line(&first), stdout_line(&second));

    // Different thread counts must not change the bytes either.
    let mut jobs2: Vec<&str> = args.to_vec();
    jobs2.extend_from_slice(&["--jobs", "2"]);
    let third = treealg(&jobs2, None);
    assert_eq!(stdout_line(&first), stdout_line(&third));
}

#[test]
fn malformed_input_exits_two() {
    let out = treealg(&["decompose"], Some("not json"));
    assert_eq!(out.status.code(), Some(2));
    let value: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    assert_eq!(value["error"], "MALFORMED_INPUT");

    // Non-total tables are domain errors with a stable code.
    let partial = r#"{"alphabet":"abc","arity":1,"entries":[{"args":["a"],"value":["a"]}]}"#;
    let out = treealg(&["synth"], Some(partial));
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_line(&out).contains("INVALID_TABLE"));
}

#[test]
fn input_file_flag_replaces_stdin() {
    let dir = std::env::temp_dir();
    let path = dir.join("treealg-cli-test-input.json");
    std::fs::write(&path, r#"{"alphabet":"abc","tree":["0a","1b"]}"#).unwrap();
    let out = treealg(&["decompose", "--in", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_line(&out),
        r#"{"alphabet":"abc","left":["a"],"right":["b"]}"#
    );
    std::fs::remove_file(&path).ok();
}

#[test]
fn invalid_word_sets_are_domain_errors() {
    let out = treealg(&["decompose"], Some(r#"["0a","01b"]"#));
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_line(&out).contains("INVALID_WORD_SET"));
}
