use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const LAMBDA: &str = "7,6,5,5,3,3,2,2,0|1,2,3,4,4,5,7,7";
const MU: &str = "7,4,4,4,2,1,1,1,0|1,1,1,2,4,4,4,7";

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

fn golden_path(name: &str) -> String {
    format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    run_with_stdin(args, None)
}

fn run_with_stdin(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_superalg"))
        .args(args)
        .env_remove("SUPERALG_CACHE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(s) = stdin {
        pipe.write_all(s.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn invariants_json() {
    let out = stdout(&["invariants", LAMBDA]);
    assert_eq!(out, golden("invariants.json"));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["adeg"], 4);
    assert_eq!(v["atyp"], serde_json::json!([4, 8, 11, 14]));
    assert_eq!(v["height"], serde_json::json!([1, 1, 2, 3]));
    assert_eq!(
        v["typ"],
        serde_json::json!([[16, 12, 7, 5, 1], [2, 6, 9, 15]])
    );
    assert_eq!(
        v["atypical_roots"],
        serde_json::json!([[8, 11], [5, 13], [4, 15], [2, 16]])
    );
}

#[test]
fn invariants_pretty() {
    let out = stdout(&["invariants", "--format", "pretty", LAMBDA]);
    assert_eq!(out, golden("invariants.txt"));
    let matrix = "\
[ 14  12  10   8   7   5   2   1]
[ 12  10   8   6   5   3   0  -1]
[ 10   8   6   4   3   1  -2  -3]
[  9   7   5   3   2   0  -3  -4]
[  6   4   2   0  -1  -3  -6  -7]
[  5   3   1  -1  -2  -4  -7  -8]
[  3   1  -1  -3  -4  -6  -9 -10]
[  2   0  -2  -4  -5  -7 -10 -11]
[ -1  -3  -5  -7  -8 -10 -13 -14]
";
    assert!(out.contains(matrix));
    assert!(
        out.starts_with("gl(9|8) weight (7, 6, 5, 5, 3, 3, 2, 2, 0 | 1, 2, 3, 4, 4, 5, 7, 7)\n")
    );
    assert!(out.contains(
        "rho: gl(9|8) weight (16, 14, 12, 11, 8, 7, 5, 4, 1 | 2, 4, 6, 8, 9, 11, 14, 15)\n"
    ));
}

#[test]
fn kl_pretty() {
    assert_eq!(stdout(&["kl", LAMBDA, MU]), golden("kl.txt"));
    assert_eq!(
        stdout(&["kl", "--format", "latex", LAMBDA, MU]),
        "K_{\\lambda,\\mu}(q) = q^{3} + q^{5}\n"
    );
}

#[test]
fn kl_json() {
    assert_eq!(
        stdout(&["kl", "--format", "json", LAMBDA, MU]),
        "{\"at_minus_one\":-2,\"polynomial\":\"q^3 + q^5\",\"terms\":[{\"coeff\":1,\"exp\":3},{\"coeff\":1,\"exp\":5}]}\n"
    );
}

#[test]
fn mult_reports_both_directions() {
    let out = stdout(&["mult", "--format", "json", LAMBDA, MU]);
    assert_eq!(out, "{\"irr_in_kac\":0,\"kac_in_irr\":-2}\n");
    let zero = "0,0|0,0";
    let out = stdout(&["mult", "--format", "json", zero, "0,-1|-1,0"]);
    assert_eq!(out, "{\"irr_in_kac\":1,\"kac_in_irr\":-1}\n");
}

#[test]
fn factors_match_transcripts() {
    assert_eq!(
        stdout(&["factors", "--format", "pretty", "2,1,1,0,0|0,0,1,3,3,4"]),
        golden("factors.txt")
    );
    assert_eq!(
        stdout(&[
            "factors",
            "--format",
            "pretty",
            "--rho",
            "8,5,5,3,3,2,2|2,3,4,4,5,9"
        ]),
        golden("factors_rho.txt")
    );
}

#[test]
fn factors_json_and_slack() {
    let out = stdout(&["factors", "2,1,1,0,0|0,0,1,3,3,4"]);
    let v: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(v.len(), 19);
    assert_eq!(
        v[0],
        serde_json::json!({"L": [2, 1, 1, 0, 0], "R": [0, 0, 1, 3, 3, 4]})
    );
    assert_eq!(
        stdout(&["factors", "--slack", "6", "2,1,1,0,0|0,0,1,3,3,4"]),
        out
    );
}

#[test]
fn diagram_text_and_window() {
    assert_eq!(stdout(&["diagram", LAMBDA]), golden("diagram.txt"));
    let narrow = stdout(&["diagram", "--window", "-1:2", "0|0"]);
    assert_eq!(narrow.lines().next().unwrap(), "∅ ∅ ▼ ▲");
}

#[test]
fn diagram_svg_parses() {
    let out = stdout(&["diagram", "--format", "svg", LAMBDA]);
    let doc = roxmltree::Document::parse(&out).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.svg");
    let quiet = stdout(&[
        "diagram",
        "--format",
        "svg",
        "-o",
        path.to_str().unwrap(),
        LAMBDA,
    ]);
    assert!(quiet.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), out);
}

#[test]
fn input_sources_agree() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("w.txt");
    let json = dir.path().join("w.json");
    std::fs::write(&text, format!("{LAMBDA}\n")).unwrap();
    std::fs::write(
        &json,
        r#"{"L": [7,6,5,5,3,3,2,2,0], "R": [1,2,3,4,4,5,7,7]}"#,
    )
    .unwrap();
    let expected = golden("invariants.json");
    assert_eq!(
        stdout(&["invariants", &format!("@{}", text.display())]),
        expected
    );
    assert_eq!(
        stdout(&["invariants", &format!("@{}", json.display())]),
        expected
    );
    let piped = run_with_stdin(&["invariants", "-"], Some(LAMBDA));
    assert_eq!(String::from_utf8(piped.stdout).unwrap(), expected);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["invariants", LAMBDA]), 0);
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["invariants", "1,x|0"]), 2);
    assert_eq!(code(&["kl", "--format", "svg", LAMBDA, MU]), 2);
    assert_eq!(code(&["diagram", "--window", "3:1", LAMBDA]), 2);
    assert_eq!(code(&["decompose", "not json"]), 2);
    assert_eq!(code(&["cache-info"]), 2);
    assert_eq!(code(&["invariants", "0,1|0"]), 3);
    assert_eq!(code(&["kl", "0|0", "0,0|0,0"]), 3);
    assert_eq!(
        code(&["decompose", r#"[{"weight":{"L":[0,1],"R":[0]},"mult":1}]"#]),
        3
    );
    assert_eq!(
        code(&[
            "decompose",
            "--max-iterations",
            "0",
            r#"[{"weight":{"L":[0],"R":[0]},"mult":1}]"#
        ]),
        4
    );
    assert_eq!(code(&["invariants", "@/nonexistent/weight"]), 1);
    let err = run(&["invariants", "0,1|0"]);
    assert!(err.stdout.is_empty());
    assert!(!err.stderr.is_empty());
}

#[test]
fn decompose_kac_module_with_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let cache = cache.to_str().unwrap();
    let module =
        r#"[{"weight":{"L":[0],"R":[0]},"mult":1},{"weight":{"L":[-1],"R":[-1]},"mult":1}]"#;
    let cold = stdout(&["decompose", "--cache", cache, module]);
    assert_eq!(
        cold,
        "[{\"mult\":1,\"weight\":{\"L\":[-1],\"R\":[-1]}},{\"mult\":1,\"weight\":{\"L\":[0],\"R\":[0]}}]\n"
    );
    let info: serde_json::Value = serde_json::from_str(&stdout(&[
        "cache-info",
        "--format",
        "json",
        "--cache",
        cache,
    ]))
    .unwrap();
    assert_eq!(info["exists"], true);
    assert_eq!(info["version"], 1);
    assert!(info["irreducible"].as_u64().unwrap() >= 2);
    assert_eq!(stdout(&["decompose", "--cache", cache, module]), cold);
    assert_eq!(
        stdout(&["decompose", "--format", "pretty", module]),
        "{gl(1|1) weight (-1 | -1): 1, gl(1|1) weight ( 0 |  0): 1}\n"
    );
}

#[test]
fn decompose_transcript() {
    let module = format!("@{}", golden_path("module_gl66.json"));
    assert_eq!(
        stdout(&["decompose", "--format", "pretty", &module]),
        golden("decompose_gl66.txt")
    );
}
