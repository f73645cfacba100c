use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const P5: &str = "0 1\n1 2\n2 3\n3 4\n";
const T233: &str = "0 1\n0 2\n0 3\n1 4\n1 5\n2 6\n2 7\n2 8\n3 9\n3 10\n3 11\n";

fn starcolor(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_starcolor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("starcolor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn index_of(tree: &str) -> String {
    let out = starcolor(&["index", "--input", "-"], Some(tree));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    stdout(&out).lines().next().unwrap().to_string()
}

#[test]
fn index_examples() {
    assert_eq!(index_of(P5), "index 3");
    let star: String = (1..=7).map(|v| format!("0 {v}\n")).collect();
    assert_eq!(index_of(&star), "index 7");
    assert_eq!(index_of(T233), "index 5");
    assert_eq!(index_of("4\n"), "index 0");
}

#[test]
fn index_json_lists_every_vertex() {
    let out = starcolor(&["index", "--input", "-", "--format", "json"], Some(T233));
    let value: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["index"], 5);
    let vertices = value["vertices"].as_array().unwrap();
    assert_eq!(vertices.len(), 12);
    assert_eq!(vertices[0]["profile"], serde_json::json!([2, 3, 3]));
    assert_eq!(vertices[0]["exact"], 5);
}

#[test]
fn bounds_examples() {
    for (profile, expected) in [("2,3,3", (5, 5)), ("0,0,0", (3, 3)), ("1,1", (3, 3)), ("3,2,3", (5, 5))] {
        let out = starcolor(&["bounds", "--profile", profile, "--format", "json"], None);
        assert!(out.status.success());
        let value: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!((value["lower"].as_u64().unwrap(), value["upper"].as_u64().unwrap()), (expected.0, expected.1));
    }
    let out = starcolor(&["bounds", "--profile", "2,x"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn single_edge_coloring() {
    let out = starcolor(&["color", "--input", "-"], Some("0 1\n"));
    let value: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["edges"], serde_json::json!({"0-1": 1}));
    assert_eq!(value["palette"], 1);
}

#[test]
fn color_then_validate_round_trip() {
    for (name, tree) in [("p5", P5), ("t233", T233), ("labels", "10 30\n30 20\n30 40\n40 50\n50 60\n")] {
        let out = starcolor(&["color", "--input", "-"], Some(tree));
        assert!(out.status.success());
        let tree_path = temp_file(&format!("{name}.txt"), tree);
        let coloring_path = temp_file(&format!("{name}.json"), &stdout(&out));
        let check = starcolor(
            &["validate", "--input", tree_path.to_str().unwrap(), "--coloring", coloring_path.to_str().unwrap()],
            None,
        );
        assert_eq!(check.status.code(), Some(0), "{name}");
        assert_eq!(stdout(&check), "valid\n");
    }
}

#[test]
fn generated_trees_round_trip() {
    for seed in 0..20 {
        let tree = stdout(&starcolor(&["gen", "random", "--n", "60", "--seed", &seed.to_string()], None));
        let coloring = stdout(&starcolor(&["color", "--input", "-"], Some(&tree)));
        let tree_path = temp_file(&format!("random{seed}.txt"), &tree);
        let coloring_path = temp_file(&format!("random{seed}.json"), &coloring);
        let check = starcolor(
            &["validate", "--input", tree_path.to_str().unwrap(), "--coloring", coloring_path.to_str().unwrap()],
            None,
        );
        assert_eq!(check.status.code(), Some(0));
    }
}

#[test]
fn bicolored_path_is_rejected() {
    let tree = temp_file("p5-bad.txt", P5);
    let coloring = temp_file("p5-bad.json", r#"{"palette":2,"edges":{"0-1":1,"1-2":2,"2-3":1,"3-4":2}}"#);
    let out = starcolor(
        &["validate", "--input", tree.to_str().unwrap(), "--coloring", coloring.to_str().unwrap(), "--format", "json"],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    let value: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["valid"], false);
    assert_eq!(value["violation"]["kind"], "bi-colored-p4");
    assert_eq!(value["violation"]["witness"], serde_json::json!([0, 1, 2, 3, 4]));
}

#[test]
fn mismatched_files_are_input_errors() {
    let tree = temp_file("p5-mismatch.txt", P5);
    let coloring = temp_file("p5-mismatch.json", r#"{"palette":1,"edges":{"0-1":1}}"#);
    let out = starcolor(&["validate", "--input", tree.to_str().unwrap(), "--coloring", coloring.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not match"));
}

#[test]
fn parse_errors_report_lines() {
    let out = starcolor(&["index", "--input", "-"], Some("0 1\n# ok\n1 two\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn generator_output_is_deterministic() {
    let args = ["gen", "random", "--n", "50", "--seed", "7"];
    let first = starcolor(&args, None);
    assert_eq!(first.stdout, starcolor(&args, None).stdout);
    assert_eq!(stdout(&first).lines().count(), 49);
    let other = starcolor(&["gen", "random", "--n", "50", "--seed", "8"], None);
    assert_ne!(first.stdout, other.stdout);
    let cat = ["gen", "caterpillar", "--n", "30", "--seed", "1"];
    assert_eq!(starcolor(&cat, None).stdout, starcolor(&cat, None).stdout);
}

#[test]
fn structured_generators() {
    let regular = stdout(&starcolor(&["gen", "regular2h", "--r", "3", "--t", "3"], None));
    assert_eq!(regular.lines().count(), 9);
    let profile = stdout(&starcolor(&["gen", "profile", "--profile", "2,3,3"], None));
    assert_eq!(profile, T233);
    assert_eq!(starcolor(&["gen", "regular2h", "--r", "3"], None).status.code(), Some(2));
}

#[test]
fn dot_output_labels_colors() {
    let out = starcolor(&["color", "--input", "-", "--format", "dot"], Some(T233));
    let dot = stdout(&out);
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.matches(" -- ").count(), 11);
    let colors: std::collections::BTreeSet<&str> =
        dot.lines().filter_map(|l| l.split("label=\"").nth(1)).map(|s| s.trim_end_matches("\"];")).collect();
    assert_eq!(colors.len(), 5);
    assert_eq!(dot.matches("subgraph level_").count(), 3);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("starcolor-out-{}.txt", std::process::id()));
    let out = starcolor(&["gen", "profile", "--profile", "1,1", "--output", path.to_str().unwrap()], None);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "0 1\n0 2\n1 3\n2 4\n");
}

#[test]
fn selftest_guards_oracle_size() {
    let out = starcolor(&["selftest", "--max-n", "20", "--random-trees", "200", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(2));
    let value: Value = serde_json::from_slice(&out.stdout).unwrap();
    for check in value.as_array().unwrap() {
        let expected = match check["check"].as_str().unwrap() {
            "oracle-equivalence" | "caterpillar-oracle" => "TOO-LARGE",
            _ => "PASS",
        };
        assert_eq!(check["status"], expected, "{check}");
    }
}

#[test]
fn bench_table() {
    let out = starcolor(&["bench", "--sizes", "100,1000"], None);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().nth(2).unwrap().starts_with("1000 "));
    let empty = starcolor(&["bench", "--sizes", ""], None);
    assert_eq!(stdout(&empty), "n index color_ms validate_ms\n");
}
