use std::path::PathBuf;
use std::process::Command;

use fusion_obstruct::cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fusion-obstruct").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn fixture(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel).display().to_string()
}

#[test]
fn k7_localized_is_violated() {
    let (code, out, _) = run(&["check", &fixture("corpus/k7.ring"), "localized", "--set", "6,7", "--n", "3"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("verdict: violated"));
    assert!(out.contains("-0.6294949095"), "{out}");
    assert!(out.contains("/210"), "{out}");
}

#[test]
fn controls_hold() {
    for name in ["fibonacci", "cyclic_4", "near_group_3"] {
        let (code, out, _) = run(&["check", &fixture(&format!("controls/{name}.ring")), "primary", "--n", "2"]);
        assert_eq!(code, 0, "{name}: {out}");
    }
    let (code, _, _) = run(&["check", "fibonacci", "schur"]);
    assert_eq!(code, 0);
}

#[test]
fn twisted_reduced_from_the_command_line() {
    let (code, out, _) = run(&["check", "rank8_1", "reduced", "--set", "7,8", "--twists", "I,I,swap"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("pattern=(I,I,swap)") || out.contains("reduced-twisted"), "{out}");
}

#[test]
fn usage_and_data_errors() {
    assert_eq!(run(&["check", "k7", "nonsense"]).0, 64);
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["check", "k7", "localized"]).0, 64);
    assert_eq!(run(&["check", "k7", "localized", "--set", "0,1"]).0, 64);
    assert_eq!(run(&["check", "/no/such/ring", "primary"]).0, 65);
    assert_eq!(run(&["check", "k7", "localized", "--set", "6,9"]).0, 65);
    assert_eq!(run(&["perturb", "k7", "--dims", "5,5,5"]).0, 64);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn families_and_perturbation() {
    let (code, out, _) = run(&["family", "r4k", "--k", "4"]);
    assert_eq!(code, 1, "{out}");
    let (code, out, _) = run(&["family", "graph", "--graph", &fixture("d5.graph")]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("-0.306562964"), "{out}");
    let (code, _, _) = run(&["family", "graph", "--l", "1", "--mults", "1", "--d2", "2"]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["perturb", "k7", "--dims", "5,5,5,6,7", "--d6", "9"]);
    assert_eq!(code, 0);
    assert!(out.contains("Q2+ = 8.882676"), "{out}");
}

#[test]
fn search_reports_the_witness_subset() {
    let (code, out, _) = run(&["search", "k7"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness: localized S={6,7} n=3"), "{out}");
    let (code, _, _) = run(&["search", "cyclic_3"]);
    assert_eq!(code, 0);
}

#[test]
fn batch_writes_a_report() {
    let out_file = std::env::temp_dir().join(format!("fo-cli-report-{}.json", std::process::id()));
    let (code, out, _) = run(&["batch", &fixture("controls"), "--out", out_file.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 10);
    assert_eq!(v["summary"]["violated"], 0);
    std::fs::remove_file(out_file).unwrap();
    let (code, _, _) = run(&["batch", &fixture("corpus")]);
    assert_eq!(code, 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_fusion-obstruct");
    let st = Command::new(bin).args(["check", "k7", "localized", "--set", "6,7"]).output().unwrap();
    assert_eq!(st.status.code(), Some(1));
    let st = Command::new(bin).args(["validate", "nope"]).output().unwrap();
    assert_eq!(st.status.code(), Some(65));
    let st = Command::new(bin).arg("--version").output().unwrap();
    assert_eq!(st.status.code(), Some(0));
}

#[test]
fn empty_directory_and_deterministic_reports() {
    let base = std::env::temp_dir().join(format!("fo-cli-det-{}", std::process::id()));
    let empty = base.join("empty");
    std::fs::create_dir_all(&empty).unwrap();
    let (code, out, _) = run(&["batch", empty.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");

    let dir = base.join("mixed");
    std::fs::create_dir_all(&dir).unwrap();
    for name in ["fibonacci", "cyclic_3"] {
        std::fs::copy(fixture(&format!("controls/{name}.ring")), dir.join(format!("{name}.ring"))).unwrap();
    }
    std::fs::write(dir.join("broken.ring"), "2\n\n1 0\n0 1\n").unwrap();
    let strip = |p: &std::path::Path| {
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        for e in v["entries"].as_array_mut().unwrap() {
            for r in e["results"].as_array_mut().unwrap() {
                r["timing_ms"] = serde_json::Value::Null;
            }
        }
        v.to_string()
    };
    let (a, b) = (base.join("a.json"), base.join("b.json"));
    assert_eq!(run(&["batch", dir.to_str().unwrap(), "--out", a.to_str().unwrap()]).0, 65);
    assert_eq!(run(&["batch", dir.to_str().unwrap(), "--out", b.to_str().unwrap()]).0, 65);
    assert_eq!(strip(&a), strip(&b));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(v["summary"]["errors"], 1);
    assert_eq!(v["summary"]["holds"], 4);
    std::fs::remove_dir_all(base).unwrap();
}

#[test]
fn malformed_input_never_panics() {
    let dir = std::env::temp_dir().join(format!("fo-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (i, text) in ["", "x", "0\n", "2\n1 0\n0 1\n1 0\n0 1\n1 9\n", "{\"name\":1}", "3\n\n1 2 3\n"].iter().enumerate() {
        let p = dir.join(format!("bad{i}.ring"));
        std::fs::write(&p, text).unwrap();
        let (code, _, err) = run(&["validate", p.to_str().unwrap()]);
        assert_eq!(code, 65, "{text:?}: {err}");
    }
    std::fs::remove_dir_all(dir).unwrap();
}
