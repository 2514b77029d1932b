use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use reslat_cli::fixtures::{example_files, example_text};
use reslat_cli::format::{render_algebra, render_coupled, AlgebraFile, CoupledFile};
use reslat_cli::run;
use reslat_core::fixtures;
use serde_json::Value;
use tempfile::{tempdir, TempDir};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reslat"))
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn examples_dir() -> TempDir {
    let dir = tempdir().unwrap();
    for (name, f) in example_files() {
        fs::write(dir.path().join(format!("{name}.alg")), render_algebra(&f)).unwrap();
    }
    dir
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["reslat"];
    argv.extend_from_slice(args);
    argv.push("--json");
    let out = run(argv);
    (
        out.code,
        serde_json::from_str(&out.stdout).expect(&out.stderr),
    )
}

fn check<'a>(doc: &'a Value, name: &str) -> &'a Value {
    doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

fn first_witness(doc: &Value, name: &str) -> Vec<String> {
    check(doc, name)["witnesses"][0]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["element"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn check_ex2_exits_one_on_prelinearity_and_divisibility() {
    let dir = examples_dir();
    let file = dir.path().join("ex2.alg");
    let status = bin()
        .args(["check", path_str(&file)])
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(1));

    let (code, doc) = json(&["check", path_str(&file)]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["prelinearity", "divisibility"]);
    assert_eq!(first_witness(&doc, "prelinearity"), ["b", "c"]);
    assert_eq!(first_witness(&doc, "divisibility"), ["b", "a"]);
    assert_eq!(check(&doc, "double_negation")["status"], "pass");
    assert_eq!(
        check(&doc, "identities.residuum_via_oplus")["status"],
        "pass"
    );
}

#[test]
fn roundtrip_ex2_and_tie_ex3() {
    let dir = examples_dir();
    let ex2 = dir.path().join("ex2.alg");
    assert_eq!(
        bin()
            .args(["roundtrip", path_str(&ex2)])
            .output()
            .unwrap()
            .status
            .code(),
        Some(0)
    );

    let ex3 = dir.path().join("ex3.alg");
    let (code, doc) = json(&["tie", path_str(&ex3), "--subuniverse", "0,a,1"]);
    assert_eq!(code, 0);
    assert_eq!(first_witness(&doc, "second_carrier"), ["0", "1"]);
}

#[test]
fn printed_oplus_yields_one_mismatch() {
    let mut f = AlgebraFile::from_residuated("ex2-printed", &fixtures::ex2(), false);
    f.oplus = Some(fixtures::ex2_printed_oplus());
    f.neg = Some(fixtures::ex2_printed_neg());
    let dir = tempdir().unwrap();
    let file = dir.path().join("p.alg");
    fs::write(&file, render_algebra(&f)).unwrap();

    let (code, doc) = json(&["check", path_str(&file)]);
    assert_eq!(code, 1);
    let c = check(&doc, "oplus_matches_derived");
    assert_eq!(c["status"], "fail");
    assert_eq!(c["witnesses"].as_array().unwrap().len(), 1);
    assert_eq!(
        first_witness(&doc, "oplus_matches_derived"),
        ["b", "c", "c", "1"]
    );
    assert_eq!(check(&doc, "neg_matches_derived")["status"], "pass");
}

#[test]
fn witness_limit() {
    let dir = examples_dir();
    let file = dir.path().join("ex2.alg");
    let (_, all) = json(&["check", path_str(&file)]);
    let (_, one) = json(&["check", path_str(&file), "--witnesses", "1"]);
    assert_eq!(
        check(&all, "divisibility")["witnesses"]
            .as_array()
            .unwrap()
            .len(),
        5
    );
    assert_eq!(
        check(&one, "divisibility")["witnesses"]
            .as_array()
            .unwrap()
            .len(),
        1
    );
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = examples_dir();
    let ex2 = dir.path().join("ex2.alg");
    let text = fs::read_to_string(&ex2).unwrap();
    let bad = dir.path().join("bad.alg");
    fs::write(
        &bad,
        text.replacen("0 a b c d 1\na a b c d 1", "0 a b c d 1\na a b c d", 1),
    )
    .unwrap();

    let out = run(["reslat", "check", path_str(&bad)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains(":line 7:"), "{}", out.stderr);

    let cases: Vec<Vec<&str>> = vec![
        vec!["reslat"],
        vec!["reslat", "frobnicate"],
        vec!["reslat", "check", "/nonexistent/x.alg"],
        vec!["reslat", "tie", path_str(&ex2), "--subuniverse", "0,q"],
        vec!["reslat", "enumerate", "--max-size", "7"],
        vec!["reslat", "examples"],
        vec!["reslat", "decouple", path_str(&ex2)],
    ];
    for argv in cases {
        assert_eq!(run(argv.clone()).code, 2, "{argv:?}");
    }
}

#[test]
fn couple_rejects_ex3() {
    let dir = examples_dir();
    let (code, doc) = json(&["couple", path_str(&dir.path().join("ex3.alg"))]);
    assert_eq!(code, 1);
    assert_eq!(first_witness(&doc, "double_negation"), ["a"]);
}

#[test]
fn tie_rejects_non_subuniverse() {
    let dir = examples_dir();
    let (code, doc) = json(&[
        "tie",
        path_str(&dir.path().join("ex1.alg")),
        "--subuniverse",
        "0,a,1",
    ]);
    assert_eq!(code, 1);
    assert_eq!(check(&doc, "subuniverse")["status"], "fail");
}

#[test]
fn couple_decouple_untie_through_files() {
    let dir = examples_dir();
    let out = dir.path().join("out");
    let ex1 = dir.path().join("ex1.alg");
    assert_eq!(
        run(["reslat", "couple", path_str(&ex1), "--out", path_str(&out)]).code,
        0
    );
    let coupled = out.join("ex1.coupled.cpl");
    assert_eq!(run(["reslat", "roundtrip", path_str(&coupled)]).code, 0);
    assert_eq!(
        run([
            "reslat",
            "decouple",
            path_str(&coupled),
            "--out",
            path_str(&out)
        ])
        .code,
        0
    );
    let back = fs::read_to_string(out.join("ex1.coupled.decoupled.alg")).unwrap();
    let orig = example_text("ex1").unwrap();
    assert_eq!(
        back.lines().skip(1).collect::<Vec<_>>(),
        orig.lines().skip(1).collect::<Vec<_>>()
    );

    let args = [
        "reslat",
        "tie",
        path_str(&ex1),
        "--subuniverse",
        "0,a,¬a,1",
        "--out",
        path_str(&out),
    ];
    assert_eq!(run(args).code, 0);
    let (code, doc) = json(&["untie", path_str(&out.join("ex1.tied.cpl"))]);
    assert_eq!(code, 0);
    assert_eq!(check(&doc, "negation_is_alpha")["status"], "pass");
}

#[test]
fn coupled_file_with_identity_alpha_fails() {
    let mut c = reslat_core::couple(&fixtures::ex2()).unwrap();
    c.alpha = (0..6).collect();
    let dir = tempdir().unwrap();
    let file = dir.path().join("id.cpl");
    fs::write(
        &file,
        render_coupled(&CoupledFile::from_structure("id", &c)),
    )
    .unwrap();
    let (code, doc) = json(&["decouple", path_str(&file)]);
    assert_eq!(code, 1);
    assert_eq!(check(&doc, "alpha_homomorphism.add")["status"], "fail");
}

#[test]
fn subuniverse_listing() {
    let dir = examples_dir();
    let (code, doc) = json(&["subuniverses", path_str(&dir.path().join("ex1.alg"))]);
    assert_eq!(code, 0);
    assert_eq!(
        check(&doc, "subuniverses")["witnesses"]
            .as_array()
            .unwrap()
            .len(),
        3
    );
    let out = run([
        "reslat",
        "subuniverses",
        path_str(&dir.path().join("ex1.alg")),
        "--max-size",
        "4",
    ]);
    assert_eq!(out.code, 2);
}

#[test]
fn examples_written_with_derived_tables() {
    let dir = tempdir().unwrap();
    assert_eq!(
        run(["reslat", "examples", "--out", path_str(dir.path())]).code,
        0
    );
    for name in ["ex1", "ex2", "ex3"] {
        let text = fs::read_to_string(dir.path().join(format!("{name}.alg"))).unwrap();
        assert_eq!(Some(text), example_text(name));
    }
}

#[test]
fn check_json_matches_golden() {
    let dir = examples_dir();
    let out = run([
        "reslat",
        "check",
        path_str(&dir.path().join("ex2.alg")),
        "--json",
    ]);
    let path = golden("ex2_check.json");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &out.stdout).unwrap();
    }
    assert_eq!(out.stdout, fs::read_to_string(&path).unwrap());
}

#[test]
fn ex2_fixture_file_matches_golden() {
    let path = golden("ex2.alg");
    let text = example_text("ex2").unwrap();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &text).unwrap();
    }
    assert_eq!(text, fs::read_to_string(&path).unwrap());
}

#[test]
fn enumerate_writes_one_file_per_algebra() {
    let dir = tempdir().unwrap();
    let out = run([
        "reslat",
        "enumerate",
        "--max-size",
        "4",
        "--out",
        path_str(dir.path()),
    ]);
    assert_eq!(out.code, 0);
    let manifest: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("manifest.json")).unwrap())
            .unwrap();
    let algebras = manifest["algebras"].as_array().unwrap();
    assert_eq!(algebras.len(), 10);
    for a in algebras {
        let file = dir.path().join(a["file"].as_str().unwrap());
        assert_eq!(run(["reslat", "derive", path_str(&file)]).code, 0);
    }
}
