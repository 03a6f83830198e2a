// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use starfree::analysis::Analysis;
use starfree::class_eq::{CandidateSet, ClassEquationSolution};
use starfree::classify::{ClassificationReport, Status};

fn starfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starfree"))
        .args(args)
        .env_remove("STARFREE_CATALOG_DIR")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn analyze_catalog_group() {
    let out = starfree(&["analyze", "--group", "Q8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("strong star number:  2"), "{text}");
    assert!(text.contains("center size:         2"), "{text}");
    assert!(text.contains("profile:             [(4,3)]"), "{text}");

    let out = starfree(&["analyze", "--group", "Q8", "--format", "json"]);
    let analysis: Analysis = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (
            analysis.strong_star_number,
            analysis.center,
            analysis.profile.clone()
        ),
        (2, 2, vec![(4, 3)])
    );
    let again: Analysis = serde_json::from_str(&serde_json::to_string(&analysis).unwrap()).unwrap();
    assert_eq!(again, analysis);
}

#[test]
fn analyze_rejects_abelian_and_unknown() {
    let out = starfree(&["analyze", "--group", "C6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("abelian"), "{}", stderr(&out));
    let out = starfree(&["analyze", "--group", "NoSuchGroup"]);
    assert_eq!(out.status.code(), Some(2));
    let out = starfree(&["analyze", "--group", "G32_01"]);
    assert_eq!(out.status.code(), Some(2), "order-32 names need --stretch");
    let out = starfree(&["analyze", "--group", "S3", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_group_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    fs::write(
        &path,
        r#"{"name": "mine", "degree": 3, "generators": [[[0, 1, 2]], [[0, 1]]]}"#,
    )
    .unwrap();
    let source = format!("file:{}", path.display());
    let out = starfree(&["analyze", "--group", &source, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let analysis: Analysis = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(analysis.strong_star_number, 2);
    assert_eq!(analysis.identified_as.as_deref(), Some("S3"));

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"name": "bad", "cayley": [[0, 1], [1, 1]]}"#).unwrap();
    let out = starfree(&["analyze", "--group", &format!("file:{}", bad.display())]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not a group"), "{}", stderr(&out));
    let out = starfree(&[
        "analyze",
        "--group",
        &format!("file:{}", dir.path().join("absent.json").display()),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_exit_codes() {
    let out = starfree(&["classify", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("status: PASS\n"));

    let out = starfree(&["classify", "--k", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: ClassificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.verified_groups.len(), 16);
    assert_eq!(report.status, Status::PassWithWarning);
    assert!(stderr(&out).contains("UNVERIFIED-CANDIDATE: order 32"));

    let out = starfree(&["classify", "--k", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("status: UNCHECKED"));

    for k in ["1", "7", "x"] {
        assert_eq!(
            starfree(&["classify", "--k", k]).status.code(),
            Some(2),
            "k={k}"
        );
    }
}

#[test]
fn solve_command() {
    let out = starfree(&["solve", "--sizes", "2,5", "--center", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "sizes {2,5}, center 1\nn=10 m=(1,2)\n");

    let out = starfree(&[
        "solve", "--sizes", "5,3,4", "--center", "1", "--format", "json",
    ]);
    let solutions: Vec<ClassEquationSolution> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(solutions.len(), 1);
    assert_eq!(
        (solutions[0].order, solutions[0].multiplicities.clone()),
        (60, vec![1, 1, 2])
    );

    for bad in [
        &["--sizes", "2,x", "--center", "1"][..],
        &["--sizes", "6", "--center", "4"],
        &["--sizes", "2,2", "--center", "1"],
    ] {
        let mut args = vec!["solve"];
        args.extend_from_slice(bad);
        assert_eq!(starfree(&args).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn enumerate_command() {
    let out = starfree(&["enumerate", "--k", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let set: CandidateSet = serde_json::from_slice(&out.stdout).unwrap();
    let orders: Vec<u64> = set.candidate_orders().into_iter().collect();
    assert_eq!(orders, [6, 8, 10, 12, 15, 16, 18, 20, 24, 30, 32, 50, 60]);
    let text = stdout(&starfree(&["enumerate", "--k", "2"]));
    assert!(
        text.ends_with("2 tuples; candidate orders: 6,8\n"),
        "{text}"
    );
    assert_eq!(starfree(&["enumerate", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn dihedral_command() {
    let out = starfree(&["dihedral", "--n", "7", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("closed form 6") && text.contains("computed 6"),
        "{text}"
    );
    let out = starfree(&["dihedral", "--n", "6", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["closed_form"], 4);
    assert!(doc["computed"].is_null());
    assert_eq!(starfree(&["dihedral", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn export_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.dot"), dir.path().join("b.dot"));
    for path in [&a, &b] {
        let out = starfree(&[
            "export",
            "--group",
            "A4",
            "--format",
            "dot",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let first = fs::read(&a).unwrap();
    assert_eq!(first, fs::read(&b).unwrap());
    assert_eq!(first, starfree(&["export", "--group", "A4"]).stdout);
    let text = String::from_utf8(first).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 7);

    let json = starfree(&["export", "--group", "S3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(doc["edges"].as_array().unwrap().len(), 1);
    assert_eq!(
        starfree(&["export", "--group", "C4"]).status.code(),
        Some(2)
    );
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["classify", "--k", "5"][..],
        &["analyze", "--group", "SL(2,3)", "--format", "json"],
        &["enumerate", "--k", "4"],
    ] {
        assert_eq!(starfree(args).stdout, starfree(args).stdout, "{args:?}");
    }
}

fn copy_catalog(dst: &Path) {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog/v1");
    for entry in fs::read_dir(src).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), dst.join(entry.file_name())).unwrap();
    }
}

#[test]
fn catalog_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    copy_catalog(dir.path());
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_starfree"))
            .args(args)
            .env("STARFREE_CATALOG_DIR", dir.path())
            .output()
            .unwrap()
    };
    assert_eq!(run(&["classify", "--k", "2"]).status.code(), Some(0));

    let path = dir.path().join("order_008.json");
    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, text.replacen("\"Q8\"", "\"Q8x\"", 1)).unwrap();
    let out = run(&["classify", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("checksum mismatch"),
        "{}",
        stderr(&out)
    );
}
