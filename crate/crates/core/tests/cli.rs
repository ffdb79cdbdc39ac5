use std::process::Command;

use gnlab::cli::{run, verify_range, DEFAULT_N_CEILING, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use gnlab::tables::table_entries;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gnlab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn verify_passes_where_all_tables_hold() {
    let (code, out, _) = call(&["verify", "--n-min", "2", "--n-max", "4"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(out.lines().filter(|l| l.contains("PASS")).count(), 3);
    assert!(out.contains("15 subgroups of index 4 in total"));
}

#[test]
fn verify_reports_the_n1_table_discrepancy() {
    let (code, out, _) = call(&["verify", "--n-min", "1", "--n-max", "1"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("FAIL index-2 table row H7_2"), "{out}");
}

#[test]
fn verify_json_is_one_document_in_order() {
    let (code, out, _) = call(&["verify", "--n-min", "2", "--n-max", "3", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let ns: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["n"].as_u64().unwrap())
        .collect();
    assert_eq!(ns, vec![2, 3]);
}

#[test]
fn corrupted_fixture_exits_one() {
    let corrupted = |n: u32| {
        let mut rows = table_entries(n);
        rows[2].abelianization = gnlab::AbelianType::new(vec![5, 5]).unwrap();
        rows
    };
    let mut out = Vec::new();
    let code = verify_range(2, 2, DEFAULT_N_CEILING, false, &corrupted, &mut out).unwrap();
    assert_eq!(code, EXIT_FAILED);
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("FAIL index-2 table row H3_2"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        call(&["verify", "--n-min", "3", "--n-max", "2"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["verify", "--n-min", "0", "--n-max", "2"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["report", "--n", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["report", "--n", "17"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["report", "--n", "1", "--format", "xml"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&[]).0, EXIT_USAGE);
    let (code, _, err) = call(&[
        "transfer",
        "--n",
        "1",
        "--subgroup",
        "H1_2",
        "--element",
        "s*x",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("offset 2"), "{err}");
}

#[test]
fn ceiling_is_adjustable() {
    assert_eq!(
        call(&[
            "--n-ceiling",
            "2",
            "inspect",
            "--n",
            "3",
            "--subgroup",
            "H1_2"
        ])
        .0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["--n-ceiling", "3", "inspect", "--n", "3", "--subgroup", "t"]).0,
        EXIT_OK
    );
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    for cmd in ["verify", "report", "transfer", "inspect"] {
        assert!(out.contains(cmd));
    }
    assert_eq!(call(&["--version"]).0, EXIT_OK);
}

#[test]
fn transfer_outputs() {
    let (code, out, _) = call(&[
        "transfer",
        "--n",
        "2",
        "--subgroup",
        "H1_2",
        "--element",
        "t",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("trivial coset; in kernel"), "{out}");

    let (code, out, _) = call(&[
        "transfer",
        "--n",
        "2",
        "--subgroup",
        "H1_2",
        "--element",
        "s",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("coset of ("), "{out}");
    assert!(out.lines().next().unwrap().ends_with("; not in kernel"));

    let (code, out, _) = call(&[
        "transfer",
        "--n",
        "2",
        "--subgroup",
        "s,t",
        "--element",
        "r*s",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn transfer_into_non_normal_subgroup_exits_two() {
    let (code, _, err) = call(&["transfer", "--n", "1", "--subgroup", "r", "--element", "s"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("not normal"));
}

#[test]
fn inspect_summarizes_a_subgroup() {
    let (code, out, _) = call(&["inspect", "--n", "3", "--subgroup", "H2_2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("order: 128 (index 2)"), "{out}");
    assert!(out.contains("abelianization: (2, 2, 2)"));
    assert!(out.contains("normal: yes"));
    assert!(out.contains("contains G': yes"));
}

#[test]
fn report_writes_files_and_fails_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.md");
    let (code, out, _) = call(&["report", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("H1_2"));

    let bad = dir.path().join("missing").join("r.json");
    let (code, _, err) = call(&[
        "report",
        "--n",
        "2",
        "--format",
        "json",
        "--out",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot write"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gnlab");
    let status = |args: &[&str]| Command::new(bin).args(args).status().unwrap().code();
    assert_eq!(status(&["verify", "--n-min", "2", "--n-max", "2"]), Some(0));
    assert_eq!(status(&["verify", "--n-min", "1", "--n-max", "1"]), Some(1));
    assert_eq!(status(&["report", "--n", "nope"]), Some(2));
}
