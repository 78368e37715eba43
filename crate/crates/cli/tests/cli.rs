use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn mnm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mnm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn validate_reports_both_axiom_families() {
    let o = mnm(&["validate", &fixture("six_element.alg")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("NM-algebra: valid; quantifier: U1-U4 pass\n"));

    let o = mnm(&["validate", &fixture("nine_element_uncorrected.alg")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("unit law fails at (a, 1)"));

    let o = mnm(&["validate", "nine-element", "--strong"]);
    assert_eq!(code(&o), 1, "the nine-element quantifier is not strong");
}

#[test]
fn six_element_monadic_filters() {
    let o = mnm(&["filters", &fixture("six_element.alg"), "--monadic"]);
    assert_eq!(code(&o), 0);
    let sets: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(sets, ["{1}", "{d,1}", "{b,c,1}", "{0,a,b,c,d,1}"]);

    let o = mnm(&["filters", "six-element", "--monadic", "--filter", "a,c,1"]);
    assert_eq!(code(&o), 1);
    let o = mnm(&["filters", "six-element", "--filter", "d,1"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn eval_and_validity() {
    let o = mnm(&[
        "eval",
        &fixture("six_element.alg"),
        "--formula",
        "A p1",
        "--assign",
        "p1=c",
    ]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "b\n"));

    let o = mnm(&["eval", "chain-3", "--formula", "p1 \\/ ~p1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("1/2"));
    let o = mnm(&["eval", "chain-3", "--formula", "A p1 -> p1"]);
    assert_eq!(code(&o), 0);

    let o = mnm(&["eval", "chain-3", "--formula", "p1 ->"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    fs::write(&bad, "algebra x\nelements 2 0 1\nbottom 0\ntop 1\nmul\n0 0\n0 q\n").unwrap();
    let o = mnm(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("7:"));

    assert_eq!(code(&mnm(&["validate", "no-such-thing"])), 2);
    assert_eq!(code(&mnm(&["frobnicate"])), 2);
    assert_eq!(code(&mnm(&["catalog", "--seed-less"])), 2);
    assert_eq!(code(&mnm(&["quotient", "six-element"])), 2);
    assert_eq!(code(&mnm(&["filters", "chain-3", "--filter", "z"])), 2);
}

#[test]
fn proofs_and_consequence() {
    let theory = fixture("proofs/sample.theory");
    let o = mnm(&["proof", &fixture("proofs/sample.proof"), "--theory", &theory]);
    assert_eq!(code(&o), 0);
    for (file, line) in [
        ("swapped_mp.proof", 3),
        ("forward_nec.proof", 4),
        ("wrong_substitution.proof", 7),
    ] {
        let o = mnm(&[
            "proof",
            &fixture(&format!("proofs/{file}")),
            "--theory",
            &theory,
            "--json",
        ]);
        assert_eq!(code(&o), 1);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["first_bad_line"], line, "{file}");
    }

    let o = mnm(&["consequence", "--formula", "p1 \\/ ~p1", "--max-chain", "3"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("chain-3/identity"));

    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.theory");
    fs::write(&t, "A p1\n").unwrap();
    let o = mnm(&[
        "consequence",
        "--theory",
        t.to_str().unwrap(),
        "--formula",
        "p1",
        "--max-chain",
        "3",
    ]);
    assert_eq!(code(&o), 0);
}

#[test]
fn catalog_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = mnm(&["catalog", "export", dir.path().to_str().unwrap(), "--max-chain", "4"]);
    assert_eq!(code(&o), 0);
    let mut files: Vec<PathBuf> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), stdout(&o).lines().count());
    for f in &files {
        assert_eq!(code(&mnm(&["validate", f.to_str().unwrap()])), 0, "{}", f.display());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classify", "chain-3xchain-3", "--json"][..],
        &["quantifiers", "six-element", "--laws"],
        &["catalog", "--max-chain", "5"],
    ] {
        let (a, b) = (mnm(args), mnm(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

/// Each verb with each of its flag combinations reaches a verdict.
#[test]
fn every_verb_runs() {
    let six = fixture("six_element.alg");
    let cases: &[(&[&str], i32)] = &[
        (&["validate", "chain-4"], 0),
        (&["validate", "chain-2xchain-2", "--quantifier", "q1", "--strong"], 1),
        (&["quantifiers", "chain-5", "--strong"], 0),
        (&["quantifiers", "chain-4", "--oracle"], 0),
        (&["quantifiers", "chain-3", "--laws", "--pairs"], 0),
        (&["filters", &six], 0),
        (&["filters", &six, "--monadic", "--filter", "d,1"], 0),
        (&["classify", &six], 0),
        (&["classify", "nine-element", "--json"], 0),
        (&["quotient", &six, "--filter", "b,c,1"], 0),
        (&["quotient", &six, "--monadic", "--filter", "d,1"], 0),
        (&["quotient", &six, "--monadic", "--filter", "c,1"], 1),
        (&["represent", &six], 0),
        (&["represent", &six, "--monadic"], 0),
        (&["represent", &six, "--monadic", "--strong"], 1),
        (
            &[
                "represent",
                "chain-5",
                "--monadic",
                "--strong",
                "--quantifier",
                "subchain-3",
            ],
            0,
        ),
        (&["represent", &six, "--monadic", "--filter", "1", "--omit", "d"], 0),
        (&["represent", "nine-element", "--monadic"], 1),
        (
            &["eval", "six-element", "--formula", "E p1", "--assign", "p1=a", "--json"],
            0,
        ),
        (&["proof"], 0),
        (&["proof", "--soundness", "--max-chain", "3"], 0),
        (&["catalog", "show", "chain-3"], 0),
    ];
    for (args, want) in cases {
        let o = mnm(args);
        assert_eq!(
            code(&o),
            *want,
            "{args:?}\n{}{}",
            stdout(&o),
            String::from_utf8_lossy(&o.stderr)
        );
    }
}
