use std::path::PathBuf;
use std::process::{Command, Output};

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_liejordan"));
    cmd.args(args).env_remove("LIEJORDAN_MAX_RANK");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn rdim_g2_prints_seven() {
    let o = run(&["rdim", "--family", "G", "--rank", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "7");
    assert!(o.stderr.is_empty());
}

#[test]
fn trivial_bound_is_one() {
    let o = run(&["bound", "--family-of-groups", "lie-connected", "--n", "0"]);
    assert_eq!(stdout(&o).trim(), "1");
    let j = json(&["bound", "--family-of-groups", "lie-connected", "--n", "0"]);
    assert_eq!(
        j["bound"],
        serde_json::json!({"kind": "exact", "value": "1"})
    );
    assert_eq!(j["conventions"]["J(0)"], "1");
}

#[test]
fn jordan_finite_s4() {
    let j = json(&["jordan-finite", "--input", &fixture("s4.grp")]);
    let keys: Vec<&String> = j.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["b", "jordan_constant", "order", "witness_subgroup"]);
    assert_eq!(j["jordan_constant"], 6);
    assert_eq!(j["order"], 24);
    assert_eq!(j["b"], 24);
    assert!(
        stdout(&run(&["jordan-finite", "--input", &fixture("s4.grp")]))
            .contains("jordan_constant 6")
    );
}

#[test]
fn text_and_json_agree() {
    for (f, l) in [("A", "3"), ("D", "6"), ("E", "7"), ("F", "4")] {
        let text: u64 = stdout(&run(&["rdim", "--family", f, "--rank", l]))
            .trim()
            .parse()
            .unwrap();
        assert_eq!(json(&["rdim", "--family", f, "--rank", l])["rdim"], text);
    }
    let text = stdout(&run(&[
        "dim",
        "--family",
        "E",
        "--rank",
        "8",
        "--weight",
        "1,0,0,0,0,0,0,0",
    ]));
    let j = json(&[
        "dim",
        "--family",
        "E",
        "--rank",
        "8",
        "--weight",
        "1,0,0,0,0,0,0,0",
    ]);
    assert_eq!(j["dim"], text.trim());
    assert_eq!(text.trim(), "248");
}

#[test]
fn long_exact_bounds_show_digit_count() {
    let text = stdout(&run(&[
        "bound",
        "--family-of-groups",
        "lie-connected",
        "--n",
        "4",
    ]));
    assert!(text.trim().ends_with("(169 digits)"), "{text}");
    assert!(text.starts_with("108139"));
    let j = json(&["bound", "--family-of-groups", "lie-connected", "--n", "4"]);
    assert_eq!(j["bound"]["value"].as_str().unwrap().len(), 169);
    assert_eq!(j["argument"], "104");
}

#[test]
fn symbolic_bound_text() {
    let text = stdout(&run(&[
        "bound",
        "--family-of-groups",
        "lie",
        "--n",
        "3",
        "--components",
        "2",
    ]));
    assert_eq!(text.trim(), "2 * J(54)^2");
}

#[test]
fn table_is_deterministic_and_csv_parses() {
    let a = run(&["table", "--max-rank", "9"]);
    let b = run(&["table", "--max-rank", "9"]);
    assert_eq!(a.stdout, b.stdout);
    let csv = stdout(&run(&["--format", "csv", "table", "--max-rank", "4"]));
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("type,rank,rdim,upper_bound,per_weight_dims,witness")
    );
    assert!(csv.contains("D4,4,16,26,8;8,\"(1,0,0,0);(0,0,0,1)\""));
}

#[test]
fn faithful_and_center() {
    assert_eq!(
        stdout(&run(&[
            "faithful",
            "--family",
            "D",
            "--rank",
            "4",
            "--weights",
            "1,0,0,0 ; 0,0,0,1"
        ]))
        .trim(),
        "true"
    );
    let j = json(&[
        "faithful",
        "--family",
        "B",
        "--rank",
        "3",
        "--weights",
        "1,0,0",
    ]);
    assert_eq!(j["faithful"], false);
    assert_eq!(j["undetected"].as_array().unwrap().len(), 1);
    let c = json(&[
        "center",
        "--family",
        "E",
        "--rank",
        "7",
        "--weight",
        "1,0,0,0,0,0,0",
    ]);
    assert_eq!(c["order"], 2);
    assert_eq!(c["classes"][0]["pairing"], "1/2");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["rdim", "--family", "E", "--rank", "5"]), Some(2));
    assert_eq!(code(&["rdim", "--family", "A", "--rank", "10"]), Some(3));
    assert_eq!(
        code(&["rdim", "--family", "A", "--rank", "2", "--bogus"]),
        Some(2)
    );
    assert_eq!(
        code(&["dim", "--family", "A", "--rank", "2", "--weight", "1,x"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "faithful",
            "--family",
            "A",
            "--rank",
            "2",
            "--weights",
            "0,0"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "bound",
            "--family-of-groups",
            "riemannian",
            "--n",
            "3",
            "--components",
            "2"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "bound",
            "--family-of-groups",
            "lie",
            "--n",
            "3",
            "--components",
            "0"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&["bound", "--family-of-groups", "lie-connected", "--n", "30"]),
        Some(3)
    );
    assert_eq!(
        code(&["jordan-finite", "--input", "/no/such/file"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "jordan-finite",
            "--input",
            &fixture("a5.grp"),
            "--max-lattice-order",
            "59"
        ]),
        Some(3)
    );
    assert_eq!(
        code(&[
            "jordan-finite",
            "--input",
            &fixture("s4.grp"),
            "--max-order",
            "10"
        ]),
        Some(3)
    );
    let o = run(&["rdim", "--family", "E", "--rank", "5"]);
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn max_rank_environment_variable() {
    let o = run_env(
        &["rdim", "--family", "E", "--rank", "8"],
        &[("LIEJORDAN_MAX_RANK", "7")],
    );
    assert_eq!(o.status.code(), Some(3));
    let o = run_env(
        &["rdim", "--family", "A", "--rank", "10"],
        &[("LIEJORDAN_MAX_RANK", "10")],
    );
    assert_eq!(stdout(&o).trim(), "11");
    let o = run_env(
        &["rdim", "--family", "A", "--rank", "2"],
        &[("LIEJORDAN_MAX_RANK", "many")],
    );
    assert_eq!(o.status.code(), Some(2));
}
