use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use bcf_cli::digit_file::DigitFile;

const QUARTIC: [&str; 3] = [
    "alg:poly=-2,0,0,0,1;elem=0,1;lo=1;hi=2",
    "alg:poly=-2,0,0,0,1;elem=0,0,1;lo=1;hi=2",
    "alg:poly=-2,0,0,0,1;elem=0,0,0,1;lo=1;hi=2",
];
const TRIB_ALPHA: &str = "alg:poly=-1,-1,-1,1;elem=0,1;lo=1;hi=2";
// 1 + 1/theta = theta^2 - theta
const TRIB_BETA: &str = "alg:poly=-1,-1,-1,1;elem=0,-1,1;lo=1;hi=2";

fn bcf(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bcf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn bcf");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = bcf(args, None);
    assert!(
        out.status.success(),
        "bcf {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    bcf(args, None).status.code().unwrap()
}

fn fixture(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn tree_fixtures() {
    let unit = ok(&["tree", "--digits", "(1)/(1)", "--depth", "2"]);
    assert_eq!(unit, fixture("tree_unit_alpha_2.txt"));
    let moore = ok(&[
        "tree", "--digits", "(1)/(0)", "--depth", "2", "--which", "alpha",
    ]);
    assert_eq!(moore, fixture("tree_moore_alpha_2.txt"));
    let beta = ok(&[
        "tree", "--digits", "(1)/(1)", "--depth", "1", "--which", "beta",
    ]);
    assert_eq!(beta, fixture("tree_unit_beta_1.txt"));
    let body: Vec<&str> = beta.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, ["b0=1", "+-- 1", "`-- a1=1"]);
}

#[test]
fn json_fixtures() {
    let conv = ok(&[
        "convergents",
        "--digits",
        "(1)/(1)",
        "--upto",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(conv, fixture("convergents_unit.json"));
    let mut args = vec!["expand"];
    args.extend(QUARTIC);
    args.extend(["--depth", "12", "--period", "--format", "json"]);
    assert_eq!(ok(&args), fixture("expand_quartic.json"));
    let cf = ok(&["closed-form", "--a", "1", "--b", "0", "--format", "json"]);
    assert_eq!(cf, fixture("closed_form_moore.json"));
}

#[test]
fn json_has_no_floats() {
    let conv = ok(&[
        "convergents",
        "--digits",
        "(1)/(0)",
        "--upto",
        "8",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&conv).unwrap();
    assert_eq!(doc["precision"], 12);
    for row in doc["convergents"].as_array().unwrap() {
        for v in row["values"]
            .as_array()
            .unwrap()
            .iter()
            .chain(row["decimals"].as_array().unwrap())
        {
            assert!(v.is_string());
        }
    }
    assert_eq!(doc["convergents"][8]["depth"], 8);
}

#[test]
fn documented_examples() {
    let out = ok(&["expand", TRIB_ALPHA, TRIB_BETA, "--depth", "8"]);
    let file = DigitFile::parse(&out).unwrap();
    for seq in file.spec.head() {
        assert_eq!(seq.len(), 8);
        assert!(seq.iter().all(|d| *d == 1.into()));
    }

    let out = ok(&["expand", "rat:7/4", "--depth", "10"]);
    assert!(out.contains("head[1] = 1 1 3\nterminated = 2\n"), "{out}");

    let mut args = vec!["expand"];
    args.extend(QUARTIC);
    args.extend(["--depth", "12", "--period"]);
    assert!(ok(&args).contains("notation = 1(112)/(100)/(100)\n"));

    let conv = ok(&["convergents", "--digits", "(1)/(1)", "--upto", "5"]);
    assert_eq!(
        conv.lines().last().unwrap(),
        "5: 24/13 ≈ 1.846153846154 | 20/13 ≈ 1.538461538462"
    );
    let fib = ok(&["convergents", "--digits", "(1)", "--upto", "6"]);
    assert!(fib.ends_with("6: 21/13 ≈ 1.615384615385\n"));

    assert!(ok(&["closed-form", "--a", "1", "--b", "0"]).starts_with("alpha: x^3 - x^2 - 1\n"));
    assert_eq!(
        ok(&["kbonacci", "--k", "3", "--n", "10"]),
        "0 0 1 1 2 4 7 13 24 44\n"
    );
    let hunt = ok(&[
        "cubic-hunt",
        "--value",
        "dec:1.839286755214161,guard=3",
        "--height",
        "3",
        "--tol",
        "1e-9",
    ]);
    assert!(hunt.lines().any(|l| l.starts_with("1,-1,-1,-1 ")), "{hunt}");
}

#[test]
fn moore_convergents_reach_constant() {
    let out = ok(&[
        "convergents",
        "--digits",
        "(1)/(0)",
        "--upto",
        "40",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let last = doc["convergents"][40]["values"][0].as_str().unwrap();
    let (p, q) = last.split_once('/').unwrap();
    let value = p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap();
    assert!((value - 1.4655712318).abs() < 1e-8);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["expand", "rat:1.5"]), 2);
    assert_eq!(code(&["expand", "--depth", "3"]), 2);
    assert_eq!(code(&["convergents", "--digits", "1(2"]), 2);
    assert_eq!(
        code(&["convergents", "--digits", "(1)", "--evaluator", "nope"]),
        2
    );
    assert_eq!(code(&["expand", "dec:1.41421356", "--depth", "40"]), 3);
    assert_eq!(
        code(&[
            "cubic-hunt",
            "--value",
            "dec:1.84,guard=1",
            "--height",
            "10",
            "--tol",
            "1e-9"
        ]),
        3
    );
    assert_eq!(code(&["expand", "alg:poly=-4,0,1;elem=0,1;lo=1;hi=3"]), 4);
    assert_eq!(
        code(&[
            "expand",
            "alg:poly=-2,0,1;elem=0,1;lo=1;hi=2",
            "alg:poly=-3,0,1;elem=0,1;lo=1;hi=2"
        ]),
        4
    );
    assert_eq!(code(&["tree", "--digits", "(1)", "--depth", "2"]), 5);
    assert_eq!(code(&["--help"]), 0);

    let out = bcf(&["expand", "dec:1.41421356", "--depth", "40"], None);
    assert!(String::from_utf8_lossy(&out.stderr).contains("more digit"));
}

#[test]
fn expand_pipes_into_convergents_and_reconstruct() {
    let mut args = vec!["expand"];
    args.extend(QUARTIC);
    args.extend(["--depth", "12", "--period"]);
    let file = bcf(&args, None).stdout;
    let out = bcf(
        &[
            "reconstruct",
            "--digits",
            "-",
            "--tol",
            "1e-8",
            "--format",
            "json",
        ],
        Some(&file),
    );
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let want = [2f64.powf(0.25), 2f64.sqrt(), 2f64.powf(0.75)];
    for (k, w) in want.iter().enumerate() {
        let got: f64 = doc["decimals"][k].as_str().unwrap().parse().unwrap();
        assert!((got - w).abs() < 1e-8, "component {k}: {got}");
    }

    let file = bcf(
        &["expand", "rat:355/113", "--depth", "10", "--format", "json"],
        None,
    )
    .stdout;
    let out = bcf(
        &["convergents", "--digits", "-", "--upto", "50"],
        Some(&file),
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.lines().last().unwrap().contains(": 355/113 ≈"),
        "{text}"
    );
}

#[test]
fn digit_files_from_disk_round_trip() {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let text = ok(&["expand", TRIB_ALPHA, TRIB_BETA, "--depth", "6"]);
    let path = dir.join("tribonacci.bcf");
    std::fs::write(&path, &text).unwrap();
    assert_eq!(DigitFile::parse(&text).unwrap().to_text(), text);
    let conv = ok(&[
        "convergents",
        "--digits",
        path.to_str().unwrap(),
        "--upto",
        "5",
    ]);
    assert!(conv.contains("5: 24/13"));
}

#[test]
fn verbose_adds_timestamp_only_on_request() {
    let plain = ok(&["expand", "rat:7/4"]);
    assert!(!plain.contains("created_unix"));
    let verbose = ok(&["expand", "rat:7/4", "--verbose"]);
    assert!(verbose
        .lines()
        .last()
        .unwrap()
        .starts_with("created_unix = "));
    assert_eq!(ok(&["expand", "rat:7/4"]), plain);
}

#[test]
fn period_command_reports_status() {
    let mut args = vec!["period"];
    args.extend(QUARTIC);
    args.extend(["--depth", "12"]);
    let out = ok(&args);
    assert!(
        out.starts_with("status: proven\npreperiod: 1\nperiod: 3\n"),
        "{out}"
    );
    let out = ok(&["period", "rat:355/113"]);
    assert!(out.contains("status: none-within-depth"));
    let out = ok(&[
        "period",
        "dec:1.41421356237309504880168872,guard=2",
        "--depth",
        "12",
    ]);
    assert!(out.starts_with("status: apparent\n"));
}

#[test]
fn reconstruct_and_kbonacci_limit_agree() {
    let after_approx = |text: &str, prefix: &str| -> String {
        let line = text.lines().find(|l| l.starts_with(prefix)).unwrap();
        line.rsplit("≈ ").next().unwrap()[..12].to_string()
    };
    let rec = ok(&["reconstruct", "--digits", "(1)/(1)", "--tol", "1e-12"]);
    let ratio = ok(&["kbonacci", "--k", "3", "--n", "5", "--limit", "1e-12"]);
    assert_eq!(after_approx(&rec, "x1"), "1.8392867552");
    assert_eq!(after_approx(&ratio, "ratio"), "1.8392867552");
}
