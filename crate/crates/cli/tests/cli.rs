use std::process::Command as Process;

use serde_json::Value;
use symchar_cli::{parse, run, Command, Product, Property, Query, Status, OUTPUT_SCHEMA};

fn query(args: &str) -> Query {
    parse(std::iter::once("symchar").chain(args.split_whitespace())).unwrap()
}

fn stdout(args: &str) -> String {
    let out = run(&query(args));
    assert_eq!(out.status, Status::Ok, "{args}: {}", out.stderr);
    out.stdout.trim_end().to_owned()
}

const SMOKE: &[&str] = &[
    "decompose --product outer 2,1 1",
    "decompose --product kronecker 2,1 2,1",
    "decompose --product newell-littlewood-o 1 1",
    "decompose --product newell-littlewood-sp 2 1",
    "decompose --product thibon 1 1",
    "decompose --product reduced 1 1",
    "decompose --product rational 1;1 1;0",
    "branch gl-to-o 2,1",
    "branch sp-to-gl 1,1",
    "series D --cap 4",
    "series M --cap 3",
    "check laplace inner --max-degree 3",
    "check laplace outer --max-degree 3",
    "check cocycle2 e2 --max-degree 3",
    "check frobenius derived:S:inner --max-degree 3",
    "check alghom m --max-degree 3",
    "hash --spec murnaghan-littlewood 1 1",
    "vertex schur 3,1",
    "vertex check-commutation --cap 2",
    "fgl loop gm 3 --cap 4",
    "fgl loop gm:2 -1 --cap 4",
    "fgl log ga --cap 3",
    "fgl coproduct multiplicative 1,1",
    "table 4",
];

#[test]
fn parses_documented_forms() {
    assert_eq!(
        query("decompose --product newell-littlewood-o 1 1").command,
        Command::Decompose {
            product: Product::NewellLittlewoodO,
            lhs: "1".into(),
            rhs: "1".into()
        }
    );
    assert_eq!(
        query("check laplace inner --max-degree 6").command,
        Command::Check {
            property: Property::Laplace,
            name: "inner".into(),
            max_degree: 6
        }
    );
    let q = query("decompose --product rational 1;1 1;0");
    assert!(matches!(
        q.command,
        Command::Decompose { product: Product::Rational, ref lhs, .. } if lhs == "1;1"
    ));
    assert!(!q.json);
}

#[test]
fn queries_round_trip_through_argv() {
    for args in SMOKE {
        for extra in ["", " --json", " --max-weight 9 --cache-dir /tmp/x"] {
            let q = query(&format!("{args}{extra}"));
            let again = parse(std::iter::once("symchar".to_owned()).chain(q.to_argv())).unwrap();
            assert_eq!(again, q, "{args}{extra}");
        }
    }
}

#[test]
fn unknown_flags_name_the_token() {
    let e = parse(["symchar", "decompose", "--bogus", "1", "1"]).unwrap_err();
    assert_eq!(e.exit_code(), 2);
    assert!(e.to_string().contains("--bogus"));
    let e = parse(["symchar", "decompose", "--product", "plethysm", "1", "1"]).unwrap_err();
    assert_eq!(e.exit_code(), 2);
    assert!(e.to_string().contains("plethysm"));
    let e = parse(["symchar", "branch", "gl-to-e8", "1"]).unwrap_err();
    assert!(e.to_string().contains("gl-to-e8"));
}

#[test]
fn golden_outputs() {
    assert_eq!(
        stdout("decompose --product newell-littlewood-o 1 1"),
        "[2] + [1,1] + [0]"
    );
    assert_eq!(
        stdout("decompose --product newell-littlewood-sp 1 1"),
        "<2> + <1,1> + <0>"
    );
    assert_eq!(
        stdout("decompose --product thibon 1 1"),
        "<<2>> + <<1,1>> + <<1>>"
    );
    assert_eq!(
        stdout("decompose --product reduced 1 1"),
        "<2> + <1,1> + <1> + <0>"
    );
    assert_eq!(
        stdout("decompose --product rational 1;1 1;0"),
        "{2;1} + {1,1;1} + {1;0}"
    );
    assert_eq!(stdout("decompose --product outer 1 1"), "{2} + {1,1}");
    assert_eq!(stdout("fgl loop gm 3"), "3X + 3X^2 + X^3");
    assert_eq!(stdout("fgl loop ga -3"), "-3X");
    assert_eq!(stdout("fgl log gm --cap 3"), "X - (1/2)X^2 + (1/3)X^3");
    assert_eq!(stdout("branch gl-to-o 2"), "[2] + [0]");
    assert_eq!(
        stdout("hash --spec newell-littlewood 1 1"),
        "{2} + {1,1} + {0}"
    );
    assert_eq!(stdout("vertex schur 2,1"), "{2,1}\ndiff: 0");
}

#[test]
fn failing_check_prints_witness() {
    let out = run(&query("check laplace outer --max-degree 4"));
    assert_eq!(out.status, Status::CheckFailed);
    assert!(out.stdout.contains("(s[1], s[0], s[0])"), "{}", out.stdout);

    let out = run(&query("check laplace outer --max-degree 4 --json"));
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["meta"]["passed"], false);
    assert_eq!(
        doc["meta"]["witness"]["args"],
        serde_json::json!([[1], [], []])
    );

    assert_eq!(
        run(&query("check laplace inner --max-degree 5")).status,
        Status::Ok
    );
    assert_eq!(
        run(&query("check frobenius inner --max-degree 4")).status,
        Status::Ok
    );
    assert_eq!(
        run(&query("check cocycle2 outer --max-degree 3")).status,
        Status::CheckFailed
    );
}

#[test]
fn bound_and_label_errors() {
    let out = run(&query("decompose --product outer 15 10"));
    assert_eq!(out.status, Status::Bound);
    assert!(out.stderr.contains("25"));
    assert_eq!(run(&query("series M --cap 21")).status, Status::Bound);
    assert_eq!(
        run(&query("series M --cap 5 --max-weight 4")).status,
        Status::Bound
    );
    assert_eq!(run(&query("table 30")).status, Status::Bound);
    assert_eq!(
        run(&query("decompose --product rational 9;9 3;0")).status,
        Status::Bound
    );

    let out = run(&query("decompose --product outer 1,x 1"));
    assert_eq!(out.status, Status::Usage);
    assert!(out.stderr.contains("1,x"));
    assert_eq!(
        run(&query("decompose --product rational 1 1;0")).status,
        Status::Usage
    );
    assert_eq!(run(&query("check laplace nonsense")).status, Status::Usage);
    assert_eq!(run(&query("fgl loop gx 2")).status, Status::Usage);
}

#[test]
fn json_validates_against_schema() {
    let schema: Value = serde_json::from_str(OUTPUT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for args in SMOKE {
        let out = run(&query(&format!("{args} --json")));
        assert_ne!(out.status, Status::Usage, "{args}: {}", out.stderr);
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        let errors: Vec<String> = validator.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args}: {errors:?}");
    }
    let doc: Value =
        serde_json::from_str(&run(&query("decompose --product rational 1;1 1;0 --json")).stdout)
            .unwrap();
    assert_eq!(doc["terms"][0]["label"]["kind"], "rational");
    assert_eq!(doc["terms"][0]["label"]["contra"], serde_json::json!([1]));
    assert!(!validator.is_valid(&serde_json::json!({ "terms": [] })));
}

#[test]
fn output_is_deterministic() {
    for args in SMOKE {
        let a = run(&query(args));
        let b = run(&query(args));
        assert_eq!(a, b, "{args}");
    }
}

#[test]
fn binary_exit_codes_and_env_guard() {
    let bin = env!("CARGO_BIN_EXE_symchar");
    let status = |args: &[&str], env: Option<&str>| {
        let mut cmd = Process::new(bin);
        cmd.args(args).env_remove("SYMCHAR_MAX_WEIGHT");
        if let Some(v) = env {
            cmd.env("SYMCHAR_MAX_WEIGHT", v);
        }
        cmd.output().unwrap()
    };
    let out = status(
        &["decompose", "--product", "newell-littlewood-o", "1", "1"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "[2] + [1,1] + [0]\n");
    assert_eq!(
        status(&["check", "laplace", "outer"], None).status.code(),
        Some(1)
    );
    let out = status(&["decompose", "--wrong"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--wrong"));
    let args = ["decompose", "--product", "outer", "3", "2"];
    assert_eq!(status(&args, Some("4")).status.code(), Some(3));
    assert_eq!(status(&args, Some("5")).status.code(), Some(0));
    let mut flagged = args.to_vec();
    flagged.extend(["--max-weight", "6"]);
    assert_eq!(status(&flagged, Some("4")).status.code(), Some(0));
}

#[test]
fn cache_dir_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_symchar");
    let table = || {
        let out = Process::new(bin)
            .args(["table", "5", "--cache-dir"])
            .arg(dir.path())
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let first = table();
    let file = dir.path().join("chartable-5.txt");
    let saved = std::fs::read_to_string(&file).unwrap();
    assert!(saved.lines().nth(1) == Some("n 5"), "{saved}");
    assert_eq!(table(), first);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), saved);
}
