use std::process::Command;

use a2spider_cli::{run, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};

fn a2(args: &[&str]) -> a2spider_cli::Outcome {
    run(std::iter::once("a2spider").chain(args.iter().copied()))
}

#[test]
fn cheb_one_one() {
    let out = a2(&["cheb", "1", "1"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.trim(), "x*y - 1");
}

#[test]
fn cheb_json_sorts_terms_by_degree_pair() {
    let out = a2(&["--json", "cheb", "2", "1"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let degrees: Vec<(u64, u64)> =
        v["poly"]["terms"].as_array().unwrap().iter().map(|t| (t["x"].as_u64().unwrap(), t["y"].as_u64().unwrap())).collect();
    let mut sorted = degrees.clone();
    sorted.sort();
    assert_eq!(degrees, sorted);
    assert_eq!(degrees.len(), 3);
}

#[test]
fn cheb_table_lists_every_index() {
    let out = a2(&["cheb-table", "2"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().count(), 6);
    assert!(out.stdout.contains("C(1,1) = x*y - 1"));
}

#[test]
fn trace_one_one_is_two_times_four() {
    let out = a2(&["trace", "1", "1"]);
    assert_eq!(out.code, EXIT_OK);
    // [2][4] multiplied out by hand
    let got: a2spider::RingScalar = out.stdout.trim().parse().unwrap();
    let want: a2spider::RingScalar = "v^12 + 2v^6 + 2 + 2v^-6 + v^-12".parse().unwrap();
    assert_eq!(got, want);
}

#[test]
fn reduce_cup_cap() {
    let out = a2(&["reduce", "b[+-] ; d[+-]"]);
    assert_eq!(out.code, EXIT_OK);
    let again = a2(&["reduce", "(v^6 + 1 + v^-6) id()"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn reduce_is_byte_stable() {
    let expr = "P[++] * id(-) ; id(+) * H[+-;-+] ; c[+,-] * id(+)";
    let first = a2(&["--json", "reduce", expr]);
    assert_eq!(first.code, EXIT_OK, "{}", first.stderr);
    for _ in 0..3 {
        assert_eq!(a2(&["--json", "reduce", expr]).stdout, first.stdout);
    }
}

#[test]
fn shape_errors_are_usage_errors() {
    let out = a2(&["reduce", "id(+) ; d[+-]"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("column 7"), "{}", out.stderr);
}

#[test]
fn syntax_errors_are_usage_errors() {
    assert_eq!(a2(&["reduce", "id(+) *"]).code, EXIT_USAGE);
    assert_eq!(a2(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(a2(&["verify", "nonsense"]).code, EXIT_USAGE);
    assert_eq!(a2(&["verify", "ck2"]).code, EXIT_USAGE);
}

#[test]
fn term_budget_gives_exit_three() {
    assert_eq!(a2(&["--limit-terms", "1", "clasp", "P[+++]"]).code, EXIT_RESOURCE);
    assert_eq!(a2(&["--limit-terms", "1", "reduce", "P[++]"]).code, EXIT_RESOURCE);
    assert_eq!(a2(&["--limit-terms", "100", "reduce", "P[++]"]).code, EXIT_OK);
}

#[test]
fn clasp_descriptors() {
    for d in ["P[++]", "P[+-]", "P[eps=-+]", "T[a=-+,b=+-]", "I[eps=-+]"] {
        let out = a2(&["clasp", d]);
        assert_eq!(out.code, EXIT_OK, "{d}: {}", out.stderr);
        assert!(!out.stdout.is_empty());
    }
    assert_eq!(a2(&["clasp", "Q[+]"]).code, EXIT_USAGE);
}

#[test]
fn verify_suites_pass() {
    let cases: &[&[&str]] = &[
        &["verify", "clasp", "2"],
        &["verify", "clasp", "+-+"],
        &["verify", "ladder", "3"],
        &["verify", "x-vanish", "2"],
        &["verify", "recursion"],
        &["verify", "reidemeister"],
        &["verify", "slide", "1", "2"],
        &["verify", "ck1"],
        &["verify", "ck2", "2"],
        &["verify", "ck3", "1", "1"],
        &["verify", "qident", "edge", "2"],
        &["verify", "qident", "interior", "1", "1"],
        &["verify", "trace", "3"],
        &["verify", "dim", "6"],
        &["verify", "cheb"],
        &["qident", "interior", "1", "1"],
    ];
    for args in cases {
        let out = a2(args);
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}{}", out.stdout, out.stderr);
    }
}

#[test]
fn confluence_is_deterministic_under_seed() {
    let a = a2(&["--json", "verify", "confluence", "--seed", "7"]);
    assert_eq!(a.code, EXIT_OK, "{}", a.stdout);
    let b = a2(&["verify", "confluence", "--seed", "7", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_json_is_machine_readable() {
    let out = a2(&["--json", "verify", "ck1"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn canon_reads_a_web_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("web.json");
    let web = a2spider::WebDiagram::generator(a2spider::web::Generator::H(a2spider::Sign::Plus));
    let doubled = web.glue_compose(&a2spider::WebDiagram::generator(a2spider::web::Generator::H(a2spider::Sign::Minus))).unwrap();
    std::fs::write(&path, doubled.to_json()).unwrap();
    let out = a2(&["--json", "canon", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["key"].as_str().is_some_and(|k| !k.is_empty()));
    assert_eq!(a2(&["canon", "/nonexistent/web.json"]).code, EXIT_USAGE);
}

#[test]
fn binary_round_trips_the_clasp_cache() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_a2spider");
    let run_bin = |args: &[&str]| Command::new(bin).args(args).env("A2SPIDER_CACHE_DIR", dir.path()).output().unwrap();
    let first = run_bin(&["clasp", "P[++-]"]);
    assert_eq!(first.status.code(), Some(EXIT_OK));
    let cache = dir.path().join("clasp_cache.json");
    assert!(cache.exists());
    let second = run_bin(&["clasp", "P[++-]"]);
    assert_eq!(first.stdout, second.stdout);
    let usage = run_bin(&["cheb", "x"]);
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}
