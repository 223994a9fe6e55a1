use std::collections::{BTreeMap, BTreeSet};
use std::fs;

use fexpand::cli::{run, subcommand_names, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, OPERATIONS};
use fexpand::formats::parse_pwl;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fexpand").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str) -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("fexpand-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&d).unwrap();
    d
}

// One cheap invocation per subcommand.
fn smoke() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("expand", vec!["expand", "--f", "power:1/2", "--x", "2/3"]),
        ("eval", vec!["eval", "--q", "[0; 1, 1, 2, 1, 6]"]),
        ("compare", vec!["compare", "--a", "[0; 1, 2]", "--b", "[0; 1, 3]"]),
        ("bifurcate", vec!["bifurcate", "--alpha", "3,5"]),
        ("alpha0", vec!["alpha0", "--method", "equation"]),
        ("basin", vec!["basin", "--alpha", "5"]),
        ("threshold", vec!["threshold", "--x", "root(5,7)", "--bits", "32"]),
        ("monotonicity", vec!["monotonicity", "--x", "1/2", "--grid", "3/2,2", "--terms", "8"]),
        ("chorus", vec!["chorus", "--g", "1/2:1/3", "--x", "2/3"]),
        ("minkowski", vec!["minkowski", "--eval", "3/5"]),
        ("backforth", vec!["backforth", "--A", "rationals", "--B", "dyadics", "--stages", "5"]),
        ("encode", vec!["encode", "--poly", " -1 2 1"]),
        ("decode", vec!["decode", "--q", "[0; 5, 3, 4, 2, 3]"]),
        ("verify-deg93", vec!["verify-deg93", "--poly", "DEG2"]),
        ("repro", vec!["repro", "half-power-two-thirds"]),
    ]
}

#[test]
fn every_operation_has_exactly_one_subcommand() {
    let names: BTreeSet<String> = subcommand_names().into_iter().filter(|n| n != "help").collect();
    let mut owners: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (op, sub) in OPERATIONS {
        owners.entry(op).or_default().push(sub);
        assert!(names.contains(*sub), "{op} points at missing subcommand {sub}");
    }
    assert!(owners.values().all(|s| s.len() == 1), "{owners:?}");
    let used: BTreeSet<String> = OPERATIONS.iter().map(|(_, s)| s.to_string()).collect();
    assert_eq!(used, names);
    let smoked: BTreeSet<String> = smoke().iter().map(|(s, _)| s.to_string()).collect();
    assert_eq!(smoked, names);
}

#[test]
fn every_subcommand_runs_and_is_deterministic() {
    let dir = scratch("smoke");
    let poly = dir.join("deg2.txt");
    fs::write(&poly, "# x^2 - x - 1\n-1\n-1\n1\n").unwrap();
    let poly = poly.display().to_string();
    for (name, args) in smoke() {
        let args: Vec<&str> = args.iter().map(|a| if *a == "DEG2" { poly.as_str() } else { a }).collect();
        let first = call(&args);
        assert_eq!(first.0, EXIT_OK, "{name}: {}", first.2);
        assert!(!first.1.is_empty(), "{name}");
        assert_eq!(call(&args), first, "{name} output differs between runs");
    }
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn documented_examples() {
    assert_eq!(call(&["expand", "--f", "power:1/2", "--x", "2/3"]).1, "[0; 2, 16]\nTerminated\n");
    assert_eq!(call(&["encode", "--poly", " -1 2 1"]).1, "3,4,2,3\n");
    assert_eq!(call(&["decode", "--q", "[0; 5, 3, 4, 2, 3]"]).1, "-1 2 1\n");
    assert_eq!(call(&["compare", "--a", "[0; 1, 2]", "--b", "[0; 1, 3]"]).1, "Less\n");
    assert_eq!(call(&["minkowski", "--eval", "quad(-1,1,5,2)"]).1, "2/3\n");
    assert_eq!(call(&["minkowski", "--inverse", "3/8"]).1, "2/5\n");
    assert_eq!(call(&["minkowski", "--inverse", "2/3"]).1, "quad(-1,1,5,2)\n");
    let (code, out, _) = call(&["repro", "alpha0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("PASS alpha0"));
    assert!(out.contains("4.14104152"));
}

#[test]
fn json_schema_of_expansions() {
    let (code, out, _) = call(&["expand", "--f", "power:3/2", "--x", "root(3,3)", "--terms", "5", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["quotients"], "[1; 1, 1, 2, 1, 1, ...]");
    assert_eq!(v["outcome"], "ReachedMaxTerms");
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 6);
    for (i, s) in steps.iter().enumerate() {
        assert_eq!(s["index"], i);
        assert_eq!(s["exact"], false);
        assert!(s["precision_bits"].as_u64().unwrap() > 0);
    }
}

#[test]
fn bifurcation_csv() {
    let (code, out, _) = call(&["bifurcate", "--from", "4", "--to", "5", "--step", "1/2", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "alpha,fp1,mult1,class1,fp2a,fp2b,fp2c,basin_lo,basin_hi");
    assert_eq!(lines.len(), 4);
    let cols: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(cols.len(), 9);
    assert_eq!((cols[0], cols[3], cols[4], cols[7]), ("4", "repelling", "", ""));
    let cols: Vec<&str> = lines[3].split(',').collect();
    assert_eq!(cols[3], "attracting");
    assert!(cols[4].starts_with("1.06377") && cols[8].starts_with("1.73411"));
}

#[test]
fn backforth_tsv_and_pwl_file() {
    let dir = scratch("bf");
    let g = dir.join("g.pwl");
    let g_text = g.display().to_string();
    let (code, out, _) = call(&["backforth", "--A", "rationals", "--B", "dyadics", "--stages", "40", "--emit-g", &g_text]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows[0], ["stage", "a", "b"]);
    assert_eq!(rows.len(), 41);
    assert_eq!(rows[1], ["1", "1/2", "1/2"]);
    let pwl = parse_pwl(&fs::read_to_string(&g).unwrap()).unwrap();
    assert_eq!(pwl.nodes().len(), 40);
    // the emitted file feeds straight back into chorus
    let (code, out, _) = call(&["chorus", "--g-file", &g_text, "--recover", "1/3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "g(1/3) = 1/4\n");
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_flag_writes_file() {
    let dir = scratch("out");
    let f = dir.join("e.json");
    let (code, out, _) = call(&["expand", "--x", "27/47", "--format", "json", "--output", f.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (EXIT_OK, ""));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&f).unwrap()).unwrap();
    assert_eq!(v["quotients"], "[0; 1, 1, 2, 1, 6]");
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["expand"]).0, EXIT_USAGE);
    assert_eq!(call(&["expand", "--x", "1/0"]).0, EXIT_USAGE);
    assert_eq!(call(&["expand", "--x", "1/2", "--f", "power:-1"]).0, EXIT_USAGE);
    assert_eq!(call(&["repro", "no-such-claim"]).0, EXIT_USAGE);
    assert_eq!(call(&["compare", "--a", "[0; 1]", "--b", "[0; 2]", "--format", "json"]).0, EXIT_USAGE);
    assert_eq!(call(&["basin", "--alpha", "4"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    // 64 bits cannot settle the 32nd floor of the cube root of 3 under f_{3/2}
    let (code, out, _) = call(&["expand", "--f", "power:3/2", "--x", "root(3,3)", "--terms", "40", "--max-bits", "64"]);
    assert_eq!(code, EXIT_INCONCLUSIVE);
    assert!(out.contains("UndecidedInteger"));
}

#[test]
fn seeded_property_suite() {
    let a = call(&["repro", "properties", "--seed", "7"]);
    assert_eq!(a.0, EXIT_OK, "{}", a.1);
    assert_eq!(call(&["repro", "properties", "--seed", "7"]), a);
}
