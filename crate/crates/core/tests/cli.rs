use std::path::PathBuf;

use gsq::cli::{run, EXIT_FALSE, EXIT_LIMIT, EXIT_TRUE, EXIT_USAGE};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn gsq(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("gsq").chain(args.iter().copied()), &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report.schema.json");
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

/// Runs with `--json`, checks the schema, returns the parsed report.
fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let o = gsq(&full);
    let v: Value = serde_json::from_str(&o.out).unwrap_or_else(|e| panic!("{e}: {}{}", o.out, o.err));
    let errors: Vec<String> = schema().iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
    (o.code, v)
}

#[test]
fn verify_jimbo_relations() {
    for n in ["1", "2", "3", "4"] {
        let (code, v) = json(&["verify", "--builtin", "uq-plus", "--n", n]);
        assert_eq!(code, EXIT_TRUE);
        assert_eq!(v["verdict"], true);
    }
}

#[test]
fn verify_reports_the_square_witness() {
    let (code, v) = json(&["verify", &fixture("square.gsq")]);
    assert_eq!(code, EXIT_FALSE);
    assert_eq!(v["verdict"], false);
    let rec = &v["gs"]["records"][0];
    assert_eq!(rec["status"], "nontrivial");
    assert_eq!(rec["normal_form"], "x*y - y*x");
}

#[test]
fn verify_with_no_relations_is_true() {
    let (code, v) = json(&["verify", &fixture("free.gsq")]);
    assert_eq!(code, EXIT_TRUE);
    assert_eq!(v["gs"]["compositions"], 0);
}

#[test]
fn trace_lists_steps_for_each_composition() {
    let (_, v) = json(&["verify", "--builtin", "uq-plus", "--n", "2", "--trace", "--no-timings"]);
    let steps = v["gs"]["records"][0]["trace"].as_array().unwrap();
    assert!(!steps.is_empty());
    assert!(steps.iter().all(|s| s["coeff"].is_string()));
}

#[test]
fn verify_full_rank_one_reports_both_modes() {
    let (code, v) = json(&["verify", "--builtin", "uq-full", "--n", "1", "--no-timings"]);
    assert_eq!(code, EXIT_TRUE);
    let modes = v["modes"].as_array().unwrap();
    assert_eq!(modes.len(), 2);
    for (m, name) in modes.iter().zip(["as-printed", "extended"]) {
        assert_eq!(m["mode"], name);
        assert_eq!(m["gs"]["verdict"], true);
        assert_eq!(m["triangular"]["holds"], true);
    }
}

#[test]
fn verify_full_rank_two_has_witnesses() {
    let (code, v) = json(&["verify", "--builtin", "uq-full", "--n", "2", "--mode", "as-printed"]);
    assert_eq!(code, EXIT_FALSE);
    let m = &v["modes"][0];
    assert!(m["gs"]["nontrivial"].as_u64().unwrap() > 0);
    assert!(m.get("triangular").is_none());
}

#[test]
fn complete_writes_the_closed_presentation() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("done.gsq");
    let (code, v) = json(&["complete", &fixture("square.gsq"), "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_TRUE);
    assert_eq!(v["completion"]["added"], serde_json::json!(["x*y - y*x"]));
    let written = gsq::presentation::parse_presentation(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written.relations.len(), 2);
    assert_eq!(gsq(&["verify", out.to_str().unwrap()]).code, EXIT_TRUE);
}

#[test]
fn complete_stops_at_limits() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("partial.gsq");
    let (code, v) = json(&["complete", &fixture("square.gsq"), "--max-rounds", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_LIMIT);
    assert_eq!(v["completion"]["status"], "round-limit");
    assert!(out.exists());
    let (code, v) = json(&["complete", &fixture("growing.gsq"), "--max-degree", "3"]);
    assert_eq!(code, EXIT_LIMIT);
    assert_eq!(v["completion"]["status"], "truncated");
}

#[test]
fn complete_a2_serre() {
    let (code, v) = json(&["complete", "--builtin", "serre", "--cartan", &fixture("a2.cartan"), "--max-degree", "6"]);
    assert_eq!(code, EXIT_TRUE);
    assert_eq!(v["completion"]["status"], "complete");
    let (_, h) = json(&["hilbert", "--builtin", "serre", "--n", "2", "--cap", "6"]);
    assert_eq!(h["hilbert"]["counts"], serde_json::json!([1, 2, 4, 6, 9, 12, 16]));
}

#[test]
fn nf_examples() {
    let (_, v) = json(&["nf", "--builtin", "uq-plus", "--n", "2", "--poly", "x13*x12"]);
    assert_eq!(v["normal_form"]["normal_form"], "q^-2 x12*x13");
    let (_, v) = json(&["nf", "--builtin", "uq-plus", "--n", "2", "--poly", "x12"]);
    assert_eq!(v["normal_form"]["normal_form"], "x12");
    let serre = "x12*x12*x23 - (q^2 + q^-2) x12*x23*x12 + x23*x12*x12";
    let (_, v) = json(&["nf", "--builtin", "uq-plus", "--n", "2", "--poly", serre, "--trace"]);
    assert_eq!(v["normal_form"]["normal_form"], "0");
    assert!(!v["normal_form"]["trace"].as_array().unwrap().is_empty());
}

#[test]
fn nf_rejects_unknown_letters() {
    let o = gsq(&["nf", "--builtin", "uq-plus", "--n", "2", "--poly", "x99"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.err.contains("x99"), "{}", o.err);
}

#[test]
fn irr_and_hilbert_agree() {
    let (_, irr) = json(&["irr", "--builtin", "uq-plus", "--n", "2", "--cap", "5", "--list"]);
    let (_, h) = json(&["hilbert", "--builtin", "uq-plus", "--n", "2", "--cap", "5"]);
    let counts: Vec<u64> = irr["irr"]["degrees"].as_array().unwrap().iter().map(|d| d["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![1, 2, 4, 6, 9, 12]);
    assert_eq!(h["hilbert"]["counts"], serde_json::json!(counts));
    assert_eq!(irr["irr"]["degrees"][1]["words"], serde_json::json!(["x12", "x23"]));
}

#[test]
fn weights_override() {
    let (_, byname) = json(&["hilbert", "--builtin", "uq-plus", "--n", "2", "--cap", "3", "--weights", "x13=1"]);
    let (_, bylist) = json(&["hilbert", "--builtin", "uq-plus", "--n", "2", "--cap", "3", "--weights", "1,1,1"]);
    assert_eq!(byname["hilbert"], bylist["hilbert"]);
    assert_eq!(bylist["hilbert"]["counts"], serde_json::json!([1, 3, 6, 10]));
    assert_eq!(gsq(&["hilbert", "--builtin", "uq-plus", "--n", "2", "--weights", "1,0,1"]).code, EXIT_USAGE);
    assert_eq!(gsq(&["hilbert", "--builtin", "uq-plus", "--n", "2", "--weights", "1,1"]).code, EXIT_USAGE);
}

#[test]
fn gen_matches_the_library_bundles() {
    let o = gsq(&["gen", "uq-plus", "--n", "2"]);
    let b = gsq::presentation::parse_presentation(&o.out).unwrap();
    assert_eq!((b.alphabet.len(), b.relations.len()), (3, 3));
    let o = gsq(&["gen", "uq-plus", "--n", "1"]);
    let b = gsq::presentation::parse_presentation(&o.out).unwrap();
    assert_eq!((b.alphabet.len(), b.relations.len()), (1, 0));
    let o = gsq(&["gen", "serre", "--cartan", &fixture("a2.cartan")]);
    let b = gsq::presentation::parse_presentation(&o.out).unwrap();
    assert_eq!(b.relations.len(), 2);
    let o = gsq(&["gen", "lie-pbw", "--table", &fixture("sl2.table")]);
    let table = gsq::presentation::parse_presentation(&o.out).unwrap();
    let builtin = gsq::presentation::parse_presentation(&gsq(&["gen", "sl2"]).out).unwrap();
    assert_eq!(table.relations, builtin.relations);
    assert_eq!(gsq(&["gen", "uq-plus"]).code, EXIT_USAGE);
}

#[test]
fn builtins_equal_their_exported_form() {
    let cases: &[&[&str]] = &[
        &["uq-plus", "--n", "3"],
        &["uq-minus", "--n", "2"],
        &["uq-full", "--n", "1"],
        &["uq-full", "--n", "1", "--mode", "extended"],
        &["serre", "--n", "3"],
        &["sl2"],
    ];
    let dir = tempfile::tempdir().unwrap();
    for (k, args) in cases.iter().enumerate() {
        let path = dir.path().join(format!("b{k}.gsq"));
        let mut gen = vec!["gen"];
        gen.extend_from_slice(args);
        gen.extend_from_slice(&["--out", path.to_str().unwrap()]);
        assert_eq!(gsq(&gen).code, EXIT_TRUE);
        let mut by_builtin = vec!["verify", "--builtin"];
        by_builtin.extend_from_slice(args);
        if args[0] == "uq-full" && !args.contains(&"--mode") {
            by_builtin.extend_from_slice(&["--mode", "as-printed"]);
        }
        by_builtin.push("--no-timings");
        let (_, a) = json(&by_builtin);
        let (_, b) = json(&["verify", path.to_str().unwrap(), "--no-timings"]);
        let digest = |v: &Value| v["input"]["digest"].clone().as_str().map(String::from).or_else(|| v["modes"][0]["input"]["digest"].as_str().map(String::from));
        assert_eq!(digest(&a), digest(&b), "{args:?}");
        assert_eq!(a["verdict"], b["verdict"], "{args:?}");
    }
}

#[test]
fn replay_small_ranks() {
    let (code, v) = json(&["replay", "--n", "1"]);
    assert_eq!(code, EXIT_TRUE);
    assert_eq!(v["census"]["compositions"], 0);
    let (code, v) = json(&["replay", "--n", "2"]);
    assert_eq!(code, EXIT_TRUE);
    let rows = v["census"]["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["case"] == 1));
    assert_eq!(gsq(&["replay", "--n", "6"]).code, EXIT_USAGE);
    assert_eq!(gsq(&["replay", "--n", "0"]).code, EXIT_USAGE);
}

#[test]
fn replay_rank_four_matches_the_golden_census() {
    let o = gsq(&["replay", "--n", "4", "--json", "--no-timings"]);
    assert_eq!(o.code, EXIT_TRUE);
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/replay_n4.json");
    assert_eq!(o.out, std::fs::read_to_string(golden).unwrap());
    let v: Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v["census"]["cases_covered"], 16);
    assert_eq!(v["census"]["unclassifiable"], serde_json::json!([]));
}

#[test]
fn reports_are_deterministic_without_timings() {
    let args = ["verify", "--builtin", "uq-plus", "--n", "3", "--json", "--no-timings", "--trace"];
    let first = gsq(&args).out;
    for threads in ["1", "3"] {
        let mut a = args.to_vec();
        a.extend_from_slice(&["--threads", threads]);
        assert_eq!(gsq(&a).out, first);
    }
    let o = gsq(&["verify", "--builtin", "uq-plus", "--n", "3", "--json"]);
    let v: Value = serde_json::from_str(&o.out).unwrap();
    assert!(v["timings"].is_array());
}

#[test]
fn text_and_json_carry_the_same_verdicts() {
    let text = gsq(&["verify", &fixture("square.gsq"), "--no-timings"]).out;
    let (_, v) = json(&["verify", &fixture("square.gsq"), "--no-timings"]);
    assert!(text.contains("verdict: false"));
    assert!(text.contains(v["input"]["digest"].as_str().unwrap()));
    assert!(text.contains(v["gs"]["records"][0]["normal_form"].as_str().unwrap()));
}

#[test]
fn parse_errors_are_positioned() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.gsq");
    std::fs::write(&bad, "generators: x\nrel: x y\n").unwrap();
    let o = gsq(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.err.contains("line 2, column 8"), "{}", o.err);
    std::fs::write(&bad, "generators: x\nrel: z\n").unwrap();
    assert!(gsq(&["verify", bad.to_str().unwrap()]).err.contains("unknown generator `z`"));
    std::fs::write(&bad, "generators: x\nrel: x - x\n").unwrap();
    assert!(gsq(&["verify", bad.to_str().unwrap()]).err.contains("relation is zero"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(gsq(&[]).code, EXIT_USAGE);
    assert_eq!(gsq(&["verify"]).code, EXIT_USAGE);
    assert_eq!(gsq(&["verify", "--builtin", "uq-plus"]).code, EXIT_USAGE);
    assert_eq!(gsq(&["verify", "/nonexistent/file.gsq"]).code, EXIT_USAGE);
    assert_eq!(gsq(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(gsq(&["--help"]).code, EXIT_TRUE);
}

#[test]
fn sl2_and_its_perturbation() {
    let (code, _) = json(&["verify", "--builtin", "sl2"]);
    assert_eq!(code, EXIT_TRUE);
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("bad.table");
    std::fs::write(&t, "generators: f < h < e\n[h,e] = 3*e\n[h,f] = -2*f\n[e,f] = h\n").unwrap();
    let (code, v) = json(&["verify", "--builtin", "lie-pbw", "--table", t.to_str().unwrap()]);
    assert_eq!(code, EXIT_FALSE);
    assert!(v["gs"]["nontrivial"].as_u64().unwrap() > 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gsq");
    let status = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap().status.code().unwrap();
    assert_eq!(status(&["verify", "--builtin", "uq-plus", "--n", "2"]), EXIT_TRUE);
    assert_eq!(status(&["verify", &fixture("square.gsq")]), EXIT_FALSE);
    assert_eq!(status(&["verify", "--n"]), EXIT_USAGE);
    assert_eq!(status(&["complete", &fixture("square.gsq"), "--max-rounds", "1"]), EXIT_LIMIT);
}

#[test]
fn thread_override_from_environment() {
    let bin = env!("CARGO_BIN_EXE_gsq");
    let run = |val: &str| {
        std::process::Command::new(bin)
            .args(["verify", "--builtin", "uq-plus", "--n", "2"])
            .env(gsq::cli::THREADS_ENV, val)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(run("2"), EXIT_TRUE);
    assert_eq!(run("many"), EXIT_USAGE);
}
