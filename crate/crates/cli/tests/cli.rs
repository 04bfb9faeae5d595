use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("t5free").chain(args.iter().copied());
    let code = t5free_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    assert!(!out.is_empty(), "no output; stderr: {err}");
    (code, serde_json::from_str(&out).unwrap())
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_t5free"))
}

const T5: &str = "n=5;triples=0-1-2,0-1-3,0-1-4,2-3-4";

#[test]
fn check_t5_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t5.txt");
    std::fs::write(&path, format!("{T5}\n")).unwrap();
    let (code, r) = json(&["check", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["contains_t5"], true);
    assert_eq!(r["result"]["semibipartite"], false);
    assert_eq!(r["result"]["independent_neighborhoods"], false);
    assert_eq!(r["config"]["argv"][0], "check");

    // The hex form of the same system.
    let (_, r) = json(&["check", "--system", "n=5;edges=1302000000000000"]);
    assert_eq!(r["result"]["system"], T5);
}

#[test]
fn check_semibipartite_system() {
    let (code, r) = json(&["check", "--system", "n=4;triples=0-1-2,0-1-3"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["semibipartite"], true);
    assert_eq!(r["result"]["contains_t5"], false);
    assert!(r["result"]["partition"]["x"].is_array());
}

#[test]
fn census_report() {
    let (code, r) = json(&["census", "--n", "5", "--workers", "2"]);
    assert_eq!(code, 0);
    let res = &r["result"];
    assert_eq!(res["i_n"], res["t5_free"]);
    assert_eq!(res["i_n"], 653);
    assert_eq!(res["total"], 1024);
    assert_eq!(res["cache"], "disabled");
}

#[test]
fn census_csv_columns() {
    let (code, out, _) = run(&["census", "--n", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,total,i_n,s_n,extra,t5_free,max_t5_free_edges"));
    assert_eq!(lines.next(), Some("4,16,16,15,1,16,4"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["census", "--n", "5", "--workers", "3"];
    assert_eq!(run(&args).1, run(&args).1);
    let (_, one) = json(&["census", "--n", "5", "--workers", "1"]);
    let (_, four) = json(&["census", "--n", "5", "--workers", "4"]);
    assert_eq!(one["result"], four["result"]);
    let args = ["construct", "--family", "ns", "--n", "10", "--seed", "9"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn timings_only_on_request() {
    let (_, r) = json(&["census", "--n", "4"]);
    assert!(r.get("timings").is_none());
    let (_, r) = json(&["census", "--n", "4", "--timings"]);
    assert!(r["timings"]["elapsed_ms"].is_u64());
}

#[test]
fn text_format_names_claims() {
    let (code, out, _) = run(&["census", "--n", "4", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("command: census\nclaim: "));
    assert!(out.contains("result.s_n: 15"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["census"]).0, 2);
    assert_eq!(run(&["census", "--n", "7"]).0, 2);
    assert_eq!(run(&["check"]).0, 2);
    assert_eq!(run(&["check", "--system", "n=5;triples=0-1-9"]).0, 2);
    assert_eq!(run(&["check", "--input", "/nonexistent/file"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "secondary"]).0, 2);
    assert_eq!(run(&["verify", "--only", "no-such-criterion"]).0, 2);
    assert_eq!(run(&["bounds", "--check", "entropy", "--n", "10", "--x", "1/2"]).0, 2);
    assert_eq!(run(&["census", "--n", "4", "--workers", "0"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn failed_checks_exit_1() {
    let (code, r) = json(&["bounds", "--check", "hierarchy", "--alpha", "0.1", "--beta", "0.1", "--mu", "0.1", "--eta", "0.1"]);
    assert_eq!(code, 1);
    assert_eq!(r["passed"], false);
    let (code, _) = json(&["bounds", "--check", "hierarchy"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_selected_criteria() {
    let (code, r) = json(&["verify", "--suite", "primary", "--only", "b3-argmax", "--only", "8"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["criteria"].as_array().unwrap().len(), 2);
    assert_eq!(r["passed"], true);
    let (code, out, _) = run(&["verify", "--only", "5", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("id,name,passed,detail\n5,b3-argmax,true,"));
}

#[test]
fn bound_checks() {
    let (code, r) = json(&["bounds", "--check", "entropy", "--n", "64", "--x", "0.25"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["exact"], serde_json::json!([true, true]));
    let (code, r) = json(&["bounds", "--check", "chernoff", "--m", "100", "--p", "0.5", "--a", "10"]);
    assert_eq!(code, 0);
    assert!((r["result"]["bound"].as_f64().unwrap() - (-1f64).exp()).abs() < 1e-12);
    let (code, r) = json(&["bounds", "--check", "matchcount", "--n-total", "3", "--m", "1"]);
    assert_eq!(code, 0);
    assert_eq!((r["result"]["exact"].as_str(), r["result"]["bound"].as_str()), (Some("4"), Some("5")));
    let (code, _) = json(&["bounds", "--check", "matching", "--n", "20", "--samples", "50"]);
    assert_eq!(code, 0);
    let (code, r) = json(&["bounds", "--check", "triangle", "--m", "200", "--l", "2"]);
    assert_eq!(code, 0, "{r}");
    let (code, r) = json(&["bounds", "--check", "sbound", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["exact_s"], "476");
    let (code, r) = json(&["bounds", "--check", "lowdense", "--system", "n=6;triples=", "--x-set", "0,1,2,3", "--mu", "0.2"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["report"]["conditions"][2]["status"], "VIOLATED");
}

#[test]
fn construct_ns_member_is_t5_free_and_not_semibipartite() {
    let (code, r) = json(&["construct", "--family", "ns", "--n", "9", "--seed", "4"]);
    assert_eq!(code, 0);
    let system = r["result"]["system"].as_str().unwrap().to_string();
    let (_, c) = json(&["check", "--system", &system]);
    assert_eq!(c["result"]["contains_t5"], false);
    assert_eq!(c["result"]["semibipartite"], false);
    let (code, r) = json(&["construct", "--family", "b3", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["edges"], 12);
}

#[test]
fn partition_command() {
    let (code, r) = json(&["partition", "--system", T5]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["d_h"], 1);
    assert!(r["result"]["optimal_partitions"].as_u64().unwrap() >= 1);
}

#[test]
fn extremal_command() {
    let (code, r) = json(&["extremal", "--n", "5", "--budget", "100000"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["completed"], true);
    assert_eq!(r["result"]["lower"], 7);
}

#[test]
fn cache_via_environment() {
    let dir = tempfile::tempdir().unwrap();
    let census = |extra: &[&str]| {
        let o = binary().args(["census", "--n", "5"]).args(extra).env("T5_CACHE_DIR", dir.path()).output().unwrap();
        let v: Value = serde_json::from_slice(&o.stdout).unwrap_or(Value::Null);
        (o.status.code().unwrap(), v, String::from_utf8_lossy(&o.stderr).into_owned())
    };
    let (code, first, _) = census(&[]);
    assert_eq!((code, first["result"]["cache"].as_str()), (0, Some("miss")));
    let (_, second, _) = census(&[]);
    assert_eq!(second["result"]["cache"], "hit");
    assert_eq!(first["result"]["i_n"], second["result"]["i_n"]);
    let (_, third, _) = census(&["--recompute"]);
    assert_eq!(third["result"]["cache"], "match");

    // Edited counts are detected rather than reused.
    let file = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let text = std::fs::read_to_string(&file).unwrap().replace("\"i_n\": 653", "\"i_n\": 654");
    std::fs::write(&file, text).unwrap();
    let (code, _, err) = census(&[]);
    assert_eq!(code, 1);
    assert!(err.contains("checksum"), "{err}");
}

#[test]
fn binary_exit_codes() {
    assert_eq!(binary().args(["census", "--n", "9"]).output().unwrap().status.code(), Some(2));
    assert_eq!(binary().args(["verify", "--only", "4"]).output().unwrap().status.code(), Some(1));
    let ok = binary().args(["check", "--system", T5]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn verify_output_is_byte_identical() {
    let args = ["verify", "--only", "1", "--only", "9", "--only", "12"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    assert!(!a.contains("timings"));
}
