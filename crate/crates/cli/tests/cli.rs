use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn witt(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_witt")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let r = witt(&all);
    serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout))
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn eval_in_w1_of_z_mod_4() {
    let r = witt(&["eval", "--base", "Z", "--pi", "2", "--len", "1", "--alg", "Z/4", "--expr", "(1,0)+(1,0)"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout.lines().next(), Some("(2,3)"));
    assert!(r.stdout.contains("W_1 (traditional W_2)"));
}

#[test]
fn eval_json_shape() {
    let v = json(&["eval", "--pi", "2", "--len", "1", "--expr", "(1,0)*(1,0) + 3"]);
    assert_eq!(v["components"], serde_json::json!(["4", "-6"]));
    assert_eq!(v["ghost"], serde_json::json!(["4", "4"]));
    assert_eq!(v["context"]["n"], "1");
    assert_eq!(v["context"]["traditional_length"], "2");
    assert!(v["convention_note"].as_str().unwrap().contains("W_2"));
}

#[test]
fn eval_operators() {
    let first = |args: &[&str]| witt(args).stdout.lines().next().unwrap_or("").to_string();
    assert_eq!(first(&["eval", "--pi", "3", "--len", "2", "--expr", "V(1,2)"]), "(0,1,2)");
    assert_eq!(first(&["eval", "--pi", "2", "--len", "1", "--expr", "[3]*[5]"]), "(15,0)");
    assert_eq!(first(&["eval", "--pi", "2", "--len", "1", "--expr", "gh <1,3>"]), "(1,1)");
    assert_eq!(first(&["eval", "--pi", "2", "--len", "1", "--expr", "gh_1 (1,1)"]), "3");
    assert_eq!(
        first(&["eval", "--base", "Fp[t]:3", "--len", "1", "--expr", "(t,1)+(t,1)"]),
        first(&["eval", "--base", "Fp[t]:3", "--len", "1", "--expr", "2*(t,1)"])
    );
}

#[test]
fn same_request_same_bytes() {
    let args = ["eval", "--pi", "5", "--len", "2", "--alg", "Z/25", "--expr", "(3,1,4)^3 - V(2,2)", "--format", "json"];
    assert_eq!(witt(&args).stdout, witt(&args).stdout);
}

#[test]
fn ghost_and_unghost() {
    let r = witt(&["ghost", "--pi", "2", "--len", "2", "--vector", "1,2,3"]);
    assert_eq!(r.stdout.lines().next(), Some("<1,5,21>"));
    let v = json(&["unghost", "--pi", "2", "--len", "2", "--entries", "1,5,21"]);
    assert_eq!(v["components"], serde_json::json!(["1", "2", "3"]));
    let bad = witt(&["unghost", "--pi", "2", "--len", "1", "--entries", "1,2"]);
    assert_eq!(bad.code, 4);
    let e = json(&["unghost", "--pi", "2", "--len", "1", "--entries", "1,2"]);
    assert_eq!(e["error"]["kind"], "CongruenceViolation");
}

#[test]
fn structural_polynomials() {
    let r = witt(&["structpoly", "--pi", "2", "--len", "1", "--op", "sum"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("S_0 = a0 + b0"));
    assert!(r.stdout.contains("S_1 = -a0*b0 + a1 + b1"));
    let one = witt(&["structpoly", "--pi", "3", "--len", "1", "--op", "negation", "--component", "1"]);
    assert_eq!(one.stdout.lines().next(), Some("N_1 = -a1"));
}

#[test]
fn presentation_of_x_squared() {
    let v = json(&["present", "--pi", "2", "--len", "1", "--vars", "x", "--relation", "x^2"]);
    let text = v.to_string();
    assert!(text.contains("2*theta_0(x)^2*theta_1(x) + 2*theta_1(x)^2"), "{text}");
    assert_eq!(v["generators"], serde_json::json!(["theta_0(x)", "theta_1(x)"]));
}

#[test]
fn coaction_from_spec_file() {
    let v = json(&["coaction", "--spec", &data("lift_x2.json"), "--elem", "x", "--len", "1"]);
    assert_eq!(v["ghost"], serde_json::json!(["x", "x^2 + 2"]));
    assert_eq!(v["components"], serde_json::json!(["x", "1"]));
    let m = json(&["coaction", "--spec", &data("two_primes.json"), "--elem", "x", "--index", "1,1"]);
    assert_eq!(m["ghost"].as_object().unwrap().len(), 4);
    assert_eq!(witt(&["coaction", "--spec", &data("two_primes.json"), "--elem", "x"]).code, 3);
    assert_eq!(witt(&["coaction", "--spec", &data("not_a_lift.json"), "--elem", "x"]).code, 4);
    assert_eq!(witt(&["coaction", "--spec", &data("with_relations.json"), "--elem", "x"]).code, 3);
}

#[test]
fn big_witt_on_divisors_of_six() {
    let v = json(&["bigwitt", "--set", "1,2,3,6", "--components", "1,2,3,4"]);
    assert_eq!(v["classical_ghost"]["6"], "68");
    assert_eq!(v["congruence_failures"], serde_json::json!([]));
    assert_eq!(v["divisors"]["6"], "(1,1)");
    assert_eq!(witt(&["bigwitt", "--set", "1,4"]).code, 3);
}

#[test]
fn verifiers() {
    let ok = witt(&["verify", "--pi", "2", "--len", "2", "--alg", "Z/4", "--check", "equalizer"]);
    assert_eq!(ok.code, 0, "{}", ok.stdout);
    let v = witt(&["verify", "--pi", "2", "--len", "1", "--alg", "Z/8", "--check", "v-sequence", "--j", "2"]);
    assert_eq!(v.code, 0, "{}", v.stdout);
    let s = witt(&["verify", "--pi", "2", "--len", "1", "--alg", "Z/8", "--target", "Z/4", "--check", "surjective"]);
    assert_eq!(s.code, 0, "{}", s.stdout);
    let d = witt(&["verify", "--check", "delta-axioms", "--spec", &data("lift_x2.json"), "--samples", "50"]);
    assert_eq!(d.code, 0, "{}", d.stdout);
    let bad = witt(&["verify", "--check", "delta-axioms", "--spec", &data("not_a_lift.json"), "--samples", "5"]);
    assert_eq!(bad.code, 1);
    assert_eq!(witt(&["verify", "--pi", "2", "--alg", "Z", "--check", "kernel"]).code, 3);
    assert_eq!(witt(&["verify", "--pi", "2", "--alg", "Z/4", "--check", "nonsense"]).code, 2);
}

#[test]
fn selftest_exit_codes() {
    let r = witt(&["selftest", "--suite", "ghost", "--size", "small", "--seed", "7"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("0 failed"));
    let v = json(&["selftest", "--suite", "teichmuller"]);
    let claims = v["claims"].as_array().unwrap();
    let ids: Vec<&str> = claims.iter().map(|c| c["claim_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(claims.iter().all(|c| c["universe_size"].is_string() && !c["paper_ref"].as_str().unwrap().is_empty()));
    assert_eq!(witt(&["selftest", "--suite", "nosuch"]).code, 2);
}

#[test]
fn context_errors() {
    assert_eq!(witt(&["eval", "--pi", "4", "--expr", "1"]).code, 3);
    assert_eq!(witt(&["eval", "--expr", "1"]).code, 3);
    assert_eq!(witt(&["eval", "--base", "Fp[t]:2", "--alg", "Z/4", "--expr", "1"]).code, 3);
    assert_eq!(witt(&["eval", "--pi", "2", "--expr", "(1,"]).code, 2);
    assert_eq!(witt(&["eval", "--pi", "2", "--len", "1", "--expr", "(1,2)+(1,2,3)"]).code, 3);
    assert_eq!(witt(&["frobnicate"]).code, 2);
}
