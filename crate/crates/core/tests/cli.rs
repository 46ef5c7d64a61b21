mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use common::Q;
use nclindep::cli::{self, EXIT_DEPENDENT, EXIT_DISAGREEMENT, EXIT_INDEPENDENT, EXIT_USAGE, SEED_ENV};
use nclindep::locdep::json::verdict_from_json;
use nclindep::locdep::{verify_witness, Status};
use nclindep::matexact::json::tuple_from_json;
use nclindep::ncparse::parse_poly;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_nclindep"));
    c.env_remove(SEED_ENV);
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nclindep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn generators() {
    let o = run(&["gen", "st", "2"]);
    assert_eq!(o.status.code(), Some(EXIT_DEPENDENT));
    assert_eq!(stdout(&o).trim(), "X1*X2 - X2*X1");
    assert_eq!(stdout(&run(&["gen", "capelli", "2"])).trim(), "X1*X3*X2 - X2*X3*X1");
    assert_eq!(
        stdout(&run(&["gen", "central"])).trim(),
        "X1*X2*X1*X2 - X1*X2^2*X1 - X2*X1^2*X2 + X2*X1*X2*X1"
    );
    assert_eq!(stdout(&run(&["embed2", "X3"])).trim(), "X1*X2^2 - 2*X2*X1*X2 + X2^2*X1");
    assert_eq!(run(&["gen", "st", "0"]).status.code(), Some(EXIT_USAGE));
}

#[test]
fn global_verdicts_and_exit_codes() {
    let o = run(&["--output", "json", "depend", "global", "X1", "2*X1"]);
    assert_eq!(o.status.code(), Some(EXIT_DEPENDENT));
    let v = json(&o);
    assert_eq!(v["status"], "dependent");
    assert_eq!(v["coefficients"], serde_json::json!(["2", "-1"]));

    let o = run(&["depend", "global", "X1*X2", "X2*X1", "X1*X2 - X2*X1"]);
    assert_eq!(o.status.code(), Some(EXIT_DEPENDENT));
    assert!(stdout(&o).contains("1, -1, -1"));

    for method in ["global", "fock", "razmyslov"] {
        let o = run(&["depend", method, "X1", "X2"]);
        assert_eq!(o.status.code(), Some(EXIT_INDEPENDENT), "{method}");
    }
}

#[test]
fn identity_checks() {
    let st4 = stdout(&run(&["gen", "st", "4"]));
    let st3 = stdout(&run(&["gen", "st", "3"]));
    assert_eq!(run(&["pi-check", "--size", "2", st4.trim()]).status.code(), Some(EXIT_DEPENDENT));
    assert_eq!(run(&["pi-check", "--size", "2", st3.trim()]).status.code(), Some(EXIT_INDEPENDENT));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["bogus"]).status.code(), Some(EXIT_USAGE));
    let o = run(&["depend", "global", "X1X2"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 2"));
    assert_eq!(run(&["depend", "global", "@/nonexistent/file"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(run(&["--prime", "9", "depend", "global", "X1"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(run(&["--prime", "7", "depend", "global", "1/7*X1"]).status.code(), Some(EXIT_USAGE));
}

#[test]
fn prime_field_mode() {
    let o = run(&["--prime", "7", "--output", "json", "depend", "global", "X1", "8*X1"]);
    assert_eq!(o.status.code(), Some(EXIT_DEPENDENT));
    let (v, _) = verdict_from_json(nclindep::scalar::Field::prime(7).unwrap(), &json(&o)).unwrap();
    assert_eq!(v.status, Status::Dependent);
}

#[test]
fn polynomial_files() {
    let f = scratch("family.txt", "# proportional pair\nX1\n\n2*X1 # doubled\n");
    let arg = format!("@{}", f.display());
    let o = run(&["--output", "json", "depend", "fock", &arg]);
    assert_eq!(o.status.code(), Some(EXIT_DEPENDENT));
    assert_eq!(json(&o)["coefficients"], serde_json::json!(["2", "-1"]));
}

#[test]
fn evaluation_at_a_json_tuple() {
    let f = scratch(
        "tuple.json",
        r#"[{"d": 2, "entries": [["1", "2"], ["3", "4"]]}, {"d": 2, "entries": [[0, 1], [1, 0]]}]"#,
    );
    let o = run(&["--output", "json", "eval", "--at", f.to_str().unwrap(), "X1*X2 - 2"]);
    assert_eq!(o.status.code(), Some(EXIT_DEPENDENT), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["d"], 2);
    assert_eq!(v["entries"], serde_json::json!([["0", "1"], ["4", "1"]]));

    let o = run(&["eval", "--at", f.to_str().unwrap(), "X3"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
}

#[test]
fn sampler_output_is_deterministic_and_round_trips() {
    let args = ["--seed", "17", "--output", "json", "depend", "local", "--size", "2", "X1*X2", "X2*X1", "1"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(EXIT_INDEPENDENT));

    let value = json(&a);
    let (v, bounds) = verdict_from_json(Q, &value).unwrap();
    assert_eq!(v.status, Status::Independent);
    assert!(bounds.is_some());
    let fs: Vec<_> = ["X1*X2", "X2*X1", "1"].iter().map(|s| parse_poly(s, Q).unwrap()).collect();
    assert!(verify_witness(&fs, v.witness.as_ref().unwrap()).unwrap());
    let tuple = tuple_from_json(Q, &value["witness"]["matrices"]).unwrap();
    assert_eq!(&tuple, &v.witness.unwrap().tuple);

    let o = run(&["--output", "json", "depend", "directional", "--size", "2", "X1", "X2"]);
    let (v, _) = verdict_from_json(Q, &json(&o)).unwrap();
    assert!(v.witness.unwrap().direction.is_some());
}

#[test]
fn seed_from_environment_unless_flag_given() {
    let args = ["--output", "json", "depend", "local", "--size", "3", "X1", "X2", "X1*X2"];
    let env = |seed: &str| bin().env(SEED_ENV, seed).args(args).output().unwrap().stdout;
    let flag = |seed: &str| {
        let mut a = vec!["--seed", seed];
        a.extend(args);
        run(&a).stdout
    };
    assert_eq!(env("5"), flag("5"));
    assert_ne!(flag("5"), flag("6"));
    let overridden = bin().env(SEED_ENV, "6").args(["--seed", "5"]).args(args).output().unwrap().stdout;
    assert_eq!(overridden, flag("5"));
}

#[test]
fn decide_reports_cross_checks() {
    let o = run(&["--output", "json", "decide", "1", "(X1*X2 - X2*X1)*(X1*X2 - X2*X1)"]);
    assert_eq!(o.status.code(), Some(EXIT_INDEPENDENT));
    let v = json(&o);
    assert_eq!(v["bounds"]["s_local_min"], 3);
    assert_eq!(v["local"]["d"], 3);
    assert!(v["cross_checks"].as_array().unwrap().iter().all(|c| c["agreed"] == true));

    let o = run(&["decide", "--no-local", "X1", "0"]);
    assert_eq!(o.status.code(), Some(EXIT_DEPENDENT));
}

#[test]
fn in_process_entry_point() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(["nclindep", "bounds", "X1", "X2"], None, &mut out, &mut err);
    assert_eq!(code, EXIT_DEPENDENT);
    assert!(String::from_utf8(out).unwrap().contains("s_dir_min   = 11"));
    assert_ne!(EXIT_DISAGREEMENT, EXIT_USAGE);
}
