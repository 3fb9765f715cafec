use std::path::Path;
use std::process::{Command, Output};

fn bigal(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bigal"))
        .args(args)
        .env("BIGAL_OUT_DIR", out)
        .output()
        .expect("runs")
}

fn cert(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_hopf_exit_codes() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(bigal(d.path(), &["verify-hopf", "--n", "2"]).status.code(), Some(0));
    let c = cert(&d.path().join("verify-hopf-n2.json"));
    assert_eq!(c["passed"], true);
    assert!(c["checks"].as_array().unwrap().iter().any(|c| c["subject"].as_str().unwrap().contains("T_q^-1")));
    assert_eq!(bigal(d.path(), &["verify-hopf", "--n", "1"]).status.code(), Some(2));
    assert_eq!(bigal(d.path(), &["verify-hopf", "--n", "3", "--conductor", "4"]).status.code(), Some(2));
    assert_eq!(bigal(d.path(), &["verify-hopf", "--n", "2", "--chi1", "1", "-1", "--chi2", "-1", "1"]).status.code(), Some(0));
    assert_eq!(bigal(d.path(), &["verify-hopf", "--n", "3", "--chi1", "1", "q", "--chi2", "q", "1"]).status.code(), Some(0));
    assert_eq!(bigal(d.path(), &["verify-hopf", "--n", "3", "--chi1", "1", "q", "--chi2", "q^2", "1"]).status.code(), Some(2));
    // allowed by the well-definedness condition, but x^n = 0 is not compatible with Δ
    let o = bigal(d.path(), &["verify-hopf", "--n", "2", "--chi1", "-1", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("[FAIL] comultiplication is an algebra map"));
    assert_eq!(cert(&d.path().join("verify-hopf-n2.json"))["passed"], false);
    // χ must be a character of Z_n × Z_n
    assert_eq!(bigal(d.path(), &["verify-hopf", "--n", "2", "--chi1", "2", "1"]).status.code(), Some(2));
}

#[test]
fn family_commands() {
    let d = tempfile::tempdir().unwrap();
    let o = bigal(d.path(), &["family", "--kind", "L", "--xi", "1", "--mu", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let o = bigal(d.path(), &["family", "--kind", "K11", "--xi", "1", "--subgroup", "diag", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("K11 needs ξ = 0"));
    let o = bigal(d.path(), &["family", "--kind", "TGA", "--subgroup", "trivial", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = bigal(d.path(), &["family", "--kind", "L", "--xi", "1", "--n", "3", "--g-twist", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let c = cert(&d.path().join("family-n3.json"));
    assert!(c["result"]["g_twist"]["target"].as_str().unwrap().contains("ξ=-1 - z"), "{}", c["result"]);
}

#[test]
fn grouplaw_and_config_round_trip() {
    let d = tempfile::tempdir().unwrap();
    let toml_path = d.path().join("run.toml");
    std::fs::write(&toml_path, "n = 2\nlhs = [\"2\", \"1\"]\nrhs = [\"3\", \"5\"]\n").unwrap();
    let o = bigal(d.path(), &["grouplaw", "--config", toml_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let first = cert(&d.path().join("grouplaw-n2.json"));
    assert_eq!(first["result"]["product"]["xi"], "6");
    assert_eq!(first["result"]["product"]["mu"], "14");

    // re-run from the echoed config
    let echo = d.path().join("echo.json");
    std::fs::write(&echo, first["config"].to_string()).unwrap();
    let again = tempfile::tempdir().unwrap();
    let o = bigal(again.path(), &["grouplaw", "--config", echo.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let second = cert(&again.path().join("grouplaw-n2.json"));
    assert_eq!(first["checks"], second["checks"]);
    assert_eq!(first["result"], second["result"]);
    assert_eq!(first["config"], second["config"]);
}

#[test]
fn bad_config_is_input_error() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path().join("bad.json");
    std::fs::write(&p, "{\"n\": 2, \"nonsense\": 1}").unwrap();
    assert_eq!(bigal(d.path(), &["twist", "--config", p.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bigal(d.path(), &["grouplaw", "--n", "2", "--lhs", "0", "1", "--rhs", "1", "0"]).status.code(), Some(2));
    assert_eq!(bigal(d.path(), &["grouplaw", "--n", "2", "--lhs", "1/0", "1", "--rhs", "1", "0"]).status.code(), Some(2));
}

#[test]
fn out_flag_beats_env() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let o = bigal(env_dir.path(), &["twist", "--n", "2", "--psi", "1,0;0,1", "--out", flag_dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(flag_dir.path().join("twist-n2.json").exists());
    assert!(!env_dir.path().join("twist-n2.json").exists());
}

#[test]
fn atlas_csv() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(bigal(d.path(), &["atlas", "--n", "2"]).status.code(), Some(0));
    let csv = std::fs::read_to_string(d.path().join("atlas-n2.csv")).unwrap();
    let mut r = csv::Reader::from_reader(csv.as_bytes());
    assert_eq!(r.headers().unwrap().len(), 9);
    let rows: Vec<_> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 5 * 4 + 3);
    assert!(rows.iter().all(|x| &x[2] == "yes" && &x[5] == "yes" && &x[6] == "yes" && &x[7] == "yes"));

    assert_eq!(bigal(d.path(), &["atlas", "--n", "2", "--xi"]).status.code(), Some(0));
    let csv = std::fs::read_to_string(d.path().join("atlas-n2.csv")).unwrap();
    let rows: Vec<_> = csv::Reader::from_reader(csv.as_bytes()).records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 20);
    assert!(rows.iter().all(|x| x[0].contains("δ=")));
}

#[test]
fn coideal_and_equivalence() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(bigal(d.path(), &["coideal", "--n", "3", "--xi", "q", "--subgroup", "diag"]).status.code(), Some(0));
    let o = bigal(d.path(), &["coideal", "--n", "2", "--delta", "1,0", "--subgroup", "whole", "--psi", "1,1;0,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    // ξ-type needs (g,g) ∈ F
    assert_eq!(bigal(d.path(), &["coideal", "--n", "2", "--xi", "1", "--subgroup", "trivial"]).status.code(), Some(2));

    let o = bigal(d.path(), &["bigal-equiv", "--n", "2", "--lhs", "3", "1", "--rhs", "-3", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let c: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(c["result"]["equivalent"], true);
    let o = bigal(d.path(), &["bigal-equiv", "--n", "2", "--lhs", "1", "0", "--rhs", "1", "1", "--json"]);
    let c: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(c["result"]["equivalent"], false);
}
