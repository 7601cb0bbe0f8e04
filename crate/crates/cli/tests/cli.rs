use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn geodesia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geodesia"))
        .args(args)
        .env_remove("GEODESIA_SOLVE_CAP")
        .env_remove("GEODESIA_NODE_BUDGET")
        .env_remove("GEODESIA_GEODESIC_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const DOUBLE_STAR: &str = "6 5\n0 1\n1 2\n2 3\n1 4\n2 5\n";

#[test]
fn sg_double_star_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ds22.txt", DOUBLE_STAR);
    let out = geodesia(&["sg", &f]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("Sg = 4, basis {0,3,4,5}\nbasis 0 3 4 5\n"), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(" : ")).count(), 6);
}

#[test]
fn sg_two_geodetic_c5() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = geodesia(&["sg", &f, "--two-geodetic"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("Sg' = 3"));
}

#[test]
fn sg_geodetic_number() {
    let out = geodesia(&["sg", "C4", "--geodetic"]);
    assert_eq!(stdout(&out), "g = 2, basis {0,2}\n");
}

#[test]
fn sg_error_statuses() {
    let dir = TempDir::new().unwrap();
    let disconnected = write(&dir, "d.txt", "2 0\n");
    let out = geodesia(&["sg", &disconnected]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not connected"));

    let garbage = write(&dir, "bad.txt", "3 1\n0 x\n");
    assert_eq!(geodesia(&["sg", &garbage]).status.code(), Some(2));
    assert_eq!(geodesia(&["sg", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(geodesia(&["sg", "C5", "--solve-cap", "4"]).status.code(), Some(3));
    assert_eq!(geodesia(&["sg", "C6", "--node-budget", "1"]).status.code(), Some(3));
    assert_eq!(geodesia(&["sg", "C5", "--solve-cap", "0"]).status.code(), Some(2));
}

#[test]
fn flags_win_over_environment() {
    let run = |env: &str, args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_geodesia"))
            .args(args)
            .env("GEODESIA_SOLVE_CAP", env)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("3", &["sg", "C5"]), Some(3));
    assert_eq!(run("3", &["sg", "C5", "--solve-cap", "5"]), Some(0));
}

#[test]
fn product_example_instance() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("p.txt");
    let out = geodesia(&["product", "corona", "C3", "P2", "K4", "C5", "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("14 "));
    assert!(text.contains("variant corona\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 14);

    let solved = geodesia(&["sg", out_path.to_str().unwrap()]);
    assert!(stdout(&solved).starts_with("Sg = 9,"));
}

#[test]
fn product_small_cases() {
    let edge = stdout(&geodesia(&["product", "edge", "K2", "K1"]));
    assert!(edge.starts_with("3 3\n0 1\n0 2\n1 2\n"));

    let dir = TempDir::new().unwrap();
    let p4 = dir.path().join("p4.txt");
    geodesia(&["product", "neighborhood", "P2", "--uniform", "K1", "-o", p4.to_str().unwrap()]);
    let text = fs::read_to_string(&p4).unwrap();
    assert!(text.starts_with("4 3\n"));
    assert_eq!(stdout(&geodesia(&["sg", p4.to_str().unwrap()])).lines().next(), Some("Sg = 2, basis {2,3}"));
}

#[test]
fn product_arity_mismatch() {
    let out = geodesia(&["product", "corona", "C3", "P2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("3 copies"));
    assert_eq!(geodesia(&["product", "spiral", "C3", "--uniform", "P2"]).status.code(), Some(2));
}

#[test]
fn audit_default_contains_example_verdict() {
    let out = geodesia(&["audit", "--default", "--format", "tsv"]);
    let text = stdout(&out);
    assert!(text.starts_with("claim\tinstance\tverdict\texpected\tactual\twitness\n"));
    assert!(text.contains("Theorem1\tcorona C3 [P2,K4,C5]\tPASS\t9\t9\t-\n"));
    let failed = text.lines().any(|l| l.split('\t').nth(2) == Some("FAIL"));
    assert_eq!(out.status.code(), Some(if failed { 1 } else { 0 }));
}

#[test]
fn audit_is_deterministic() {
    let a = geodesia(&["audit", "--default", "--format", "csv", "--claims", "Theorem1,Lemma0,Result1"]);
    let b = geodesia(&["audit", "--default", "--format", "csv", "--claims", "Theorem1,Lemma0,Result1"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("claim,instance,verdict,expected,actual,witness,upper_bound,notes\n"));
}

fn audit_config(dir: &TempDir, body: &str) -> String {
    write(dir, "suite.toml", body)
}

#[test]
fn audit_metric_only_config() {
    let dir = TempDir::new().unwrap();
    let cfg = audit_config(
        &dir,
        "claims = [\"Prop1\"]\n[[instance]]\nkind = \"product\"\nvariant = \"corona\"\nbase = \"C4\"\nuniform = \"K4\"\n",
    );
    let out = geodesia(&["audit", &cfg]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("1 passed, 0 failed, 0 skipped\n"));
}

#[test]
fn audit_oversized_product_skips() {
    let dir = TempDir::new().unwrap();
    let cfg = audit_config(
        &dir,
        "[[instance]]\nkind = \"product\"\nvariant = \"corona\"\nbase = \"C5\"\nuniform = \"K9\"\nclaims = [\"Theorem1\", \"Prop1\"]\n",
    );
    let out = geodesia(&["audit", &cfg, "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Theorem1\tcorona C5 K9\tSKIPPED(resource-cap)"), "{text}");
    assert!(text.contains("Prop1\tcorona C5 K9\tPASS"));
}

#[test]
fn audit_sample_seed_flag() {
    let dir = TempDir::new().unwrap();
    let cfg =
        audit_config(&dir, "seed = 1\n[[instance]]\nkind = \"sample\"\ncount = 3\norder = 6\nclaims = [\"Lemma0\"]\n");
    let one = stdout(&geodesia(&["audit", &cfg, "--format", "tsv"]));
    let again = stdout(&geodesia(&["audit", &cfg, "--format", "tsv", "--seed", "1"]));
    let other = stdout(&geodesia(&["audit", &cfg, "--format", "tsv", "--seed", "2"]));
    assert_eq!(one, again);
    assert!(one.contains("sample1#0"));
    assert!(other.contains("sample2#0"));
}

#[test]
fn audit_bad_config() {
    let dir = TempDir::new().unwrap();
    let cfg = audit_config(&dir, "[[instance]]\nkind = \"graph\"\ngraph = \"Q7\"\n");
    assert_eq!(geodesia(&["audit", &cfg]).status.code(), Some(2));
    let cfg = audit_config(&dir, "claims = [\"Theorem9\"]\n");
    assert_eq!(geodesia(&["audit", &cfg]).status.code(), Some(2));
    assert_eq!(geodesia(&["audit"]).status.code(), Some(2));
}

#[test]
fn dot_export() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ds22.txt", DOUBLE_STAR);
    let dot = stdout(&geodesia(&["dot", &f]));
    assert_eq!(dot.matches("[label=").count(), 6);
    assert_eq!(dot.matches("--").count(), 5);

    let labeled = dir.path().join("corona.txt");
    geodesia(&["product", "corona", "P2", "--uniform", "K1", "-o", labeled.to_str().unwrap()]);
    let dot = stdout(&geodesia(&["dot", labeled.to_str().unwrap()]));
    assert_eq!(dot.matches("class=\"base\"").count(), 2);
    assert_eq!(dot.matches("class=\"satellite\"").count(), 2);

    let empty = write(&dir, "empty.txt", "");
    let out = geodesia(&["dot", &empty]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty"));
}

#[test]
fn generate_round_trips_through_sg() {
    let text = stdout(&geodesia(&["generate", "DS2-2"]));
    assert_eq!(text, "6 5\n0 1\n1 2\n1 4\n2 3\n2 5\n");
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "g.txt", &text);
    assert!(Path::new(&f).exists());
    assert!(stdout(&geodesia(&["sg", &f])).starts_with("Sg = 4, basis {0,3,4,5}"));
}
