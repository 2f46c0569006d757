use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn arq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arq")).args(args).output().expect("spawn arq")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value<'a>(report: &'a str, key: &str) -> Option<&'a str> {
    report.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix(": "))
}

fn gproj_args<'a>(cmd: &'a str, alg: &'a str, sub: &'a str) -> Vec<&'a str> {
    vec!["smon", cmd, "-a", alg, "--subcat", sub, "--backend", "frobenius:3"]
}

#[test]
fn knit_gproj() {
    let (alg, sub) = (fixture("cluster_tilted.alg"), fixture("gproj.sub"));
    let dot = std::env::temp_dir().join(format!("arq-gproj-{}.dot", std::process::id()));
    let mut args = gproj_args("knit", &alg, &sub);
    args.extend(["--dot", dot.to_str().unwrap()]);
    let o = arq(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = stdout(&o);
    assert_eq!(value(&r, "objects"), Some("17"));
    assert_eq!(value(&r, "arrows"), Some("21"));
    assert_eq!(value(&r, "status"), Some("pass"));
    let dot = std::fs::read_to_string(&dot).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("dashed"));
}

#[test]
fn knit_second_power_of_dual_numbers() {
    let o = arq(&["smon", "knit", "-a", &fixture("dual_numbers.alg"), "--power", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = stdout(&o);
    assert_eq!(value(&r, "objects"), Some("16"));
    assert_eq!(value(&r, "arrows"), Some("26"));
    assert_eq!(value(&r, "status"), Some("pass"));
}

#[test]
fn cy_check_on_gproj_passes() {
    let (alg, sub) = (fixture("cluster_tilted.alg"), fixture("gproj.sub"));
    let mut args = vec!["smon", "cy-check", "-a", &alg, "--subcat", &sub];
    args.extend(["--d", "3", "--power", "6"]);
    let o = arq(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(value(&stdout(&o), "status"), Some("pass"));
}

#[test]
fn tau_s_of_a_projective_fails() {
    let o = arq(&["smon", "tau-s", "-a", &fixture("dual_numbers.alg"), &fixture("zero_to_a.mor")]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("projective"));
}

#[test]
fn tau_s_of_zero_to_simple() {
    let o = arq(&["smon", "tau-s", "-a", &fixture("dual_numbers.alg"), &fixture("zero_to_s.mor")]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn parse_errors_carry_the_line() {
    let path = std::env::temp_dir().join(format!("arq-bad-{}.alg", std::process::id()));
    std::fs::write(&path, "field Q\nvertex o\narrow x o q\n").unwrap();
    let o = arq(&["algebra", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn algebra_check_reports_dimension() {
    let o = arq(&["algebra", "check", &fixture("cluster_tilted.alg")]);
    assert!(o.status.success());
    let r = stdout(&o);
    assert_eq!(value(&r, "dim"), Some("9"));
    assert_eq!(value(&r, "relations"), Some("3"));
}

#[test]
fn reports_are_byte_stable() {
    let (alg, sub) = (fixture("cluster_tilted.alg"), fixture("gproj.sub"));
    let args = gproj_args("knit", &alg, &sub);
    assert_eq!(arq(&args).stdout, arq(&args).stdout);
    let args = ["smon", "verify", "-a", &fixture("a3.alg")];
    let (a, b) = (arq(&args), arq(&args));
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}
