use std::io::Write;
use std::process::{Command as Process, Stdio};

use macaulay_cli::{parse_request, run, CliError, Command, Format, Input};
use macaulay_core::arith::rat;
use macaulay_core::io::parse_input;

const TWO_PURE: &str = "n=3\ny[0,0,2]\ny[0,1,1] - y[1,0,1]\ny[0,2,0] - y[1,1,0]";
const FAMILY: &str = "n=2 params=a\ny[0,2]\ny[1,1] - a*y[0,1]\ny[2,0] - a*y[1,0]";

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_macaulay"))
}

#[test]
fn parses_flags() {
    let req = parse_request(["generators", "--set", "a=0", "--seed", "7", "--format", "json", "sys.pds"]).unwrap();
    assert_eq!(req.command, Command::Generators);
    assert_eq!(req.input, Input::Path("sys.pds".into()));
    assert_eq!(req.seed, 7);
    assert_eq!(req.format, Format::Json);
    assert_eq!(req.specialize, vec![("a".to_string(), rat(0))]);
    let req = parse_request(["torsion-chain", "-"]).unwrap();
    assert_eq!(req.input, Input::Stdin);
    assert_eq!(req.format, Format::Text);
    let req = parse_request(["full", "-e", "n=1\ny[1]"]).unwrap();
    assert_eq!(req.input, Input::Inline("n=1\ny[1]".into()));
}

#[test]
fn rejects_bad_requests() {
    assert!(matches!(parse_request(["bogus", "x.pds"]), Err(CliError::Usage(_))));
    assert!(matches!(parse_request(["full"]), Err(CliError::Usage(_))));
    assert!(matches!(parse_request(["full", "--set", "a", "x"]), Err(CliError::Usage(_))));
    assert!(matches!(parse_request(["--help"]), Err(CliError::Help(_))));
}

#[test]
fn json_is_deterministic() {
    let req = parse_request(["full", "--format", "json", "-e", TWO_PURE]).unwrap();
    let a = run(&req).unwrap().to_json();
    let b = run(&req).unwrap().to_json();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["generators"]["num_generators"], 1);
    assert_eq!(v["delocalization"]["qprime"], 2);
}

#[test]
fn echoed_input_parses_back() {
    let report = run(&parse_request(["characters", "--set", "a=2", "-e", FAMILY]).unwrap()).unwrap();
    let back = parse_input(&report.input).unwrap();
    let direct = parse_input(FAMILY).unwrap().specialize("a", &rat(2)).unwrap();
    assert_eq!(back, direct);
}

#[test]
fn parameters_skip_rational_stages() {
    let report = run(&parse_request(["full", "-e", FAMILY]).unwrap()).unwrap();
    assert!(report.purity.is_none());
    assert!(report.warnings.iter().any(|w| w.contains("--set")));
    assert_eq!(report.generators.unwrap().num_generators, 1);
}

#[test]
fn impure_full_run_continues_on_pure_part() {
    let report = run(&parse_request(["full", "-e", "n=3\ny[0,0,2]\ny[0,1,1]\ny[1,0,1]"]).unwrap()).unwrap();
    assert!(!report.purity.as_ref().unwrap().pure);
    assert!(report.pure_part.as_ref().unwrap().contains(&"y_3".to_string()));
    assert!(report.warnings.iter().any(|w| w.contains("pure part")));
}

#[test]
fn exit_codes() {
    let out = bin().args(["generators", "-e", TWO_PURE]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("minimal generators: 1"));
    let out = bin().args(["bogus", "-e", TWO_PURE]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["full", "-e", "n=2\ny[0,2\n"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["full", "/nonexistent/system.pds"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["--help"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reads_stdin() {
    let mut child = bin()
        .args(["characters", "--format", "json", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(TWO_PURE.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["characters"]["codim"], 2);
}
