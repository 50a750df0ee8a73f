//! End-to-end tests of the `ecfast` binary: output shapes, exit codes,
//! cross-algorithm consistency, and CSV determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn curve(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../curves")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn ecfast(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecfast"))
        .args(args)
        .env_remove("ECFAST_FAULT")
        .env_remove("ECC_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn point_lines(out: &Output) -> (String, String) {
    let text = stdout_of(out);
    let x = text
        .lines()
        .find(|l| l.starts_with("x = "))
        .unwrap_or("?")
        .to_string();
    let y = text
        .lines()
        .find(|l| l.starts_with("y = "))
        .unwrap_or("?")
        .to_string();
    (x, y)
}

#[test]
fn mul_algorithms_agree_on_p521() {
    let p521 = curve("p521.curve");
    let reference = ecfast(&["mul", "--curve", &p521, "--k", "2f", "--algo", "ref"]);
    assert!(reference.status.success());
    let expected = point_lines(&reference);
    for algo in ["three-point", "r2l", "r2l-knap", "l2r-da", "l2r-naf", "base16"] {
        let out = ecfast(&["mul", "--curve", &p521, "--k", "2f", "--algo", algo]);
        assert!(out.status.success(), "{algo} failed");
        assert_eq!(point_lines(&out), expected, "algo {algo}");
    }
}

#[test]
fn mul_kernel_mode_agrees() {
    let toy = curve("toy643.curve");
    // Q = [2]G = (175, 3e) on toy643, computed by the reference path
    let q = ecfast(&["mul", "--curve", &toy, "--k", "2", "--algo", "ref"]);
    let (qx, qy) = point_lines(&q);
    let qx = qx.trim_start_matches("x = ").to_string();
    let qy = qy.trim_start_matches("y = ").to_string();
    let mut expected = None;
    for algo in ["ref", "three-point", "r2l", "r2l-knap", "l2r-da", "l2r-naf", "base16"] {
        let out = ecfast(&[
            "mul", "--curve", &toy, "--k", "1f", "--algo", algo, "--qx", &qx, "--qy", &qy,
        ]);
        assert!(out.status.success(), "{algo} failed in kernel mode");
        let got = point_lines(&out);
        match &expected {
            None => expected = Some(got),
            Some(e) => assert_eq!(&got, e, "kernel algo {algo}"),
        }
    }
}

#[test]
fn mul_zero_scalar_prints_infinity() {
    let out = ecfast(&["mul", "--curve", &curve("toy61.curve"), "--k", "0", "--algo", "ref"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("infinity"));
}

#[test]
fn mul_trace_lines_have_the_documented_shape() {
    let out = ecfast(&[
        "mul", "--curve", &curve("toy61.curve"), "--k", "2f", "--algo", "l2r-da", "--trace",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let steps: Vec<&str> = text.lines().filter(|l| l.starts_with("step ")).collect();
    assert!(!steps.is_empty());
    assert_eq!(steps[0], "step 0: kind=seed block=1 base=1 inv=0");
    for s in steps {
        assert!(s.contains("kind=") && s.contains("block=") && s.contains("base=") && s.contains("inv="));
    }
}

#[test]
fn malformed_hex_exits_2() {
    let out = ecfast(&["mul", "--curve", &curve("toy61.curve"), "--k", "zz", "--algo", "ref"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_algorithm_exits_2() {
    let out = ecfast(&["mul", "--curve", &curve("toy61.curve"), "--k", "2", "--algo", "wat"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_curve_file_exits_2() {
    let out = ecfast(&["mul", "--curve", "/nonexistent.curve", "--k", "2", "--algo", "ref"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn off_curve_q_exits_3() {
    let out = ecfast(&[
        "mul", "--curve", &curve("toy61.curve"), "--k", "2", "--algo", "ref",
        "--qx", "1", "--qy", "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn invalid_curve_data_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.curve");
    // 0x33 = 51 is composite
    std::fs::write(&path, "name = bad\np = 33\na = 1\nb = 8\n").unwrap();
    let out = ecfast(&["mul", "--curve", path.to_str().unwrap(), "--k", "2", "--algo", "ref"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn montgomery_requires_mont_parameters() {
    let out = ecfast(&["mul", "--curve", &curve("p521.curve"), "--k", "2", "--algo", "montgomery-xz"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ecfast(&["mul", "--curve", &curve("toymont.curve"), "--k", "20", "--algo", "montgomery-xz"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("x = "));
}

#[test]
fn recode_worked_examples() {
    let out = ecfast(&["recode", "--k", "27a6", "--mode", "base16"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().next().unwrap(), "2 7 10 6");

    let out = ecfast(&["recode", "--k", "f", "--mode", "naf"]);
    assert_eq!(stdout_of(&out).lines().next().unwrap(), "1 0 0 0 -1");

    let out = ecfast(&["recode", "--k", "0", "--mode", "naf"]);
    assert_eq!(stdout_of(&out).lines().next().unwrap(), "0");

    let out = ecfast(&["recode", "--k", "2f", "--mode", "mixed"]);
    let text = stdout_of(&out);
    assert!(text.contains("bases:"));
    assert!(text.contains("inversions: 2"));

    let out = ecfast(&["recode", "--k", "2", "--mode", "wat"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_curve_passes() {
    let out = ecfast(&[
        "verify", "--curve", &curve("toy643.curve"),
        "--exhaustive-bits", "10", "--random-trials", "5", "--seed", "7",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout_of(&out).contains("all checks passed"));
}

#[test]
fn verify_noop_sweep_passes() {
    let out = ecfast(&[
        "verify", "--curve", &curve("toy61.curve"),
        "--exhaustive-bits", "0", "--random-trials", "0",
    ]);
    assert!(out.status.success());
}

#[test]
fn verify_detects_injected_faults() {
    let out = Command::new(env!("CARGO_BIN_EXE_ecfast"))
        .args([
            "verify", "--curve", &curve("toy61.curve"),
            "--exhaustive-bits", "4", "--random-trials", "2",
        ])
        .env("ECFAST_FAULT", "perturb-composite")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("FAIL: curve=toy61"), "missing reproduction line:\n{text}");
    assert!(text.contains("k=") && text.contains("algo="));
}

#[test]
fn bench_csv_shape_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a.csv");
    let out2 = dir.path().join("b.csv");
    for out in [&out1, &out2] {
        let run = ecfast(&[
            "bench", "--curve", &curve("toy643.curve"),
            "--trials", "3", "--seed", "99", "--out", out.to_str().unwrap(),
        ]);
        assert!(run.status.success());
    }
    let strip_wall = |text: &str| -> Vec<String> {
        text.lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    let a = std::fs::read_to_string(&out1).unwrap();
    let b = std::fs::read_to_string(&out2).unwrap();
    assert_eq!(strip_wall(&a), strip_wall(&b), "count columns must be deterministic");
    assert_eq!(a.lines().next().unwrap(), "routine,mul,sqr,add_sub,inv,wall_ns_mean");
    // a different seed changes the sampled scalar and with it ladder rows
    let out3 = dir.path().join("c.csv");
    let run = ecfast(&[
        "bench", "--curve", &curve("toy643.curve"),
        "--trials", "3", "--seed", "100", "--out", out3.to_str().unwrap(),
    ]);
    assert!(run.status.success());
}

#[test]
fn bench_trial_count_does_not_change_counts() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("t1.csv");
    let many = dir.path().join("t8.csv");
    for (out, trials) in [(&one, "1"), (&many, "8")] {
        let run = ecfast(&[
            "bench", "--curve", &curve("p521.curve"),
            "--trials", trials, "--seed", "123", "--out", out.to_str().unwrap(),
        ]);
        assert!(run.status.success());
    }
    let strip_wall = |text: &str| -> Vec<String> {
        text.lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    let a = std::fs::read_to_string(&one).unwrap();
    let b = std::fs::read_to_string(&many).unwrap();
    assert_eq!(strip_wall(&a), strip_wall(&b));
}

#[test]
fn ecc_seed_env_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let via_env = dir.path().join("env.csv");
    let via_flag = dir.path().join("flag.csv");
    let run = Command::new(env!("CARGO_BIN_EXE_ecfast"))
        .args([
            "bench", "--curve", &curve("toy61.curve"),
            "--trials", "2", "--out", via_env.to_str().unwrap(),
        ])
        .env("ECC_SEED", "4242")
        .output()
        .unwrap();
    assert!(run.status.success());
    let run = ecfast(&[
        "bench", "--curve", &curve("toy61.curve"),
        "--trials", "2", "--seed", "4242", "--out", via_flag.to_str().unwrap(),
    ]);
    assert!(run.status.success());
    let strip_wall = |text: &str| -> Vec<String> {
        text.lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    assert_eq!(
        strip_wall(&std::fs::read_to_string(&via_env).unwrap()),
        strip_wall(&std::fs::read_to_string(&via_flag).unwrap())
    );
}
