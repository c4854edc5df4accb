use std::collections::BTreeSet;

use qqueer_cli::{run, GridPoint, Mode, RunConfig, Status, Suite};

fn one(r: usize, s: usize, n: usize, suites: &[Suite]) -> RunConfig {
    RunConfig {
        grid: vec![GridPoint::new(r, s, n)],
        suites: suites.iter().copied().collect(),
        ..RunConfig::default()
    }
}

#[test]
fn empty_suite_set_is_rejected() {
    let cfg = RunConfig {
        suites: BTreeSet::new(),
        ..RunConfig::default()
    };
    assert!(run(&cfg).is_err());
}

#[test]
fn bounds_are_enforced() {
    assert!(run(&one(4, 1, 1, &[Suite::Matrices])).is_err());
    assert!(run(&one(1, 0, 1, &[Suite::Matrices])).is_err());
    let cfg = RunConfig {
        dmax: Some(5),
        ..one(1, 1, 1, &[Suite::Dims])
    };
    assert!(run(&cfg).is_err());
}

#[test]
fn matrices_at_n2() {
    let rep = run(&one(1, 1, 2, &[Suite::Matrices])).unwrap();
    let p = rep.point(1, 1, 2).unwrap();
    let m = p.suite(Suite::Matrices).unwrap();
    assert_eq!(m.status, Status::Pass);
    let ops = m.results["operators"].as_array().unwrap();
    assert!(ops.iter().any(|o| o["size"] == 2 && o["qybe"] == "pass"));
    assert!(p.suite(Suite::Dims).is_none());
}

#[test]
fn fft_at_dmax_2() {
    let cfg = RunConfig {
        dmax: Some(2),
        ..one(1, 1, 1, &[Suite::Fft])
    };
    let rep = run(&cfg).unwrap();
    let v = &rep
        .point(1, 1, 1)
        .unwrap()
        .suite(Suite::Fft)
        .unwrap()
        .results;
    assert_eq!(v["diagonal_invariant_dims"], serde_json::json!([1, 2, 2]));
    assert_eq!(v["off_diagonal_max"], 0);
    assert!(rep.passed);
}

#[test]
fn ceiling_gives_skipped() {
    let cfg = RunConfig {
        ceiling: 10,
        ..one(2, 1, 1, &[Suite::Matrices, Suite::Dims])
    };
    let rep = run(&cfg).unwrap();
    let p = rep.point(2, 1, 1).unwrap();
    assert_eq!(p.suite(Suite::Matrices).unwrap().status, Status::Pass);
    let d = p.suite(Suite::Dims).unwrap();
    assert_eq!(d.status, Status::Skipped);
    assert!(d.reason.as_deref().unwrap().contains("ceiling"));
    assert!(!rep.passed);
}

#[test]
fn modular_dims_agree_with_exact() {
    let exact = run(&one(2, 1, 1, &[Suite::Dims])).unwrap();
    let modular = run(&RunConfig {
        mode: Mode::Modular,
        ..one(2, 1, 1, &[Suite::Dims])
    })
    .unwrap();
    let e = &exact.points[0].suites[0].results;
    let m = &modular.points[0].suites[0].results;
    assert_eq!(m["braided"]["field"], "modular");
    assert_eq!(e["braided"]["rows"], m["braided"]["rows"]);
    assert_eq!(e["factors"][0]["dims"], m["factors"][0]["dims"]);
}

#[test]
fn seed_changes_only_the_sample() {
    let a = run(&RunConfig {
        seed: 3,
        ..one(1, 1, 1, &[Suite::Howe])
    })
    .unwrap();
    let b = run(&RunConfig {
        seed: 3,
        ..one(1, 1, 1, &[Suite::Howe])
    })
    .unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.points[0].suites[0].results["delta_mul"]["seed"], 3);
}

#[test]
fn export_writes_triplets() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = RunConfig {
        export_dir: Some(dir.path().to_path_buf()),
        ..one(1, 1, 1, &[Suite::Actions])
    };
    assert!(run(&cfg).unwrap().passed);
    let f = dir.path().join("r1s1n1/phi_1_1_d10.txt");
    let text = std::fs::read_to_string(f).unwrap();
    for line in text.lines() {
        assert_eq!(line.split(' ').count(), 3);
    }
}

#[test]
fn binary_exit_status_and_cache_env() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let st = std::process::Command::new(env!("CARGO_BIN_EXE_qqueer"))
        .args(["verify-matrices", "--n", "2", "--out"])
        .arg(&out)
        .env("QQUEER_CACHE_DIR", dir.path().join("cache"))
        .status()
        .unwrap();
    assert!(st.success());
    assert!(std::fs::read_to_string(&out)
        .unwrap()
        .contains("\"qybe\": \"pass\""));
    let st = std::process::Command::new(env!("CARGO_BIN_EXE_qqueer"))
        .args(["dims", "--r", "1", "--n", "1", "--dmax", "2"])
        .env("QQUEER_CACHE_DIR", dir.path().join("cache"))
        .stdout(std::process::Stdio::null())
        .status()
        .unwrap();
    assert!(st.success());
    assert!(dir.path().join("cache").read_dir().unwrap().count() > 0);
    let st = std::process::Command::new(env!("CARGO_BIN_EXE_qqueer"))
        .args(["dims", "--dmax", "9"])
        .stderr(std::process::Stdio::null())
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(2));
}
