use std::process::{Command, Output};

fn clonebound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clonebound"))
        .args(args)
        .env_remove("CLONEBOUND_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn sweep_writes_endpoint_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ae.csv");
    let out = clonebound(&[
        "sweep",
        "--curve",
        "ae-lower",
        "--n",
        "1",
        "--l",
        "2,3",
        "--z-min",
        "0",
        "--z-max",
        "1",
        "--steps",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv, "z,L2,L3\n0,0,0\n1.00000000,0,0\n");
}

#[test]
fn sweep_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = clonebound(&[
            "sweep",
            "--curve",
            "re-lower",
            "--n",
            "1",
            "--l",
            "3,5,8,13,39",
            "--steps",
            "401",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        std::fs::read(path).unwrap()
    };
    let a = run("a.csv");
    assert_eq!(a, run("b.csv"));
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().count(), 402);
    assert!(!text.contains('\r'));
    assert!(text
        .lines()
        .last()
        .unwrap()
        .starts_with("1.00000000,0.422649731,"));
}

#[test]
fn sweep_rejects_bad_specs_and_paths() {
    let bad_l = clonebound(&[
        "sweep",
        "--curve",
        "re-lower",
        "--n",
        "3",
        "--l",
        "2",
        "--out",
        "/tmp/x.csv",
    ]);
    assert_eq!(bad_l.status.code(), Some(1));
    let bad_path = clonebound(&[
        "sweep",
        "--curve",
        "re-lower",
        "--n",
        "1",
        "--l",
        "2",
        "--out",
        "/nonexistent/dir/x.csv",
    ]);
    assert_eq!(bad_path.status.code(), Some(1));
    let bad_curve = clonebound(&[
        "sweep", "--curve", "nope", "--n", "1", "--l", "2", "--out", "x",
    ]);
    assert_eq!(bad_curve.status.code(), Some(1));
}

#[test]
fn cloner_reports_measured_and_reference_values() {
    let out = clonebound(&[
        "cloner",
        "--z",
        "0.5",
        "--n",
        "1",
        "--l",
        "2",
        "--kind",
        "asymmetric",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    let re = v["re"].as_f64().unwrap();
    assert!((re - 0.276_393_202_250_021).abs() < 1e-9);
    assert!((v["re_lower_bound"].as_f64().unwrap() - re).abs() < 1e-12);
    assert!((v["ae_lower_bound"].as_f64().unwrap() - v["ae"].as_f64().unwrap()).abs() < 1e-12);
    assert!(v["gram_residual"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["perfect"], "phi");

    let sym = json(&clonebound(&[
        "cloner",
        "--z",
        "0.5",
        "--n",
        "1",
        "--l",
        "2",
        "--kind",
        "symmetric",
    ]));
    assert!((sym["re"].as_f64().unwrap() - 0.278_948_534_082_606).abs() < 1e-9);
}

#[test]
fn zero_split_matches_phi_asymmetric() {
    let split = json(&clonebound(&[
        "cloner",
        "--z",
        "0.4",
        "--n",
        "2",
        "--l",
        "4",
        "--kind",
        "custom-split",
        "--split",
        "0",
    ]));
    let asym = json(&clonebound(&[
        "cloner",
        "--z",
        "0.4",
        "--n",
        "2",
        "--l",
        "4",
        "--kind",
        "asymmetric",
        "--perfect",
        "phi",
    ]));
    for key in [
        "delta_phi",
        "delta_psi",
        "x_phi",
        "x_psi",
        "ae",
        "re",
        "denom",
        "gram_residual",
    ] {
        assert_eq!(split[key], asym[key], "{key}");
    }
}

#[test]
fn cloner_json_file_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let out = clonebound(&[
        "cloner",
        "--z",
        "0.3",
        "--n",
        "1",
        "--l",
        "3",
        "--kind",
        "symmetric",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["kind"], "symmetric");

    for z in ["1", "0"] {
        let out = clonebound(&[
            "cloner",
            "--z",
            z,
            "--n",
            "1",
            "--l",
            "2",
            "--kind",
            "symmetric",
        ]);
        assert_eq!(out.status.code(), Some(1));
    }
    let out = clonebound(&[
        "cloner",
        "--z",
        "0.5",
        "--n",
        "1",
        "--l",
        "2",
        "--kind",
        "custom-split",
        "--split",
        "0.5",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = clonebound(&[
            "verify",
            "--suite",
            "angles",
            "--trials",
            "2000",
            "--seed",
            "42",
            "--report",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let first = &v[0];
    for key in ["suite", "trials", "failures", "worst_margin", "seed"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    assert_eq!(first["suite"], "projector-deviation");
    assert_eq!(first["seed"], 42);

    assert_eq!(
        clonebound(&["verify", "--suite", "angles", "--trials", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        clonebound(&["verify", "--suite", "nope", "--trials", "5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(clonebound(&["bogus"]).status.code(), Some(1));
}

#[test]
fn seed_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_clonebound"))
        .args(["verify", "--suite", "bounds", "--trials", "50"])
        .env("CLONEBOUND_SEED", "7")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(json(&out)[0]["seed"], 7);
    let default = clonebound(&["verify", "--suite", "bounds", "--trials", "50"]);
    assert_eq!(json(&default)[0]["seed"], 42);
}
