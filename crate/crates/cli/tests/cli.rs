use std::process::{Command, Output};

use grm_core::CodeDescriptor;
use serde_json::Value;

/// Runs the binary on a whitespace-separated command line.
fn grmcodes(cmdline: &str) -> Output {
    grmcodes_with(cmdline, &[])
}

fn grmcodes_with(cmdline: &str, extra: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grmcodes"))
        .args(cmdline.split_whitespace())
        .args(extra)
        .output()
        .expect("binary runs")
}

fn json(cmdline: &str) -> Value {
    let out = grmcodes_with(cmdline, &["--format", "json"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit status")
}

#[test]
fn construct_grm() {
    let v = json("construct --family grm --q 3 --m 3 --h 1");
    assert_eq!(v["n"], 26);
    assert_eq!(v["k"], 20);
    assert_eq!(v["family"], "grm");

    // Over GF(2) with m = 4 the generator is the minimal polynomial of alpha.
    let v = json("construct --family grm --q 2 --m 4 --h 1");
    assert_eq!(v["generator"], serde_json::json!([1, 1, 0, 0, 1]));
    assert_eq!(v["k"], 11);
}

#[test]
fn construct_reversible_and_table() {
    let v = json("construct --family reversible --q 5 --m 2 --h 1");
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(24), Some(9)));

    let out = grmcodes("construct --family bch --q 2 --n 15 --delta 5");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[15,7]"), "{text}");
}

#[test]
fn descriptor_round_trip() {
    for args in [
        "construct --family grm --q 4 --m 2 --h 1 --dual",
        "construct --family pgrm --q 3 --m 3 --l 2",
        "construct --family reversible --q 3 --m 3 --h 1 --complement",
    ] {
        let v = json(args);
        let d: CodeDescriptor = serde_json::from_value(v).unwrap();
        let c = d.rebuild().expect("rebuilds");
        assert_eq!(CodeDescriptor::of(&c), d);
    }
}

#[test]
fn usage_errors_exit_2() {
    let cases = [
        "construct --family grm --q 6 --m 2 --h 1",
        "construct --family grm --q 3 --m 3",
        "construct --family grm --q 3 --m 3 --h 4",
        "construct --family bch --q 2 --n 14 --delta 3",
    ];
    for args in cases {
        let out = grmcodes(args);
        assert_eq!(
            code(&out),
            2,
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert_eq!(code(&grmcodes("verify-paper --only nonsense")), 2);
    assert_eq!(code(&grmcodes("--threads 0 cosets --q 2 --n 7")), 2);
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = grmcodes("analyze --family grm --q 3 --m 4 --h 1 --max-enum 1 --is-budget 1000");
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("lower bound"));

    let out = grmcodes("construct --family grm --q 3 --m 4 --h 1 --field-cap 10");
    assert_eq!(code(&out), 3);

    let out = grmcodes("analyze --family grm --q 3 --m 3 --h 1 --weights --max-enum 100");
    assert_eq!(code(&out), 3);
}

#[test]
fn analyze_dual() {
    let v = json("analyze --family grm --q 3 --m 3 --h 1 --dual");
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(26), Some(6)));
    assert_eq!(v["d"]["value"], 15);
    assert_eq!(v["d"]["status"], "exact");
    assert!(v["bounds"]["hartmann_tzeng"].as_u64().unwrap() >= 10);
    assert_eq!(v["bounds"]["paper_lower"], 10);
    assert_eq!(v["dimension_check"]["agrees"], true);
}

#[test]
fn analyze_extended_with_weights_and_designs() {
    let v = json("analyze --family grm --q 3 --m 3 --h 2 --extend --weights --designs --affine");
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(27), Some(8)));
    assert_eq!(v["d"]["value"], 14);
    assert_eq!(v["weights"]["14"], 810);
    let total: u64 = v["weights"]
        .as_object()
        .unwrap()
        .values()
        .map(|x| x.as_u64().unwrap())
        .sum();
    assert_eq!(total, 3u64.pow(8));
    let designs = v["designs"].as_array().unwrap();
    let at14 = designs.iter().find(|d| d["k"] == 14).unwrap();
    assert_eq!(at14["lambda"], 105);
    assert_eq!(v["affine_invariant"], true);
}

#[test]
fn verify_paper_categories() {
    for cat in ["dimensions", "designs", "structure"] {
        let v = json(&format!("verify-paper --only {cat}"));
        assert_eq!(v["failed"], 0, "{cat}: {v}");
        assert!(v["passed"].as_u64().unwrap() > 0);
        for item in v["items"].as_array().unwrap() {
            assert_eq!(item["category"], cat);
        }
    }
    let out = grmcodes("verify-paper --only weights");
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed"));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("code.json");
    let out = grmcodes_with(
        "construct --family grm --q 2 --m 4 --h 2 --format json --output",
        &[path.to_str().unwrap()],
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let d: CodeDescriptor = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!((d.n, d.k), (15, 5));
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |t: &str| {
        let out = grmcodes(&format!(
            "--threads {t} analyze --family reversible --q 2 --m 6 --h 2 --weights --format json"
        ));
        assert!(out.status.success());
        out.stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("3"));
}

#[test]
fn cosets_and_factor() {
    let v = json("cosets --q 2 --n 15");
    let cosets = v["cosets"].as_array().unwrap();
    assert_eq!(cosets.len(), 5);
    assert_eq!(cosets[1], serde_json::json!([1, 2, 4, 8]));

    let v = json("factor --q 2 --m 3");
    let factors = v["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 3);
    let degrees: usize = factors
        .iter()
        .map(|f| f["minimal_polynomial"].as_array().unwrap().len() - 1)
        .sum();
    assert_eq!(degrees, 7);

    assert_eq!(code(&grmcodes("factor --q 3 --n 6")), 2);
}

#[test]
fn evidence_report() {
    let v = json("evidence --q 3 --m 3 --h 1");
    assert_eq!(v["grm"]["attained"], true);
    assert_eq!(v["dual"]["distance"]["value"], 15);
    assert_eq!(code(&grmcodes("evidence --q 3 --m 3 --h 3")), 2);
}
