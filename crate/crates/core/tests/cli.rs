use std::process::Command;

use quickswap::bench::{run_bench, write_csv, BenchConfig};
use quickswap::instances::InstanceSpec;
use quickswap::AlgorithmKind;

fn quickswap() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quickswap"))
}

#[test]
fn tight_subcommand_prints_the_exact_ratio() {
    let out = quickswap().args(["tight", "--m", "10"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("f(A') = 1024"), "{text}");
    assert!(text.contains("OPT = 4094"), "{text}");
    assert!(text.contains("2047/512"), "{text}");
}

#[test]
fn tight_subcommand_rejects_out_of_range_m() {
    let out = quickswap().args(["tight", "--m", "61"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_tight_slacks() {
    let out = quickswap()
        .args(["verify", "--trials", "1", "--m", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("share slack 0.5, union slack 1"), "{text}");
    assert!(text.contains("0 violations"), "{text}");
}

#[test]
fn verify_needs_a_trial() {
    let out = quickswap()
        .args(["verify", "--trials", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_tight_writes_one_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tight.csv");
    let status = quickswap()
        .args([
            "bench",
            "--instance",
            "tight",
            "--m",
            "10",
            "--algs",
            "quickswap",
            "--out",
        ])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "instance,algorithm,rank,ordering_index,seed,queries,objective,wall_ms"
    );
    assert_eq!(lines[1], "tight:m=10,quickswap,1,0,0,12.0,1024.0,0");
    assert!(lines[2].starts_with("tight:m=10,quickswap:mean,1,-1,"));
    assert_eq!(lines.len(), 4);
}

#[test]
fn bench_rejects_unknown_algorithms_and_bad_paths() {
    let out = quickswap()
        .args(["bench", "--instance", "tight", "--algs", "simplex"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = quickswap()
        .args(["bench", "--instance", "snap"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = quickswap()
        .args([
            "bench",
            "--instance",
            "tight",
            "--out",
            "/nonexistent/dir/x.csv",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bench_output_is_byte_identical_across_runs() {
    let base = InstanceSpec::Sbm {
        communities: 10,
        min_size: 5,
        max_size: 15,
        p_intra: 0.2,
        seed: 4,
    }
    .build()
    .unwrap();
    let mut cfg = BenchConfig::new(AlgorithmKind::PAPER_SET.to_vec(), vec![1, 2, 3], 9);
    cfg.orderings = 3;
    let render = || {
        let mut buf = Vec::new();
        write_csv(&run_bench(&base, &cfg).unwrap(), &mut buf).unwrap();
        buf
    };
    let first = render();
    assert_eq!(first, render());

    // adding an algorithm leaves the shared rows untouched
    let mut wider = cfg.clone();
    wider.algorithms.push(AlgorithmKind::QuickSwapNm);
    let rows = run_bench(&base, &wider).unwrap();
    let narrow = run_bench(&base, &cfg).unwrap();
    for r in narrow.iter().filter(|r| !r.is_summary()) {
        assert!(rows.contains(r));
    }
}

#[test]
fn bench_rows_satisfy_query_invariants() {
    let base = InstanceSpec::paper_sbm(2).build().unwrap();
    let n = base.ground_size() as f64;
    let mut cfg = BenchConfig::new(
        vec![
            AlgorithmKind::QuickSwap,
            AlgorithmKind::QuickSwapNm,
            AlgorithmKind::Ck,
        ],
        vec![1, 5],
        3,
    );
    cfg.orderings = 2;
    for r in run_bench(&base, &cfg)
        .unwrap()
        .iter()
        .filter(|r| !r.is_summary())
    {
        match r.algorithm.as_str() {
            "quickswap" => assert_eq!(r.queries, n),
            "quickswap-nm" => assert_eq!(r.queries, 2.0 * n),
            "ck" => assert!(r.queries >= n && r.queries <= 2.0 * n),
            other => panic!("unexpected {other}"),
        }
    }
}
