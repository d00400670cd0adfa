use asc_core::enumeration::{enumerate_jobs, scan_named, Filter, GenSpec, Objective, Statistic};
use asc_core::verify::{params, run_check, run_suite, CheckId, CheckOptions, Params};

fn opts(jobs: usize) -> CheckOptions {
    CheckOptions {
        jobs,
        ..CheckOptions::default()
    }
}

fn reports(jobs: usize) -> Vec<String> {
    let checks: [(CheckId, Params); 6] = [
        (CheckId::Thm5, params(&[("n", 8)])),
        (CheckId::Thm5, params(&[("n", 12)])),
        (CheckId::Thm6, params(&[("n", 9), ("r", 3)])),
        (CheckId::Thm9, params(&[("n", 8)])),
        (CheckId::Thm10, params(&[("n", 8)])),
        (CheckId::Thm11, params(&[("n", 9)])),
    ];
    checks
        .iter()
        .map(|(id, p)| run_check(*id, p, &opts(jobs)).unwrap().without_timing().to_json())
        .collect()
}

#[test]
fn reports_identical_across_runs_and_job_counts() {
    let first = reports(1);
    assert_eq!(first, reports(1));
    assert_eq!(first, reports(4));
    assert_eq!(first, reports(0));
}

#[test]
fn suite_identical_across_job_counts() {
    let a: Vec<String> = run_suite(7, &opts(1))
        .unwrap()
        .iter()
        .map(|r| r.without_timing().to_json())
        .collect();
    let b: Vec<String> = run_suite(7, &opts(3))
        .unwrap()
        .iter()
        .map(|r| r.without_timing().to_json())
        .collect();
    assert_eq!(a, b);
}

#[test]
fn streams_identical_across_job_counts() {
    for spec in [
        GenSpec::connected(8),
        GenSpec::connected(10).regular(3),
        GenSpec::connected(13).size_range(13, 15).min_girth(6),
    ] {
        let one = enumerate_jobs(&spec, 1).unwrap();
        for jobs in [2, 4] {
            assert_eq!(one.graph6(), enumerate_jobs(&spec, jobs).unwrap().graph6(), "{spec}");
        }
    }
}

#[test]
fn scans_identical_across_job_counts() {
    let spec = GenSpec::connected(8);
    let run = |jobs| scan_named(&spec, Filter::All, Statistic::Size, Objective::Min, 5, jobs).unwrap();
    let one = run(1);
    assert!(one.truncated);
    assert_eq!((one.value, one.count), (Some(7), 23));
    assert_eq!(one, run(4));
}
