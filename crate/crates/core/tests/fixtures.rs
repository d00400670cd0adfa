use asc_core::canon::canonical_form;
use asc_core::classify;
use asc_core::constructors;
use asc_core::fixtures::{self, Fixtures};
use asc_core::verify::{params, run_check, CheckId, CheckOptions, Status};
use asc_core::Graph;

#[test]
fn embedded_fixtures_are_the_search_results() {
    let stored = Fixtures::embedded();
    for m in 7..=10 {
        let found = fixtures::search_ap_degree_base(m, 1).unwrap().unwrap();
        let kept = stored.ap_degree_base(m).unwrap();
        assert_eq!(&found, kept, "order {m}");
        assert_eq!(kept.to_graph6().unwrap(), canonical_form(kept));
    }
    assert_eq!(fixtures::ap_degree_base_candidates(7, 1).unwrap().len(), 1);
    let cubic = fixtures::search_cubic_asc(12, 1).unwrap().unwrap();
    assert_eq!(&cubic, stored.cubic_asc());
}

#[test]
fn each_fixture_satisfies_its_predicate() {
    let stored = Fixtures::embedded();
    for (stem, g) in stored.all() {
        if stem.starts_with("ap_base_") {
            assert!(fixtures::is_ap_degree_base(g), "{stem}");
        } else {
            assert!((0..g.order()).all(|v| g.degree(v) == 3), "{stem}");
            assert!(classify::is_asc(g).unwrap(), "{stem}");
        }
    }
    assert!(fixtures::blows_up_to_top_extremal(stored.ap_degree_base(7).unwrap()));
}

#[test]
fn slots_reject_wrong_orders() {
    let c9 = constructors::cycle(9).unwrap();
    assert!(Fixtures::embedded().with_ap_base(8, c9.clone()).is_err());
    assert!(Fixtures::embedded().with_ap_base(11, c9).is_err());
}

#[test]
fn corrupted_base_fails_the_degree_check() {
    let bad = constructors::cycle(9).unwrap().with_edge(0, 4).unwrap();
    let opts = CheckOptions {
        jobs: 1,
        fixtures: Fixtures::embedded().with_ap_base(9, bad.clone()).unwrap(),
        ..CheckOptions::default()
    };
    let report = run_check(CheckId::Thm10, &params(&[("n", 9)]), &opts).unwrap();
    assert_eq!(report.status, Status::Fail);
    assert_eq!(report.computed["constructor_failures"], serde_json::json!([3]));
    assert!(report.certificates.contains(&bad.to_graph6().unwrap()));

    let clean = run_check(
        CheckId::Thm10,
        &params(&[("n", 9)]),
        &CheckOptions {
            jobs: 1,
            ..CheckOptions::default()
        },
    )
    .unwrap();
    assert_eq!(clean.status, Status::Pass);
}

#[test]
fn corrupted_cubic_witness_fails_the_regular_check() {
    let prism = Graph::from_edges(
        12,
        (0..6).flat_map(|i| [(i, (i + 1) % 6), (6 + i, 6 + (i + 1) % 6), (i, 6 + i)]),
    )
    .unwrap();
    let opts = CheckOptions {
        jobs: 1,
        fixtures: Fixtures::embedded().with_cubic_asc(prism),
        ..CheckOptions::default()
    };
    let report = run_check(CheckId::Thm8, &params(&[("k", 3)]), &opts).unwrap();
    assert_eq!(report.status, Status::Fail);
    assert_eq!(report.computed["witness_valid"], serde_json::json!(false));
}
