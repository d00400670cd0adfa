mod common;

use asc_core::canon::are_isomorphic;
use asc_core::classify::{self, ThetaSpec};
use asc_core::constructors::{self, FamilyId};
use asc_core::fixtures::Fixtures;
use asc_core::metrics;
use asc_core::verify::ClaimTable;
use asc_core::Graph;
use common::*;

fn round_trips(g: &Graph) {
    let text = g.to_graph6().unwrap();
    assert_eq!(&Graph::from_graph6(&text).unwrap(), g);
}

#[test]
fn girth_extremal_family() {
    for n in 12..=60 {
        let g = if n % 2 == 0 {
            constructors::girth_extremal_asc(n).unwrap()
        } else {
            constructors::cycle_pendant(n).unwrap()
        };
        assert_eq!(g.order(), n);
        assert!(classify::is_asc(&g).unwrap(), "order {n}");
        assert_eq!(metrics::girth(&g), ClaimTable::max_girth(n), "order {n}");
        if n <= 20 {
            assert_eq!(metrics::girth(&g), edge_removal_girth(&g));
        }
        round_trips(&g);
    }
}

#[test]
fn z_graphs_are_asc_with_large_independent_sets() {
    for r in 2..=8 {
        for n in 2 * r + 1..=2 * r + 9 {
            let g = constructors::z_graph(n, r).unwrap();
            let p = metrics::ecc_profile(&g).unwrap();
            assert!(classify::is_asc(&g).unwrap(), "Z({n}, {r})");
            assert_eq!(p.radius, r);
            assert_eq!(metrics::independence_number(&g), n - r, "Z({n}, {r})");
            round_trips(&g);
        }
    }
    assert!(constructors::z_graph(4, 2).is_err());
}

#[test]
fn regular_witnesses() {
    for k in 4..=12 {
        let g = constructors::regular_asc(k).unwrap();
        assert_eq!(g.order(), 2 * k + 2);
        assert!((0..g.order()).all(|v| g.degree(v) == k));
        let p = metrics::ecc_profile(&g).unwrap();
        assert_eq!(p.periphery.to_vec(), vec![0, 1], "k = {k}");
        assert_eq!(p.center.len(), g.order() - 2);
        assert!(classify::is_asc(&g).unwrap());
        round_trips(&g);
    }
    let fixtures = Fixtures::embedded();
    let cubic = fixtures.cubic_asc();
    assert_eq!(cubic.order(), 12);
    assert!((0..12).all(|v| cubic.degree(v) == 3));
    assert!(classify::is_asc(cubic).unwrap());
}

#[test]
fn maximum_size_ap_graphs() {
    for n in 3..=30 {
        let g = constructors::ap_max_size(n).unwrap();
        assert!(classify::is_ap(&g).unwrap(), "order {n}");
        assert_eq!(Some(g.size()), ClaimTable::max_ap_size(n));
        round_trips(&g);
    }
}

#[test]
fn duplication_chain_stays_ap_at_every_step() {
    let fixtures = Fixtures::embedded();
    for n in 7..=20 {
        for delta in 3..=n - 4 {
            let base = constructors::ap_degree_base(&fixtures, n - delta + 3).unwrap();
            let mut g = base.clone();
            loop {
                assert!(
                    classify::is_ap(&g).unwrap(),
                    "n = {n}, delta = {delta}, step order {}",
                    g.order()
                );
                assert_eq!(metrics::max_degree(&g), g.order() - base.order() + 3);
                if g.order() == n {
                    break;
                }
                g = g
                    .duplicate_vertex(constructors::duplication_target(&g).unwrap())
                    .unwrap();
            }
            assert_eq!(g, constructors::ap_with_max_degree(n, delta).unwrap());
            round_trips(&g);
        }
        let star = constructors::ap_with_max_degree(n, n - 1).unwrap();
        assert!(classify::is_ap(&star).unwrap());
        assert!(constructors::ap_with_max_degree(n, n - 2).is_err());
        assert!(constructors::ap_with_max_degree(n, 2).is_err());
    }
}

#[test]
fn degree_bases_beyond_the_fixtures() {
    let fixtures = Fixtures::embedded();
    for m in 7..=60 {
        let g = constructors::ap_degree_base(&fixtures, m).unwrap();
        assert_eq!(g.order(), m);
        assert_eq!(metrics::max_degree(&g), 3, "m = {m}");
        assert!(classify::is_ap(&g).unwrap(), "m = {m}");
        assert!(constructors::duplication_target(&g).is_some(), "m = {m}");
    }
}

#[test]
fn top_vertex_extremals() {
    for n in 8..=30 {
        let g = constructors::ap_top_extremal(n).unwrap();
        assert_eq!(g.order(), n);
        assert!(classify::is_ap(&g).unwrap(), "order {n}");
        assert_eq!(metrics::max_degree(&g), n - 4);
        assert_eq!(Some(classify::top_vertex_count(&g)), ClaimTable::max_top_vertices(n));
        round_trips(&g);
    }
}

#[test]
fn independence_extremals_are_distinct_asc_graphs() {
    for n in 5..=20 {
        let [a, b] = constructors::independence_extremals(n).unwrap();
        for g in [&a, &b] {
            assert!(classify::is_asc(g).unwrap());
            assert_eq!(metrics::ecc_profile(g).unwrap().radius, 2);
            assert_eq!(metrics::independence_number(g), n - 2);
        }
        assert!(!are_isomorphic(&a, &b), "order {n}");
    }
}

#[test]
fn theta_round_trip_and_eccentricities() {
    for a in 1..=20 {
        for b in a.max(2)..=20 {
            for c in b..=20 {
                if a + b + c - 1 > 20 {
                    continue;
                }
                let spec = ThetaSpec::new(c, a, b).unwrap();
                let g = constructors::theta_from(spec).unwrap();
                assert_eq!(classify::recognize_theta(&g).unwrap(), Some(spec));
                let p = metrics::ecc_profile(&g).unwrap();
                assert_eq!((p.radius, p.diameter), (spec.radius(), spec.diameter()), "{spec:?}");
                round_trips(&g);
            }
        }
    }
    assert!(ThetaSpec::new(1, 1, 3).is_err());
    assert!(classify::recognize_theta(&constructors::cycle(6).unwrap())
        .unwrap()
        .is_none());
}

#[test]
fn families_dispatch_by_name() {
    let cases: [(&str, &[usize]); 5] = [
        ("cycle", &[7]),
        ("theta", &[2, 3, 4]),
        ("z", &[9, 3]),
        ("regular-asc", &[5]),
        ("ap-top-extremal", &[9]),
    ];
    for (name, params) in cases {
        let family: FamilyId = name.parse().unwrap();
        assert_eq!(family.to_string(), name);
        assert_eq!(family.params().len(), params.len());
        let g = constructors::build(family, params).unwrap();
        round_trips(&g);
    }
    assert!("no-such-family".parse::<FamilyId>().is_err());
}
