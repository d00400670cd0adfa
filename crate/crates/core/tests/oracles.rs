//! Enumeration and invariants against independent brute-force oracles.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

mod common;

use std::collections::BTreeSet;

use asc_core::canon::canonical_form;
use asc_core::constructors;
use asc_core::enumeration::{count_classes, enumerate, GenSpec};
use asc_core::fixtures::Fixtures;
use asc_core::metrics;
use asc_core::Graph;
use common::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=n.min(max)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

/// Unlabelled graphs on `n` vertices, by Burnside over cycle types of `S_n`.
fn unlabelled_graphs(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let factorial: u128 = (1..=n as u128).product();
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    let mut total = 0u128;
    for lambda in parts {
        let mut cycles = 0u64;
        for (i, &a) in lambda.iter().enumerate() {
            cycles += a as u64 / 2;
            for &b in &lambda[i + 1..] {
                cycles += gcd(a as u64, b as u64);
            }
        }
        let mut z: u128 = 1;
        for k in 1..=n {
            let m = lambda.iter().filter(|&&p| p == k).count() as u128;
            z *= (k as u128).pow(m as u32) * (1..=m).product::<u128>();
        }
        total += factorial / z * (1u128 << cycles);
    }
    total / factorial
}

fn mobius(n: usize) -> i128 {
    let mut m = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

/// Connected counts from all-graph counts by inverting the Euler transform.
fn connected_counts(max: usize) -> Vec<i128> {
    let b: Vec<i128> = (0..=max).map(|n| unlabelled_graphs(n) as i128).collect();
    let mut c_prime = vec![0i128; max + 1];
    for n in 1..=max {
        let mut s = n as i128 * b[n];
        for k in 1..n {
            s -= c_prime[k] * b[n - k];
        }
        c_prime[n] = s;
    }
    (0..=max)
        .map(|n| {
            if n == 0 {
                return 0;
            }
            let s: i128 = (1..=n).filter(|d| n % d == 0).map(|d| mobius(n / d) * c_prime[d]).sum();
            s / n as i128
        })
        .collect()
}

#[test]
fn burnside_oracle_matches_known_small_values() {
    let all: Vec<u128> = (1..=5).map(unlabelled_graphs).collect();
    assert_eq!(all, [1, 2, 4, 11, 34]);
}

#[test]
fn class_counts_match_burnside_oracle() {
    let oracle = connected_counts(9);
    for n in 1..=9 {
        let got = count_classes(&GenSpec::connected(n)).unwrap();
        assert_eq!(got as i128, oracle[n], "order {n}");
    }
}

fn labelled_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> BTreeSet<String> {
    labelled_graphs(n)
        .filter(|g| connected_by_dfs(g) && keep(g))
        .map(|g| canonical_form(&g))
        .collect()
}

#[test]
fn enumeration_complete_against_labelled_brute_force() {
    let mut counts = Vec::new();
    for n in 2..=7 {
        let oracle = labelled_classes(n, |_| true);
        let stream = enumerate(&GenSpec::connected(n)).unwrap();
        let got: BTreeSet<String> = stream.graph6().iter().cloned().collect();
        assert_eq!(got.len(), stream.len(), "duplicates at order {n}");
        assert_eq!(got, oracle, "order {n}");
        counts.push(oracle.len());
    }
    assert_eq!(counts, [1, 2, 6, 21, 112, 853]);
}

#[test]
fn constrained_enumeration_matches_filtered_brute_force() {
    for n in 3..=7 {
        let cases: Vec<(GenSpec, Box<dyn Fn(&Graph) -> bool>)> = vec![
            (
                GenSpec::connected(n).size_range(n + 1, n + 2),
                Box::new(move |g: &Graph| (n + 1..=n + 2).contains(&g.size())),
            ),
            (
                GenSpec::connected(n).min_degree(2),
                Box::new(|g: &Graph| metrics::min_degree(g) >= 2),
            ),
            (
                GenSpec::connected(n).max_degree(3),
                Box::new(|g: &Graph| metrics::max_degree(g) <= 3),
            ),
            (
                GenSpec::connected(n).min_girth(4),
                Box::new(|g: &Graph| metrics::girth(g).is_none_or(|x| x >= 4)),
            ),
            (
                GenSpec::connected(n).size_range(n, n + 1).min_degree(2),
                Box::new(move |g: &Graph| (n..=n + 1).contains(&g.size()) && metrics::min_degree(g) >= 2),
            ),
        ];
        for (spec, keep) in cases {
            let oracle = labelled_classes(n, keep);
            let got: BTreeSet<String> = enumerate(&spec).unwrap().graph6().iter().cloned().collect();
            assert_eq!(got, oracle, "{spec}");
        }
    }
}

#[test]
fn sparse_mode_matches_full_stream_up_to_order_8() {
    for n in 4..=8 {
        let full: Vec<String> = enumerate(&GenSpec::connected(n))
            .unwrap()
            .graph6()
            .iter()
            .filter(|s| (n + 1..=n + 2).contains(&Graph::from_graph6(s).unwrap().size()))
            .cloned()
            .collect();
        let sparse = enumerate(&GenSpec::connected(n).size_range(n + 1, n + 2)).unwrap();
        assert_eq!(sparse.graph6(), full.as_slice(), "order {n}");
    }
}

#[test]
fn cubic_counts_against_labelled_brute_force() {
    for (n, expected) in [(4, 1), (6, 2), (8, 5)] {
        let oracle: BTreeSet<String> = labelled_regular(n, 3)
            .into_iter()
            .filter(connected_by_dfs)
            .map(|g| canonical_form(&g))
            .collect();
        assert_eq!(oracle.len(), expected);
        let got: BTreeSet<String> = enumerate(&GenSpec::connected(n).regular(3))
            .unwrap()
            .graph6()
            .iter()
            .cloned()
            .collect();
        assert_eq!(got, oracle, "order {n}");
    }
    let quartic: BTreeSet<String> = labelled_regular(7, 4)
        .into_iter()
        .filter(connected_by_dfs)
        .map(|g| canonical_form(&g))
        .collect();
    let got: BTreeSet<String> = enumerate(&GenSpec::connected(7).regular(4))
        .unwrap()
        .graph6()
        .iter()
        .cloned()
        .collect();
    assert_eq!(got, quartic);
}

#[test]
fn cubic_counts_at_larger_orders() {
    assert_eq!(count_classes(&GenSpec::connected(10).regular(3)).unwrap(), 19);
    assert_eq!(count_classes(&GenSpec::connected(12).regular(3)).unwrap(), 85);
}

#[test]
fn girth_and_eccentricity_match_oracles_on_all_graphs_up_to_8() {
    for n in 1..=8 {
        for g in enumerate(&GenSpec::connected(n)).unwrap().iter() {
            assert_eq!(metrics::girth(&g), edge_removal_girth(&g), "{g:?}");
            if n <= 7 {
                let d = floyd(&g);
                let p = metrics::ecc_profile(&g).unwrap();
                for v in 0..n {
                    assert_eq!(p.ecc[v], *d[v].iter().max().unwrap());
                }
            }
        }
    }
}

#[test]
fn independence_matches_subset_brute_force() {
    for n in 1..=7 {
        for g in enumerate(&GenSpec::connected(n)).unwrap().iter() {
            assert_eq!(metrics::independence_number(&g), brute_independence(&g), "{g:?}");
        }
    }
    let fixtures = Fixtures::embedded();
    let mut corpus: Vec<Graph> = fixtures.all().into_iter().map(|(_, g)| g.clone()).collect();
    corpus.push(constructors::z_graph(12, 4).unwrap());
    corpus.push(constructors::girth_extremal_asc(16).unwrap());
    corpus.push(constructors::regular_asc(7).unwrap());
    corpus.push(constructors::ap_max_size(15).unwrap());
    corpus.push(constructors::ap_top_extremal(16).unwrap());
    corpus.push(constructors::ap_with_max_degree(16, 9).unwrap());
    for g in corpus.iter().filter(|g| g.order() <= 16) {
        let set = metrics::maximum_independent_set(g);
        assert!(g.edges().all(|(u, v)| !(set.contains(u) && set.contains(v))));
        assert_eq!(set.len(), brute_independence(g), "{g:?}");
    }
}
