//! Reruns the fixture searches and prints one graph6 line per fixture.

use asc_core::fixtures::{ap_degree_base_candidates, search_cubic_asc};

fn main() {
    for m in 7..=10 {
        let all = ap_degree_base_candidates(m, 0).expect("search runs");
        println!(
            "ap_base_{m} {} ({} candidates)",
            all.first().map_or("-", |s| s.as_str()),
            all.len()
        );
    }
    let cubic = search_cubic_asc(12, 0).expect("search runs");
    println!(
        "cubic_asc_12 {}",
        cubic.map(|g| g.to_graph6().unwrap()).unwrap_or_default()
    );
}
