//! Search-derived base graphs, stored as graph6 files under `fixtures/`.
//!
//! Each file has a `.txt` sidecar naming the predicate and search space. The
//! `search_*` functions rerun those searches so the files can be regenerated
//! and checked.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::canon::canonical_form;
use crate::classify;
use crate::constructors::duplication_target;
use crate::enumeration::{fold, GenSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics;

const AP_BASE: [(usize, &str); 4] = [
    (7, include_str!("../fixtures/ap_base_7.g6")),
    (8, include_str!("../fixtures/ap_base_8.g6")),
    (9, include_str!("../fixtures/ap_base_9.g6")),
    (10, include_str!("../fixtures/ap_base_10.g6")),
];
const CUBIC_ASC_12: &str = include_str!("../fixtures/cubic_asc_12.g6");

/// Orders covered by stored AP base graphs.
pub const AP_BASE_ORDERS: std::ops::RangeInclusive<usize> = 7..=10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixtures {
    ap_base: BTreeMap<usize, Graph>,
    cubic_asc: Graph,
}

impl Fixtures {
    /// The fixtures compiled into the crate.
    pub fn embedded() -> Fixtures {
        static EMBEDDED: OnceLock<Fixtures> = OnceLock::new();
        EMBEDDED
            .get_or_init(|| {
                let parse = |text: &str| Graph::from_graph6(text.trim()).expect("embedded fixture is valid graph6");
                Fixtures {
                    ap_base: AP_BASE.iter().map(|&(m, text)| (m, parse(text))).collect(),
                    cubic_asc: parse(CUBIC_ASC_12),
                }
            })
            .clone()
    }

    /// Replaces the stored AP base graph of order `m`.
    pub fn with_ap_base(mut self, m: usize, g: Graph) -> Result<Fixtures> {
        if !AP_BASE_ORDERS.contains(&m) || g.order() != m {
            return Err(Error::InvalidParameter(format!(
                "AP base fixtures exist for orders 7..=10 and must match the order; got slot {m}, order {}",
                g.order()
            )));
        }
        self.ap_base.insert(m, g);
        Ok(self)
    }

    pub fn with_cubic_asc(mut self, g: Graph) -> Fixtures {
        self.cubic_asc = g;
        self
    }

    pub fn ap_degree_base(&self, m: usize) -> Option<&Graph> {
        self.ap_base.get(&m)
    }

    /// Cubic ASC graph of order 12.
    pub fn cubic_asc(&self) -> &Graph {
        &self.cubic_asc
    }

    /// All stored graphs with their file stems.
    pub fn all(&self) -> Vec<(String, &Graph)> {
        let mut out: Vec<(String, &Graph)> = self.ap_base.iter().map(|(m, g)| (format!("ap_base_{m}"), g)).collect();
        out.push(("cubic_asc_12".to_string(), &self.cubic_asc));
        out
    }
}

/// AP, maximum degree 3, and some top vertex has a non-central neighbour of degree 2.
pub fn is_ap_degree_base(g: &Graph) -> bool {
    metrics::is_connected(g)
        && metrics::max_degree(g) == 3
        && classify::is_ap(g).unwrap_or(false)
        && duplication_target(g).is_some()
}

/// Order 7 only: some non-central degree-3 vertex blows up into `K_2` to give
/// an AP graph with maximum degree 4 and three top vertices.
pub fn blows_up_to_top_extremal(g: &Graph) -> bool {
    let Ok(profile) = metrics::ecc_profile(g) else {
        return false;
    };
    (0..g.order())
        .filter(|&v| g.degree(v) == 3 && !profile.is_central(v))
        .all(|v| {
            g.blow_up(v, 2).is_ok_and(|h| {
                classify::is_ap(&h).unwrap_or(false)
                    && metrics::max_degree(&h) == 4
                    && classify::top_vertex_count(&h) == 3
            })
        })
}

/// Canonical forms of every AP base candidate of order `m`, sorted.
pub fn ap_degree_base_candidates(m: usize, jobs: usize) -> Result<Vec<String>> {
    let spec = GenSpec::connected(m).max_degree(3);
    let parts = fold(&spec, jobs, Vec::new, |acc: &mut Vec<String>, g| {
        if is_ap_degree_base(g) && (m != 7 || blows_up_to_top_extremal(g)) {
            acc.push(canonical_form(g));
        }
    })?;
    let mut all: Vec<String> = parts.into_iter().flatten().collect();
    all.sort_unstable();
    Ok(all)
}

/// The fixture choice: the smallest canonical form among the candidates.
pub fn search_ap_degree_base(m: usize, jobs: usize) -> Result<Option<Graph>> {
    Ok(ap_degree_base_candidates(m, jobs)?
        .first()
        .map(|s| Graph::from_graph6(s).expect("canonical form is valid graph6")))
}

/// Smallest canonical form among cubic ASC graphs of order `n`.
pub fn search_cubic_asc(n: usize, jobs: usize) -> Result<Option<Graph>> {
    let spec = GenSpec::connected(n).regular(3);
    let parts = fold(&spec, jobs, Vec::new, |acc: &mut Vec<String>, g| {
        if classify::is_asc(g).unwrap_or(false) {
            acc.push(canonical_form(g));
        }
    })?;
    Ok(parts
        .into_iter()
        .flatten()
        .min()
        .map(|s| Graph::from_graph6(&s).expect("canonical form is valid graph6")))
}
