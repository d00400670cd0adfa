//! Isomorph-free generation of connected graphs by canonical vertex augmentation.
//!
//! A graph of order `m + 1` is produced from its parent of order `m` by adding
//! one vertex joined to a neighbour set `S`. Only one `S` per orbit of
//! `Aut(parent)` on subsets is tried, and the child is kept only when the new
//! vertex lies in the automorphism orbit of the child's canonical deletion
//! vertex. Deletion vertices are always non-cut vertices, so every ancestor of
//! a connected graph is connected.
//!
//! Constraints that survive vertex deletion (maximum degree, excess `e - n`,
//! girth) prune the tree directly. Minimum degree and regularity are pruned by
//! how many edges the remaining vertices could still supply.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::canon::canonical_labeling;
use crate::classify;
use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph};
use crate::metrics;

/// Largest order for enumeration without a restricting constraint.
pub const MAX_FULL_ORDER: usize = 10;
/// Largest order for enumeration under a restricting constraint.
pub const MAX_RESTRICTED_ORDER: usize = 16;
pub const DEFAULT_CERT_CAP: usize = 1000;

const SPLIT_FRONTIER: usize = 512;

/// Constraints on the generated connected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GenSpec {
    pub order: usize,
    pub regular: Option<usize>,
    pub min_size: Option<usize>,
    pub max_size: Option<usize>,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub min_girth: Option<usize>,
    pub connected: bool,
}

impl GenSpec {
    pub fn connected(order: usize) -> GenSpec {
        GenSpec {
            order,
            regular: None,
            min_size: None,
            max_size: None,
            min_degree: None,
            max_degree: None,
            min_girth: None,
            connected: true,
        }
    }

    pub fn regular(mut self, k: usize) -> GenSpec {
        self.regular = Some(k);
        self
    }

    pub fn size_range(mut self, min: usize, max: usize) -> GenSpec {
        self.min_size = Some(min);
        self.max_size = Some(max);
        self
    }

    pub fn min_size(mut self, min: usize) -> GenSpec {
        self.min_size = Some(min);
        self
    }

    pub fn min_degree(mut self, d: usize) -> GenSpec {
        self.min_degree = Some(d);
        self
    }

    pub fn max_degree(mut self, d: usize) -> GenSpec {
        self.max_degree = Some(d);
        self
    }

    pub fn min_girth(mut self, g: usize) -> GenSpec {
        self.min_girth = Some(g);
        self
    }

    fn degree_cap(&self) -> usize {
        let n = self.order;
        let mut cap = n.saturating_sub(1);
        if let Some(d) = self.max_degree {
            cap = cap.min(d);
        }
        if let Some(k) = self.regular {
            cap = cap.min(k);
        }
        cap
    }

    fn degree_floor(&self) -> usize {
        self.min_degree.unwrap_or(0).max(self.regular.unwrap_or(0))
    }

    fn edge_cap(&self) -> usize {
        let n = self.order;
        let mut cap = n * (n - 1) / 2;
        if let Some(e) = self.max_size {
            cap = cap.min(e);
        }
        if let Some(k) = self.regular {
            cap = cap.min(n * k / 2);
        }
        cap.min(n * self.degree_cap() / 2)
    }

    fn edge_floor(&self) -> usize {
        let n = self.order;
        let mut floor = self.min_size.unwrap_or(0).max(n - 1);
        if let Some(k) = self.regular {
            floor = floor.max(n * k / 2);
        }
        floor.max((n * self.degree_floor()).div_ceil(2))
    }

    fn restricted(&self) -> bool {
        let n = self.order;
        self.edge_cap() <= n + 3
            || self.degree_cap() <= 2
            || self.regular == Some(3)
            || self.min_girth.is_some_and(|g| g >= 7)
            || (n <= 14 && self.regular == Some(4))
    }

    /// Checks consistency and desk-scale feasibility.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if !self.connected {
            return Err(Error::InconsistentSpec("only connected graphs are generated".into()));
        }
        if n == 0 {
            return Err(Error::InconsistentSpec("order must be positive".into()));
        }
        if let Some(k) = self.regular {
            if k >= n.max(2) || n * k % 2 == 1 || (k == 0 && n > 1) {
                return Err(Error::InconsistentSpec(format!(
                    "no connected {k}-regular graph of order {n}"
                )));
            }
        }
        if let (Some(lo), Some(hi)) = (self.min_size, self.max_size) {
            if lo > hi {
                return Err(Error::InconsistentSpec(format!("size range {lo}..={hi} is empty")));
            }
        }
        if let (Some(lo), Some(hi)) = (self.min_degree, self.max_degree) {
            if lo > hi {
                return Err(Error::InconsistentSpec(format!("degree range {lo}..={hi} is empty")));
            }
        }
        if self.min_girth.is_some_and(|g| g < 3) {
            return Err(Error::InconsistentSpec("girth bound must be at least 3".into()));
        }
        if n > MAX_RESTRICTED_ORDER {
            return Err(Error::Infeasible {
                requested: n,
                largest: MAX_RESTRICTED_ORDER,
            });
        }
        if n > MAX_FULL_ORDER && !self.restricted() {
            return Err(Error::Infeasible {
                requested: n,
                largest: MAX_FULL_ORDER,
            });
        }
        Ok(())
    }

    /// True when `g` satisfies every constraint of the spec.
    pub fn admits(&self, g: &Graph) -> bool {
        let e = g.size();
        g.order() == self.order
            && metrics::is_connected(g)
            && self.min_size.is_none_or(|lo| e >= lo)
            && self.max_size.is_none_or(|hi| e <= hi)
            && (0..g.order()).all(|v| {
                let d = g.degree(v);
                d >= self.degree_floor() && d <= self.degree_cap()
            })
            && self
                .min_girth
                .is_none_or(|lo| metrics::girth(g).is_none_or(|girth| girth >= lo))
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "connected order {}", self.order)?;
        if let Some(k) = self.regular {
            write!(f, ", {k}-regular")?;
        }
        match (self.min_size, self.max_size) {
            (Some(lo), Some(hi)) => write!(f, ", size {lo}..={hi}")?,
            (Some(lo), None) => write!(f, ", size >= {lo}")?,
            (None, Some(hi)) => write!(f, ", size <= {hi}")?,
            (None, None) => {}
        }
        if let Some(d) = self.min_degree {
            write!(f, ", min degree {d}")?;
        }
        if let Some(d) = self.max_degree {
            write!(f, ", max degree {d}")?;
        }
        if let Some(g) = self.min_girth {
            write!(f, ", girth >= {g}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
struct Node {
    n: usize,
    e: usize,
    rows: [u64; MAX_RESTRICTED_ORDER],
}

impl Node {
    fn root() -> Node {
        Node {
            n: 1,
            e: 0,
            rows: [0; MAX_RESTRICTED_ORDER],
        }
    }

    fn rows(&self) -> &[u64] {
        &self.rows[..self.n]
    }

    fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    fn child(&self, s: u64) -> Node {
        let mut c = *self;
        let v = self.n;
        c.rows[v] = s;
        let mut bits = s;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            c.rows[u] |= 1 << v;
        }
        c.n += 1;
        c.e += s.count_ones() as usize;
        c
    }

    fn graph(&self) -> Graph {
        Graph::from_rows(self.n, self.rows())
    }
}

struct Engine {
    spec: GenSpec,
    cap: usize,
    floor: usize,
    edge_cap: usize,
    edge_floor: usize,
}

impl Engine {
    fn new(spec: GenSpec) -> Engine {
        Engine {
            spec,
            cap: spec.degree_cap(),
            floor: spec.degree_floor(),
            edge_cap: spec.edge_cap(),
            edge_floor: spec.edge_floor(),
        }
    }

    fn excess_cap(&self) -> isize {
        self.edge_cap as isize - self.spec.order as isize
    }

    /// Children of `p` accepted by the canonical-deletion test.
    fn children(&self, p: &Node, generators: &[Vec<usize>], out: &mut Vec<(Node, Option<Vec<Vec<usize>>>)>) {
        let m = p.n;
        let target = self.spec.order;
        let excess = p.e as isize - m as isize;
        let by_excess = self.excess_cap() - excess + 1;
        if by_excess < 1 {
            return;
        }
        let smax = (by_excess as usize).min(m).min(self.cap);
        let remaining_after = target - (m + 1);
        // Most edges the final graph can still reach.
        let mut reachable = p.e;
        for j in m..target {
            reachable += j.min(self.cap);
        }
        if reachable < self.edge_floor {
            return;
        }

        let allowed: Vec<usize> = (0..m).filter(|&v| p.degree(v) < self.cap).collect();
        let near = self.spec.min_girth.filter(|&g| g >= 4).map(|g| balls(p.rows(), g - 3));
        let mut seen = if generators.is_empty() {
            Vec::new()
        } else {
            vec![0u64; (1usize << m).div_ceil(64)]
        };
        let mut orbit = Vec::new();

        for s in 1..=smax.min(allowed.len()) {
            let mut comb: u64 = (1 << s) - 1;
            let limit: u64 = 1 << allowed.len();
            while comb < limit {
                let mask = spread(comb, &allowed);
                comb = next_combination(comb);

                if !generators.is_empty() {
                    if seen[mask as usize / 64] >> (mask % 64) & 1 == 1 {
                        continue;
                    }
                    mark_orbit(mask, generators, &mut seen, &mut orbit);
                }
                if let Some(near) = &near {
                    let mut bits = mask;
                    let mut ok = true;
                    while bits != 0 {
                        let u = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        if near[u] & mask != 1 << u {
                            ok = false;
                            break;
                        }
                    }
                    if !ok {
                        continue;
                    }
                }
                let c = p.child(mask);
                if !self.can_complete(&c, remaining_after) {
                    continue;
                }
                if let Some(gens) = accept(&c, remaining_after > 0) {
                    out.push((c, gens));
                }
            }
        }
    }

    fn can_complete(&self, c: &Node, remaining: usize) -> bool {
        if self.floor == 0 {
            return true;
        }
        let mut total = 0;
        for v in 0..c.n {
            let need = self.floor.saturating_sub(c.degree(v));
            if need > remaining {
                return false;
            }
            total += need;
        }
        total <= remaining * self.cap
    }

    fn is_leaf_ok(&self, c: &Node) -> bool {
        let s = &self.spec;
        c.e >= self.edge_floor
            && c.e <= self.edge_cap
            && s.min_size.is_none_or(|lo| c.e >= lo)
            && (0..c.n).all(|v| c.degree(v) >= self.floor)
    }

    fn walk<F: FnMut(&Node)>(&self, node: &Node, generators: Option<Vec<Vec<usize>>>, visit: &mut F) {
        if node.n == self.spec.order {
            if self.is_leaf_ok(node) {
                visit(node);
            }
            return;
        }
        let generators = generators.unwrap_or_else(|| canonical_labeling(node.rows()).generators);
        let mut kids = Vec::new();
        self.children(node, &generators, &mut kids);
        drop(generators);
        for (child, gens) in kids {
            self.walk(&child, gens, visit);
        }
    }

    /// Expands level by level from `K_1` until the frontier is wide enough to split.
    fn frontier(&self) -> Vec<(Node, Option<Vec<Vec<usize>>>)> {
        let mut level = vec![(Node::root(), None)];
        while level[0].0.n + 1 < self.spec.order && level.len() < SPLIT_FRONTIER {
            let mut next = Vec::new();
            for (node, gens) in level {
                let gens = gens.unwrap_or_else(|| canonical_labeling(node.rows()).generators);
                self.children(&node, &gens, &mut next);
            }
            if next.is_empty() {
                return next;
            }
            level = next;
        }
        level
    }
}

/// Canonical-deletion test for a freshly built child whose new vertex is the
/// last one. Returns `None` to reject, otherwise the child's automorphism
/// generators when they were computed and are still needed.
fn accept(c: &Node, internal: bool) -> Option<Option<Vec<Vec<usize>>>> {
    let n = c.n;
    let v = n - 1;
    if n <= 2 {
        return Some(None);
    }
    let rows = c.rows();
    let key = |w: usize| -> u32 {
        let mut sum = 0u32;
        let mut bits = rows[w];
        while bits != 0 {
            sum += rows[bits.trailing_zeros() as usize].count_ones();
            bits &= bits - 1;
        }
        (rows[w].count_ones() << 10) | sum
    };
    let kv = key(v);
    let mut ties = 0u64;
    for w in 0..v {
        let kw = key(w);
        if kw < kv {
            if !is_cut_vertex(rows, w) {
                return None;
            }
        } else if kw == kv && !is_cut_vertex(rows, w) {
            ties |= 1 << w;
        }
    }
    if ties == 0 {
        return Some(None);
    }
    ties |= 1 << v;
    let canon = canonical_labeling(rows);
    let mut chosen = v;
    let mut bits = ties;
    while bits != 0 {
        let w = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if canon.label[w] < canon.label[chosen] {
            chosen = w;
        }
    }
    if canon.same_orbit(v, chosen) {
        Some(internal.then_some(canon.generators))
    } else {
        None
    }
}

fn is_cut_vertex(rows: &[u64], w: usize) -> bool {
    let rest = low_mask(rows.len()) & !(1 << w);
    if rest == 0 {
        return false;
    }
    let start = rest.trailing_zeros();
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= rows[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        next &= rest & !seen;
        seen |= next;
        frontier = next;
    }
    seen != rest
}

/// `balls[u]` holds the vertices within distance `radius` of `u`.
fn balls(rows: &[u64], radius: usize) -> Vec<u64> {
    (0..rows.len())
        .map(|u| {
            let mut seen = 1u64 << u;
            let mut frontier = seen;
            for _ in 0..radius {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    next |= rows[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                frontier = next & !seen;
                seen |= frontier;
            }
            seen
        })
        .collect()
}

fn spread(comb: u64, positions: &[usize]) -> u64 {
    let mut mask = 0;
    let mut bits = comb;
    while bits != 0 {
        mask |= 1 << positions[bits.trailing_zeros() as usize];
        bits &= bits - 1;
    }
    mask
}

// Gosper's hack.
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

fn image(mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0;
    let mut bits = mask;
    while bits != 0 {
        out |= 1 << perm[bits.trailing_zeros() as usize];
        bits &= bits - 1;
    }
    out
}

fn mark_orbit(mask: u64, generators: &[Vec<usize>], seen: &mut [u64], stack: &mut Vec<u64>) {
    seen[mask as usize / 64] |= 1 << (mask % 64);
    stack.clear();
    stack.push(mask);
    while let Some(x) = stack.pop() {
        for g in generators {
            let y = image(x, g);
            let (word, bit) = (y as usize / 64, y % 64);
            if seen[word] >> bit & 1 == 0 {
                seen[word] |= 1 << bit;
                stack.push(y);
            }
        }
    }
}

/// Runs `visit` on every generated graph, partitioning the search tree across
/// `jobs` workers (0 picks the thread-pool default). Each frontier subtree is
/// folded into its own accumulator; the accumulators come back in frontier
/// order, so the result does not depend on `jobs`.
pub fn fold<A, I, V>(spec: &GenSpec, jobs: usize, init: I, visit: V) -> Result<Vec<A>>
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &Graph) + Sync,
{
    spec.validate()?;
    let engine = Engine::new(*spec);
    if spec.order == 1 {
        let mut acc = init();
        let root = Node::root();
        if engine.is_leaf_ok(&root) {
            visit(&mut acc, &root.graph());
        }
        return Ok(vec![acc]);
    }
    let frontier = engine.frontier();
    let work = |(node, gens): (Node, Option<Vec<Vec<usize>>>)| {
        let mut acc = init();
        engine.walk(&node, gens, &mut |leaf: &Node| visit(&mut acc, &leaf.graph()));
        acc
    };
    Ok(run_parallel(frontier, jobs, work))
}

#[cfg(feature = "parallel")]
fn run_parallel<T, A, W>(items: Vec<T>, jobs: usize, work: W) -> Vec<A>
where
    T: Send,
    A: Send,
    W: Fn(T) -> A + Sync,
{
    use rayon::prelude::*;
    if jobs == 1 {
        return items.into_iter().map(work).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build();
    match pool {
        Ok(pool) => pool.install(|| items.into_par_iter().map(&work).collect()),
        Err(_) => items.into_iter().map(work).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_parallel<T, A, W>(items: Vec<T>, _jobs: usize, work: W) -> Vec<A>
where
    W: Fn(T) -> A,
{
    items.into_iter().map(work).collect()
}

/// Restartable, sorted stream of canonical graph6 strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationStream {
    spec: GenSpec,
    graphs: Vec<String>,
}

impl EnumerationStream {
    pub fn spec(&self) -> &GenSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graph6(&self) -> &[String] {
        &self.graphs
    }

    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        self.graphs
            .iter()
            .map(|s| Graph::from_graph6(s).expect("stream holds valid graph6"))
    }
}

impl<'a> IntoIterator for &'a EnumerationStream {
    type Item = &'a String;
    type IntoIter = std::slice::Iter<'a, String>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

pub fn enumerate(spec: &GenSpec) -> Result<EnumerationStream> {
    enumerate_jobs(spec, 0)
}

pub fn enumerate_jobs(spec: &GenSpec, jobs: usize) -> Result<EnumerationStream> {
    let parts = fold(spec, jobs, Vec::new, |acc: &mut Vec<String>, g| {
        acc.push(crate::canon::canonical_form(g))
    })?;
    let mut graphs: Vec<String> = parts.into_iter().flatten().collect();
    graphs.sort_unstable();
    Ok(EnumerationStream { spec: *spec, graphs })
}

pub fn count_classes(spec: &GenSpec) -> Result<u64> {
    count_classes_jobs(spec, 0)
}

pub fn count_classes_jobs(spec: &GenSpec, jobs: usize) -> Result<u64> {
    let parts = fold(spec, jobs, || 0u64, |acc, _| *acc += 1)?;
    Ok(parts.into_iter().sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Max,
    Min,
}

impl Objective {
    fn better(self, a: usize, b: usize) -> bool {
        match self {
            Objective::Max => a > b,
            Objective::Min => a < b,
        }
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Objective> {
        match s {
            "max" => Ok(Objective::Max),
            "min" => Ok(Objective::Min),
            _ => Err(Error::InvalidParameter(format!("unknown objective {s:?}"))),
        }
    }
}

/// Named graph predicates for scans and stream filtering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    All,
    Connected,
    Asc,
    Ap,
    SelfCentered,
    Unicyclic,
    Theta,
    Binocle,
}

impl Filter {
    pub const ALL: [Filter; 8] = [
        Filter::All,
        Filter::Connected,
        Filter::Asc,
        Filter::Ap,
        Filter::SelfCentered,
        Filter::Unicyclic,
        Filter::Theta,
        Filter::Binocle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::Connected => "connected",
            Filter::Asc => "asc",
            Filter::Ap => "ap",
            Filter::SelfCentered => "self-centered",
            Filter::Unicyclic => "unicyclic",
            Filter::Theta => "theta",
            Filter::Binocle => "binocle",
        }
    }

    /// Disconnected graphs fail every filter except `all`.
    pub fn accepts(self, g: &Graph) -> bool {
        if self == Filter::All {
            return true;
        }
        if !metrics::is_connected(g) {
            return false;
        }
        match self {
            Filter::All | Filter::Connected => true,
            Filter::Asc => classify::is_asc(g).unwrap_or(false),
            Filter::Ap => classify::is_ap(g).unwrap_or(false),
            Filter::SelfCentered => classify::is_self_centered(g).unwrap_or(false),
            Filter::Unicyclic => g.size() == g.order(),
            Filter::Theta => matches!(classify::recognize_theta(g), Ok(Some(_))),
            Filter::Binocle => matches!(classify::recognize_binocle(g), Ok(Some(_))),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Filter> {
        Filter::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown filter {s:?}")))
    }
}

/// Named integer statistics. `None` means the statistic is undefined for the
/// graph (girth of a forest, radius of a disconnected graph).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistic {
    Girth,
    Independence,
    Size,
    MaxDegree,
    MinDegree,
    TopVertices,
    Radius,
    Diameter,
}

impl Statistic {
    pub const ALL: [Statistic; 8] = [
        Statistic::Girth,
        Statistic::Independence,
        Statistic::Size,
        Statistic::MaxDegree,
        Statistic::MinDegree,
        Statistic::TopVertices,
        Statistic::Radius,
        Statistic::Diameter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Girth => "girth",
            Statistic::Independence => "independence",
            Statistic::Size => "size",
            Statistic::MaxDegree => "max-degree",
            Statistic::MinDegree => "min-degree",
            Statistic::TopVertices => "top-vertices",
            Statistic::Radius => "radius",
            Statistic::Diameter => "diameter",
        }
    }

    pub fn eval(self, g: &Graph) -> Option<usize> {
        match self {
            Statistic::Girth => metrics::girth(g),
            Statistic::Independence => Some(metrics::independence_number(g)),
            Statistic::Size => Some(g.size()),
            Statistic::MaxDegree => Some(metrics::max_degree(g)),
            Statistic::MinDegree => Some(metrics::min_degree(g)),
            Statistic::TopVertices => Some(classify::top_vertex_count(g)),
            Statistic::Radius => metrics::ecc_profile(g).ok().map(|p| p.radius),
            Statistic::Diameter => metrics::ecc_profile(g).ok().map(|p| p.diameter),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Statistic> {
        Statistic::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown statistic {s:?}")))
    }
}

/// Outcome of an extremal scan. `value` is `None` when no graph passed the
/// filter with a defined statistic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub statistic: String,
    pub objective: Objective,
    pub value: Option<usize>,
    pub count: u64,
    pub certificates: Vec<String>,
    pub truncated: bool,
    pub matched: u64,
    pub visited: u64,
}

impl ScanResult {
    pub fn has_witness(&self) -> bool {
        self.value.is_some()
    }
}

#[derive(Default)]
struct ScanAcc {
    value: Option<usize>,
    count: u64,
    certs: BTreeSet<String>,
    matched: u64,
    visited: u64,
}

/// Exhaustive extremal scan of `statistic` over the graphs of `spec` accepted
/// by `filter`. Keeps the `cert_cap` lexicographically smallest canonical
/// forms of the attaining graphs.
pub fn scan<P, S>(
    spec: &GenSpec,
    filter: P,
    statistic_name: &str,
    statistic: S,
    objective: Objective,
    cert_cap: usize,
    jobs: usize,
) -> Result<ScanResult>
where
    P: Fn(&Graph) -> bool + Sync,
    S: Fn(&Graph) -> Option<usize> + Sync,
{
    let parts = fold(spec, jobs, ScanAcc::default, |acc, g| {
        acc.visited += 1;
        if !filter(g) {
            return;
        }
        acc.matched += 1;
        let Some(x) = statistic(g) else { return };
        match acc.value {
            Some(best) if objective.better(best, x) => return,
            Some(best) if best == x => {}
            _ => {
                acc.value = Some(x);
                acc.count = 0;
                acc.certs.clear();
            }
        }
        acc.count += 1;
        keep_smallest(&mut acc.certs, crate::canon::canonical_form(g), cert_cap);
    })?;

    let mut total = ScanAcc::default();
    for part in parts {
        total.visited += part.visited;
        total.matched += part.matched;
        let Some(x) = part.value else { continue };
        match total.value {
            Some(best) if objective.better(best, x) => continue,
            Some(best) if best == x => {}
            _ => {
                total.value = Some(x);
                total.count = 0;
                total.certs.clear();
            }
        }
        total.count += part.count;
        for c in part.certs {
            keep_smallest(&mut total.certs, c, cert_cap);
        }
    }
    Ok(ScanResult {
        statistic: statistic_name.to_string(),
        objective,
        value: total.value,
        truncated: total.count > total.certs.len() as u64,
        count: total.count,
        certificates: total.certs.into_iter().collect(),
        matched: total.matched,
        visited: total.visited,
    })
}

/// `scan` with a named filter and statistic.
pub fn scan_named(
    spec: &GenSpec,
    filter: Filter,
    statistic: Statistic,
    objective: Objective,
    cert_cap: usize,
    jobs: usize,
) -> Result<ScanResult> {
    scan(
        spec,
        |g| filter.accepts(g),
        statistic.name(),
        |g| statistic.eval(g),
        objective,
        cert_cap,
        jobs,
    )
}

fn keep_smallest(set: &mut BTreeSet<String>, item: String, cap: usize) {
    if cap == 0 {
        return;
    }
    if set.len() < cap {
        set.insert(item);
    } else if set.last().is_some_and(|last| item < *last) {
        set.insert(item);
        set.pop_last();
    }
}
