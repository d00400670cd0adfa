//! Distance-based and combinatorial invariants: eccentricities, girth,
//! independence number, blocks and degree statistics.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Per-vertex eccentricities with the derived radius, diameter, center and periphery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccProfile {
    pub ecc: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    pub center: VertexSet,
    pub periphery: VertexSet,
}

impl EccProfile {
    pub fn is_central(&self, v: usize) -> bool {
        self.center.contains(v)
    }

    pub fn is_peripheral(&self, v: usize) -> bool {
        self.periphery.contains(v)
    }
}

/// Biconnected blocks and cut vertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted by smallest member, then by bit pattern.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// The block containing every vertex of `set`, if one exists.
    pub fn block_containing(&self, set: VertexSet) -> Option<VertexSet> {
        self.blocks.iter().copied().find(|b| set.is_subset(*b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    /// Degrees sorted in non-increasing order.
    pub sequence: Vec<usize>,
    pub min: usize,
    pub max: usize,
    /// Vertices of maximum degree, ascending.
    pub top: Vec<usize>,
}

/// Hop distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Option<usize>>> {
    if source >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: source,
            order: g.order(),
        });
    }
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut seen = 1u64 << source;
    let mut frontier = seen;
    let mut level = 0;
    while frontier != 0 {
        level += 1;
        let next = expand(g, frontier) & !seen;
        for v in VertexSet::from_bits(next) {
            dist[v] = Some(level);
        }
        seen |= next;
        frontier = next;
    }
    Ok(dist)
}

#[inline]
fn expand(g: &Graph, frontier: u64) -> u64 {
    VertexSet::from_bits(frontier)
        .iter()
        .fold(0, |acc, v| acc | g.neighbors(v).bits())
}

/// Eccentricity of `v`, or `None` if some vertex is unreachable from it.
pub fn eccentricity(g: &Graph, v: usize) -> Option<usize> {
    let all = g.vertices().bits();
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    let mut level = 0;
    while seen != all {
        let next = expand(g, frontier) & !seen;
        if next == 0 {
            return None;
        }
        level += 1;
        seen |= next;
        frontier = next;
    }
    Some(level)
}

pub fn ecc_profile(g: &Graph) -> Result<EccProfile> {
    let ecc = (0..g.order())
        .map(|v| eccentricity(g, v).ok_or(Error::Disconnected))
        .collect::<Result<Vec<_>>>()?;
    let radius = *ecc.iter().min().expect("order is at least one");
    let diameter = *ecc.iter().max().expect("order is at least one");
    let pick = |value: usize| {
        ecc.iter()
            .enumerate()
            .filter(|&(_, &e)| e == value)
            .map(|(v, _)| v)
            .collect::<VertexSet>()
    };
    Ok(EccProfile {
        center: pick(radius),
        periphery: pick(diameter),
        radius,
        diameter,
        ecc,
    })
}

pub fn is_connected(g: &Graph) -> bool {
    let all = g.vertices().bits();
    let mut seen = 1u64;
    let mut frontier = seen;
    while frontier != 0 {
        frontier = expand(g, frontier) & !seen;
        seen |= frontier;
    }
    seen == all
}

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        dist.fill(usize::MAX);
        queue.clear();
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.push(s);
        let mut head = 0;
        'bfs: while head < queue.len() {
            let u = queue[head];
            head += 1;
            if let Some(b) = best {
                // Any cycle closed from here has length at least 2 * dist[u].
                if 2 * dist[u] >= b {
                    break 'bfs;
                }
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// A maximum independent set, found by branch and bound with a greedy
/// clique-cover upper bound.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut best = 0u64;
    mis_search(g.rows(), g.vertices().bits(), 0, &mut best);
    VertexSet::from_bits(best)
}

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

fn mis_search(adj: &[u64], cand: u64, cur: u64, best: &mut u64) {
    if cand == 0 {
        if cur.count_ones() > best.count_ones() {
            *best = cur;
        }
        return;
    }
    if cur.count_ones() + clique_cover_bound(adj, cand) <= best.count_ones() {
        return;
    }
    let mut pick = usize::MAX;
    let mut pick_deg = 0;
    let mut low = usize::MAX;
    for v in VertexSet::from_bits(cand) {
        let d = (adj[v] & cand).count_ones();
        if d <= 1 {
            low = v;
            break;
        }
        if pick == usize::MAX || d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    if low != usize::MAX {
        // A vertex of degree at most one lies in some maximum independent set.
        mis_search(adj, cand & !adj[low] & !(1 << low), cur | 1 << low, best);
        return;
    }
    let v = pick;
    mis_search(adj, cand & !adj[v] & !(1 << v), cur | 1 << v, best);
    mis_search(adj, cand & !(1 << v), cur, best);
}

fn clique_cover_bound(adj: &[u64], cand: u64) -> u32 {
    let mut rest = cand;
    let mut cliques = 0;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        let mut clique = 1u64 << u;
        let mut common = adj[u] & rest;
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            clique |= 1 << w;
            common &= adj[w];
        }
        rest &= !clique;
        cliques += 1;
    }
    cliques
}

/// Biconnected decomposition (Hopcroft–Tarjan).
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![VertexSet::singleton(0)],
            cut_vertices: VertexSet::empty(),
        });
    }
    let mut state = Tarjan {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        clock: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cuts: 0,
    };
    state.visit(0, usize::MAX);
    let mut blocks = state.blocks;
    blocks.sort_by_key(|b| (b.first(), b.bits()));
    Ok(BlockDecomposition {
        blocks,
        cut_vertices: VertexSet::from_bits(state.cuts),
    })
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    clock: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: u64,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.clock;
        self.low[u] = self.clock;
        self.clock += 1;
        let mut children = 0;
        for w in self.g.neighbors(u) {
            if self.disc[w] == usize::MAX {
                children += 1;
                self.edge_stack.push((u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent != usize::MAX || children > 1 {
                        self.cuts |= 1 << u;
                    }
                    let mut block = VertexSet::empty();
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block = block.with(a).with(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.edge_stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        // The root is a cut vertex only with two or more DFS children.
        if parent == usize::MAX && children < 2 {
            self.cuts &= !(1 << u);
        }
    }
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let max = *degrees.iter().max().expect("order is at least one");
    let min = *degrees.iter().min().expect("order is at least one");
    let top = (0..g.order()).filter(|&v| degrees[v] == max).collect();
    let mut sequence = degrees;
    sequence.sort_unstable_by(|a, b| b.cmp(a));
    DegreeStats {
        sequence,
        min,
        max,
        top,
    }
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0)
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).min().unwrap_or(0)
}

pub fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && (0..g.order()).all(|v| g.degree(v) == 2) && is_connected(g)
}

/// Unordered pairs `(u, v)`, `u < v`, at distance `floor(n / 2)` on a cycle.
pub fn antipodal_pairs(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if !is_cycle(g) {
        return Err(Error::NotACycle);
    }
    let half = g.order() / 2;
    let mut pairs = Vec::new();
    for u in 0..g.order() {
        let dist = bfs_distances(g, u)?;
        for (v, d) in dist.iter().enumerate().skip(u + 1) {
            if *d == Some(half) {
                pairs.push((u, v));
            }
        }
    }
    Ok(pairs)
}
