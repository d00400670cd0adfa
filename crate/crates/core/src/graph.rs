//! Immutable simple graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` row of the adjacency matrix, so neighbourhood
//! queries, BFS frontiers and independent-set branching are all single-word
//! bit operations.

use std::fmt;

use crate::error::{Error, Result};

/// Width of one adjacency row; the largest supported order.
pub const MAX_ORDER: usize = 64;

/// Largest order representable in header-less short-form graph6.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices of some graph, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All vertices `0..n`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::empty(), VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected simple graph with vertices `0..n`.
///
/// Values are immutable: every operation builds a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    size: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph {
            n,
            size: 0,
            adj: [0; MAX_ORDER],
        })
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = [0u64; MAX_ORDER];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_rows(n, &adj[..n]))
    }

    /// Trusted constructor from adjacency rows; invariants are checked in debug builds.
    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Graph {
        debug_assert!((1..=MAX_ORDER).contains(&n));
        debug_assert_eq!(rows.len(), n);
        let mut adj = [0u64; MAX_ORDER];
        adj[..n].copy_from_slice(rows);
        let degree_sum: u32 = rows.iter().map(|r| r.count_ones()).sum();
        let g = Graph {
            n,
            size: degree_sum as usize / 2,
            adj,
        };
        debug_assert!(g.check_invariants(), "malformed adjacency rows");
        g
    }

    fn check_invariants(&self) -> bool {
        let mask = low_mask(self.n);
        (0..self.n).all(|i| {
            let row = self.adj[i];
            row & !mask == 0 && row >> i & 1 == 0 && VertexSet(row).iter().all(|j| self.adj[j] >> i & 1 == 1)
        }) && self.adj[self.n..].iter().all(|&r| r == 0)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| VertexSet(self.adj[u] & !low_mask(u + 1)).iter().map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let rows: Vec<u64> = (0..self.n).map(|i| !self.adj[i] & mask & !(1 << i)).collect();
        Graph::from_rows(self.n, &rows)
    }

    /// `self + other`: the vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let shift = self.n;
        let mut rows = self.rows().to_vec();
        rows.extend(other.rows().iter().map(|&r| r << shift));
        Ok(Graph::from_rows(n, &rows))
    }

    /// Adds a new vertex `n` of degree one, adjacent to `v`.
    pub fn attach_pendant(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.with_new_vertex(VertexSet::singleton(v))
    }

    /// Adds a new vertex `n` whose open neighbourhood equals `N(v)`.
    pub fn duplicate_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.with_new_vertex(self.neighbors(v))
    }

    /// Adds a new vertex `n` adjacent to exactly `nbrs`.
    pub fn with_new_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        let n = self.n + 1;
        check_order(n)?;
        if !nbrs.is_subset(self.vertices()) {
            return Err(Error::VertexOutOfRange {
                vertex: nbrs.iter().last().unwrap_or(0),
                order: self.n,
            });
        }
        let mut rows = self.rows().to_vec();
        for u in nbrs {
            rows[u] |= 1 << self.n;
        }
        rows.push(nbrs.bits());
        Ok(Graph::from_rows(n, &rows))
    }

    /// Adds the edge `uv`, returning a new graph.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        let mut rows = self.rows().to_vec();
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        Ok(Graph::from_rows(self.n, &rows))
    }

    /// Replaces `v` by a clique `K_t` whose vertices are all joined to `N(v)`.
    ///
    /// The first clique vertex keeps label `v`; the other `t - 1` get labels
    /// `n, n + 1, ...`.
    pub fn blow_up(&self, v: usize, t: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if t == 0 {
            return Err(Error::InvalidParameter("blow-up clique size must be positive".into()));
        }
        let n = self.n + t - 1;
        check_order(n)?;
        let nbrs = self.adj[v];
        let clique: u64 = (1u64 << v) | (low_mask(n) & !low_mask(self.n));
        let mut rows = self.rows().to_vec();
        rows.resize(n, 0);
        for u in VertexSet(nbrs) {
            rows[u] |= clique;
        }
        for c in VertexSet(clique) {
            rows[c] = nbrs | (clique & !(1 << c));
        }
        Ok(Graph::from_rows(n, &rows))
    }

    /// Renames vertex `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation length differs from order".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for (i, &pi) in perm.iter().enumerate() {
            rows[pi] = VertexSet(self.adj[i]).iter().fold(0, |acc, j| acc | 1 << perm[j]);
        }
        Graph::from_rows(self.n, &rows)
    }

    /// Short-form graph6 encoding (no header, no trailing newline).
    pub fn to_graph6(&self) -> Result<String> {
        if self.n > GRAPH6_MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                order: self.n,
                max: GRAPH6_MAX_ORDER,
            });
        }
        Ok(encode_graph6(self.rows()))
    }

    /// Parses one short-form graph6 string. Surrounding whitespace is not accepted.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let bytes = text.as_bytes();
        let first = *bytes.first().ok_or(Error::Graph6 {
            offset: 0,
            reason: "empty input",
        })?;
        if !(63..=126).contains(&first) {
            return Err(Error::Graph6 {
                offset: 0,
                reason: "length byte outside printable graph6 range",
            });
        }
        if first == 126 {
            return Err(Error::Graph6 {
                offset: 0,
                reason: "long-form order not supported",
            });
        }
        let n = (first - 63) as usize;
        if n == 0 {
            return Err(Error::Graph6 {
                offset: 0,
                reason: "order zero",
            });
        }
        let nbits = n * (n - 1) / 2;
        let nbytes = nbits.div_ceil(6);
        let body = &bytes[1..];
        if body.len() < nbytes {
            return Err(Error::Graph6 {
                offset: bytes.len(),
                reason: "truncated adjacency data",
            });
        }
        if body.len() > nbytes {
            return Err(Error::Graph6 {
                offset: 1 + nbytes,
                reason: "trailing bytes after adjacency data",
            });
        }
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for (idx, &b) in body.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6 {
                    offset: 1 + idx,
                    reason: "byte outside printable graph6 range",
                });
            }
            let chunk = b - 63;
            for shift in (0..6).rev() {
                let bit = chunk >> shift & 1 == 1;
                if k >= nbits {
                    if bit {
                        return Err(Error::Graph6 {
                            offset: 1 + idx,
                            reason: "nonzero padding bits",
                        });
                    }
                } else if bit {
                    let (i, j) = upper_triangle_pair(k);
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Ok(Graph::from_rows(n, &rows))
    }

    /// Graphviz rendering with vertex ids as labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange {
            order: n,
            max: MAX_ORDER,
        })
    }
}

/// Maps the k-th bit of the graph6 stream (column-major upper triangle) to `(i, j)`, `i < j`.
fn upper_triangle_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

pub(crate) fn encode_graph6(rows: &[u64]) -> String {
    let n = rows.len();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in &rows[..j] {
            chunk = chunk << 1 | (row >> j & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_graph6() {
            Ok(s) => write!(f, "Graph({s})"),
            Err(_) => write!(f, "Graph(n={}, e={})", self.n, self.size),
        }
    }
}
