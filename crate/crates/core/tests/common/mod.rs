#![allow(dead_code, clippy::needless_range_loop)]

use asc_core::Graph;
use proptest::prelude::*;

/// Every labelled graph on `n` vertices, as edge bitmasks over the pairs `(i, j)`, `i < j`.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

pub fn connected_by_dfs(g: &Graph) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if g.has_edge(u, v) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Labelled `k`-regular graphs on `n` vertices by edge-by-edge backtracking.
pub fn labelled_regular(n: usize, k: usize) -> Vec<Graph> {
    fn go(
        n: usize,
        k: usize,
        deg: &mut Vec<usize>,
        edges: &mut Vec<(usize, usize)>,
        u: usize,
        v: usize,
        out: &mut Vec<Graph>,
    ) {
        if u == n {
            if deg.iter().all(|&d| d == k) {
                out.push(Graph::from_edges(n, edges.iter().copied()).unwrap());
            }
            return;
        }
        if v == n {
            if deg[u] == k {
                go(n, k, deg, edges, u + 1, u + 2, out);
            }
            return;
        }
        if deg[u] < k && deg[v] < k {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
            go(n, k, deg, edges, u, v + 1, out);
            edges.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        go(n, k, deg, edges, u, v + 1, out);
    }
    let mut out = Vec::new();
    go(n, k, &mut vec![0; n], &mut Vec::new(), 0, 1, &mut out);
    out
}

/// Largest independent set by trying every subset.
pub fn brute_independence(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = (0..n).all(|u| mask >> u & 1 == 0 || (g.rows()[u] as u32) & mask == 0);
        if independent {
            best = size;
        }
    }
    best
}

/// Shortest cycle: for each edge `uv`, one plus the `u`-`v` distance without that edge.
pub fn edge_removal_girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                if g.has_edge(x, y) && (x, y) != (u, v) && (x, y) != (v, u) && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            let c = dist[v] + 1;
            best = Some(best.map_or(c, |b| b.min(c)));
        }
    }
    best
}

/// All-pairs distances by Floyd-Warshall (`usize::MAX` when unreachable).
pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 20u8..=230)
        .prop_flat_map(|(n, threshold)| {
            let pairs = n * (n - 1) / 2;
            (Just(n), Just(threshold), proptest::collection::vec(any::<u8>(), pairs))
        })
        .prop_map(|(n, threshold, bytes)| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges = pairs.zip(bytes).filter(|&(_, b)| b < threshold).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
}

pub fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_map(|g| {
        // Chain consecutive components together.
        let mut h = g;
        for v in 1..h.order() {
            if !connected_prefix(&h, v) {
                h = h.with_edge(v - 1, v).unwrap();
            }
        }
        h
    })
}

fn connected_prefix(g: &Graph, upto: usize) -> bool {
    let mut seen = vec![false; upto + 1];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..=upto {
            if g.has_edge(u, v) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}
