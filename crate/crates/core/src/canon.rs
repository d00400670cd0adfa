//! Canonical labelling by equitable-partition refinement and individualisation.
//!
//! The search tree is explored depth first. Two kinds of pruning are used,
//! both driven by automorphisms discovered at leaves:
//!
//! * when a leaf reproduces the graph of the first or the best leaf, the
//!   subtree hanging below the point where its path diverged from that leaf's
//!   path is the image of an already explored subtree and is abandoned;
//! * a child of a node is skipped when a known automorphism fixing the node's
//!   prefix maps it onto an already explored sibling.
//!
//! The canonical graph is the lexicographically smallest relabelled
//! adjacency-row vector over all leaves. Every pruned subtree is the image of
//! an explored one under a recorded automorphism, so the recorded generators
//! generate the whole automorphism group and the orbits are exact.

use crate::graph::{encode_graph6, Graph, VertexSet};

/// Result of canonical labelling.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// `label[v]` is the canonical position of vertex `v`.
    pub label: Vec<usize>,
    /// Adjacency rows of the canonically relabelled graph.
    pub rows: Vec<u64>,
    /// Automorphism group generators found during the search (as images `g[v]`).
    pub generators: Vec<Vec<usize>>,
    /// `orbit[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub orbit: Vec<usize>,
}

impl Canonical {
    pub fn graph6(&self) -> String {
        encode_graph6(&self.rows)
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbit[u] == self.orbit[v]
    }

    pub fn orbit_count(&self) -> usize {
        self.orbit.iter().enumerate().filter(|&(v, &o)| v == o).count()
    }
}

/// Canonical graph6 string: equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> String {
    canonical_labeling(g.rows()).graph6()
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    Graph::from_rows(g.order(), &canonical_labeling(g.rows()).rows)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && canonical_labeling(g.rows()).rows == canonical_labeling(h.rows()).rows
}

pub(crate) fn canonical_labeling(rows: &[u64]) -> Canonical {
    let n = rows.len();
    let mut search = Search {
        rows,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
        path: Vec::with_capacity(n),
    };
    let mut cells = vec![crate::graph::low_mask(n)];
    let mut queue = vec![crate::graph::low_mask(n)];
    refine(rows, &mut cells, &mut queue);
    search.explore(cells);

    let best = search.best.expect("search visits at least one leaf");
    let mut uf: Vec<usize> = (0..n).collect();
    for gen in &search.generators {
        for (v, &w) in gen.iter().enumerate() {
            union(&mut uf, v, w);
        }
    }
    let orbit = (0..n).map(|v| find(&mut uf, v)).collect();
    Canonical {
        label: best.label,
        rows: best.rows,
        generators: search.generators,
        orbit,
    }
}

struct Leaf {
    path: Vec<usize>,
    label: Vec<usize>,
    rows: Vec<u64>,
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    path: Vec<usize>,
}

enum Outcome {
    Continue,
    /// Unwind until the node at this depth.
    BackTo(usize),
}

impl Search<'_> {
    fn explore(&mut self, cells: Vec<u64>) -> Outcome {
        if cells.len() == self.n {
            return self.leaf(&cells);
        }
        let depth = self.path.len();
        let target = cells
            .iter()
            .copied()
            .filter(|c| c.count_ones() > 1)
            .min_by_key(|c| c.count_ones())
            .expect("non-discrete partition has a non-singleton cell");
        let mut explored = 0u64;
        for v in VertexSet::from_bits(target) {
            if explored != 0 && self.equivalent_to_explored(v, explored) {
                continue;
            }
            explored |= 1 << v;
            let mut child = cells.clone();
            individualize(&mut child, v);
            let mut queue = vec![1u64 << v];
            refine(self.rows, &mut child, &mut queue);
            self.path.push(v);
            let outcome = self.explore(child);
            self.path.pop();
            if let Outcome::BackTo(d) = outcome {
                if d < depth {
                    return outcome;
                }
            }
        }
        Outcome::Continue
    }

    /// Whether an automorphism fixing the current path maps `v` onto a vertex in `explored`.
    fn equivalent_to_explored(&self, v: usize, explored: u64) -> bool {
        let fixing: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|g| self.path.iter().all(|&p| g[p] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut orbit = 1u64 << v;
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for u in VertexSet::from_bits(frontier) {
                for g in &fixing {
                    next |= 1 << g[u];
                }
            }
            frontier = next & !orbit;
            orbit |= next;
            if orbit & explored != 0 {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self, cells: &[u64]) -> Outcome {
        let mut label = vec![0usize; self.n];
        for (pos, &c) in cells.iter().enumerate() {
            label[c.trailing_zeros() as usize] = pos;
        }
        let mut relabelled = vec![0u64; self.n];
        for (v, &row) in self.rows.iter().enumerate() {
            relabelled[label[v]] = VertexSet::from_bits(row).iter().fold(0, |acc, w| acc | 1 << label[w]);
        }

        let Some(first) = &self.first else {
            let leaf = Leaf {
                path: self.path.clone(),
                label,
                rows: relabelled,
            };
            self.best = Some(Leaf {
                path: leaf.path.clone(),
                label: leaf.label.clone(),
                rows: leaf.rows.clone(),
            });
            self.first = Some(leaf);
            return Outcome::Continue;
        };
        if relabelled == first.rows {
            let gen = automorphism(&first.label, &label);
            let d = common_prefix(&first.path, &self.path);
            self.generators.push(gen);
            return Outcome::BackTo(d);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match relabelled.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let gen = automorphism(&best.label, &label);
                let d = common_prefix(&best.path, &self.path);
                self.generators.push(gen);
                Outcome::BackTo(d)
            }
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf {
                    path: self.path.clone(),
                    label,
                    rows: relabelled,
                });
                Outcome::Continue
            }
            std::cmp::Ordering::Greater => Outcome::Continue,
        }
    }
}

/// The automorphism sending each vertex `v` to the vertex that `reference`
/// puts at position `label[v]`.
fn automorphism(reference: &[usize], label: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; reference.len()];
    for (v, &p) in reference.iter().enumerate() {
        inv[p] = v;
    }
    label.iter().map(|&p| inv[p]).collect()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn individualize(cells: &mut Vec<u64>, v: usize) {
    let bit = 1u64 << v;
    let i = cells
        .iter()
        .position(|&c| c & bit != 0)
        .expect("vertex lies in some cell");
    let rest = cells[i] & !bit;
    cells[i] = bit;
    cells.insert(i + 1, rest);
}

/// Refines `cells` to the coarsest equitable partition finer than it, using
/// the splitters in `queue`. Split cells are replaced in place by their parts
/// ordered by neighbour count, so the result depends only on the structure.
fn refine(rows: &[u64], cells: &mut Vec<u64>, queue: &mut Vec<u64>) {
    let mut head = 0;
    let mut by_count = [0u64; 65];
    while head < queue.len() {
        let splitter = queue[head];
        head += 1;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell & (cell - 1) == 0 {
                i += 1;
                continue;
            }
            let mut used = 0u128;
            for v in VertexSet::from_bits(cell) {
                let c = (rows[v] & splitter).count_ones() as usize;
                by_count[c] |= 1 << v;
                used |= 1 << c;
            }
            if used.count_ones() == 1 {
                by_count[used.trailing_zeros() as usize] = 0;
                i += 1;
                continue;
            }
            let mut parts = Vec::with_capacity(used.count_ones() as usize);
            while used != 0 {
                let c = used.trailing_zeros() as usize;
                used &= used - 1;
                parts.push(by_count[c]);
                by_count[c] = 0;
            }
            let k = parts.len();
            queue.extend_from_slice(&parts);
            cells.splice(i..=i, parts);
            i += k;
        }
    }
}

fn find(uf: &mut [usize], mut v: usize) -> usize {
    while uf[v] != v {
        uf[v] = uf[uf[v]];
        v = uf[v];
    }
    v
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    // Keep the smaller vertex as root so `find` yields orbit minima.
    match ra.cmp(&rb) {
        std::cmp::Ordering::Less => uf[rb] = ra,
        std::cmp::Ordering::Greater => uf[ra] = rb,
        std::cmp::Ordering::Equal => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn cycle_labelings_share_a_form() {
        let c5 = cycle(5);
        let want = canonical_form(&c5);
        let perms = permutations(5);
        assert_eq!(perms.len(), 120);
        for p in perms {
            assert_eq!(canonical_form(&c5.relabel(&p).unwrap()), want);
        }
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4), canonical_form(&star));
        assert!(!are_isomorphic(&p4, &star));
    }

    #[test]
    fn orbits_of_symmetric_graphs() {
        let k = Graph::from_edges(16, (0..16).flat_map(|i| (i + 1..16).map(move |j| (i, j)))).unwrap();
        let c = canonical_labeling(k.rows());
        assert_eq!(c.orbit_count(), 1);

        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = canonical_labeling(p4.rows());
        assert!(c.same_orbit(0, 3) && c.same_orbit(1, 2) && !c.same_orbit(0, 1));

        // Petersen graph: vertex transitive, refinement alone cannot split it.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let pet = Graph::from_edges(10, edges).unwrap();
        let c = canonical_labeling(pet.rows());
        assert_eq!(c.orbit_count(), 1);
        let rotated: Vec<usize> = (0..10).map(|v| (v * 7 + 3) % 10).collect();
        assert_eq!(canonical_form(&pet.relabel(&rotated).unwrap()), c.graph6());
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = cycle(6).attach_pendant(0).unwrap().attach_pendant(3).unwrap();
        let c = canonical_labeling(g.rows());
        for gen in &c.generators {
            assert_eq!(g.relabel(gen).unwrap(), g);
        }
        assert!(c.same_orbit(6, 7));
    }
}
