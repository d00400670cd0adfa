//! Recognisers for the eccentricity classes (self-centered, almost
//! self-centered, almost peripheral) and for the small structural families
//! that appear alongside them: unicyclic graphs, thetas and binocles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::metrics::{self, EccProfile};

/// Lengths `a <= b <= c` of the three internally disjoint paths of a theta graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ThetaSpec {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl ThetaSpec {
    /// Sorts the lengths and rejects triples that would need a loop or a multi-edge.
    pub fn new(x: usize, y: usize, z: usize) -> Result<ThetaSpec> {
        let mut v = [x, y, z];
        v.sort_unstable();
        let [a, b, c] = v;
        if a == 0 {
            return Err(Error::InvalidParameter("theta path lengths must be positive".into()));
        }
        if b == 1 {
            return Err(Error::InvalidParameter(
                "at most one theta path may have length one".into(),
            ));
        }
        Ok(ThetaSpec { a, b, c })
    }

    pub fn order(&self) -> usize {
        self.a + self.b + self.c - 1
    }

    pub fn radius(&self) -> usize {
        (self.a + self.c) / 2
    }

    pub fn diameter(&self) -> usize {
        (self.b + self.c) / 2
    }
}

/// Two cycles joined by a (possibly trivial) path.
///
/// Cycles are listed as vertex sequences starting at their attachment vertex;
/// `path` runs from the attachment vertex of `first` to that of `second`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinocleWitness {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub path: Vec<usize>,
}

impl BinocleWitness {
    pub fn path_length(&self) -> usize {
        self.path.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub order: usize,
    pub size: usize,
    pub radius: usize,
    pub diameter: usize,
    pub self_centered: bool,
    pub almost_self_centered: bool,
    pub almost_peripheral: bool,
    pub unicyclic: bool,
    pub theta: Option<ThetaSpec>,
    pub binocle: Option<BinocleWitness>,
    pub central_count: usize,
    pub peripheral_count: usize,
    pub top_count: usize,
}

/// Full classification of a connected graph.
pub fn classify(g: &Graph) -> Result<Classification> {
    let p = metrics::ecc_profile(g)?;
    Ok(Classification {
        order: g.order(),
        size: g.size(),
        radius: p.radius,
        diameter: p.diameter,
        self_centered: p.radius == p.diameter,
        almost_self_centered: asc_from_profile(g, &p),
        almost_peripheral: ap_from_profile(g, &p),
        unicyclic: g.size() == g.order(),
        theta: recognize_theta(g)?,
        binocle: recognize_binocle(g)?,
        central_count: p.center.len(),
        peripheral_count: p.periphery.len(),
        top_count: top_vertex_count(g),
    })
}

pub fn is_self_centered(g: &Graph) -> Result<bool> {
    let p = metrics::ecc_profile(g)?;
    Ok(p.radius == p.diameter)
}

/// Exactly `n - 2` central vertices. Orders below three are never ASC.
pub fn is_asc(g: &Graph) -> Result<bool> {
    let p = metrics::ecc_profile(g)?;
    Ok(asc_from_profile(g, &p))
}

/// Exactly `n - 1` peripheral vertices.
pub fn is_ap(g: &Graph) -> Result<bool> {
    let p = metrics::ecc_profile(g)?;
    Ok(ap_from_profile(g, &p))
}

pub(crate) fn asc_from_profile(g: &Graph, p: &EccProfile) -> bool {
    g.order() >= 3 && p.center.len() == g.order() - 2
}

pub(crate) fn ap_from_profile(g: &Graph, p: &EccProfile) -> bool {
    g.order() >= 2 && p.radius < p.diameter && p.periphery.len() == g.order() - 1
}

pub fn is_unicyclic(g: &Graph) -> Result<bool> {
    if !metrics::is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(g.size() == g.order())
}

pub fn top_vertex_count(g: &Graph) -> usize {
    let max = metrics::max_degree(g);
    (0..g.order()).filter(|&v| g.degree(v) == max).count()
}

/// Walks from `start` through `first` along degree-2 vertices until a vertex
/// of another degree is reached. Returns the visited vertices, `start` and the
/// final vertex included.
fn walk_branch(g: &Graph, start: usize, first: usize) -> Vec<usize> {
    let mut seq = vec![start, first];
    let (mut prev, mut cur) = (start, first);
    while g.degree(cur) == 2 && cur != start {
        let next = g
            .neighbors(cur)
            .without(prev)
            .first()
            .expect("degree-two vertex has another neighbour");
        seq.push(next);
        prev = cur;
        cur = next;
    }
    seq
}

/// `Some((a, b, c))` iff `g` is a theta graph.
pub fn recognize_theta(g: &Graph) -> Result<Option<ThetaSpec>> {
    if !metrics::is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.size() != g.order() + 1 {
        return Ok(None);
    }
    let branch: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) != 2).collect();
    let [x, y] = branch[..] else {
        return Ok(None);
    };
    if g.degree(x) != 3 || g.degree(y) != 3 {
        return Ok(None);
    }
    let mut lengths = Vec::with_capacity(3);
    for w in g.neighbors(x) {
        let seq = walk_branch(g, x, w);
        if *seq.last().expect("walk is nonempty") != y {
            return Ok(None);
        }
        lengths.push(seq.len() - 1);
    }
    ThetaSpec::new(lengths[0], lengths[1], lengths[2]).map(Some)
}

/// A binocle decomposition of the whole graph, if there is one.
pub fn recognize_binocle(g: &Graph) -> Result<Option<BinocleWitness>> {
    if !metrics::is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.size() != g.order() + 1 {
        return Ok(None);
    }
    let branch: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) != 2).collect();
    match branch[..] {
        [u] if g.degree(u) == 4 => {
            let mut cycles = closed_branches(g, u);
            if cycles.len() != 2 {
                return Ok(None);
            }
            cycles.sort();
            let second = cycles.pop().expect("two cycles");
            let first = cycles.pop().expect("two cycles");
            Ok(Some(BinocleWitness {
                first,
                second,
                path: vec![u],
            }))
        }
        [u, v] if g.degree(u) == 3 && g.degree(v) == 3 => {
            let mut first = closed_branches(g, u);
            let mut second = closed_branches(g, v);
            if first.len() != 1 || second.len() != 1 {
                return Ok(None);
            }
            let cycle_vertices: VertexSet = first[0].iter().copied().collect();
            let exit = g
                .neighbors(u)
                .difference(cycle_vertices)
                .first()
                .expect("third branch leaves the cycle");
            let path = walk_branch(g, u, exit);
            if *path.last().expect("walk is nonempty") != v {
                return Ok(None);
            }
            Ok(Some(BinocleWitness {
                first: first.pop().expect("one cycle"),
                second: second.pop().expect("one cycle"),
                path,
            }))
        }
        _ => Ok(None),
    }
}

/// Cycles through `u` formed by branches that leave and return to `u`, each
/// normalised to start at `u` and continue through its smaller neighbour.
fn closed_branches(g: &Graph, u: usize) -> Vec<Vec<usize>> {
    let mut used = VertexSet::empty();
    let mut cycles = Vec::new();
    for w in g.neighbors(u) {
        if used.contains(w) {
            continue;
        }
        let mut seq = walk_branch(g, u, w);
        if *seq.last().expect("walk is nonempty") == u {
            seq.pop();
            used = used.with(seq[1]).with(*seq.last().expect("cycle has length >= 3"));
            cycles.push(seq);
        }
    }
    cycles
}
