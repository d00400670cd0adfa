//! Builders for the named graph families and the extremal constructions.
//!
//! Vertex labels are 0-based. Where a construction is described in terms of
//! named vertices, the mapping to labels is given on the builder.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classify::ThetaSpec;
use crate::error::{Error, Result};
use crate::fixtures::Fixtures;
use crate::graph::{Graph, VertexSet};
use crate::metrics;

/// Catalogue of buildable families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyId {
    Cycle,
    Path,
    Complete,
    Star,
    KnMinusEdge,
    Theta,
    CyclePendant,
    GirthExtremal,
    Z,
    RegularAsc,
    ApMaxSize,
    ApDegree,
    ApTopExtremal,
}

impl FamilyId {
    pub const ALL: [FamilyId; 13] = [
        FamilyId::Cycle,
        FamilyId::Path,
        FamilyId::Complete,
        FamilyId::Star,
        FamilyId::KnMinusEdge,
        FamilyId::Theta,
        FamilyId::CyclePendant,
        FamilyId::GirthExtremal,
        FamilyId::Z,
        FamilyId::RegularAsc,
        FamilyId::ApMaxSize,
        FamilyId::ApDegree,
        FamilyId::ApTopExtremal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Cycle => "cycle",
            FamilyId::Path => "path",
            FamilyId::Complete => "complete",
            FamilyId::Star => "star",
            FamilyId::KnMinusEdge => "kn-minus-edge",
            FamilyId::Theta => "theta",
            FamilyId::CyclePendant => "cycle-pendant",
            FamilyId::GirthExtremal => "girth-extremal",
            FamilyId::Z => "z",
            FamilyId::RegularAsc => "regular-asc",
            FamilyId::ApMaxSize => "ap-max-size",
            FamilyId::ApDegree => "ap-degree",
            FamilyId::ApTopExtremal => "ap-top-extremal",
        }
    }

    /// Parameter names in the order [`build`] expects them.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            FamilyId::Cycle
            | FamilyId::Path
            | FamilyId::Complete
            | FamilyId::Star
            | FamilyId::KnMinusEdge
            | FamilyId::CyclePendant
            | FamilyId::GirthExtremal
            | FamilyId::ApMaxSize
            | FamilyId::ApTopExtremal => &["n"],
            FamilyId::Theta => &["a", "b", "c"],
            FamilyId::Z => &["n", "r"],
            FamilyId::RegularAsc => &["k"],
            FamilyId::ApDegree => &["n", "max_degree"],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyId> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// Builds `family` from positional parameters, using the embedded fixtures.
pub fn build(family: FamilyId, params: &[usize]) -> Result<Graph> {
    build_with(&Fixtures::embedded(), family, params)
}

pub fn build_with(fixtures: &Fixtures, family: FamilyId, params: &[usize]) -> Result<Graph> {
    let want = family.params().len();
    if params.len() != want {
        return Err(Error::InvalidParameter(format!(
            "{family} takes {want} parameter(s) ({}), got {}",
            family.params().join(", "),
            params.len()
        )));
    }
    let p = params;
    match family {
        FamilyId::Cycle => cycle(p[0]),
        FamilyId::Path => path(p[0]),
        FamilyId::Complete => complete(p[0]),
        FamilyId::Star => star(p[0]),
        FamilyId::KnMinusEdge => kn_minus_edge(p[0]),
        FamilyId::Theta => theta(p[0], p[1], p[2]),
        FamilyId::CyclePendant => cycle_pendant(p[0]),
        FamilyId::GirthExtremal => girth_extremal_asc(p[0]),
        FamilyId::Z => z_graph(p[0], p[1]),
        FamilyId::RegularAsc => regular_asc(p[0]),
        FamilyId::ApMaxSize => ap_max_size(p[0]),
        FamilyId::ApDegree => ap_with_max_degree_from(fixtures, p[0], p[1]),
        FamilyId::ApTopExtremal => ap_top_extremal_from(fixtures, p[0]),
    }
}

fn too_small(what: &str, n: usize, min: usize) -> Error {
    Error::InvalidParameter(format!("{what} needs order at least {min}, got {n}"))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(too_small("cycle", n, 3));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(too_small("path", n, 1));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(too_small("complete graph", n, 1));
    }
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{1, n-1}` with center 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(too_small("star", n, 2));
    }
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

/// `K_n` without the edge `01`.
pub fn kn_minus_edge(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(too_small("K_n minus an edge", n, 3));
    }
    Graph::from_edges(
        n,
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&e| e != (0, 1)),
    )
}

/// Theta graph: vertices 0 and 1 are the two branch vertices, joined by paths
/// of lengths `a <= b <= c` (after sorting) whose interiors are numbered
/// consecutively from 2.
pub fn theta(a: usize, b: usize, c: usize) -> Result<Graph> {
    let spec = ThetaSpec::new(a, b, c)?;
    theta_from(spec)
}

pub fn theta_from(spec: ThetaSpec) -> Result<Graph> {
    let n = spec.order();
    let mut edges = Vec::with_capacity(n + 1);
    let mut next = 2;
    for len in [spec.a, spec.b, spec.c] {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::from_edges(n, edges)
}

/// `C_{n-1}` on `0..n-1` with the pendant vertex `n - 1` attached to 0.
pub fn cycle_pendant(n: usize) -> Result<Graph> {
    if n < 7 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "cycle with pendant needs odd order at least 7, got {n}"
        )));
    }
    cycle(n - 1)?.attach_pendant(0)
}

/// `theta(2k, 2k, n - 4k)` with `k = n / 6` and a pendant at branch vertex 0.
pub fn girth_extremal_asc(n: usize) -> Result<Graph> {
    if n < 12 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "girth extremal needs even order at least 12, got {n}"
        )));
    }
    let k = n / 6;
    theta(2 * k, 2 * k, n - 4 * k)?.attach_pendant(0)
}

/// Cycle `v_1 ... v_{2r}` (labels `0..2r`), pendant `2r` at `v_1`, and
/// `n - 2r - 1` further vertices each adjacent to `v_1` and `v_3`.
pub fn z_graph(n: usize, r: usize) -> Result<Graph> {
    if r < 2 || n < 2 * r + 1 {
        return Err(Error::InvalidParameter(format!(
            "Z(n, r) needs r >= 2 and n >= 2r + 1, got n = {n}, r = {r}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..2 * r).map(|i| (i, (i + 1) % (2 * r))).collect();
    edges.push((0, 2 * r));
    for extra in 2 * r + 1..n {
        edges.push((0, extra));
        edges.push((2, extra));
    }
    Graph::from_edges(n, edges)
}

/// The `k`-regular ASC graph of order `2k + 2`.
///
/// Labels: `x_0 = 0`, `y_0 = 1`, `x_i = 1 + i` and `y_i = k + 1 + i` for
/// `1 <= i <= k`. Subscripts wrap into `1..=k`.
pub fn regular_asc(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!(
            "regular ASC construction needs degree at least 4, got {k} (use the stored cubic witness for k = 3)"
        )));
    }
    let wrap = |i: usize| (i - 1) % k + 1;
    let x = |i: usize| 1 + wrap(i);
    let y = |i: usize| k + 1 + wrap(i);
    let n = 2 * k + 2;
    let mut rows = vec![0u64; n];
    let mut join = |u: usize, v: usize| {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    };
    for i in 1..=k {
        join(0, x(i));
        join(1, y(i));
    }
    if k.is_multiple_of(2) {
        let h = k / 2;
        for i in 1..=k {
            let partner = if i <= h { i + h } else { i - h };
            join(x(i), x(partner));
            for s in i..=i + k - 3 {
                join(x(i), y(s));
            }
        }
        for i in 1..=h {
            join(y(i), y(i + h));
        }
    } else {
        let h = k.div_ceil(2);
        for i in 2..=h {
            join(x(1), x(i));
        }
        for i in 1..h {
            join(x(1), y(i));
        }
        for i in 2..=h {
            for s in 1..=k {
                if s != i - 1 && s != k {
                    join(x(i), y(s));
                }
            }
        }
        for j in h + 1..=k {
            for s in 1..=k {
                if s != j - h {
                    join(x(j), y(s));
                }
            }
        }
        for i in 1..h {
            join(y(k), y(i));
        }
    }
    let g = Graph::from_edges(n, edge_list(&rows))?;
    if let Some(v) = (0..n).find(|&v| g.degree(v) != k) {
        return Err(Error::InvalidParameter(format!(
            "regular construction inconsistent: vertex {v} has degree {} instead of {k}",
            g.degree(v)
        )));
    }
    Ok(g)
}

fn edge_list(rows: &[u64]) -> Vec<(usize, usize)> {
    rows.iter()
        .enumerate()
        .flat_map(|(u, &r)| {
            VertexSet::from_bits(r)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
        .collect()
}

/// The maximum-size AP graph: the complement of `K_1 + ((n-1)/2) K_2` for odd
/// `n`, of `K_1 + ((n-4)/2) K_2 + P_3` for even `n`.
pub fn ap_max_size(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(too_small("maximum-size AP graph", n, 3));
    }
    let k2 = complete(2)?;
    let mut inner = Graph::empty(1)?;
    let pairs = if n % 2 == 1 { (n - 1) / 2 } else { (n - 4) / 2 };
    for _ in 0..pairs {
        inner = inner.disjoint_union(&k2)?;
    }
    if n.is_multiple_of(2) {
        inner = inner.disjoint_union(&path(3)?)?;
    }
    Ok(inner.complement())
}

/// An AP graph of order `n` with maximum degree exactly `max_degree`, using the embedded fixtures.
pub fn ap_with_max_degree(n: usize, max_degree: usize) -> Result<Graph> {
    ap_with_max_degree_from(&Fixtures::embedded(), n, max_degree)
}

/// AP graph of order `n` and maximum degree `max_degree`.
///
/// `max_degree = n - 1` gives the star. For `3 <= max_degree <= n - 4` the
/// base graph of order `n - max_degree + 3` with maximum degree 3 is grown by
/// repeatedly duplicating a degree-2 non-central neighbour of a top vertex.
pub fn ap_with_max_degree_from(fixtures: &Fixtures, n: usize, max_degree: usize) -> Result<Graph> {
    if n < 7 {
        return Err(too_small("AP graph with prescribed maximum degree", n, 7));
    }
    if max_degree == n - 1 {
        return star(n);
    }
    if max_degree < 3 || max_degree > n - 4 {
        return Err(Error::InvalidParameter(format!(
            "no AP graph of order {n} has maximum degree {max_degree}; \
             the attainable values are 3..={} and {}",
            n - 4,
            n - 1
        )));
    }
    let mut g = ap_degree_base(fixtures, n - max_degree + 3)?;
    while g.order() < n {
        let v = duplication_target(&g).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "order-{} graph in the duplication chain has no top vertex with a \
                 non-central degree-2 neighbour",
                g.order()
            ))
        })?;
        g = g.duplicate_vertex(v)?;
    }
    Ok(g)
}

/// The lowest-labelled non-central degree-2 vertex adjacent to a vertex of maximum degree.
pub fn duplication_target(g: &Graph) -> Option<usize> {
    let profile = metrics::ecc_profile(g).ok()?;
    let max = metrics::max_degree(g);
    let tops: VertexSet = (0..g.order()).filter(|&v| g.degree(v) == max).collect();
    (0..g.order())
        .find(|&v| g.degree(v) == 2 && !profile.is_central(v) && !g.neighbors(v).intersection(tops).is_empty())
}

/// AP base graph of order `m >= 7` with maximum degree 3.
///
/// Orders 7 to 10 come from the search fixtures. Larger orders are
/// subdivisions of `K_4` or `K_{3,3}` whose edge lengths grow linearly with
/// `m`, one progression per residue of `m` mod 4.
pub fn ap_degree_base(fixtures: &Fixtures, m: usize) -> Result<Graph> {
    if m < 7 {
        return Err(too_small("AP base graph with maximum degree 3", m, 7));
    }
    if let Some(g) = fixtures.ap_degree_base(m) {
        return Ok(g.clone());
    }
    const K4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)];
    const K33: [(usize, usize); 9] = [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];
    match m % 4 {
        3 => {
            let j = (m - 3) / 4;
            subdivide(4, &K4, &[1, j + 1, j + 1, j, 2, j])
        }
        0 => {
            let j = m / 4;
            subdivide(4, &K4, &[1, j - 1, j - 1, j, 2, j + 1])
        }
        2 => {
            let i = (m - 10) / 4;
            subdivide(6, &K33, &[1, 1 + i, 1, 1 + i, 2, 2 + i, 2, 2 + i, 1])
        }
        _ => {
            let i = (m - 13) / 4;
            subdivide(6, &K33, &[1, 1, 2 + i, 1, 2, 3 + i, 3 + i, 1 + i, 2])
        }
    }
}

/// Replaces each skeleton edge by a path of the given length. Skeleton
/// vertices keep labels `0..k`; subdivision vertices follow in edge order.
pub fn subdivide(skeleton_order: usize, skeleton: &[(usize, usize)], lengths: &[usize]) -> Result<Graph> {
    if skeleton.len() != lengths.len() || lengths.contains(&0) {
        return Err(Error::InvalidParameter("one positive length per skeleton edge".into()));
    }
    let n = skeleton_order + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut edges = Vec::with_capacity(n);
    let mut next = skeleton_order;
    for (&(a, b), &len) in skeleton.iter().zip(lengths) {
        let mut prev = a;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, b));
    }
    Graph::from_edges(n, edges)
}

/// The order-`n` AP graph with maximum degree `n - 4` and `n - 5` top vertices,
/// using the embedded fixtures.
pub fn ap_top_extremal(n: usize) -> Result<Graph> {
    ap_top_extremal_from(&Fixtures::embedded(), n)
}

/// Blows up the lowest-labelled non-central degree-3 vertex of the order-7
/// base graph into `K_{n-6}`.
pub fn ap_top_extremal_from(fixtures: &Fixtures, n: usize) -> Result<Graph> {
    if n < 8 {
        return Err(too_small("top-vertex extremal AP graph", n, 8));
    }
    let base = ap_degree_base(fixtures, 7)?;
    let profile = metrics::ecc_profile(&base)?;
    let v = (0..base.order())
        .find(|&v| base.degree(v) == 3 && !profile.is_central(v))
        .ok_or_else(|| Error::InvalidParameter("order-7 base has no non-central degree-3 vertex".into()))?;
    base.blow_up(v, n - 6)
}

/// The two ASC graphs of order `n` with independence number `n - 2`.
///
/// Both start from the path `0-1-2-3`; every further vertex is joined to
/// `{1, 3}` in the first graph and to `{1, 2}` in the second.
pub fn independence_extremals(n: usize) -> Result<[Graph; 2]> {
    if n < 5 {
        return Err(too_small("independence extremal", n, 5));
    }
    let build = |attach: [usize; 2]| {
        let mut edges = vec![(0, 1), (1, 2), (2, 3)];
        for s in 4..n {
            edges.push((attach[0], s));
            edges.push((attach[1], s));
        }
        Graph::from_edges(n, edges)
    };
    Ok([build([1, 3])?, build([1, 2])?])
}
