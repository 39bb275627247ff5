//! Metric structure of a connected graph: maximally distant relations,
//! the boundary and simplicial vertex sets, the strong resolving graph,
//! and the root-relative sets M(v), i(v), i'(v) used by the product
//! formulas.

use std::collections::BTreeSet;

use crate::graph::{DistMatrix, Graph, VertexSet};
use crate::{Error, Result};

/// True iff `u` is maximally distant from `v`: no neighbor of `u` is
/// farther from `v` than `u` is.
pub fn is_maximally_distant(d: &DistMatrix, g: &Graph, u: usize, v: usize) -> bool {
    let duv = d.get(u, v);
    g.neighbors(u).all(|w| d.get(v, w) <= duv)
}

/// True iff `u` and `v` are distinct and maximally distant from each other.
pub fn mutually_maximally_distant(d: &DistMatrix, g: &Graph, u: usize, v: usize) -> bool {
    u != v && is_maximally_distant(d, g, u, v) && is_maximally_distant(d, g, v, u)
}

/// M(v): all vertices maximally distant from `v`. `v` itself is excluded
/// automatically (its neighbors are farther from it than it is).
pub fn max_distant_set(d: &DistMatrix, g: &Graph, v: usize) -> VertexSet {
    g.vertices()
        .filter(|&u| u != v && is_maximally_distant(d, g, u, v))
        .collect()
}

/// Boundary: vertices belonging to at least one mutually-maximally-distant
/// pair.
pub fn boundary(d: &DistMatrix, g: &Graph) -> VertexSet {
    let n = g.n();
    let mut out = VertexSet::new();
    for u in 0..n {
        for v in 0..n {
            if v != u && mutually_maximally_distant(d, g, u, v) {
                out.insert(u);
                break;
            }
        }
    }
    out
}

/// Simplicial vertices: those whose neighborhood induces a complete graph.
pub fn simplicial(g: &Graph) -> VertexSet {
    g.vertices()
        .filter(|&v| {
            let nb: Vec<usize> = g.neighbors(v).collect();
            nb.iter()
                .enumerate()
                .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .collect()
}

/// The strong resolving graph of a connected graph: vertex set is the
/// boundary, edges are exactly the mutually-maximally-distant pairs.
/// Vertices and edges are kept in host ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SRGraph {
    pub host_n: usize,
    pub boundary: VertexSet,
    pub sr_edges: BTreeSet<(usize, usize)>,
}

impl SRGraph {
    pub fn edge_count(&self) -> usize {
        self.sr_edges.len()
    }

    pub fn degree_of(&self, host_id: usize) -> usize {
        self.sr_edges
            .iter()
            .filter(|&&(a, b)| a == host_id || b == host_id)
            .count()
    }

    pub fn neighbors_of(&self, host_id: usize) -> VertexSet {
        self.sr_edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == host_id {
                    Some(b)
                } else if b == host_id {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Densely re-indexed copy (SR id `i` is the i-th boundary vertex in
    /// host-id order) together with the SR-id -> host-id map.
    pub fn to_dense(&self) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = self.boundary.iter().collect();
        let back: std::collections::BTreeMap<usize, usize> =
            map.iter().enumerate().map(|(i, &h)| (h, i)).collect();
        let edges: Vec<(usize, usize)> = self
            .sr_edges
            .iter()
            .map(|&(a, b)| (back[&a], back[&b]))
            .collect();
        let g = Graph::from_edges(map.len(), &edges).expect("SR edges are simple");
        (g, map)
    }
}

/// Build the strong resolving graph. Requires a connected host with at
/// least two vertices; every boundary vertex then carries at least one SR
/// edge, so no isolated vertices need deleting.
pub fn strong_resolving_graph(d: &DistMatrix, g: &Graph) -> Result<SRGraph> {
    if g.n() < 2 {
        return Err(Error::InvalidParam(
            "strong resolving graph needs at least two vertices".into(),
        ));
    }
    let n = g.n();
    let mut sr_edges = BTreeSet::new();
    let mut bd = VertexSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if mutually_maximally_distant(d, g, u, v) {
                sr_edges.insert((u, v));
                bd.insert(u);
                bd.insert(v);
            }
        }
    }
    Ok(SRGraph {
        host_n: n,
        boundary: bd,
        sr_edges,
    })
}

/// Root-relative context for rooted products: M(v), the set i(v) of
/// vertices isolated in the subgraph of the host SR graph induced by
/// M(v), and the partner set i'(v).
///
/// i'(v) is canonical only when the host SR graph is a disjoint union of
/// K_2 (every boundary vertex has exactly one SR partner); outside that
/// hypothesis the neighbor set is still computed but the context is
/// flagged non-canonical so formula code can refuse it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootContext {
    pub root: usize,
    pub m: VertexSet,
    pub i: VertexSet,
    pub i_prime: VertexSet,
    pub matching_sr: bool,
}

pub fn root_context(d: &DistMatrix, g: &Graph, v: usize) -> Result<RootContext> {
    if v >= g.n() {
        return Err(Error::InvalidParam(format!(
            "root {v} out of range for order {}",
            g.n()
        )));
    }
    let sr = strong_resolving_graph(d, g)?;
    let m = max_distant_set(d, g, v);
    let mut i = VertexSet::new();
    for a in m.iter() {
        let isolated = sr
            .neighbors_of(a)
            .iter()
            .all(|b| !m.contains(b));
        if isolated && sr.boundary.contains(a) {
            i.insert(a);
        }
    }
    let mut i_prime = VertexSet::new();
    for a in i.iter() {
        for b in sr.neighbors_of(a).iter() {
            i_prime.insert(b);
        }
    }
    Ok(RootContext {
        root: v,
        m,
        i,
        i_prime,
        matching_sr: sr_is_perfect_matching(&sr),
    })
}

/// 2-antipodal: every vertex has exactly one vertex at diameter distance.
pub fn is_2_antipodal(d: &DistMatrix) -> bool {
    let n = d.n();
    if n < 2 {
        return false;
    }
    let diam = d.diameter();
    (0..n).all(|u| (0..n).filter(|&v| v != u && d.get(u, v) == diam).count() == 1)
}

/// All true-twin pairs: distinct vertices with identical closed
/// neighborhoods (such vertices are necessarily adjacent).
pub fn true_twins(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let closed: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| {
            let mut s: BTreeSet<usize> = g.neighbors(v).collect();
            s.insert(v);
            s
        })
        .collect();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if closed[u] == closed[v] {
                out.push((u, v));
            }
        }
    }
    out
}

/// Vertices of full degree n-1.
pub fn universal_vertices(g: &Graph) -> VertexSet {
    let n = g.n();
    g.vertices().filter(|&v| g.degree(v) == n - 1).collect()
}

/// Vertices of degree one.
pub fn leaves(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| g.degree(v) == 1).collect()
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && crate::graph::is_connected(g) && g.edge_count() == g.n() - 1
}

pub fn is_triangle_free(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        for w in g.neighbors(u) {
            if w != v && g.has_edge(v, w) {
                return false;
            }
        }
    }
    true
}

/// True iff every boundary vertex has exactly one SR partner, i.e. the SR
/// graph is a disjoint union of K_2 components.
pub fn sr_is_perfect_matching(sr: &SRGraph) -> bool {
    sr.boundary.iter().all(|v| sr.degree_of(v) == 1)
}
