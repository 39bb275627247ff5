//! Undirected simple graphs on dense vertex ids `0..n`, hop-distance
//! matrices, and vertex sets over a host graph.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A set of vertex ids over some host graph. Kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        self.0.iter().next().copied()
    }

    /// Every id must be a vertex of a host graph of order `n`.
    pub fn validate_for(&self, n: usize) -> Result<()> {
        match self.0.iter().rev().next() {
            Some(&v) if v >= n => Err(Error::InvalidParam(format!(
                "vertex id {v} out of range for host of order {n}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Undirected simple graph. Vertices are ids `0..n`; edges are stored as a
/// symmetric adjacency relation with no loops and no multi-edges.
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Build a graph from an edge list. Rejects loops, duplicate edges and
    /// out-of-range endpoints instead of normalizing them away.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !adj[u].insert(v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
            adj[v].insert(u);
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
            labels: None,
        }
    }

    /// Attach per-vertex labels (must be one per vertex, all distinct).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidGraph("labels are not unique".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as canonical (min,max) pairs in sorted order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The graph obtained by deleting vertex `v`; remaining ids shift down.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::InvalidParam(format!(
                "vertex {v} out of range for order {}",
                self.n
            )));
        }
        let remap = |u: usize| if u > v { u - 1 } else { u };
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (remap(a), remap(b)))
            .collect();
        let mut g = Graph::from_edges(self.n - 1, &edges)?;
        if let Some(labels) = &self.labels {
            let kept: Vec<String> = labels
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != v)
                .map(|(_, l)| l.clone())
                .collect();
            g = g.with_labels(kept)?;
        }
        Ok(g)
    }

    /// DOT rendering with one node line per vertex and one edge line per
    /// edge; vertices in `highlight` are drawn filled.
    pub fn to_dot(&self, highlight: &VertexSet) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.n {
            let mut attrs: Vec<String> = Vec::new();
            if let Some(l) = self.label(v) {
                attrs.push(format!("label=\"{l}\""));
            }
            if highlight.contains(v) {
                attrs.push("style=filled".into());
                attrs.push("fillcolor=lightblue".into());
            }
            if attrs.is_empty() {
                out.push_str(&format!("  {v};\n"));
            } else {
                out.push_str(&format!("  {v} [{}];\n", attrs.join(", ")));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// All-pairs hop distances for a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Largest entry (0 for the one-vertex graph).
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Exact hop distances via one BFS per source. Errors on disconnected
/// input, naming a witness pair of unreachable vertices.
pub fn bfs_distances(g: &Graph) -> Result<DistMatrix> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParam("distance matrix of the empty graph".into()));
    }
    let mut d = vec![u32::MAX; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        let mut queue = VecDeque::with_capacity(n);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for w in g.neighbors(u) {
                if row[w] == u32::MAX {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = row.iter().position(|&x| x == u32::MAX) {
            return Err(Error::Disconnected { u: s, v });
        }
    }
    Ok(DistMatrix { n, d })
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[0] = true;
    queue.push_back(0);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

/// Diameter of a connected graph, read off its distance matrix.
pub fn diameter(d: &DistMatrix) -> u32 {
    d.diameter()
}

/// Connected components as sorted id lists, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}
