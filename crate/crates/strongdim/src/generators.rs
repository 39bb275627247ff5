//! Standard graph constructors used throughout the test grids.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{components, Graph};
use crate::{Error, Result};

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParam("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Cycle C_n with edges i -- i+1 (mod n).
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParam("cycle needs n >= 3".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Path P_n with edges i -- i+1.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParam("path needs n >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Star K_{1,k}: center 0, leaves 1..=k.
pub fn star(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParam("star needs k >= 1 leaves".into()));
    }
    let edges: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
    Graph::from_edges(k + 1, &edges)
}

/// Hypercube Q_k on 2^k vertices; vertices adjacent iff ids differ in one bit.
pub fn hypercube(k: u32) -> Result<Graph> {
    if k > 12 {
        return Err(Error::InvalidParam("hypercube dimension capped at 12".into()));
    }
    let n = 1usize << k;
    let mut edges = Vec::new();
    for u in 0..n {
        for b in 0..k {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return Err(Error::InvalidParam(
            "complete multipartite needs nonempty parts".into(),
        ));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = vec![0usize; n];
    let mut id = 0;
    for (pi, &size) in parts.iter().enumerate() {
        for _ in 0..size {
            part_of[id] = pi;
            id += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Seed-deterministic connected random graph: sample G(n, edge_prob), then
/// join any remaining components with extra edges drawn from the same
/// stream. The recorded edge set is whatever the procedure ends with.
pub fn random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParam("random graph needs n >= 1".into()));
    }
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(Error::InvalidParam(format!(
            "edge probability {edge_prob} outside (0,1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let mut g = Graph::from_edges(n, &edges)?;
    loop {
        let comps = components(&g);
        if comps.len() <= 1 {
            break;
        }
        let a = &comps[0];
        let b = &comps[1];
        let u = a[rng.gen_range(0..a.len())];
        let v = b[rng.gen_range(0..b.len())];
        edges.push((u.min(v), u.max(v)));
        g = Graph::from_edges(n, &edges)?;
    }
    Ok(g)
}

/// Seed-deterministic uniform random labeled tree (Prüfer decode).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParam("tree needs n >= 1".into()));
    }
    if n == 1 {
        return Ok(Graph::empty(1));
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::new();
    let mut used = vec![false; n];
    for &v in &seq {
        let leaf = (0..n).find(|&u| degree[u] == 1 && !used[u]).unwrap();
        used[leaf] = true;
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1 && !used[u]).collect();
    debug_assert_eq!(rest.len(), 2);
    edges.push((rest[0].min(rest[1]), rest[0].max(rest[1])));
    Graph::from_edges(n, &edges)
}
