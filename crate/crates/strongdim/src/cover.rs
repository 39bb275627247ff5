//! Exact combinatorial solvers: minimum vertex cover (the engine behind
//! the strong-dimension reduction), maximum clique, the twin-free clique
//! number, and basis-membership decisions.
//!
//! The vertex cover solver is a plain branch-and-bound with degree-0
//! removal, degree-1 forcing and component splitting. Branching is on a
//! maximum-degree vertex, ties broken by lowest id, and equal-size covers
//! prefer the include-branch, so reported covers are reproducible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::{bfs_distances, Graph, VertexSet};
use crate::metrics::{strong_resolving_graph, true_twins, SRGraph};
use crate::{Error, Result};

/// Default branch-node budget; exceeded solves abort instead of guessing.
pub const DEFAULT_BRANCH_BUDGET: u64 = 1_000_000;

/// How a dimension value was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    Reduction,
    Oracle,
    Formula(String),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Reduction => write!(f, "reduction"),
            Method::Oracle => write!(f, "oracle"),
            Method::Formula(id) => write!(f, "formula:{id}"),
        }
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Method {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "reduction" => Ok(Method::Reduction),
            "oracle" => Ok(Method::Oracle),
            other => match other.strip_prefix("formula:") {
                Some(id) => Ok(Method::Formula(id.to_string())),
                None => Err(de::Error::custom(format!("unknown method tag {other:?}"))),
            },
        }
    }
}

/// A strong-dimension answer: the value, one witnessing basis over the
/// host graph, and how it was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub value: usize,
    pub basis: VertexSet,
    pub method: Method,
    pub elapsed_ms: u64,
    pub branch_nodes: u64,
}

type Adj = BTreeMap<usize, BTreeSet<usize>>;

fn adj_of(g: &Graph) -> Adj {
    g.vertices()
        .map(|v| (v, g.neighbors(v).collect()))
        .collect()
}

fn remove_vertex(adj: &mut Adj, v: usize) {
    if let Some(nb) = adj.remove(&v) {
        for w in nb {
            adj.get_mut(&w).map(|s| s.remove(&v));
        }
    }
}

struct VcSolver {
    budget: u64,
    nodes: u64,
}

impl VcSolver {
    fn solve(&mut self, mut adj: Adj) -> Result<BTreeSet<usize>> {
        let mut cover = BTreeSet::new();

        // reductions to a fixpoint: drop isolated vertices, force the
        // neighbor of any degree-1 vertex into the cover
        loop {
            let isolated: Vec<usize> = adj
                .iter()
                .filter(|(_, nb)| nb.is_empty())
                .map(|(&v, _)| v)
                .collect();
            for v in isolated {
                adj.remove(&v);
            }
            let pendant = adj
                .iter()
                .find(|(_, nb)| nb.len() == 1)
                .map(|(&v, nb)| (v, *nb.iter().next().unwrap()));
            match pendant {
                Some((v, w)) => {
                    cover.insert(w);
                    remove_vertex(&mut adj, w);
                    remove_vertex(&mut adj, v);
                }
                None => break,
            }
        }
        if adj.is_empty() {
            return Ok(cover);
        }

        // split into connected components and solve independently
        let comps = split_components(&adj);
        if comps.len() > 1 {
            for comp in comps {
                let sub: Adj = comp
                    .iter()
                    .map(|&v| (v, adj[&v].clone()))
                    .collect();
                cover.extend(self.solve(sub)?);
            }
            return Ok(cover);
        }

        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                nodes: self.nodes,
                budget: self.budget,
            });
        }

        // branch vertex: maximum degree, lowest id on ties
        let (&v, nb) = adj
            .iter()
            .max_by(|(a, na), (b, nb)| na.len().cmp(&nb.len()).then(b.cmp(a)))
            .expect("nonempty");
        let nb: Vec<usize> = nb.iter().copied().collect();

        // include v
        let mut with_v = adj.clone();
        remove_vertex(&mut with_v, v);
        let mut take = self.solve(with_v)?;
        take.insert(v);

        // exclude v: all neighbors must be covered
        let mut without_v = adj;
        remove_vertex(&mut without_v, v);
        for &w in &nb {
            remove_vertex(&mut without_v, w);
        }
        let mut skip = self.solve(without_v)?;
        skip.extend(nb);

        // ties prefer the include branch for reproducibility
        if skip.len() < take.len() {
            take = skip;
        }
        cover.extend(take);
        Ok(cover)
    }
}

fn split_components(adj: &Adj) -> Vec<Vec<usize>> {
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut comps = Vec::new();
    for &s in adj.keys() {
        if seen.contains(&s) {
            continue;
        }
        let mut comp = vec![s];
        seen.insert(s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[&u] {
                if seen.insert(w) {
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Exact minimum vertex cover of an arbitrary graph (empty allowed).
/// Returns the cover and the number of branch nodes used.
pub fn min_vertex_cover_budgeted(g: &Graph, budget: u64) -> Result<(VertexSet, u64)> {
    let mut solver = VcSolver { budget, nodes: 0 };
    let cover = solver.solve(adj_of(g))?;
    debug_assert!(g
        .edges()
        .iter()
        .all(|&(u, v)| cover.contains(&u) || cover.contains(&v)));
    Ok((cover.into_iter().collect(), solver.nodes))
}

pub fn min_vertex_cover(g: &Graph) -> Result<(VertexSet, u64)> {
    min_vertex_cover_budgeted(g, DEFAULT_BRANCH_BUDGET)
}

/// Minimum vertex cover of a strong resolving graph, reported in host ids.
pub fn min_vertex_cover_sr_budgeted(sr: &SRGraph, budget: u64) -> Result<(VertexSet, u64)> {
    let (dense, map) = sr.to_dense();
    let (cover, nodes) = min_vertex_cover_budgeted(&dense, budget)?;
    Ok((cover.iter().map(|i| map[i]).collect(), nodes))
}

pub fn min_vertex_cover_sr(sr: &SRGraph) -> Result<(VertexSet, u64)> {
    min_vertex_cover_sr_budgeted(sr, DEFAULT_BRANCH_BUDGET)
}

/// dim_s via the reduction: a minimum vertex cover of the strong
/// resolving graph is a strong metric basis.
pub fn strong_dimension_budgeted(g: &Graph, budget: u64) -> Result<DimReport> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    let start = Instant::now();
    let d = bfs_distances(g)?;
    let sr = strong_resolving_graph(&d, g)?;
    let (basis, branch_nodes) = min_vertex_cover_sr_budgeted(&sr, budget)?;
    Ok(DimReport {
        value: basis.len(),
        basis,
        method: Method::Reduction,
        elapsed_ms: start.elapsed().as_millis() as u64,
        branch_nodes,
    })
}

pub fn strong_dimension(g: &Graph) -> Result<DimReport> {
    strong_dimension_budgeted(g, DEFAULT_BRANCH_BUDGET)
}

/// Whether `v` belongs to at least one strong metric basis of `g`:
/// exactly when `v` is a boundary vertex and deleting it from the SR
/// graph drops the cover number by one.
pub fn v_in_some_basis_budgeted(g: &Graph, v: usize, budget: u64) -> Result<bool> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    if v >= g.n() {
        return Err(Error::InvalidParam(format!(
            "vertex {v} out of range for order {}",
            g.n()
        )));
    }
    let d = bfs_distances(g)?;
    let sr = strong_resolving_graph(&d, g)?;
    if !sr.boundary.contains(v) {
        return Ok(false);
    }
    let (full, _) = min_vertex_cover_sr_budgeted(&sr, budget)?;
    let mut reduced = sr.clone();
    reduced.boundary.remove(v);
    reduced.sr_edges.retain(|&(a, b)| a != v && b != v);
    let (without, _) = min_vertex_cover_sr_budgeted(&reduced, budget)?;
    Ok(without.len() + 1 == full.len())
}

pub fn v_in_some_basis(g: &Graph, v: usize) -> Result<bool> {
    v_in_some_basis_budgeted(g, v, DEFAULT_BRANCH_BUDGET)
}

fn max_clique_search(g: &Graph, forbid_twins: bool) -> VertexSet {
    let n = g.n();
    let twin = if forbid_twins {
        let mut m = vec![vec![false; n]; n];
        for (a, b) in true_twins(g) {
            m[a][b] = true;
            m[b][a] = true;
        }
        Some(m)
    } else {
        None
    };
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn expand(
        g: &Graph,
        twin: &Option<Vec<Vec<bool>>>,
        cand: &[usize],
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        for (idx, &v) in cand.iter().enumerate() {
            if current.len() + (cand.len() - idx) <= best.len() {
                return;
            }
            let next: Vec<usize> = cand[idx + 1..]
                .iter()
                .copied()
                .filter(|&u| {
                    g.has_edge(u, v)
                        && twin.as_ref().map_or(true, |t| !t[u][v])
                })
                .collect();
            current.push(v);
            expand(g, twin, &next, current, best);
            current.pop();
        }
    }
    let all: Vec<usize> = (0..n).collect();
    expand(g, &twin, &all, &mut current, &mut best);
    best.into_iter().collect()
}

/// A maximum clique (deterministic witness).
pub fn max_clique(g: &Graph) -> VertexSet {
    max_clique_search(g, false)
}

/// Clique number omega.
pub fn clique_number(g: &Graph) -> usize {
    max_clique_search(g, false).len()
}

/// Twin-free clique number: the largest clique containing no true-twin
/// pair. Always at most the clique number.
pub fn twin_free_clique_number(g: &Graph) -> usize {
    max_clique_search(g, true).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use itertools::Itertools;

    fn brute_force_cover_number(g: &Graph) -> usize {
        let edges = g.edges();
        if edges.is_empty() {
            return 0;
        }
        for k in 0..=g.n() {
            for subset in (0..g.n()).combinations(k) {
                let s: BTreeSet<usize> = subset.into_iter().collect();
                if edges.iter().all(|&(u, v)| s.contains(&u) || s.contains(&v)) {
                    return k;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn cover_catalog_values() {
        let (c, _) = min_vertex_cover(&generators::cycle(5).unwrap()).unwrap();
        assert_eq!(c.len(), 3);
        let (c, _) = min_vertex_cover(&generators::complete(6).unwrap()).unwrap();
        assert_eq!(c.len(), 5);
        let three_k2 = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let (c, _) = min_vertex_cover(&three_k2).unwrap();
        assert_eq!(c.len(), 3);
        let (c, _) = min_vertex_cover(&Graph::empty(4)).unwrap();
        assert!(c.is_empty());
        let (c, _) = min_vertex_cover(&Graph::empty(0)).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn cover_is_valid_and_minimum_on_random_graphs() {
        for seed in 0..60 {
            let n = 2 + (seed as usize % 9);
            let g = generators::random_connected(n, 0.45, seed).unwrap();
            let (cover, _) = min_vertex_cover(&g).unwrap();
            for (u, v) in g.edges() {
                assert!(cover.contains(u) || cover.contains(v), "seed {seed}");
            }
            assert_eq!(cover.len(), brute_force_cover_number(&g), "seed {seed}");
        }
    }

    #[test]
    fn cover_witness_is_reproducible() {
        let g = generators::random_connected(10, 0.4, 99).unwrap();
        let (a, _) = min_vertex_cover(&g).unwrap();
        let (b, _) = min_vertex_cover(&g).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_error_is_reported() {
        let g = generators::random_connected(14, 0.5, 5).unwrap();
        match min_vertex_cover_budgeted(&g, 1) {
            Err(Error::BudgetExceeded { nodes, budget }) => {
                assert!(nodes > budget);
                assert_eq!(budget, 1);
            }
            Ok((c, nodes)) => {
                // tiny graphs may fully reduce without branching
                assert!(nodes <= 1, "cover {c:?} used {nodes} nodes");
            }
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn strong_dimension_catalog() {
        for n in 2..=8 {
            let k = generators::complete(n).unwrap();
            assert_eq!(strong_dimension(&k).unwrap().value, n - 1);
        }
        for n in 3..=12 {
            let c = generators::cycle(n).unwrap();
            assert_eq!(strong_dimension(&c).unwrap().value, n.div_ceil(2));
        }
        for seed in 0..20 {
            let t = generators::random_tree(2 + (seed as usize % 11), seed).unwrap();
            let l = crate::metrics::leaves(&t).len();
            assert_eq!(strong_dimension(&t).unwrap().value, l - 1, "seed {seed}");
        }
    }

    #[test]
    fn strong_dimension_rejects_trivial_graph() {
        assert!(matches!(
            strong_dimension(&Graph::empty(1)),
            Err(Error::TrivialGraph)
        ));
    }

    #[test]
    fn simplicial_lower_bound_holds() {
        // dim_s(G) >= |sigma(G)| - 1
        for seed in 0..40 {
            let g = generators::random_connected(2 + (seed as usize % 8), 0.4, seed).unwrap();
            let dim = strong_dimension(&g).unwrap().value;
            let sigma = crate::metrics::simplicial(&g).len();
            assert!(dim + 1 >= sigma, "seed {seed}: dim {dim}, sigma {sigma}");
        }
    }

    #[test]
    fn basis_membership_examples() {
        let k5 = generators::complete(5).unwrap();
        for v in 0..5 {
            assert!(v_in_some_basis(&k5, v).unwrap());
        }
        // P_3 center is in no basis (not even in the boundary)
        let p3 = generators::path(3).unwrap();
        assert!(!v_in_some_basis(&p3, 1).unwrap());
        assert!(v_in_some_basis(&p3, 0).unwrap());
        assert!(matches!(
            v_in_some_basis(&p3, 7),
            Err(Error::InvalidParam(_))
        ));
    }

    #[test]
    fn basis_membership_matches_brute_force() {
        // compare against direct enumeration of all minimum covers
        for seed in 0..25 {
            let n = 2 + (seed as usize % 6);
            let g = generators::random_connected(n, 0.5, seed).unwrap();
            let d = bfs_distances(&g).unwrap();
            let sr = strong_resolving_graph(&d, &g).unwrap();
            let (dense, map) = sr.to_dense();
            let alpha = brute_force_cover_number(&dense);
            for v in g.vertices() {
                let expected = map.iter().enumerate().any(|(i, &h)| {
                    h == v
                        && (0..dense.n()).combinations(alpha).any(|s| {
                            s.contains(&i)
                                && dense
                                    .edges()
                                    .iter()
                                    .all(|&(a, b)| s.contains(&a) || s.contains(&b))
                        })
                });
                assert_eq!(
                    v_in_some_basis(&g, v).unwrap(),
                    expected,
                    "seed {seed} v {v}"
                );
            }
        }
    }

    #[test]
    fn clique_numbers() {
        let k2 = generators::complete(2).unwrap();
        assert_eq!(clique_number(&k2), 2);
        assert_eq!(twin_free_clique_number(&k2), 1);
        let p4 = generators::path(4).unwrap();
        assert_eq!(clique_number(&p4), 2);
        assert_eq!(twin_free_clique_number(&p4), 2);
        let c5 = generators::cycle(5).unwrap();
        assert_eq!(clique_number(&c5), 2);
        assert_eq!(twin_free_clique_number(&c5), 2);
        let kn = generators::complete(6).unwrap();
        assert_eq!(clique_number(&kn), 6);
        assert_eq!(twin_free_clique_number(&kn), 1);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        assert_eq!(clique_number(&Graph::empty(3)), 1);
        assert_eq!(twin_free_clique_number(&Graph::empty(3)), 1);
    }

    #[test]
    fn twin_free_clique_never_exceeds_clique() {
        for seed in 0..40 {
            let g = generators::random_connected(2 + (seed as usize % 8), 0.5, seed).unwrap();
            assert!(clique_number(&g) >= twin_free_clique_number(&g), "seed {seed}");
        }
    }

    #[test]
    fn method_tag_round_trip() {
        for m in [
            Method::Reduction,
            Method::Oracle,
            Method::Formula("cycle_rooted".into()),
        ] {
            let s = serde_json::to_string(&m).unwrap();
            let back: Method = serde_json::from_str(&s).unwrap();
            assert_eq!(m, back);
        }
        assert_eq!(
            serde_json::to_string(&Method::Formula("x".into())).unwrap(),
            "\"formula:x\""
        );
    }

    #[test]
    fn dim_report_serializes_with_documented_fields() {
        let g = generators::cycle(5).unwrap();
        let rep = strong_dimension(&g).unwrap();
        let json = serde_json::to_value(&rep).unwrap();
        for key in ["value", "basis", "method", "elapsed_ms", "branch_nodes"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["value"], 3);
    }
}
