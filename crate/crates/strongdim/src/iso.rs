//! Isomorphism testing and canonical codes for small graphs (the desk
//! scale this crate works at). Two independent routes: a backtracking
//! mapper for pairwise tests and an invariant-refined canonical code used
//! to deduplicate exhaustive enumerations.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Backtracking isomorphism test with degree pruning. Intended for
/// graphs of at most a dozen or so vertices.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    if n == 0 {
        return true;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }

    // map a-vertices in order of decreasing degree to fail fast
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        a: &Graph,
        b: &Graph,
        order: &[usize],
        pos: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        for cand in 0..b.n() {
            if used[cand] || a.degree(u) != b.degree(cand) {
                continue;
            }
            let consistent = order[..pos].iter().all(|&w| {
                a.has_edge(u, w) == b.has_edge(cand, map[w])
            });
            if consistent {
                map[u] = cand;
                used[cand] = true;
                if extend(a, b, order, pos + 1, map, used) {
                    return true;
                }
                used[cand] = false;
                map[u] = usize::MAX;
            }
        }
        false
    }

    extend(a, b, &order, 0, &mut map, &mut used)
}

/// Iteratively refined vertex invariant: start from degrees, then fold in
/// sorted neighbor invariants until stable. Isomorphic graphs receive
/// identical invariant multisets.
fn refined_invariants(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut inv: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    for _ in 0..n {
        let mut keys: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbors(v).map(|w| inv[w]).collect();
                nb.sort_unstable();
                (inv[v], nb)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let index: BTreeMap<&(u64, Vec<u64>), u64> = sorted
            .iter()
            .enumerate()
            .map(|(i, k)| (k, i as u64))
            .collect();
        let next: Vec<u64> = keys.iter().map(|k| index[k]).collect();
        if next == inv {
            break;
        }
        keys.clear();
        inv = next;
    }
    inv
}

fn triangle_code(g: &Graph, perm: &[usize]) -> u128 {
    let n = g.n();
    let mut code: u128 = 0;
    for j in 1..n {
        for i in 0..j {
            code <<= 1;
            if g.has_edge(perm[i], perm[j]) {
                code |= 1;
            }
        }
    }
    code
}

/// Canonical code: order, sorted refined invariants, and the minimum
/// upper-triangle bit code over all invariant-respecting relabelings.
/// Equal codes iff isomorphic. Supports n <= 16.
pub fn canonical_code(g: &Graph) -> (usize, Vec<u64>, u128) {
    let n = g.n();
    assert!(n <= 16, "canonical_code supports at most 16 vertices");
    let inv = refined_invariants(g);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| (inv[v], v));

    // group by invariant; permute within groups only
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match groups.last_mut() {
            Some(last) if inv[last[0]] == inv[v] => last.push(v),
            _ => groups.push(vec![v]),
        }
    }

    let mut best: Option<u128> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    fn rec(
        g: &Graph,
        groups: &[Vec<usize>],
        gi: usize,
        chosen: &mut Vec<usize>,
        perm: &mut Vec<usize>,
        best: &mut Option<u128>,
    ) {
        if gi == groups.len() {
            let code = triangle_code(g, perm);
            if best.map_or(true, |b| code < b) {
                *best = Some(code);
            }
            return;
        }
        let group = &groups[gi];
        if chosen.len() == group.len() {
            let saved = std::mem::take(chosen);
            rec(g, groups, gi + 1, &mut Vec::new(), perm, best);
            *chosen = saved;
            return;
        }
        for &v in group {
            if !chosen.contains(&v) {
                chosen.push(v);
                perm.push(v);
                rec(g, groups, gi, chosen, perm, best);
                perm.pop();
                chosen.pop();
            }
        }
    }
    rec(g, &groups, 0, &mut Vec::new(), &mut perm, &mut best);

    let mut sig = inv;
    sig.sort_unstable();
    (n, sig, best.unwrap_or(0))
}
