//! Rooted products (single-H and sequence form), corona products, the
//! join K_1 + H, and the family of graphs H_{t,p,r} whose degree-one
//! vertex y lies in no strong metric basis.

use serde::Serialize;

use crate::graph::{is_connected, Graph, VertexSet};
use crate::graph6::serialize_graph6;
use crate::{Error, Result};

/// A constructed product graph together with the bookkeeping needed to
/// move between product ids and (copy, within-copy vertex) coordinates.
/// Copies are laid out contiguously in copy order, so both directions of
/// the bijection are O(1) lookups.
#[derive(Clone, Debug)]
pub struct ProductMap {
    pub product: Graph,
    pub g_order: usize,
    pub copy_orders: Vec<usize>,
    copy_offsets: Vec<usize>,
    pub roots: Vec<usize>,
}

impl ProductMap {
    pub fn pair_to_id(&self, copy: usize, h_vertex: usize) -> Option<usize> {
        if copy >= self.g_order || h_vertex >= self.copy_orders[copy] {
            return None;
        }
        Some(self.copy_offsets[copy] + h_vertex)
    }

    pub fn id_to_pair(&self, id: usize) -> Option<(usize, usize)> {
        if id >= self.product.n() {
            return None;
        }
        let copy = match self.copy_offsets.binary_search(&id) {
            Ok(c) => c,
            Err(ins) => ins - 1,
        };
        Some((copy, id - self.copy_offsets[copy]))
    }

    /// Product ids making up one copy.
    pub fn copy_ids(&self, copy: usize) -> std::ops::Range<usize> {
        let start = self.copy_offsets[copy];
        start..start + self.copy_orders[copy]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "graph6": serialize_graph6(&self.product),
            "g_order": self.g_order,
            "copy_orders": self.copy_orders,
            "roots": self.roots,
            "id_to_pair": (0..self.product.n())
                .map(|id| self.id_to_pair(id).unwrap())
                .collect::<Vec<(usize, usize)>>(),
        })
    }
}

fn build(g: &Graph, pieces: &[(&Graph, usize)]) -> Result<ProductMap> {
    let n = g.n();
    let mut copy_orders = Vec::with_capacity(n);
    let mut copy_offsets = Vec::with_capacity(n);
    let mut roots = Vec::with_capacity(n);
    let mut offset = 0usize;
    for &(h, root) in pieces {
        if root >= h.n() {
            return Err(Error::InvalidParam(format!(
                "root {root} out of range for factor of order {}",
                h.n()
            )));
        }
        copy_orders.push(h.n());
        copy_offsets.push(offset);
        roots.push(offset + root);
        offset += h.n();
    }
    let mut edges = Vec::new();
    for (copy, &(h, _)) in pieces.iter().enumerate() {
        let base = copy_offsets[copy];
        for (x, y) in h.edges() {
            edges.push((base + x, base + y));
        }
    }
    for (a, b) in g.edges() {
        let (ra, rb) = (roots[a], roots[b]);
        edges.push((ra.min(rb), ra.max(rb)));
    }
    Ok(ProductMap {
        product: Graph::from_edges(offset, &edges)?,
        g_order: n,
        copy_orders,
        copy_offsets,
        roots,
    })
}

/// Rooted product: one copy of `h` per vertex of `g`, the copies' roots
/// identified with (pairwise joined along) the edges of `g`.
pub fn rooted_product(g: &Graph, h: &Graph, root: usize) -> Result<ProductMap> {
    if g.n() < 1 || !is_connected(g) {
        return Err(Error::InvalidParam(
            "rooted product needs a connected nonempty G".into(),
        ));
    }
    if h.n() < 1 || !is_connected(h) {
        return Err(Error::InvalidParam(
            "rooted product needs a connected nonempty H".into(),
        ));
    }
    let pieces: Vec<(&Graph, usize)> = (0..g.n()).map(|_| (h, root)).collect();
    build(g, &pieces)
}

/// Rooted product of a sequence: copy i is the rooted graph `hs[i]`.
pub fn rooted_product_sequence(g: &Graph, hs: &[(Graph, usize)]) -> Result<ProductMap> {
    if g.n() < 1 || !is_connected(g) {
        return Err(Error::InvalidParam(
            "rooted product needs a connected nonempty G".into(),
        ));
    }
    if hs.len() != g.n() {
        return Err(Error::InvalidParam(format!(
            "got {} rooted factors for a base of order {}",
            hs.len(),
            g.n()
        )));
    }
    for (h, _) in hs {
        if h.n() < 1 || !is_connected(h) {
            return Err(Error::InvalidParam(
                "every rooted factor must be connected and nonempty".into(),
            ));
        }
    }
    let pieces: Vec<(&Graph, usize)> = hs.iter().map(|(h, r)| (h, *r)).collect();
    build(g, &pieces)
}

/// Join K_1 + H: a new apex vertex (id 0) adjacent to every vertex of
/// `h`; the vertices of `h` are shifted up by one.
pub fn join_k1(h: &Graph) -> (Graph, usize) {
    let t = h.n();
    let mut edges: Vec<(usize, usize)> = (1..=t).map(|v| (0, v)).collect();
    for (x, y) in h.edges() {
        edges.push((x + 1, y + 1));
    }
    (
        Graph::from_edges(t + 1, &edges).expect("join of a simple graph is simple"),
        0,
    )
}

/// Corona product: one copy of `h` per vertex of `g`, every copy vertex
/// joined to its base vertex. Built directly from the definition; the
/// coordinates follow the K_1 + H convention (within-copy vertex 0 is the
/// base vertex, vertex 1+x is copy vertex x), so the result can be
/// compared id-for-id with `rooted_product(g, join_k1(h), apex)`.
pub fn corona_product(g: &Graph, h: &Graph) -> Result<ProductMap> {
    if g.n() < 1 || !is_connected(g) {
        return Err(Error::InvalidParam(
            "corona product needs a connected nonempty G".into(),
        ));
    }
    let n = g.n();
    let t = h.n();
    let block = 1 + t;
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        edges.push((a * block, b * block));
    }
    for a in 0..n {
        let base = a * block;
        for (x, y) in h.edges() {
            edges.push((base + 1 + x, base + 1 + y));
        }
        for x in 0..t {
            edges.push((base, base + 1 + x));
        }
    }
    Ok(ProductMap {
        product: Graph::from_edges(n * block, &edges)?,
        g_order: n,
        copy_orders: vec![block; n],
        copy_offsets: (0..n).map(|a| a * block).collect(),
        roots: (0..n).map(|a| a * block).collect(),
    })
}

/// Parameters of the family graph H_{t,p,r}: an odd cycle x_1..x_t with
/// the chord x_1 x_{t-1}, a pendant y on x_t, p pendants w_i on
/// x_{floor(t/2)} and r pendants z_j on x_{ceil(t/2)}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFSpec {
    pub t: usize,
    pub p: usize,
    pub r: usize,
}

impl FamilyFSpec {
    pub fn new(t: usize, p: usize, r: usize) -> Result<Self> {
        if t < 5 || t % 2 == 0 {
            return Err(Error::InvalidParam(format!(
                "family parameter t must be odd and at least 5, got {t}"
            )));
        }
        if p < 1 || r < 1 {
            return Err(Error::InvalidParam(format!(
                "family parameters p, r must be at least 1, got p={p} r={r}"
            )));
        }
        Ok(FamilyFSpec { t, p, r })
    }

    pub fn order(&self) -> usize {
        self.t + 1 + self.p + self.r
    }
}

/// Marked vertices of a constructed H_{t,p,r} (ids into the graph).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFMarks {
    pub y: usize,
    pub x_t: usize,
    pub x_1: usize,
    pub x_t_minus_1: usize,
    pub w: VertexSet,
    pub z: VertexSet,
    pub x: VertexSet,
}

/// Build H_{t,p,r}. Vertices carry the construction's names as labels:
/// x1..xt, y, w1..wp, z1..zr.
pub fn family_f(spec: FamilyFSpec) -> Result<(Graph, FamilyFMarks)> {
    let FamilyFSpec { t, p, r } = spec;
    FamilyFSpec::new(t, p, r)?;
    // ids: x_k -> k-1, y -> t, w_i -> t+i, z_j -> t+p+j
    let x = |k: usize| k - 1;
    let y = t;
    let w = |i: usize| t + i;
    let z = |j: usize| t + p + j;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for k in 1..t {
        edges.push((x(k), x(k + 1)));
    }
    edges.push((x(1), x(t)));
    edges.push((x(1), x(t - 1)));
    edges.push((x(t), y));
    for i in 1..=p {
        edges.push((x(t / 2).min(w(i)), x(t / 2).max(w(i))));
    }
    for j in 1..=r {
        edges.push((x(t.div_ceil(2)).min(z(j)), x(t.div_ceil(2)).max(z(j))));
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();

    let mut labels: Vec<String> = (1..=t).map(|k| format!("x{k}")).collect();
    labels.push("y".into());
    labels.extend((1..=p).map(|i| format!("w{i}")));
    labels.extend((1..=r).map(|j| format!("z{j}")));

    let g = Graph::from_edges(spec.order(), &edges)?.with_labels(labels)?;
    let marks = FamilyFMarks {
        y,
        x_t: x(t),
        x_1: x(1),
        x_t_minus_1: x(t - 1),
        w: (1..=p).map(w).collect(),
        z: (1..=r).map(z).collect(),
        x: (1..=t).map(x).collect(),
    };
    Ok((g, marks))
}
