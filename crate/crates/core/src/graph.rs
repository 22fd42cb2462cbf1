//! Simple undirected graphs on at most 32 vertices.
//!
//! `Graph` is an immutable value: construction validates the edge list and
//! every operation returns a fresh graph. Adjacency is a dense symmetric
//! bitset, so adjacency tests and neighborhood intersections are single mask
//! operations, which is what the minor search spends nearly all of its time
//! on. Vertex labels are always the compact range `0..n`; operations that
//! remove a vertex shift the higher labels down by one, so equal inputs give
//! byte-for-byte equal outputs everywhere downstream.

use crate::bits::VertexSet;
use crate::error::{Error, Result};

/// Hard cap on vertices; the adjacency rows are `u32` masks.
pub const MAX_VERTICES: usize = 32;

/// An immutable simple undirected graph with vertex set `0..n`, `n <= 32`.
///
/// Value equality is label-wise equality; isomorphism lives in [`crate::iso`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse; an
    /// out-of-range endpoint or a self-loop is rejected with the offending
    /// pair.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n as usize]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n as usize && v < self.n as usize && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Adjacency row of `v` as a set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub(crate) fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n as usize
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n as usize)
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n as usize;
        (0..n).flat_map(move |u| {
            VertexSet::from_bits(bits_above(self.adj[u], u))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degrees sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Number of 3-cliques.
    pub fn triangle_count(&self) -> u64 {
        let mut t = 0u64;
        for (u, v) in self.edges() {
            // common neighbors above v, so each triangle is counted once
            let common = self.adj[u] & self.adj[v];
            t += bits_above(common, v).count_ones() as u64;
        }
        t
    }

    /// Vertices outside `s` adjacent to some vertex of `s`.
    pub fn neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = 0u32;
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet::from_bits(out) - s
    }

    /// Connected components as vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = self.vertex_set();
        let mut out = Vec::new();
        while let Some(start) = unseen.min() {
            let mut comp = VertexSet::singleton(start);
            loop {
                let grow = self.neighborhood_of_set(comp) & unseen;
                if grow.is_empty() {
                    break;
                }
                comp = comp | grow;
            }
            unseen = unseen - comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `s`, relabeled compactly (members of `s` in
    /// ascending order become `0..|s|`).
    pub fn induced(&self, s: VertexSet) -> Graph {
        let verts: Vec<usize> = s.iter().collect();
        let mut g = Graph::new(verts.len()).expect("induced subgraph within cap");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        let n = self.n as usize;
        debug_assert_eq!(perm.len(), n);
        debug_assert_eq!(perm.iter().copied().collect::<VertexSet>(), self.vertex_set());
        let mut g = Graph::new(n).expect("same size");
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Appends a new vertex labeled `n` with the given neighborhood.
    pub fn add_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        let n = self.n as usize;
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: n + 1, max: MAX_VERTICES });
        }
        if let Some(v) = (neighbors - VertexSet::full(n)).min() {
            return Err(Error::VertexOutOfRange { v, n });
        }
        let mut g = *self;
        g.n += 1;
        g.adj[n] = neighbors.bits();
        for v in neighbors.iter() {
            g.adj[v] |= 1 << n;
        }
        Ok(g)
    }

    /// Deletes vertex `v`; labels above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        let n = self.n as usize;
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
        let mut g = Graph::new(n - 1).expect("smaller");
        for w in 0..n {
            if w == v {
                continue;
            }
            g.adj[compact(w, v)] = compact_bits(self.adj[w] & !(1u32 << v), v);
        }
        Ok(g)
    }

    /// Deletes edge `uv`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let mut g = *self;
        g.adj[u] &= !(1u32 << v);
        g.adj[v] &= !(1u32 << u);
        Ok(g)
    }

    /// Contracts edge `uv`: the merged vertex takes `min(u,v)`, parallel
    /// edges collapse, the loop is dropped, higher labels shift down.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let keep = u.min(v);
        let drop = u.max(v);
        let n = self.n as usize;
        let mut g = Graph::new(n - 1).expect("smaller");
        let merged = (self.adj[keep] | self.adj[drop]) & !(1u32 << keep) & !(1u32 << drop);
        for w in 0..n {
            if w == drop {
                continue;
            }
            let row = if w == keep { merged } else { self.adj[w] & !(1u32 << drop) };
            g.adj[compact(w, drop)] = compact_bits(row, drop);
        }
        // re-point former neighbors of `drop` at the merged vertex
        for w in VertexSet::from_bits(merged).iter() {
            let w2 = compact(w, drop);
            g.adj[w2] |= 1 << keep;
            g.adj[keep] |= 1 << w2;
        }
        Ok(g)
    }

    /// The canonical bipartition if the graph is bipartite.
    ///
    /// Per component, the class containing the component's least vertex goes
    /// to `class0`, which makes the result a function of the graph value.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut class0 = VertexSet::EMPTY;
        let mut class1 = VertexSet::EMPTY;
        for comp in self.components() {
            let root = comp.min().expect("non-empty component");
            let mut even = VertexSet::singleton(root);
            let mut odd = VertexSet::EMPTY;
            let mut frontier = VertexSet::singleton(root);
            let mut parity = false;
            while !frontier.is_empty() {
                let next = self.neighborhood_of_set(frontier) & (comp - even - odd);
                parity = !parity;
                if parity {
                    odd = odd | next;
                } else {
                    even = even | next;
                }
                frontier = next;
            }
            for v in even.iter() {
                if self.neighbors(v).intersects(even) {
                    return None;
                }
            }
            for v in odd.iter() {
                if self.neighbors(v).intersects(odd) {
                    return None;
                }
            }
            class0 = class0 | even;
            class1 = class1 | odd;
        }
        Some(Bipartition { class0, class1 })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, E={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Bits of `row` at positions strictly above `v`.
fn bits_above(row: u32, v: usize) -> u32 {
    if v + 1 >= 32 {
        0
    } else {
        row >> (v + 1) << (v + 1)
    }
}

/// Label of `w` after vertex `removed` is deleted.
fn compact(w: usize, removed: usize) -> usize {
    if w > removed {
        w - 1
    } else {
        w
    }
}

/// Drops bit `removed` from a row, shifting higher bits down.
fn compact_bits(row: u32, removed: usize) -> u32 {
    let low = row & ((1u32 << removed) - 1);
    let high = if removed + 1 >= 32 { 0 } else { row >> (removed + 1) << removed };
    low | high
}

/// A 2-coloring witness: disjoint classes covering the vertex set with no
/// intra-class edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub class0: VertexSet,
    pub class1: VertexSet,
}

impl Bipartition {
    /// Checks the bipartition invariants against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.class0.intersects(self.class1) {
            return false;
        }
        if self.class0 | self.class1 != g.vertex_set() {
            return false;
        }
        g.edges()
            .all(|(u, v)| self.class0.contains(u) != self.class0.contains(v))
    }

    pub fn class_of(&self, v: usize) -> usize {
        usize::from(self.class1.contains(v))
    }
}

/// A separation `(A, B)`: a cover of the vertex set with no edge between
/// `A - B` and `B - A`. The order is `|A ∩ B|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Separation {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub order: usize,
}

impl Separation {
    /// Both `A - B` and `B - A` are non-empty.
    pub fn non_trivial(&self) -> bool {
        !(self.side_a - self.side_b).is_empty() && !(self.side_b - self.side_a).is_empty()
    }

    /// No non-trivial separation of `g` has its middle properly inside this
    /// one's. Checked by testing, for every proper subset `S` of `A ∩ B`,
    /// whether `g - S` falls apart.
    pub fn is_minimal(&self, g: &Graph) -> bool {
        let mid = self.side_a & self.side_b;
        let members: Vec<usize> = mid.iter().collect();
        let k = members.len();
        for mask in 0..(1u32 << k) {
            if mask == (1u32 << k) - 1 {
                continue; // proper subsets only
            }
            let s: VertexSet = members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let rest = g.vertex_set() - s;
            if rest.is_empty() {
                continue;
            }
            if component_count_within(g, rest) >= 2 {
                return false;
            }
        }
        true
    }
}

fn component_count_within(g: &Graph, within: VertexSet) -> usize {
    let mut unseen = within;
    let mut count = 0;
    while let Some(start) = unseen.min() {
        let mut comp = VertexSet::singleton(start);
        loop {
            let grow = g.neighborhood_of_set(comp) & unseen;
            if grow.is_empty() {
                break;
            }
            comp = comp | grow;
        }
        unseen = unseen - comp;
        count += 1;
    }
    count
}

/// Checks whether `(a, b)` is a separation of `g`; if so returns it with its
/// order filled in.
pub fn check_separation(g: &Graph, a: VertexSet, b: VertexSet) -> Option<Separation> {
    if a | b != g.vertex_set() {
        return None;
    }
    let only_a = a - b;
    let only_b = b - a;
    for v in only_a.iter() {
        if g.neighbors(v).intersects(only_b) {
            return None;
        }
    }
    Some(Separation { side_a: a, side_b: b, order: (a & b).len() })
}

/// Order of a super-separation `(g0, g1)` of `g`: `|V(G0)| + |V(G1)| - |V(G)|`.
///
/// Pure arithmetic; whether `(g0, g1)` actually is a super-separation of `g`
/// is not decided here.
pub fn super_separation_order(g0: &Graph, g1: &Graph, g: &Graph) -> i64 {
    g0.vertex_count() as i64 + g1.vertex_count() as i64 - g.vertex_count() as i64
}

/// Bipartite complement of `G[S]` relative to bipartition `b`: the graph on
/// `S` (relabeled compactly) whose edges are exactly the cross-class
/// non-edges of `G[S]`.
pub fn bipartite_complement(g: &Graph, s: VertexSet, b: &Bipartition) -> Result<Graph> {
    if !b.is_valid_for(g) {
        return Err(Error::InvalidBipartition(
            "classes must be disjoint, cover the vertex set, and split every edge",
        ));
    }
    if !s.is_subset_of(g.vertex_set()) {
        return Err(Error::VertexOutOfRange {
            v: (s - g.vertex_set()).min().unwrap_or(0),
            n: g.vertex_count(),
        });
    }
    let verts: Vec<usize> = s.iter().collect();
    let mut out = Graph::new(verts.len())?;
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            let crossing = b.class0.contains(u) != b.class0.contains(v);
            if crossing && !g.has_edge(u, v) {
                out.adj[i] |= 1 << j;
                out.adj[j] |= 1 << i;
            }
        }
    }
    Ok(out)
}
