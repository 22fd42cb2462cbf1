//! Degree-3 star/triangle exchange transformations and the seven-graph
//! obstruction family generated from K6 by them.

use std::collections::BTreeMap;
use std::collections::VecDeque;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{self, canonical_graph};
use crate::named;

/// Star-to-triangle: deletes a degree-3 vertex and joins every pair of its
/// previously non-adjacent neighbors. Edge count drops by the number of
/// neighbor pairs that were already adjacent.
pub fn y_delta(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.vertex_count() || g.degree(v) != 3 {
        let d = if v < g.vertex_count() { g.degree(v) } else { 0 };
        return Err(Error::NotDegreeThree { v, d });
    }
    let nbrs: Vec<usize> = g.neighbors(v).iter().collect();
    let mut out = g.delete_vertex(v)?;
    let shift = |w: usize| if w > v { w - 1 } else { w };
    for i in 0..3 {
        for j in i + 1..3 {
            if !g.has_edge(nbrs[i], nbrs[j]) {
                out = Graph::from_edges(
                    out.vertex_count(),
                    out.edges().chain([(shift(nbrs[i]), shift(nbrs[j]))]),
                )?;
            }
        }
    }
    Ok(out)
}

/// Triangle-to-star: deletes the three edges of a triangle and adds a new
/// vertex (labeled `n`) adjacent to exactly its corners. Edge count is
/// unchanged.
pub fn delta_y(g: &Graph, triangle: (usize, usize, usize)) -> Result<Graph> {
    let (a, b, c) = triangle;
    let distinct = a != b && b != c && a != c;
    if !distinct || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c) {
        return Err(Error::NotATriangle(a, b, c));
    }
    let n = g.vertex_count();
    let stripped = g.delete_edge(a, b)?.delete_edge(b, c)?.delete_edge(a, c)?;
    let mut out = stripped.add_vertex(crate::bits::VertexSet::EMPTY)?;
    out = Graph::from_edges(n + 1, out.edges().chain([(a, n), (b, n), (c, n)]))?;
    Ok(out)
}

/// The transformation closure of K6: exactly seven pairwise non-isomorphic
/// graphs, each with 15 edges, stored in canonical form and ordered by
/// (vertex count, canonical bytes).
#[derive(Clone, Debug)]
pub struct PetersenFamily {
    members: Vec<Graph>,
}

impl PetersenFamily {
    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index of the member isomorphic to `g`, if any.
    pub fn index_of_isomorph(&self, g: &Graph) -> Option<usize> {
        self.members.iter().position(|m| iso::are_isomorphic(m, g))
    }

    /// Shared lazily-built instance; the closure is cheap but hot paths call
    /// it per graph.
    pub fn shared() -> &'static PetersenFamily {
        static FAMILY: OnceLock<PetersenFamily> = OnceLock::new();
        FAMILY.get_or_init(petersen_family)
    }
}

/// Breadth-first closure of K6 under both transformations, deduplicated by
/// canonical form.
pub fn petersen_family() -> PetersenFamily {
    let k6 = canonical_graph(&named::complete(6).expect("K6"));
    let mut seen: BTreeMap<(usize, Vec<u8>), Graph> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert((6, iso::canonical_form(&k6).canonical_bytes), k6);
    queue.push_back(k6);
    while let Some(g) = queue.pop_front() {
        let push = |h: Graph, seen: &mut BTreeMap<(usize, Vec<u8>), Graph>,
                    queue: &mut VecDeque<Graph>| {
            let canon = canonical_graph(&h);
            let key = (canon.vertex_count(), iso::canonical_form(&canon).canonical_bytes);
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                e.insert(canon);
                queue.push_back(canon);
            }
        };
        for v in g.vertices().filter(|&v| g.degree(v) == 3) {
            push(y_delta(&g, v).expect("degree checked"), &mut seen, &mut queue);
        }
        for (a, b) in g.edges() {
            for c in (g.neighbors(a) & g.neighbors(b)).iter().filter(|&c| c > b) {
                push(delta_y(&g, (a, b, c)).expect("triangle checked"), &mut seen, &mut queue);
            }
        }
        assert!(seen.len() <= 7, "transformation closure of K6 exceeded 7 graphs");
    }
    let members: Vec<Graph> = seen.into_values().collect();
    assert_eq!(members.len(), 7, "transformation closure of K6 must have exactly 7 members");
    PetersenFamily { members }
}

/// Name of the member if it is one of the named obstruction graphs.
pub fn recognized_name(g: &Graph) -> Option<&'static str> {
    let named: [(&'static str, Graph); 5] = [
        ("K6", named::complete(6).expect("K6")),
        ("K_{1,3,3}", named::complete_multipartite(&[1, 3, 3]).expect("K133")),
        ("K6_deltaY", named::k6_delta_y()),
        ("K44_minus", named::k44_minus()),
        ("petersen_graph", named::petersen()),
    ];
    named
        .into_iter()
        .find(|(_, h)| iso::are_isomorphic(g, h))
        .map(|(name, _)| name)
}
