//! Minor containment with branch-set certificates, and linkless
//! embeddability as absence of the seven obstruction minors.

pub mod naive;

use thiserror::Error;

use crate::bits::VertexSet;
use crate::graph::Graph;
use crate::transforms::PetersenFamily;

/// Certificate that H is a minor of G: one branch set per H-vertex.
///
/// Valid when the sets are nonempty, pairwise disjoint, each induces a
/// connected subgraph of G, and every H-edge has at least one G-edge between
/// the corresponding sets. Serializes as `{"0": [g vertices], "1": [...]}`,
/// the wire format of the `minor` subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

impl serde::Serialize for MinorModel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.branch_sets.len()))?;
        for (i, s) in self.branch_sets.iter().enumerate() {
            map.serialize_entry(&i.to_string(), &s.iter().collect::<Vec<usize>>())?;
        }
        map.end()
    }
}

/// Why a model is not valid; checking is independent of the search.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelViolation {
    #[error("model has {found} branch sets for a pattern on {expected} vertices")]
    WrongArity { expected: usize, found: usize },
    #[error("branch set {h_vertex} is empty")]
    EmptyBranchSet { h_vertex: usize },
    #[error("branch set {h_vertex} leaves the host vertex set")]
    OutOfHost { h_vertex: usize },
    #[error("branch sets {a} and {b} overlap")]
    Overlap { a: usize, b: usize },
    #[error("branch set {h_vertex} is not connected in the host")]
    Disconnected { h_vertex: usize },
    #[error("pattern edge ({u},{v}) has no host edge between its branch sets")]
    MissingEdge { u: usize, v: usize },
}

/// Checks every model invariant against the host/pattern pair.
pub fn verify_model(g: &Graph, h: &Graph, m: &MinorModel) -> Result<(), ModelViolation> {
    if m.branch_sets.len() != h.vertex_count() {
        return Err(ModelViolation::WrongArity {
            expected: h.vertex_count(),
            found: m.branch_sets.len(),
        });
    }
    for (i, &s) in m.branch_sets.iter().enumerate() {
        if s.is_empty() {
            return Err(ModelViolation::EmptyBranchSet { h_vertex: i });
        }
        if !s.is_subset_of(g.vertex_set()) {
            return Err(ModelViolation::OutOfHost { h_vertex: i });
        }
        for (j, &t) in m.branch_sets.iter().enumerate().skip(i + 1) {
            if s.intersects(t) {
                return Err(ModelViolation::Overlap { a: i, b: j });
            }
        }
        if !connected_within(g, s) {
            return Err(ModelViolation::Disconnected { h_vertex: i });
        }
    }
    for (u, v) in h.edges() {
        if !sets_adjacent(g, m.branch_sets[u], m.branch_sets[v]) {
            return Err(ModelViolation::MissingEdge { u, v });
        }
    }
    Ok(())
}

fn connected_within(g: &Graph, s: VertexSet) -> bool {
    let Some(start) = s.min() else { return false };
    let mut comp = VertexSet::singleton(start);
    loop {
        let grow = g.neighborhood_of_set(comp) & s;
        if grow.is_empty() {
            break;
        }
        comp = comp | grow;
    }
    comp == s
}

fn sets_adjacent(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    g.neighborhood_of_set(a).intersects(b)
}

pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    find_minor(g, h).is_some()
}

/// Searches for an H minor in G; any returned model passes [`verify_model`].
///
/// H-vertices are assigned branch sets one at a time in descending H-degree
/// order; candidate sets are connected subsets of the unused host vertices,
/// enumerated smallest-first, constrained to touch the branch set of every
/// already-placed H-neighbor and capped so that every unplaced H-vertex
/// keeps at least one host vertex available. All tie-breaking is by vertex
/// label, so certificates are reproducible.
pub fn find_minor(g: &Graph, h: &Graph) -> Option<MinorModel> {
    let hn = h.vertex_count();
    let gn = g.vertex_count();
    if hn > gn || h.edge_count() > g.edge_count() {
        return None;
    }
    if hn == gn {
        // no room to contract: branch sets are singletons, so a minor is a
        // spanning subgraph and degrees must dominate
        let gd = g.degree_sequence();
        let hd = h.degree_sequence();
        if hd.iter().zip(&gd).any(|(a, b)| a > b) {
            return None;
        }
    }
    if hn == 0 {
        return Some(MinorModel { branch_sets: Vec::new() });
    }
    // descending degree, labels break ties
    let mut order: Vec<usize> = (0..hn).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut state = SearchState {
        g,
        h,
        order: &order,
        branch: vec![VertexSet::EMPTY; hn],
        used: VertexSet::EMPTY,
    };
    if state.assign(0) {
        let model = MinorModel { branch_sets: state.branch };
        debug_assert_eq!(verify_model(g, h, &model), Ok(()));
        Some(model)
    } else {
        None
    }
}

struct SearchState<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    branch: Vec<VertexSet>,
    used: VertexSet,
}

impl SearchState<'_> {
    fn assign(&mut self, level: usize) -> bool {
        if level == self.order.len() {
            return true;
        }
        let hv = self.order[level];
        let avail = self.used.complement_in(self.g.vertex_count());
        let remaining_after = self.order.len() - level - 1;
        if avail.len() < remaining_after + 1 {
            return false;
        }
        let budget = avail.len() - remaining_after;
        // neighborhoods of placed branch sets this one must touch
        let mut targets: Vec<VertexSet> = Vec::new();
        for prior in 0..level {
            if self.h.has_edge(self.order[prior], hv) {
                let reach = self.g.neighborhood_of_set(self.branch[self.order[prior]]) & avail;
                if reach.is_empty() {
                    return false;
                }
                targets.push(reach);
            }
        }
        // each candidate set is enumerated once, rooted at its least vertex
        for root in avail.iter() {
            let above = avail - VertexSet::full(root + 1);
            let seed = VertexSet::singleton(root);
            let ext = self.g.neighbors(root) & above;
            if self.grow(level, hv, seed, ext, above, budget, &targets) {
                return true;
            }
        }
        false
    }

    /// Enumerates connected supersets of `set` inside `allowed ∪ set`,
    /// extending only through the frontier so each subset appears once.
    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        level: usize,
        hv: usize,
        set: VertexSet,
        ext: VertexSet,
        allowed: VertexSet,
        budget: usize,
        targets: &[VertexSet],
    ) -> bool {
        if targets.iter().all(|&t| t.intersects(set)) {
            self.branch[hv] = set;
            self.used = self.used | set;
            if self.assign(level + 1) {
                return true;
            }
            self.used = self.used - set;
            self.branch[hv] = VertexSet::EMPTY;
        }
        if set.len() == budget {
            return false;
        }
        // an unreachable target can never be satisfied by growing further
        let closure = set | allowed;
        if targets.iter().any(|&t| !t.intersects(closure)) {
            return false;
        }
        let mut ext = ext;
        let mut allowed = allowed;
        while let Some(v) = ext.min() {
            ext.remove(v);
            allowed.remove(v);
            let next_ext = (ext | (self.g.neighbors(v) & allowed)) - set;
            if self.grow(level, hv, set.with(v), next_ext, allowed, budget, targets) {
                return true;
            }
        }
        false
    }
}

/// A forbidden-minor witness: which family member and where.
#[derive(Clone, Debug)]
pub struct Obstruction {
    pub family_index: usize,
    pub model: MinorModel,
}

/// First Petersen-family obstruction by family index, if any. Members are
/// tried in ascending (vertex count, canonical bytes) order, so the cheap
/// candidates come first and "first" is deterministic.
pub fn find_obstruction(g: &Graph) -> Option<Obstruction> {
    let family = PetersenFamily::shared();
    for (i, member) in family.members().iter().enumerate() {
        if let Some(model) = find_minor(g, member) {
            return Some(Obstruction { family_index: i, model });
        }
    }
    None
}

/// No minor isomorphic to any of the seven obstruction graphs.
pub fn is_linkless(g: &Graph) -> bool {
    find_obstruction(g).is_none()
}

/// No K6, K_{1,3,3}, K_{4,4}-minus-an-edge, or K6-after-one-triangle-swap
/// minor: the four-graph test used for the bipartite bound.
pub fn is_bipartite_obstruction_free(g: &Graph) -> bool {
    bipartite_obstructions().iter().all(|h| find_minor(g, h).is_none())
}

fn bipartite_obstructions() -> &'static [Graph; 4] {
    use std::sync::OnceLock;
    static FOUR: OnceLock<[Graph; 4]> = OnceLock::new();
    FOUR.get_or_init(|| {
        [
            crate::named::complete(6).expect("K6"),
            crate::named::complete_multipartite(&[1, 3, 3]).expect("K133"),
            crate::named::k44_minus(),
            crate::named::k6_delta_y(),
        ]
    })
}
