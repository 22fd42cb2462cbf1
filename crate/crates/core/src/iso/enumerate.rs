//! Isomorph-free exhaustive enumeration by canonical augmentation.
//!
//! The search tree has the one-vertex graph at its root; a node on `k`
//! vertices has one candidate child per neighborhood mask of a new vertex
//! `k`. A child survives when
//!
//!   1. it passes the class filters (bipartite / triangle-free are hereditary
//!      under deleting the last vertex, so pruning them here is complete),
//!   2. the edge window is still reachable (every descendant's edge count is
//!      bounded by the current count plus what future vertices can add),
//!   3. the added vertex lies in the orbit of the canonical-deletion vertex
//!      (the one on the last canonical position) of the child, and
//!   4. no earlier sibling had the same canonical form.
//!
//! Rules 3 and 4 together give exactly one tree node per isomorphism class:
//! an accepted child of two non-isomorphic parents would make both parents
//! isomorphic to (child minus its canonical-deletion orbit), and within one
//! parent the sibling set is deduplicated directly. The tree recurses on the
//! canonical representative, so child indices (the masks) are reproducible
//! and serve as resume tokens; `"0.3.1"` names the subtree reached by masks
//! 0, 3, 1. Connectivity is not hereditary and is filtered at emission only.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::canon;

/// Which graph class to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassFilter {
    All,
    Bipartite,
    TriangleFree,
}

/// Parameters of one isomorph-free enumeration.
///
/// Full-range bipartite or triangle-free enumeration is practical up to
/// about n = 11; tight edge windows (as used by the bound scans) go further.
/// The limit is time, not a hard cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub class_filter: ClassFilter,
    pub min_edges: usize,
    pub max_edges: usize,
    pub connected_only: bool,
}

impl EnumerationSpec {
    /// All graphs on `n` vertices in the given class, any edge count.
    pub fn new(n: usize, class_filter: ClassFilter) -> EnumerationSpec {
        EnumerationSpec {
            n,
            class_filter,
            min_edges: 0,
            max_edges: n * n.saturating_sub(1) / 2,
            connected_only: false,
        }
    }

    pub fn edge_window(mut self, min_edges: usize, max_edges: usize) -> EnumerationSpec {
        self.min_edges = min_edges;
        self.max_edges = max_edges;
        self
    }

    pub fn connected(mut self, connected_only: bool) -> EnumerationSpec {
        self.connected_only = connected_only;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let cap = self.n * self.n.saturating_sub(1) / 2;
        if self.min_edges > self.max_edges || self.max_edges > cap {
            return Err(Error::InvalidEdgeWindow {
                min: self.min_edges,
                max: self.max_edges,
                n: self.n,
            });
        }
        if self.n > crate::graph::MAX_VERTICES {
            return Err(Error::TooManyVertices { n: self.n, max: crate::graph::MAX_VERTICES });
        }
        Ok(())
    }
}

/// Path of child masks identifying a subtree; prints as `"0.3.1"`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubtreeToken(pub Vec<u64>);

impl SubtreeToken {
    /// The whole tree.
    pub fn root() -> SubtreeToken {
        SubtreeToken(Vec::new())
    }
}

impl fmt::Display for SubtreeToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "root");
        }
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for SubtreeToken {
    type Err = Error;

    fn from_str(s: &str) -> Result<SubtreeToken> {
        let s = s.trim();
        if s.is_empty() || s == "root" {
            return Ok(SubtreeToken::root());
        }
        let masks = s
            .split('.')
            .map(|tok| tok.parse::<u64>().map_err(|_| Error::InvalidToken(s.to_string())))
            .collect::<Result<Vec<u64>>>()?;
        Ok(SubtreeToken(masks))
    }
}

/// Streams one canonical representative per isomorphism class, in
/// deterministic depth-first order.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Enumerator> {
    enumerate_subtree(spec, &SubtreeToken::root())
}

/// Streams the part of the enumeration below the given token. The subtree
/// content is exactly what the full run produces under that path, including
/// sibling deduplication; a token pointing at a pruned or duplicated child
/// yields an empty stream.
pub fn enumerate_subtree(spec: &EnumerationSpec, token: &SubtreeToken) -> Result<Enumerator> {
    spec.validate()?;
    let spec = *spec;
    if spec.n == 0 {
        return Ok(Enumerator {
            spec,
            stack: Vec::new(),
            pending: token.0.is_empty().then(|| Graph::new(0).expect("empty graph")),
        });
    }
    let mut node = Graph::new(1).expect("one vertex");
    for (depth, &mask) in token.0.iter().enumerate() {
        let k = node.vertex_count();
        if k >= spec.n || mask >> k != 0 {
            return Err(Error::InvalidToken(token.to_string()));
        }
        // replay the sibling scan so duplicate-pruned paths stay empty
        let mut seen = HashSet::new();
        let mut found = None;
        for m in 0..=mask {
            if let Some((bytes, child)) = accept_child(&spec, &node, m as u32) {
                let fresh = seen.insert(bytes);
                if m == mask {
                    found = fresh.then_some(child);
                }
            }
        }
        match found {
            Some(child) => node = child,
            None => {
                return Ok(Enumerator { spec, stack: Vec::new(), pending: None });
            }
        }
        if node.vertex_count() == spec.n {
            // token names a leaf; emit just it
            if depth + 1 != token.0.len() {
                return Err(Error::InvalidToken(token.to_string()));
            }
            return Ok(Enumerator { spec, stack: Vec::new(), pending: Some(node) });
        }
    }
    if spec.n == 1 {
        return Ok(Enumerator { spec, stack: Vec::new(), pending: Some(node) });
    }
    Ok(Enumerator { spec, stack: vec![Frame::new(node)], pending: None })
}

pub struct Enumerator {
    spec: EnumerationSpec,
    stack: Vec<Frame>,
    pending: Option<Graph>,
}

struct Frame {
    graph: Graph,
    next_mask: u64,
    seen: HashSet<Vec<u8>>,
}

impl Frame {
    fn new(graph: Graph) -> Frame {
        Frame { graph, next_mask: 0, seen: HashSet::new() }
    }
}

impl Iterator for Enumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.pending.take() {
            if passes_emit(&self.spec, &g) {
                return Some(g);
            }
        }
        loop {
            let spec = self.spec;
            let frame = self.stack.last_mut()?;
            let k = frame.graph.vertex_count();
            if frame.next_mask >> k != 0 {
                self.stack.pop();
                continue;
            }
            let mask = frame.next_mask;
            frame.next_mask += 1;
            let Some((bytes, child)) = accept_child(&spec, &frame.graph, mask as u32) else {
                continue;
            };
            if !frame.seen.insert(bytes) {
                continue;
            }
            if child.vertex_count() == spec.n {
                if passes_emit(&spec, &child) {
                    return Some(child);
                }
            } else {
                self.stack.push(Frame::new(child));
            }
        }
    }
}

fn passes_emit(spec: &EnumerationSpec, g: &Graph) -> bool {
    g.edge_count() >= spec.min_edges
        && g.edge_count() <= spec.max_edges
        && (!spec.connected_only || g.is_connected())
        && match spec.class_filter {
            ClassFilter::All => true,
            ClassFilter::Bipartite => g.is_bipartite(),
            ClassFilter::TriangleFree => g.triangle_count() == 0,
        }
}

/// Applies filters, window pruning and the canonical-augmentation rule; on
/// success returns the child's canonical bytes and canonical representative.
fn accept_child(spec: &EnumerationSpec, parent: &Graph, mask: u32) -> Option<(Vec<u8>, Graph)> {
    let k = parent.vertex_count();
    let added = mask.count_ones() as usize;
    let edges = parent.edge_count() + added;
    if edges > spec.max_edges {
        return None;
    }
    if edges + max_future_edges(k + 1, spec.n) < spec.min_edges {
        return None;
    }
    if spec.class_filter == ClassFilter::TriangleFree {
        for u in VertexSet::from_bits(mask).iter() {
            if parent.row(u) & mask != 0 {
                return None;
            }
        }
    }
    let child = parent
        .add_vertex(VertexSet::from_bits(mask))
        .expect("child within vertex cap");
    if spec.class_filter == ClassFilter::Bipartite && !child.is_bipartite() {
        return None;
    }
    let data = canon(&child);
    if !data.last_orbit.contains(k) {
        return None;
    }
    let canonical = child.relabeled(&data.labeling);
    Some((data.bytes, canonical))
}

/// Largest number of edges the vertices `from..n` can still contribute.
fn max_future_edges(from: usize, n: usize) -> usize {
    (from..n).sum()
}

/// Subtree roots covering the whole enumeration, in depth-first order. The
/// frontier deepens until it holds at least `min_count` tokens (or cannot
/// deepen further), so callers get enough independent work units.
pub fn subtree_tokens(spec: &EnumerationSpec, min_count: usize) -> Result<Vec<SubtreeToken>> {
    spec.validate()?;
    if spec.n <= 1 {
        return Ok(vec![SubtreeToken::root()]);
    }
    let root = Graph::new(1).expect("one vertex");
    let mut frontier: Vec<(SubtreeToken, Graph)> = vec![(SubtreeToken::root(), root)];
    let mut depth = 1;
    while frontier.len() < min_count && depth < spec.n - 1 {
        let mut next = Vec::new();
        for (token, node) in &frontier {
            let k = node.vertex_count();
            let mut seen = HashSet::new();
            for mask in 0..1u64 << k {
                if let Some((bytes, child)) = accept_child(spec, node, mask as u32) {
                    if seen.insert(bytes) {
                        let mut path = token.0.clone();
                        path.push(mask);
                        next.push((SubtreeToken(path), child));
                    }
                }
            }
        }
        frontier = next;
        depth += 1;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(frontier.into_iter().map(|(t, _)| t).collect())
}

/// Folds every enumerated graph into an accumulator, optionally in parallel.
///
/// Work is split into subtrees and partial accumulators are merged in token
/// order, so for any `jobs` the result equals the sequential fold as long as
/// `merge` concatenates in order (which a commutative merge satisfies
/// trivially).
pub fn enumerate_fold<A, I, F, M>(
    spec: &EnumerationSpec,
    jobs: usize,
    init: I,
    fold: F,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &Graph) + Sync,
    M: Fn(A, A) -> A,
{
    spec.validate()?;
    let jobs = jobs.max(1);
    if jobs == 1 {
        let mut acc = init();
        for g in enumerate(spec)? {
            fold(&mut acc, &g);
        }
        return Ok(acc);
    }
    let tokens = subtree_tokens(spec, jobs * 4)?;
    if tokens.len() <= 1 {
        let mut acc = init();
        for g in enumerate(spec)? {
            fold(&mut acc, &g);
        }
        return Ok(acc);
    }
    let slots: Vec<Mutex<Option<A>>> = tokens.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(tokens.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= tokens.len() {
                    break;
                }
                let mut acc = init();
                let iter = enumerate_subtree(spec, &tokens[i]).expect("token from subtree_tokens");
                for g in iter {
                    fold(&mut acc, &g);
                }
                *slots[i].lock().expect("worker panicked") = Some(acc);
            });
        }
    });
    let mut acc = init();
    for slot in slots {
        let part = slot.into_inner().expect("worker panicked").expect("slot filled");
        acc = merge(acc, part);
    }
    Ok(acc)
}
