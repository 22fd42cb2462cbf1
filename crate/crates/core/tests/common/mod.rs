//! Independent oracles shared by the integration suites. Nothing here calls
//! into the search paths it is used to check: the quotient oracle works on
//! raw labeled graphs, and the closure oracle decides minors purely by
//! elementary deletion/contraction reachability.

// each test target compiles this module separately and uses a subset
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use linkless::iso::canonical_form;
use linkless::{graph6, Graph};

use rand::Rng;

/// Canonical lines of every isomorphism class on exactly `n` labeled
/// vertices satisfying `pred`, obtained by brute force over all
/// 2^C(n,2) labeled graphs. Usable up to n = 6.
pub fn labeled_quotient(n: usize, pred: impl Fn(&Graph) -> bool) -> BTreeSet<String> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut classes = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).expect("valid labeled graph");
        if pred(&g) {
            classes.insert(canonical_form(&g).line().to_string());
        }
    }
    classes
}

/// Every isomorphism class with at most `max_n` vertices, via the quotient
/// oracle (independent of the enumeration module).
pub fn all_classes_up_to(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for line in labeled_quotient(n, |_| true) {
            out.push(graph6::decode(&line).expect("canonical line decodes"));
        }
    }
    out
}

/// Minor decisions by reachability: H is a minor of G iff the canonical form
/// of H appears in the closure of G under vertex deletion, edge deletion and
/// edge contraction. This matches the definition of a minor directly (a
/// subgraph of G contracted along some edges) and shares nothing with the
/// branch-set search.
#[derive(Default)]
pub struct MinorClosureOracle {
    one_step: HashMap<String, Vec<String>>,
}

impl MinorClosureOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn has_minor(&mut self, g: &Graph, h: &Graph) -> bool {
        let target = canonical_form(h).line().to_string();
        let start = canonical_form(g).line().to_string();
        let mut visited = HashSet::new();
        let mut stack = vec![start];
        while let Some(line) = stack.pop() {
            if !visited.insert(line.clone()) {
                continue;
            }
            if line == target {
                return true;
            }
            for next in self.children(&line) {
                stack.push(next);
            }
        }
        false
    }

    fn children(&mut self, line: &str) -> Vec<String> {
        if let Some(cached) = self.one_step.get(line) {
            return cached.clone();
        }
        let g = graph6::decode(line).expect("closure lines are canonical graph6");
        let mut out = BTreeSet::new();
        for v in g.vertices() {
            out.insert(canonical_form(&g.delete_vertex(v).unwrap()).line().to_string());
        }
        for (u, v) in g.edges() {
            out.insert(canonical_form(&g.delete_edge(u, v).unwrap()).line().to_string());
            out.insert(canonical_form(&g.contract_edge(u, v).unwrap()).line().to_string());
        }
        let out: Vec<String> = out.into_iter().collect();
        self.one_step.insert(line.to_string(), out.clone());
        out
    }
}

/// Erdos-Renyi draw with the given edge probability.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("valid random graph")
}

/// Uniformly random relabeling.
pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}
