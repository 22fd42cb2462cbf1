//! Reference minor test by exhaustive assignment enumeration.
//!
//! Every function `V(G) -> V(H) ∪ {unused}` is generated and checked
//! directly against the branch-set conditions. No pruning, no ordering
//! heuristics, no shared code with the backtracking search; this is the
//! independent path the spot checks and the oracle-equivalence tests compare
//! against. Cost is `(|V(H)|+1)^|V(G)|`, fine up to about 9 host vertices.

use crate::bits::VertexSet;
use crate::graph::Graph;

pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    let gn = g.vertex_count();
    let hn = h.vertex_count();
    if hn == 0 {
        return true;
    }
    let mut assignment = vec![usize::MAX; gn];
    try_assign(g, h, &mut assignment, 0)
}

fn try_assign(g: &Graph, h: &Graph, assignment: &mut Vec<usize>, v: usize) -> bool {
    if v == g.vertex_count() {
        return valid(g, h, assignment);
    }
    for part in 0..=h.vertex_count() {
        assignment[v] = if part == h.vertex_count() { usize::MAX } else { part };
        if try_assign(g, h, assignment, v + 1) {
            return true;
        }
    }
    false
}

fn valid(g: &Graph, h: &Graph, assignment: &[usize]) -> bool {
    let hn = h.vertex_count();
    let mut parts = vec![VertexSet::EMPTY; hn];
    for (v, &p) in assignment.iter().enumerate() {
        if p != usize::MAX {
            parts[p].insert(v);
        }
    }
    if parts.iter().any(|p| p.is_empty()) {
        return false;
    }
    for part in &parts {
        if !connected(g, *part) {
            return false;
        }
    }
    for (x, y) in h.edges() {
        let joined = parts[x]
            .iter()
            .any(|u| g.neighbors(u).intersects(parts[y]));
        if !joined {
            return false;
        }
    }
    true
}

fn connected(g: &Graph, s: VertexSet) -> bool {
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

#[cfg(test)]
mod tests {
    use super::has_minor;
    use crate::named;

    #[test]
    fn agrees_on_small_known_cases() {
        let k5 = named::complete(5).unwrap();
        let k4 = named::complete(4).unwrap();
        let k23 = named::complete_bipartite(2, 3).unwrap();
        assert!(has_minor(&k5, &k4));
        assert!(has_minor(&k5, &k23));
        assert!(!has_minor(&k4, &k5));
        let c5 = crate::graph::Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(has_minor(&c5, &named::complete(3).unwrap()));
        assert!(!has_minor(&c5, &k4));
    }
}
