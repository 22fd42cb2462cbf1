//! Constructions for the named graphs used throughout, with fixed labelings.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transforms;

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges)
}

/// Complete multipartite graph `K_{n1,...,nk}`. Parts occupy consecutive
/// label ranges in the order given.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.contains(&0) {
        return Err(Error::EmptyPart);
    }
    let n: usize = parts.iter().sum();
    let mut part_of = vec![0usize; n];
    let mut next = 0;
    for (i, &p) in parts.iter().enumerate() {
        for _ in 0..p {
            part_of[next] = i;
            next += 1;
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
    Graph::from_edges(n, edges)
}

/// Complete bipartite graph `K_{a,b}`: part `{0..a}` against `{a..a+b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    complete_multipartite(&[a, b])
}

/// `K_{4,4}` with the edge `(0, 4)` deleted.
pub fn k44_minus() -> Graph {
    complete_bipartite(4, 4)
        .and_then(|g| g.delete_edge(0, 4))
        .expect("static construction")
}

/// `K_6` after one triangle-to-star transformation, applied to the triangle
/// `{0,1,2}`; the new degree-3 vertex gets label 6. `K_6` is
/// vertex-transitive, so the choice of triangle does not matter up to
/// isomorphism.
pub fn k6_delta_y() -> Graph {
    let k6 = complete(6).expect("static construction");
    transforms::delta_y(&k6, (0, 1, 2)).expect("triangle of K6")
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i - (5+i)`, inner
/// pentagram `(5+i) - (5 + (i+2 mod 5))`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, 5 + i));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("static construction")
}

/// Parses a graph name: `K<n>`, `K_{n1,...,nk}` (braces and underscore
/// optional), `K44_minus`, `K6_deltaY`, or `petersen_graph`.
pub fn by_name(name: &str) -> Result<Graph> {
    let trimmed = name.trim();
    match trimmed.to_ascii_lowercase().as_str() {
        "petersen" | "petersen_graph" => return Ok(petersen()),
        "k44_minus" => return Ok(k44_minus()),
        "k6_deltay" => return Ok(k6_delta_y()),
        _ => {}
    }
    let rest = trimmed
        .strip_prefix('K')
        .or_else(|| trimmed.strip_prefix('k'))
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    let rest = rest
        .strip_prefix('{')
        .map(|r| r.strip_suffix('}').ok_or_else(|| Error::UnknownName(name.to_string())))
        .transpose()?
        .unwrap_or(rest);
    let parts: Vec<usize> = rest
        .split(',')
        .map(|tok| tok.trim().parse::<usize>().map_err(|_| Error::UnknownName(name.to_string())))
        .collect::<Result<_>>()?;
    match parts.as_slice() {
        [] => Err(Error::UnknownName(name.to_string())),
        [n] => complete(*n),
        _ => complete_multipartite(&parts),
    }
}
