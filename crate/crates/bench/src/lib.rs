//! Shared fixtures for the benchmark targets.

use linkless::{named, Graph};

/// The obstruction-family member benchmarks search against.
pub fn petersen() -> Graph {
    named::petersen()
}

/// The tight exception graph at n = 9.
pub fn k36() -> Graph {
    named::complete_bipartite(3, 6).expect("static construction")
}

/// A fixed, moderately irregular 12-vertex host (two linked prisms with a
/// few chords) exercising the canonical search beyond the symmetric cases.
pub fn irregular12() -> Graph {
    Graph::from_edges(
        12,
        [
            (0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
            (0, 3), (1, 4), (2, 5),
            (6, 7), (7, 8), (8, 6), (9, 10), (10, 11), (11, 9),
            (6, 9), (7, 10), (8, 11),
            (0, 6), (2, 8), (4, 10), (5, 9), (1, 11),
        ],
    )
    .expect("static construction")
}
