//! Small named graphs used in examples and tests.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1)
}

/// Panics for `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1))
}

/// `K_{1,n-1}` centred on vertex 0.
pub fn star(n: usize) -> Graph {
    Graph::from_fn(n, |i, _| i == 0)
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

/// Cayley graph on `Z4 × Z4` with connection set `±(1,0), ±(0,1), ±(1,1)`.
pub fn shrikhande() -> Graph {
    let steps = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    Graph::from_fn(16, |i, j| {
        let d = ((j / 4 + 4 - i / 4) % 4, (j % 4 + 4 - i % 4) % 4);
        steps.contains(&d)
    })
}

/// `K4 □ K4`: cells of a 4×4 board, adjacent when sharing a row or column.
pub fn rook_4x4() -> Graph {
    Graph::from_fn(16, |i, j| i / 4 == j / 4 || i % 4 == j % 4)
}

/// An asymmetric graph on 8 vertices and 14 edges.
pub fn asymmetric8() -> Graph {
    Graph::from_edge_list(
        8,
        &[
            (1, 2),
            (1, 6),
            (2, 6),
            (2, 7),
            (2, 8),
            (3, 4),
            (3, 5),
            (3, 7),
            (4, 7),
            (4, 8),
            (5, 8),
            (4, 6),
            (6, 7),
            (6, 8),
        ],
    )
    .expect("valid edge list")
}
