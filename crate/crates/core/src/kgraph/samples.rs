//! Small hand-built k-graphs used by the examples, tests and corpus.

use super::{build_kgraph, ColoredGraph, KGraph, KGraphError, SquareSet};

/// Builds a k-graph from compact tables.
///
/// `edges` are `(name, color, source, range)`; `squares` are `(e, g, g', e')`
/// meaning `e g = g' e'`.
pub fn from_tables(
    k: usize,
    vertices: &[&str],
    edges: &[(&str, usize, &str, &str)],
    squares: &[(&str, &str, &str, &str)],
) -> Result<KGraph, KGraphError> {
    let mut graph = ColoredGraph::new(k, vertices.iter().copied())?;
    for &(name, color, source, range) in edges {
        graph.add_edge(name, color, source, range)?;
    }
    let mut set = SquareSet::new();
    for &(e, g, gp, ep) in squares {
        set.add_named(&graph, e, g, gp, ep)?;
    }
    build_kgraph(graph, set)
}

/// One vertex, one loop of each of two colors (`G1`).
pub fn single_square() -> KGraph {
    from_tables(
        2,
        &["v"],
        &[("e", 1, "v", "v"), ("f", 2, "v", "v")],
        &[("e", "f", "f", "e")],
    )
    .expect("valid")
}

/// One vertex, color-1 loops `a, b`, color-2 loop `f`; the flip swaps `a`
/// and `b` (`G2`).
pub fn swapped_loops() -> KGraph {
    from_tables(
        2,
        &["v"],
        &[("a", 1, "v", "v"), ("b", 1, "v", "v"), ("f", 2, "v", "v")],
        &[("a", "f", "f", "b"), ("b", "f", "f", "a")],
    )
    .expect("valid")
}

/// One vertex, one loop per color, three colors (`G3`).
pub fn three_loops() -> KGraph {
    from_tables(
        3,
        &["v"],
        &[("e", 1, "v", "v"), ("f", 2, "v", "v"), ("g", 3, "v", "v")],
        &[
            ("e", "f", "f", "e"),
            ("e", "g", "g", "e"),
            ("f", "g", "g", "f"),
        ],
    )
    .expect("valid")
}

/// Two vertices `u, w` joined by a 2-cycle in each of two colors (`G4`).
pub fn two_cycles() -> KGraph {
    from_tables(
        2,
        &["u", "w"],
        &[
            ("a1", 1, "u", "w"),
            ("a2", 1, "w", "u"),
            ("b1", 2, "u", "w"),
            ("b2", 2, "w", "u"),
        ],
        &[("a1", "b2", "b1", "a2"), ("a2", "b1", "b2", "a1")],
    )
    .expect("valid")
}

/// One vertex; three color-1 loops permuted cyclically by the flips with
/// the color-2 and color-3 loops, which commute with each other.
pub fn cyclic_three() -> KGraph {
    // a_i b = b a_{i+1}, a_i c = c a_{i+2}
    from_tables(
        3,
        &["v"],
        &[
            ("a1", 1, "v", "v"),
            ("a2", 1, "v", "v"),
            ("a3", 1, "v", "v"),
            ("b", 2, "v", "v"),
            ("c", 3, "v", "v"),
        ],
        &[
            ("a1", "b", "b", "a2"),
            ("a2", "b", "b", "a3"),
            ("a3", "b", "b", "a1"),
            ("a1", "c", "c", "a3"),
            ("a2", "c", "c", "a1"),
            ("a3", "c", "c", "a2"),
            ("b", "c", "c", "b"),
        ],
    )
    .expect("valid")
}

/// Two vertices swapped by color 1, with a loop of colors 2 and 3 at each.
pub fn loops_over_cycle() -> KGraph {
    from_tables(
        3,
        &["u", "w"],
        &[
            ("x", 1, "u", "w"),
            ("y", 1, "w", "u"),
            ("bu", 2, "u", "u"),
            ("bw", 2, "w", "w"),
            ("cu", 3, "u", "u"),
            ("cw", 3, "w", "w"),
        ],
        &[
            ("x", "bu", "bw", "x"),
            ("y", "bw", "bu", "y"),
            ("x", "cu", "cw", "x"),
            ("y", "cw", "cu", "y"),
            ("bu", "cu", "cu", "bu"),
            ("bw", "cw", "cw", "bw"),
        ],
    )
    .expect("valid")
}

/// One vertex with two loops per color and a shear-type flip between
/// colors 1 and 2: `x_a y_b = y_a x_{a+b}` (indices mod 2).
pub fn sheared_loops() -> KGraph {
    let mut squares = Vec::new();
    let xs = ["x0", "x1"];
    let ys = ["y0", "y1"];
    let zs = ["z0", "z1"];
    for a in 0..2 {
        for b in 0..2 {
            squares.push((xs[a], ys[b], ys[a], xs[(a + b) % 2]));
            squares.push((xs[a], zs[b], zs[b], xs[a]));
            squares.push((ys[a], zs[b], zs[b], ys[a]));
        }
    }
    from_tables(
        3,
        &["v"],
        &[
            ("x0", 1, "v", "v"),
            ("x1", 1, "v", "v"),
            ("y0", 2, "v", "v"),
            ("y1", 2, "v", "v"),
            ("z0", 3, "v", "v"),
            ("z1", 3, "v", "v"),
        ],
        &squares,
    )
    .expect("valid")
}

/// Every curated graph with its corpus name.
pub fn all() -> Vec<(&'static str, KGraph)> {
    vec![
        ("g1", single_square()),
        ("g2", swapped_loops()),
        ("g3", three_loops()),
        ("g4", two_cycles()),
        ("c1", cyclic_three()),
        ("c2", loops_over_cycle()),
        ("c3", sheared_loops()),
    ]
}
