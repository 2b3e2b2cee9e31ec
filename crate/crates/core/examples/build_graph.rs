//! Builds a 2-graph from tables and shows what validation rejects.

use kladder::kgraph::samples::from_tables;

fn main() {
    let edges = [("a", 1, "v", "v"), ("b", 1, "v", "v"), ("f", 2, "v", "v")];
    let g = from_tables(
        2,
        &["v"],
        &edges,
        &[("a", "f", "f", "b"), ("b", "f", "f", "a")],
    )
    .expect("a valid 2-graph");
    for sq in g.squares() {
        println!(
            "{} {} = {} {}",
            g.edge_name(sq.e),
            g.edge_name(sq.g),
            g.edge_name(sq.gp),
            g.edge_name(sq.ep)
        );
    }

    let broken = [
        ("missing", vec![("a", "f", "f", "b")]),
        (
            "duplicated",
            vec![
                ("a", "f", "f", "b"),
                ("a", "f", "f", "b"),
                ("b", "f", "f", "a"),
            ],
        ),
        (
            "not a bijection",
            vec![("a", "f", "f", "b"), ("b", "f", "f", "b")],
        ),
    ];
    for (label, squares) in broken {
        let err = from_tables(2, &["v"], &edges, &squares).unwrap_err();
        println!("{label}: {} ({err})", err.kind());
    }
}
