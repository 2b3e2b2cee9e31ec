use super::fuzz::FuzzShape;
use super::*;
use crate::kgraph::samples;

/// `|Lambda^n|` as the entry sum of a product of per-color adjacency
/// matrices, colors taken in ascending order.
fn matrix_count(doc: &GraphDocument, degree: &[u32]) -> usize {
    let n = doc.vertices.len();
    let index = |id: &Id| doc.vertices.iter().position(|v| v == id).unwrap();
    let mut acc = vec![vec![0usize; n]; n];
    for (i, row) in acc.iter_mut().enumerate() {
        row[i] = 1;
    }
    for (c, &times) in degree.iter().enumerate() {
        let mut adj = vec![vec![0usize; n]; n];
        for e in doc.edges.iter().filter(|e| e.color == c + 1) {
            adj[index(&e.range)][index(&e.source)] += 1;
        }
        for _ in 0..times {
            acc = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|l| acc[i][l] * adj[l][j]).sum())
                        .collect()
                })
                .collect();
        }
    }
    acc.iter().flatten().sum()
}

#[test]
fn counts_match_the_matrix_oracle() {
    let cases = [
        (samples::swapped_loops(), vec![2, 1]),
        (samples::single_square(), vec![3, 3]),
        (samples::two_cycles(), vec![1, 1]),
        (samples::three_loops(), vec![1, 2, 1]),
        (samples::cyclic_three(), vec![2, 0, 1]),
    ];
    let mut frozen = Vec::new();
    for (g, degree) in cases {
        let doc = GraphDocument::from_kgraph(&g);
        let expected = matrix_count(&doc, &degree);
        let got = count_paths(&g, &MultiDegree::new(degree));
        assert_eq!(got.total, expected);
        assert_eq!(got.by_vertex.values().sum::<usize>(), got.total);
        frozen.push(got.total);
    }
    assert_eq!(frozen[..3], [4, 1, 2]);
}

#[test]
fn degree_parsing_checks_the_rank() {
    assert_eq!(
        parse_degree("2, 1", 2).unwrap(),
        MultiDegree::new(vec![2, 1])
    );
    assert!(matches!(
        parse_degree("2", 2),
        Err(CliError::BadArgument(_))
    ));
    assert!(matches!(
        parse_degree("x,1", 2),
        Err(CliError::BadArgument(_))
    ));
}

#[test]
fn documents_accept_integer_ids() {
    let text =
        r#"{"k":1,"vertices":[0],"edges":[{"id":7,"color":1,"source":0,"range":0}],"squares":[]}"#;
    let g = GraphDocument::from_json(text).unwrap().build().unwrap();
    assert_eq!(g.edge_name(g.edge_id("7").unwrap()), "7");
}

#[test]
fn unknown_fields_are_parse_errors() {
    let text = r#"{"k":1,"vertices":[],"edges":[],"squares":[],"extra":1}"#;
    let err = GraphDocument::from_json(text).unwrap_err();
    assert_eq!(err.exit_code(), EXIT_INPUT);
}

#[test]
fn invalid_documents_fail_gensys_with_a_fragment() {
    let mut doc = GraphDocument::from_kgraph(&samples::swapped_loops());
    doc.squares[1].ep = Id::from("b");
    let run = verify_document("bad", &doc, Suite::All, VerifyOptions::default());
    assert!(!run.passed());
    assert_eq!(run.reports.len(), 1);
    let failure = &run.reports[0].failures[0];
    assert_eq!(run.reports[0].suite, "gensys");
    assert_eq!(failure.lhs, "NotBijective");
    let fragment = GraphDocument::from_json(&failure.input).unwrap();
    assert_eq!(fragment.build().unwrap_err().kind(), "NotBijective");
}

#[test]
fn hexagon_on_two_colors_checks_symmetry_only() {
    let run = verify_graph(
        "g2",
        &samples::swapped_loops(),
        Suite::Hexagon,
        VerifyOptions::default(),
    );
    assert!(run.passed());
    assert!(run.reports[0].cases > 0);
}

#[test]
fn fuzzed_graphs_are_valid_and_reproducible() {
    let shape = FuzzShape {
        k: 2,
        vertices: 1,
        edges_per_color: vec![2, 2],
    };
    let opts = VerifyOptions::default();
    let first = fuzz_runs(&shape, 1, 7, opts).unwrap();
    assert!(first[0].run.passed());
    assert_eq!(first, fuzz_runs(&shape, 1, 7, opts).unwrap());
    assert!(fuzz_runs(&shape, 0, 7, opts).unwrap().is_empty());
}

#[test]
fn too_few_edges_exhaust_generation_up_front() {
    let shape = FuzzShape {
        k: 2,
        vertices: 3,
        edges_per_color: vec![2, 3],
    };
    let err = fuzz_runs(&shape, 1, 7, VerifyOptions::default()).unwrap_err();
    assert!(matches!(err, CliError::GenerationExhausted(_)));
}

#[test]
fn three_color_fuzzing_respects_the_cube_condition() {
    let shape = FuzzShape {
        k: 3,
        vertices: 1,
        edges_per_color: vec![2, 1, 2],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for doc in fuzz::generate_many(&shape, 5, &mut rng).unwrap() {
        assert_eq!(doc.build().unwrap().k(), 3);
    }
}

#[test]
fn census_rejects_a_bad_stage() {
    let err = census_table(&samples::single_square(), 2, 1).unwrap_err();
    assert!(matches!(
        err,
        CliError::Iterate(IterateError::BadStage { .. })
    ));
}
