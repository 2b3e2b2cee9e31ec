//! Cases where a naive answer would be wrong, so the checkers cannot pass
//! by construction.

use kladder::cli::{verify_document, GraphDocument, Suite, VerifyOptions};
use kladder::corr::EdgeCorrespondences;
use kladder::iterate::{BalancedTensor, Stage};
use kladder::kgraph::samples;
use kladder::kpalg::KpAlgebra;

#[test]
fn the_flip_on_swapped_loops_is_not_a_plain_swap() {
    let y = EdgeCorrespondences::new(samples::swapped_loops());
    let af = y.named(&["a", "f"]).unwrap();
    assert_eq!(y.theta(1, 2, &af).unwrap(), y.named(&["f", "b"]).unwrap());
    assert_ne!(y.theta(1, 2, &af).unwrap(), y.named(&["f", "a"]).unwrap());
}

#[test]
fn equality_separates_a_range_projection_from_the_vertex() {
    let alg = KpAlgebra::new(samples::swapped_loops());
    let v = alg.vertex(alg.graph().vertex_id("v").unwrap());
    let saa = alg
        .mul(
            &alg.named(&["a"], &[]).unwrap(),
            &alg.named(&[], &["a"]).unwrap(),
        )
        .unwrap();
    let sbb = alg
        .mul(
            &alg.named(&["b"], &[]).unwrap(),
            &alg.named(&[], &["b"]).unwrap(),
        )
        .unwrap();
    assert!(!alg.equals(&saa, &v).unwrap());
    assert!(alg.equals(&(&saa + &sbb), &v).unwrap());
    assert!(!alg.equals(&(&saa + &saa), &v).unwrap());
}

#[test]
fn rtheta_moves_the_coefficient_through_the_flip() {
    let st = Stage::new(&samples::swapped_loops(), 1).unwrap();
    let sp = st.space();
    let g = st.graph();
    let id = |n: &str| g.edge_id(n).unwrap();
    let p = st.base().vertex(g.vertex_id("v").unwrap());
    let x = BalancedTensor::pure(vec![
        sp.pure(&[id("a")], &p).unwrap(),
        sp.pure(&[id("f")], &p).unwrap(),
    ])
    .unwrap();
    let naive = BalancedTensor::pure(vec![
        sp.pure(&[id("f")], &p).unwrap(),
        sp.pure(&[id("a")], &p).unwrap(),
    ])
    .unwrap();
    let expected = BalancedTensor::pure(vec![
        sp.pure(&[id("f")], &p).unwrap(),
        sp.pure(&[id("b")], &p).unwrap(),
    ])
    .unwrap();
    let turned = x.rtheta(sp, 0).unwrap();
    assert!(!turned.equals(sp, &naive).unwrap());
    assert!(turned.equals(sp, &expected).unwrap());
}

#[test]
fn a_swapped_square_target_is_caught() {
    let mut doc = GraphDocument::from_kgraph(&samples::two_cycles());
    let original = doc.squares[0].ep.clone();
    let other = doc
        .edges
        .iter()
        .find(|e| e.color == 1 && e.id != original)
        .unwrap()
        .id
        .clone();
    doc.squares[0].ep = other;
    let run = verify_document("tampered", &doc, Suite::All, VerifyOptions::default());
    assert!(!run.passed());
    assert_eq!(run.reports[0].suite, "gensys");
}
