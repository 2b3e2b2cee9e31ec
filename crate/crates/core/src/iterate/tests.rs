use super::*;
use crate::kgraph::samples;
use crate::kpalg::KpElement;

fn g2_stage() -> Stage {
    Stage::new(&samples::swapped_loops(), 1).unwrap()
}

fn elem(stage: &Stage, mu: &[&str], nu: &[&str]) -> KpElement {
    stage.base().named(mu, nu).unwrap()
}

fn vertex(stage: &Stage) -> KpElement {
    stage.base().vertex(stage.graph().vertex_id("v").unwrap())
}

fn pure(stage: &Stage, edges: &[&str], s: &KpElement) -> ModuleElement {
    let g = stage.graph();
    let t: Vec<_> = edges.iter().map(|n| g.edge_id(n).unwrap()).collect();
    stage.space().pure(&t, s).unwrap()
}

fn edge(stage: &Stage, name: &str) -> crate::kgraph::EdgeId {
    stage.graph().edge_id(name).unwrap()
}

#[test]
fn inner_products() {
    let st = g2_stage();
    let sp = st.space();
    let fp = pure(&st, &["f"], &vertex(&st));
    assert!(st
        .base()
        .equals(&sp.inner(&fp, &fp).unwrap(), &vertex(&st))
        .unwrap());
    let fa = pure(&st, &["f"], &elem(&st, &["a"], &[]));
    let fb = pure(&st, &["f"], &elem(&st, &["b"], &[]));
    assert!(sp.inner(&fa, &fb).unwrap().is_zero());
    let ab = sp.inner(&fa, &fb).unwrap();
    let ba = sp.inner(&fb, &fa).unwrap();
    assert_eq!(ab.star(), ba);
}

#[test]
fn right_action() {
    let st = g2_stage();
    let sp = st.space();
    let fp = pure(&st, &["f"], &vertex(&st));
    assert_eq!(sp.right_act(&fp, &vertex(&st)).unwrap(), fp);
    let fa = pure(&st, &["f"], &elem(&st, &["a"], &[]));
    assert_eq!(sp.right_act(&fp, &elem(&st, &["a"], &[])).unwrap(), fa);
}

#[test]
fn left_generators() {
    let st = g2_stage();
    let sp = st.space();
    let fp = pure(&st, &["f"], &vertex(&st));
    let a = edge(&st, "a");
    let got = sp.act(Generator::Edge(a), &fp).unwrap();
    assert_eq!(got, pure(&st, &["f"], &elem(&st, &["b"], &[])));
    let got = sp.act(Generator::EdgeStar(a), &fp).unwrap();
    assert_eq!(got, pure(&st, &["f"], &elem(&st, &[], &["b"])));
    let v = st.graph().vertex_id("v").unwrap();
    assert_eq!(sp.act(Generator::Vertex(v), &fp).unwrap(), fp);
    let f = edge(&st, "f");
    assert_eq!(
        sp.act(Generator::Edge(f), &fp),
        Err(IterateError::ColorOutOfRange(2))
    );
}

#[test]
fn cuntz_krieger_sum_acts_as_identity() {
    let st = g2_stage();
    let sp = st.space();
    let b = st.base();
    let sum = &b
        .mul(&elem(&st, &["a"], &[]), &elem(&st, &[], &["a"]))
        .unwrap()
        + &b.mul(&elem(&st, &["b"], &[]), &elem(&st, &[], &["b"]))
            .unwrap();
    for x in sp.basis(&[2, 1], 2).unwrap() {
        let y = sp.act_element(&sum, &x).unwrap();
        assert!(sp.equals(&y, &x).unwrap(), "{}", sp.render(&x));
    }
}

#[test]
fn merge_example() {
    let st = g2_stage();
    let sp = st.space();
    let x = BalancedTensor::pure(vec![
        pure(&st, &["f"], &elem(&st, &["a"], &[])),
        pure(&st, &["f"], &vertex(&st)),
    ])
    .unwrap();
    let merged = x.normalize(sp).unwrap();
    assert_eq!(merged, pure(&st, &["f", "f"], &elem(&st, &["b"], &[])));
    let back = BalancedTensor::split_all(sp, &merged).unwrap();
    assert!(sp.equals(&back.normalize(sp).unwrap(), &merged).unwrap());
}

#[test]
fn rtheta_on_single_loops() {
    let g = samples::three_loops();
    let st = Stage::new(&g, 1).unwrap();
    let sp = st.space();
    let p = st.base().vertex(g.vertex_id("v").unwrap());
    let x = BalancedTensor::pure(vec![pure(&st, &["f"], &p), pure(&st, &["g"], &p)]).unwrap();
    let y = x.rtheta(sp, 0).unwrap();
    let want = BalancedTensor::pure(vec![pure(&st, &["g"], &p), pure(&st, &["f"], &p)]).unwrap();
    assert_eq!(y.shape(), want.shape());
    assert!(y.equals(sp, &want).unwrap());
    assert!(y.rtheta(sp, 0).unwrap().equals(sp, &x).unwrap());
}

#[test]
fn star_and_edge_are_adjoint() {
    let st = Stage::new(&samples::two_cycles(), 1).unwrap();
    let sp = st.space();
    let basis = sp.basis(&[2], 2).unwrap();
    for f in st.base().graph().edges() {
        for x in &basis {
            for y in &basis {
                let l = sp
                    .inner(&sp.act(Generator::Edge(f), x).unwrap(), y)
                    .unwrap();
                let r = sp
                    .inner(x, &sp.act(Generator::EdgeStar(f), y).unwrap())
                    .unwrap();
                assert!(st.base().equals(&l, &r).unwrap());
            }
        }
    }
}

#[test]
fn sigma_dictionary() {
    let st = g2_stage();
    let tg = st.target();
    let f = edge(&st, "f");
    let a = edge(&st, "a");
    assert_eq!(st.sigma(f).unwrap(), tg.edge(f).unwrap());
    let v = st.graph().vertex_id("v").unwrap();
    assert_eq!(st.sigma0(v), tg.vertex(v));
    let prod = tg
        .mul(&st.sigma(a).unwrap(), &st.sigma(f).unwrap())
        .unwrap();
    assert!(tg
        .equals(&prod, &tg.named(&["a", "f"], &[]).unwrap())
        .unwrap());
    let g1 = Stage::new(&samples::single_square(), 1).unwrap();
    let p = g1.base().vertex(g1.graph().vertex_id("v").unwrap());
    let e = pure(&g1, &["e"], &p);
    assert_eq!(g1.t(&e).unwrap(), g1.target().named(&["e"], &[]).unwrap());
    let ab = pure(&st, &["a"], &elem(&st, &["b"], &[]));
    assert!(tg
        .equals(&st.t(&ab).unwrap(), &tg.named(&["a", "b"], &[]).unwrap())
        .unwrap());
}

#[test]
fn bad_stage() {
    let g = samples::single_square();
    assert!(matches!(
        Stage::new(&g, 2),
        Err(IterateError::BadStage { .. })
    ));
    assert_eq!(Ladder::new(&g).unwrap().stages().len(), 1);
}
