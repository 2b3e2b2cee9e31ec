use super::element::{CorrElement, EdgeCorrespondences, VertexFn};
use crate::kgraph::KGraph;
use crate::report::{Recorder, VerificationReport};

fn tuple_label(g: &KGraph, x: &CorrElement) -> String {
    x.render(g)
}

/// Checks that the edge correspondences with their flips form a generating
/// system: `theta_ii = id`, symmetry, the hexagon on every basis triple, the
/// flips being correspondence maps, and covariance of tensor products.
pub fn check_generating_system(graph: &KGraph, timed: bool) -> VerificationReport {
    let sys = EdgeCorrespondences::new(graph.clone());
    let g = sys.graph();
    let colors = g.colors().to_vec();
    let mut rec = Recorder::new("gensys");

    for &i in &colors {
        for &j in &colors {
            for t in sys.basis(&[i, j]).expect("active colors") {
                let x = sys.tensor(&t).expect("basis tuple");
                let once = sys.flip_at(&x, 0).expect("two letters");
                if i == j {
                    rec.check(once == x, || {
                        (tuple_label(g, &x), once.render(g), x.render(g))
                    });
                }
                let back = sys.flip_at(&once, 0).expect("two letters");
                rec.check(back == x, || {
                    (
                        format!("theta_{j}{i} theta_{i}{j} on {}", tuple_label(g, &x)),
                        back.render(g),
                        x.render(g),
                    )
                });
            }
            check_correspondence_map(&sys, i, j, &mut rec);
            check_compact(&sys, i, j, &mut rec);
        }
    }

    for &i in &colors {
        for &j in &colors {
            for &l in &colors {
                for t in sys.basis(&[i, j, l]).expect("active colors") {
                    let x = sys.tensor(&t).expect("basis tuple");
                    let flip =
                        |y: &CorrElement, p: usize| sys.flip_at(y, p).expect("three letters");
                    let lhs = flip(&flip(&flip(&x, 0), 1), 0);
                    let rhs = flip(&flip(&flip(&x, 1), 0), 1);
                    rec.check(lhs == rhs, || {
                        (
                            format!("hexagon ({i},{j},{l}) on {}", tuple_label(g, &x)),
                            lhs.render(g),
                            rhs.render(g),
                        )
                    });
                }
            }
        }
    }
    rec.finish(timed)
}

/// Inner products and both vertex actions commute with `theta_ij`.
fn check_correspondence_map(sys: &EdgeCorrespondences, i: usize, j: usize, rec: &mut Recorder) {
    let g = sys.graph();
    let basis: Vec<CorrElement> = sys
        .basis(&[i, j])
        .expect("active colors")
        .iter()
        .map(|t| sys.tensor(t).expect("basis tuple"))
        .collect();
    let theta = |x: &CorrElement| sys.flip_at(x, 0).expect("two letters");
    for x in &basis {
        for y in &basis {
            let before = sys.inner(x, y).expect("same word");
            let after = sys.inner(&theta(x), &theta(y)).expect("same word");
            rec.check(before == after, || {
                (
                    format!(
                        "<theta x, theta y> with x = {}, y = {}",
                        x.render(g),
                        y.render(g)
                    ),
                    after.render(g),
                    before.render(g),
                )
            });
        }
        for v in g.vertices() {
            let a = VertexFn::delta(v);
            let left = theta(&sys.left_action(&a, x));
            let left2 = sys.left_action(&a, &theta(x));
            rec.check(left == left2, || {
                (
                    format!("theta(δ[{}] · {})", g.vertex_name(v), x.render(g)),
                    left.render(g),
                    left2.render(g),
                )
            });
            let right = theta(&sys.right_action(x, &a));
            let right2 = sys.right_action(&theta(x), &a);
            rec.check(right == right2, || {
                (
                    format!("theta({} · δ[{}])", x.render(g), g.vertex_name(v)),
                    right.render(g),
                    right2.render(g),
                )
            });
        }
    }
}

/// `phi_i(a) ⊗ 1_{Y_j}` written as a rank-one sum acts as `a` on `Y_i ⊗ Y_j`,
/// and the covariance sum over `Y_i ⊗ Y_j` itself does too.
fn check_compact(sys: &EdgeCorrespondences, i: usize, j: usize, rec: &mut Recorder) {
    let g = sys.graph();
    let tuples = sys.basis(&[i, j]).expect("active colors");
    for v in g.vertices() {
        let a = VertexFn::delta(v);
        let lifted = sys
            .tensor_identity(&sys.phi(&a, i).expect("active color"), &[j])
            .expect("active color");
        let mut direct = super::element::RankOneSum::default();
        for t in tuples.iter().filter(|t| g.range(t[0]) == v) {
            let x = sys.tensor(t).expect("basis tuple");
            direct
                .terms
                .push((x.clone(), x, crate::kpalg::scalar::one()));
        }
        for t in &tuples {
            let z = sys.tensor(t).expect("basis tuple");
            let expected = sys.left_action(&a, &z);
            for (name, op) in [("phi ⊗ 1", &lifted), ("phi on tensor", &direct)] {
                let got = sys.apply(op, &z).expect("matching words");
                rec.check(got == expected, || {
                    (
                        format!("{name} of δ[{}] on {}", g.vertex_name(v), z.render(g)),
                        got.render(g),
                        expected.render(g),
                    )
                });
            }
        }
    }
}
