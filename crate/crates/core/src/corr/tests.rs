use super::fiber::{check_factorization, fiber, multiply};
use super::*;
use crate::kgraph::{samples, MultiDegree};

fn delta(g: &crate::kgraph::KGraph, v: &str) -> VertexFn {
    VertexFn::delta(g.vertex_id(v).unwrap())
}

#[test]
fn inner_products() {
    let sys = EdgeCorrespondences::new(samples::single_square());
    let g = sys.graph().clone();
    let e = sys.named(&["e"]).unwrap();
    assert_eq!(sys.inner(&e, &e).unwrap(), delta(&g, "v"));

    let sys = EdgeCorrespondences::new(samples::swapped_loops());
    let g = sys.graph().clone();
    let a = sys.named(&["a"]).unwrap();
    let b = sys.named(&["b"]).unwrap();
    assert!(sys.inner(&a, &b).unwrap().is_zero());
    let af = sys.named(&["a", "f"]).unwrap();
    assert_eq!(sys.inner(&af, &af).unwrap(), delta(&g, "v"));
    let f = sys.named(&["f"]).unwrap();
    assert_eq!(sys.inner(&a, &f), Err(CorrError::Mismatch));
}

#[test]
fn vertex_actions() {
    let sys = EdgeCorrespondences::new(samples::single_square());
    let g = sys.graph().clone();
    let e = sys.named(&["e"]).unwrap();
    assert_eq!(sys.left_action(&delta(&g, "v"), &e), e);

    let sys = EdgeCorrespondences::new(samples::two_cycles());
    let g = sys.graph().clone();
    let a1 = sys.named(&["a1"]).unwrap();
    // r(a1) = w
    assert!(sys.left_action(&delta(&g, "u"), &a1).is_zero());
    for v in ["u", "w"] {
        for w in ["u", "w"] {
            let x = sys.left_action(&delta(&g, v), &a1);
            let lhs = sys.right_action(&x, &delta(&g, w));
            let y = sys.right_action(&a1, &delta(&g, w));
            assert_eq!(lhs, sys.left_action(&delta(&g, v), &y));
        }
    }
}

#[test]
fn non_composable_tensor_is_zero() {
    let sys = EdgeCorrespondences::new(samples::two_cycles());
    assert!(sys.named(&["a1", "b1"]).unwrap().is_zero());
    assert!(!sys.named(&["a1", "b2"]).unwrap().is_zero());
}

#[test]
fn phi_examples() {
    let sys = EdgeCorrespondences::new(samples::single_square());
    let g = sys.graph().clone();
    let op = sys.phi(&delta(&g, "v"), 1).unwrap();
    assert_eq!(op.terms.len(), 1);
    assert_eq!(op.terms[0].0, sys.named(&["e"]).unwrap());

    let sys = EdgeCorrespondences::new(samples::swapped_loops());
    let g = sys.graph().clone();
    let op = sys.phi(&delta(&g, "v"), 1).unwrap();
    assert_eq!(op.terms.len(), 2);
    let lifted = sys.tensor_identity(&op, &[2]).unwrap();
    let af = sys.named(&["a", "f"]).unwrap();
    assert_eq!(sys.apply(&lifted, &af).unwrap(), af);
}

#[test]
fn theta_examples() {
    let sys = EdgeCorrespondences::new(samples::swapped_loops());
    let af = sys.named(&["a", "f"]).unwrap();
    assert_eq!(
        sys.theta(1, 2, &af).unwrap(),
        sys.named(&["f", "b"]).unwrap()
    );
    let ab = sys.named(&["a", "b"]).unwrap();
    assert_eq!(sys.theta(1, 1, &ab).unwrap(), ab);
    let back = sys.theta(2, 1, &sys.theta(1, 2, &af).unwrap()).unwrap();
    assert_eq!(back, af);
}

#[test]
fn generating_system_passes_on_samples() {
    for (name, g) in samples::all() {
        let report = check_generating_system(&g, false);
        assert!(report.passed(), "{name}: {:?}", report.failures);
        assert!(report.cases > 0);
    }
}

#[test]
fn fibers() {
    let g1 = samples::single_square();
    assert_eq!(fiber(&g1, &MultiDegree::new(vec![1, 1])).basis.len(), 1);
    let g2 = samples::swapped_loops();
    assert_eq!(fiber(&g2, &MultiDegree::new(vec![2, 1])).basis.len(), 4);
    let x10 = fiber(&g2, &MultiDegree::new(vec![1, 0])).basis;
    let x01 = fiber(&g2, &MultiDegree::new(vec![0, 1])).basis;
    let mut images: Vec<_> = x10
        .iter()
        .flat_map(|m| x01.iter().filter_map(|n| multiply(&g2, m, n)))
        .collect();
    images.sort();
    images.dedup();
    assert_eq!(
        images.len(),
        fiber(&g2, &MultiDegree::new(vec![1, 1])).basis.len()
    );
}

#[test]
fn fiber_products_associate() {
    let g = samples::sheared_loops();
    let one = |c| fiber(&g, &MultiDegree::unit(3, c)).basis;
    for a in one(3) {
        for b in one(1) {
            for c in one(2) {
                let left = multiply(&g, &multiply(&g, &a, &b).unwrap(), &c);
                let right = multiply(&g, &a, &multiply(&g, &b, &c).unwrap());
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn factorization_suite_passes() {
    for (name, g) in samples::all() {
        let report = check_factorization(&g, 4, false);
        assert!(report.passed(), "{name}: {:?}", report.failures);
    }
}
