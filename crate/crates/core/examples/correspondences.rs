//! The edge correspondences of a 3-graph: flips, inner products and the
//! hexagon on one basis triple.

use kladder::corr::{EdgeCorrespondences, VertexFn};
use kladder::kgraph::samples;

fn main() -> Result<(), kladder::corr::CorrError> {
    let y = EdgeCorrespondences::new(samples::cyclic_three());
    let g = y.graph().clone();
    let triple = y.basis(&[1, 2, 3])?.remove(0);
    let x = y.tensor(&triple)?;
    println!("x = {}", x.render(&g));
    println!("<x, x> = {}", y.inner(&x, &x)?.render(&g));

    let route = |x, order: [usize; 3]| order.iter().try_fold(x, |acc, &pos| y.flip_at(&acc, pos));
    let left = route(x.clone(), [0, 1, 0])?;
    let right = route(x.clone(), [1, 0, 1])?;
    println!("flips 0,1,0: {}", left.render(&g));
    println!("flips 1,0,1: {}", right.render(&g));
    assert_eq!(left, right);

    let v = g.vertices().next().expect("a vertex");
    let moved = y.left_action(&VertexFn::delta(v), &x);
    println!("delta[{}] . x = {}", g.vertex_name(v), moved.render(&g));
    Ok(())
}
