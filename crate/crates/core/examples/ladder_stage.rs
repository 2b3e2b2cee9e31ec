//! One ladder stage of a 3-graph: a balanced tensor, its flip, and the
//! dictionary images of the edges.

use kladder::iterate::{BalancedTensor, Stage};
use kladder::kgraph::samples;
use kladder::kpalg::literal;

fn main() -> Result<(), kladder::iterate::IterateError> {
    let g = samples::three_loops();
    let stage = Stage::new(&g, 1)?;
    let sp = stage.space();
    let p = stage.base().vertex(g.vertex_id("v")?);
    let e = g.edge_id("e")?;
    let f = g.edge_id("f")?;
    let s_e = stage.base().named(&["e"], &[])?;

    let x = BalancedTensor::pure(vec![sp.pure(&[f], &s_e)?, sp.pure(&[e], &p)?])?;
    println!("x          = {}", x.render(sp));
    println!("Rtheta(x)  = {}", x.rtheta(sp, 0)?.render(sp));
    println!("merged     = {}", sp.render(&x.normalize(sp)?));
    let back = x.rtheta(sp, 0)?.rtheta(sp, 0)?;
    println!("twice      = {}", back.render(sp));
    assert!(back.equals(sp, &x)?);

    let target = stage.target().graph().clone();
    for edge in g.edges().filter(|&d| g.color(d) <= stage.new_color()) {
        println!(
            "sigma({}) = {}",
            g.edge_name(edge),
            literal::render(&target, &stage.sigma(edge)?)
        );
    }
    Ok(())
}
