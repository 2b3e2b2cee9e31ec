//! Arithmetic in the Kumjian-Pask algebra of a 2-graph, in the text form.

use kladder::kgraph::samples;
use kladder::kpalg::{literal, KpAlgebra};

fn main() -> Result<(), kladder::kpalg::KpError> {
    let alg = KpAlgebra::new(samples::swapped_loops());
    let g = alg.graph();
    let x = literal::parse(&alg, "s[a] s[a]* + s[b] s[b]*")?;
    let v = literal::parse(&alg, "p[v]")?;
    println!(
        "{} == {}: {}",
        literal::render(g, &x),
        literal::render(g, &v),
        alg.equals(&x, &v)?
    );

    let y = literal::parse(&alg, "2 * s[a,f] s[f]* - 1/2 * s[b]*")?;
    let product = alg.mul(&y, &y.star())?;
    println!("y y* = {}", literal::render(g, &product));
    println!("collapsed: {}", literal::render(g, &alg.collapse(&product)));
    for grade in product.grades() {
        println!(
            "  grade {grade}: {}",
            literal::render(g, &product.component(&grade))
        );
    }

    let span = [x.clone(), v.clone(), y.clone(), &x + &y];
    println!("rank of span: {}", alg.rank(&span)?);
    Ok(())
}
