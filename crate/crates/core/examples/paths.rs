//! Counts paths by degree and factorizes one along a chosen split.

use kladder::kgraph::{samples, MultiDegree};

fn main() {
    let g = samples::two_cycles();
    for d in [[1, 0], [0, 1], [1, 1], [2, 1]] {
        let n = MultiDegree::new(d.to_vec());
        let paths = g.paths_of_degree(&n, None);
        let labels: Vec<String> = paths.iter().map(|p| g.path_label(p)).collect();
        println!("{n}: {} paths {labels:?}", paths.len());
    }

    let p = &g.paths_of_degree(&MultiDegree::new(vec![1, 1]), None)[0];
    let (mu, nu) = g
        .factorize(
            p,
            &MultiDegree::new(vec![0, 1]),
            &MultiDegree::new(vec![1, 0]),
        )
        .expect("degrees add up");
    println!(
        "{} = {} . {}",
        g.path_label(p),
        g.path_label(&mu),
        g.path_label(&nu)
    );
    assert_eq!(g.concat(&mu, &nu).as_ref(), Some(p));
}
