//! Draws random valid 2- and 3-graphs from a fixed seed.

use kladder::cli::fuzz::{generate_many, FuzzShape};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), kladder::cli::CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for shape in [
        FuzzShape {
            k: 2,
            vertices: 2,
            edges_per_color: vec![3, 3],
        },
        FuzzShape {
            k: 3,
            vertices: 1,
            edges_per_color: vec![2, 1, 2],
        },
    ] {
        for doc in generate_many(&shape, 3, &mut rng)? {
            let g = doc.build()?;
            println!(
                "k={} vertices={} edges={} squares={}",
                g.k(),
                doc.vertices.len(),
                doc.edges.len(),
                doc.squares.len()
            );
        }
    }
    Ok(())
}
