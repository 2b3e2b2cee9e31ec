//! Graded ranks of the dictionary span against the direct span.

use kladder::iterate::census::census;
use kladder::iterate::Stage;
use kladder::kgraph::{samples, Grade};

fn main() -> Result<(), kladder::iterate::IterateError> {
    let stage = Stage::new(&samples::swapped_loops(), 1)?;
    println!("{:<10} {:>10} {:>6}", "grade", "dictionary", "direct");
    for row in census(&stage, 2)? {
        println!(
            "{:<10} {:>10} {:>6}",
            Grade(row.grade.clone()).to_string(),
            row.dictionary,
            row.direct
        );
        assert!(row.agrees());
    }
    Ok(())
}
