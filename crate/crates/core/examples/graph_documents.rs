//! Round-trips the curated graphs through the JSON document format.
//!
//! With a directory argument, writes one `<name>.json` per graph there.

use std::path::PathBuf;

use kladder::cli::GraphDocument;
use kladder::kgraph::samples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out_dir = std::env::args().nth(1).map(PathBuf::from);
    for (name, graph) in samples::all() {
        let doc = GraphDocument::from_kgraph(&graph);
        let text = doc.to_json();
        let back = GraphDocument::from_json(&text)?.build()?;
        assert_eq!(back.squares(), graph.squares());
        match &out_dir {
            Some(dir) => std::fs::write(dir.join(format!("{name}.json")), text + "\n")?,
            None => println!(
                "{name}: {} edges, {} squares",
                doc.edges.len(),
                doc.squares.len()
            ),
        }
    }
    Ok(())
}
