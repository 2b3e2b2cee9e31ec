//! Random valid k-graphs: random colored graphs, then a random bijection on
//! every bicolored block whose two sides have equal size.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::document::{EdgeDoc, GraphDocument, Id, SquareDoc};
use super::CliError;
use crate::kgraph::KGraphError;

/// Attempts per generated graph before giving up.
pub const RETRY_BUDGET: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzShape {
    pub k: usize,
    pub vertices: usize,
    pub edges_per_color: Vec<usize>,
}

impl FuzzShape {
    /// Rejects shapes for which no source-free graph exists: every vertex
    /// needs an incoming edge of every color.
    fn precheck(&self) -> Result<(), CliError> {
        if self.k == 0 || self.vertices == 0 || self.edges_per_color.len() != self.k {
            return Err(CliError::BadArgument(format!(
                "need k >= 1, at least one vertex and one edge count per color (k = {}, {} counts)",
                self.k,
                self.edges_per_color.len()
            )));
        }
        if let Some((c, &n)) = self
            .edges_per_color
            .iter()
            .enumerate()
            .find(|(_, &n)| n < self.vertices)
        {
            return Err(CliError::GenerationExhausted(format!(
                "color {} has {n} edges for {} vertices, so some vertex receives none",
                c + 1,
                self.vertices
            )));
        }
        Ok(())
    }
}

fn letter(color: usize) -> char {
    (b'a' + ((color - 1) % 26) as u8) as char
}

fn random_edges(shape: &FuzzShape, rng: &mut ChaCha8Rng) -> Vec<EdgeDoc> {
    let vertex = |i: usize| Id(format!("v{i}"));
    let mut edges = Vec::new();
    for color in 1..=shape.k {
        let n = shape.edges_per_color[color - 1];
        let mut ranges: Vec<usize> = (0..shape.vertices).collect();
        ranges.extend((shape.vertices..n).map(|_| rng.gen_range(0..shape.vertices)));
        ranges.shuffle(rng);
        for (i, r) in ranges.into_iter().enumerate() {
            edges.push(EdgeDoc {
                id: Id(format!("{}{i}", letter(color))),
                color,
                source: vertex(rng.gen_range(0..shape.vertices)),
                range: vertex(r),
            });
        }
    }
    edges
}

type Block = BTreeMap<(Id, Id), (Vec<(usize, usize)>, Vec<(usize, usize)>)>;

/// Pairs each path `e g` (colors `i < j`) with a random path `g' e'` of the
/// same range and source; `None` if some block has unequal sides.
fn random_squares(
    edges: &[EdgeDoc],
    i: usize,
    j: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<SquareDoc>> {
    let mut blocks: Block = BTreeMap::new();
    for (a, x) in edges.iter().enumerate() {
        for (b, y) in edges.iter().enumerate() {
            if x.source != y.range {
                continue;
            }
            let key = (x.range.clone(), y.source.clone());
            if x.color == i && y.color == j {
                blocks.entry(key).or_default().0.push((a, b));
            } else if x.color == j && y.color == i {
                blocks.entry(key).or_default().1.push((a, b));
            }
        }
    }
    let mut out = Vec::new();
    for (_, (left, mut right)) in blocks {
        if left.len() != right.len() {
            return None;
        }
        right.shuffle(rng);
        for ((e, g), (gp, ep)) in left.into_iter().zip(right) {
            out.push(SquareDoc {
                e: edges[e].id.clone(),
                g: edges[g].id.clone(),
                gp: edges[gp].id.clone(),
                ep: edges[ep].id.clone(),
            });
        }
    }
    Some(out)
}

/// One valid k-graph of the given shape; three or more colors are filtered
/// by the cube condition.
pub fn generate(shape: &FuzzShape, rng: &mut ChaCha8Rng) -> Result<GraphDocument, CliError> {
    shape.precheck()?;
    let vertices: Vec<Id> = (0..shape.vertices).map(|i| Id(format!("v{i}"))).collect();
    'attempt: for _ in 0..RETRY_BUDGET {
        let edges = random_edges(shape, rng);
        let mut squares = Vec::new();
        for i in 1..=shape.k {
            for j in i + 1..=shape.k {
                match random_squares(&edges, i, j, rng) {
                    Some(s) => squares.extend(s),
                    None => continue 'attempt,
                }
            }
        }
        let doc = GraphDocument {
            k: shape.k,
            vertices: vertices.clone(),
            edges,
            squares,
        };
        match doc.build() {
            Ok(_) => return Ok(doc),
            Err(KGraphError::CubeFailure { .. }) => continue,
            Err(e) => return Err(CliError::Graph(e)),
        }
    }
    Err(CliError::GenerationExhausted(format!(
        "no valid graph after {RETRY_BUDGET} attempts"
    )))
}

/// `count` graphs drawn from one seeded stream.
pub fn generate_many(
    shape: &FuzzShape,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<GraphDocument>, CliError> {
    (0..count).map(|_| generate(shape, rng)).collect()
}
