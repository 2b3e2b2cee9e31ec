use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::KGraphError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    /// 1-based color.
    pub color: usize,
    pub source: VertexId,
    pub range: VertexId,
}

/// A finite k-colored directed graph. Colors are `1..=k`.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    k: usize,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
}

impl ColoredGraph {
    pub fn new<I, S>(k: usize, vertices: I) -> Result<Self, KGraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if k == 0 {
            return Err(KGraphError::BadColor { color: 0, k });
        }
        let mut graph = ColoredGraph {
            k,
            vertices: Vec::new(),
            edges: Vec::new(),
            vertex_index: HashMap::new(),
            edge_index: HashMap::new(),
        };
        for name in vertices {
            let name = name.into();
            if graph.vertex_index.contains_key(&name) {
                return Err(KGraphError::DuplicateVertex(name));
            }
            let id = VertexId(graph.vertices.len() as u32);
            graph.vertex_index.insert(name.clone(), id);
            graph.vertices.push(name);
        }
        Ok(graph)
    }

    /// Adds an edge `source -> range` of the given 1-based color.
    pub fn add_edge(
        &mut self,
        name: impl Into<String>,
        color: usize,
        source: &str,
        range: &str,
    ) -> Result<EdgeId, KGraphError> {
        let name = name.into();
        if color == 0 || color > self.k {
            return Err(KGraphError::BadColor { color, k: self.k });
        }
        if self.edge_index.contains_key(&name) {
            return Err(KGraphError::DuplicateEdge(name));
        }
        let source = self.vertex_id(source)?;
        let range = self.vertex_id(range)?;
        let id = EdgeId(self.edges.len() as u32);
        self.edge_index.insert(name.clone(), id);
        self.edges.push(Edge {
            name,
            color,
            source,
            range,
        });
        Ok(id)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.index()]
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, KGraphError> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| KGraphError::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId, KGraphError> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| KGraphError::UnknownEdge(name.to_string()))
    }
}

/// One factorization square `e g = g' e'` (traverse `g` then `e`).
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub e: EdgeId,
    pub g: EdgeId,
    pub gp: EdgeId,
    pub ep: EdgeId,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SquareSet {
    pub squares: Vec<Square>,
}

impl SquareSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, square: Square) {
        self.squares.push(square);
    }

    /// Adds the square `e g = gp ep` by edge names.
    pub fn add_named(
        &mut self,
        graph: &ColoredGraph,
        e: &str,
        g: &str,
        gp: &str,
        ep: &str,
    ) -> Result<(), KGraphError> {
        self.squares.push(Square {
            e: graph.edge_id(e)?,
            g: graph.edge_id(g)?,
            gp: graph.edge_id(gp)?,
            ep: graph.edge_id(ep)?,
        });
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }
}

/// Compact identity of a (restricted) k-graph: which validated graph, which colors.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphTag {
    uid: u64,
    colors: u64,
}

impl GraphTag {
    /// True when `self` names a restriction of the graph named by `other`.
    pub fn is_within(&self, other: &GraphTag) -> bool {
        self.uid == other.uid && self.colors & !other.colors == 0
    }
}

static NEXT_UID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug)]
struct Base {
    graph: ColoredGraph,
    squares: SquareSet,
    /// `(x, y) -> (y', x')` for every composable pair of distinct colors.
    flips: HashMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    /// `in_edges[v][c - 1]`: edges of color `c` with range `v`.
    in_edges: Vec<Vec<Vec<EdgeId>>>,
    uid: u64,
}

/// A validated finite row-finite source-free k-graph, possibly restricted to
/// a subset of its colors.
///
/// Restriction keeps edge ids and the ambient `k`, so paths of a restriction
/// are literally paths of the parent graph with degrees supported on the
/// active colors.
#[derive(Clone, Debug)]
pub struct KGraph {
    base: Arc<Base>,
    colors: Vec<usize>,
}

impl PartialEq for KGraph {
    fn eq(&self, other: &Self) -> bool {
        self.base.uid == other.base.uid && self.colors == other.colors
    }
}

impl Eq for KGraph {}

/// Validates `graph` and `squares` against the k-graph axioms and returns the
/// validated graph.
pub fn build_kgraph(graph: ColoredGraph, squares: SquareSet) -> Result<KGraph, KGraphError> {
    let colors: Vec<usize> = (1..=graph.k()).collect();
    let (flips, in_edges) = validate(&graph, &squares, &colors)?;
    let base = Base {
        graph,
        squares,
        flips,
        in_edges,
        uid: NEXT_UID.fetch_add(1, Ordering::Relaxed),
    };
    Ok(KGraph {
        base: Arc::new(base),
        colors,
    })
}

type FlipTable = HashMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>;

/// Per vertex, per color (zero-based), the edges with that range.
type InEdges = Vec<Vec<Vec<EdgeId>>>;

fn validate(
    graph: &ColoredGraph,
    squares: &SquareSet,
    colors: &[usize],
) -> Result<(FlipTable, InEdges), KGraphError> {
    let k = graph.k();
    let active = |c: usize| colors.contains(&c);
    let name = |e: EdgeId| graph.edge(e).name.clone();

    let mut in_edges = vec![vec![Vec::new(); k]; graph.vertex_count()];
    for e in graph.edge_ids() {
        let edge = graph.edge(e);
        if active(edge.color) {
            in_edges[edge.range.index()][edge.color - 1].push(e);
        }
    }
    for v in graph.vertex_ids() {
        for &c in colors {
            if in_edges[v.index()][c - 1].is_empty() {
                return Err(KGraphError::SourceViolation {
                    vertex: graph.vertex_name(v).to_string(),
                    color: c,
                });
            }
        }
    }

    // Normalize every relevant square so that color(e) < color(g).
    let mut forward: BTreeMap<(EdgeId, EdgeId), (EdgeId, EdgeId)> = BTreeMap::new();
    for sq in &squares.squares {
        let (ce, cg) = (graph.edge(sq.e).color, graph.edge(sq.g).color);
        if !(active(ce) && active(cg)) {
            continue;
        }
        let sq = if ce > cg {
            Square {
                e: sq.gp,
                g: sq.ep,
                gp: sq.e,
                ep: sq.g,
            }
        } else {
            *sq
        };
        let (e, g, gp, ep) = (
            graph.edge(sq.e),
            graph.edge(sq.g),
            graph.edge(sq.gp),
            graph.edge(sq.ep),
        );
        let describe = || format!("{} {} = {} {}", e.name, g.name, gp.name, ep.name);
        if e.color == g.color {
            return Err(KGraphError::InvalidSquare(format!(
                "{}: both sides use color {}",
                describe(),
                e.color
            )));
        }
        if gp.color != g.color || ep.color != e.color {
            return Err(KGraphError::InvalidSquare(format!(
                "{}: colors do not match",
                describe()
            )));
        }
        if e.source != g.range
            || gp.source != ep.range
            || e.range != gp.range
            || g.source != ep.source
        {
            return Err(KGraphError::InvalidSquare(format!(
                "{}: not composable with matching endpoints",
                describe()
            )));
        }
        if forward.insert((sq.e, sq.g), (sq.gp, sq.ep)).is_some() {
            return Err(KGraphError::AmbiguousSquare {
                e: name(sq.e),
                g: name(sq.g),
            });
        }
    }

    // Totality on composable (i, j) pairs with i < j.
    for e in graph.edge_ids() {
        let ce = graph.edge(e).color;
        if !active(ce) {
            continue;
        }
        let src = graph.edge(e).source;
        for &cg in colors.iter().filter(|&&c| c > ce) {
            for &g in &in_edges[src.index()][cg - 1] {
                if !forward.contains_key(&(e, g)) {
                    return Err(KGraphError::MissingSquare {
                        e: name(e),
                        g: name(g),
                    });
                }
            }
        }
    }

    // Injectivity, then equal block counts for surjectivity.
    let mut seen: HashMap<(EdgeId, EdgeId), (EdgeId, EdgeId)> = HashMap::new();
    let mut block_counts: BTreeMap<(VertexId, VertexId, usize, usize), (i64, i64)> =
        BTreeMap::new();
    for (&(e, g), &(gp, ep)) in &forward {
        let (ed, gd) = (graph.edge(e), graph.edge(g));
        let key = (ed.range, gd.source, ed.color, gd.color);
        if seen.insert((gp, ep), (e, g)).is_some() {
            return Err(KGraphError::NotBijective {
                range: graph.vertex_name(key.0).to_string(),
                origin: graph.vertex_name(key.1).to_string(),
                colors: (key.2, key.3),
            });
        }
        block_counts.entry(key).or_default().0 += 1;
    }
    for g in graph.edge_ids() {
        let cg = graph.edge(g).color;
        if !active(cg) {
            continue;
        }
        let src = graph.edge(g).source;
        for &ce in colors.iter().filter(|&&c| c < cg) {
            for &e in &in_edges[src.index()][ce - 1] {
                let key = (graph.edge(g).range, graph.edge(e).source, ce, cg);
                block_counts.entry(key).or_default().1 += 1;
            }
        }
    }
    for (key, (forward_count, backward_count)) in &block_counts {
        if forward_count != backward_count {
            return Err(KGraphError::NotBijective {
                range: graph.vertex_name(key.0).to_string(),
                origin: graph.vertex_name(key.1).to_string(),
                colors: (key.2, key.3),
            });
        }
    }

    let mut flips: FlipTable = HashMap::with_capacity(2 * forward.len());
    for (&(e, g), &(gp, ep)) in &forward {
        flips.insert((e, g), (gp, ep));
        flips.insert((gp, ep), (e, g));
    }

    // Cube condition: both reduced sortings of a word with colors (l, j, i),
    // i < j < l, must agree.
    let flip = |x: EdgeId, y: EdgeId| flips[&(x, y)];
    for (a, &i) in colors.iter().enumerate() {
        for (b, &j) in colors.iter().enumerate().skip(a + 1) {
            for &l in colors.iter().skip(b + 1) {
                for x in graph.edge_ids().filter(|&x| graph.edge(x).color == l) {
                    let sx = graph.edge(x).source;
                    for &y in &in_edges[sx.index()][j - 1] {
                        let sy = graph.edge(y).source;
                        for &z in &in_edges[sy.index()][i - 1] {
                            let route_a = {
                                let (p, q) = flip(x, y);
                                let (q, r) = flip(q, z);
                                let (p, q) = flip(p, q);
                                [p, q, r]
                            };
                            let route_b = {
                                let (q, r) = flip(y, z);
                                let (p, q) = flip(x, q);
                                let (q, r) = flip(q, r);
                                [p, q, r]
                            };
                            if route_a != route_b {
                                return Err(KGraphError::CubeFailure {
                                    word: vec![name(x), name(y), name(z)],
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    Ok((flips, in_edges))
}

impl KGraph {
    /// Ambient number of colors (length of every degree vector).
    pub fn k(&self) -> usize {
        self.base.graph.k()
    }

    /// Number of active colors.
    pub fn rank(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn has_color(&self, color: usize) -> bool {
        self.colors.contains(&color)
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.base.graph
    }

    pub fn tag(&self) -> GraphTag {
        GraphTag {
            uid: self.base.uid,
            colors: self.colors.iter().fold(0u64, |m, &c| m | (1 << (c - 1))),
        }
    }

    /// True when `other` is a restriction of the same graph to a subset of
    /// this graph's colors.
    pub fn contains_subgraph(&self, other: &KGraph) -> bool {
        self.base.uid == other.base.uid && other.colors.iter().all(|c| self.has_color(*c))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.base.graph.vertex_ids()
    }

    /// Active edges in id order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.base
            .graph
            .edge_ids()
            .filter(move |&e| self.has_color(self.edge(e).color))
    }

    pub fn edges_of_color(&self, color: usize) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().filter(move |&e| self.edge(e).color == color)
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        self.base.graph.edge(e)
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.edge(e).color
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edge(e).source
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edge(e).range
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        e.index() < self.base.graph.edge_count() && self.has_color(self.color(e))
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge(e).name
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        self.base.graph.vertex_name(v)
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId, KGraphError> {
        let e = self.base.graph.edge_id(name)?;
        if !self.has_color(self.color(e)) {
            return Err(KGraphError::UnknownEdge(name.to_string()));
        }
        Ok(e)
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, KGraphError> {
        self.base.graph.vertex_id(name)
    }

    /// Edges of `color` with range `v` (`v Lambda^{e_color}`).
    pub fn in_edges(&self, v: VertexId, color: usize) -> &[EdgeId] {
        if self.has_color(color) {
            &self.base.in_edges[v.index()][color - 1]
        } else {
            &[]
        }
    }

    /// The flip of a composable pair `x y` (traverse `y` then `x`): the unique
    /// `(y', x')` with `x y = y' x'` and `color(y') = color(y)`. Same-colored
    /// pairs flip to themselves. `None` if the pair is not composable.
    pub fn flip(&self, x: EdgeId, y: EdgeId) -> Option<(EdgeId, EdgeId)> {
        if self.source(x) != self.range(y) {
            return None;
        }
        if self.color(x) == self.color(y) {
            return Some((x, y));
        }
        self.base.flips.get(&(x, y)).copied()
    }

    /// The defining squares among active colors, oriented with
    /// `color(e) < color(g)`.
    pub fn squares(&self) -> Vec<Square> {
        let mut out: Vec<Square> = self
            .base
            .flips
            .iter()
            .filter(|((e, g), _)| {
                self.contains_edge(*e) && self.contains_edge(*g) && self.color(*e) < self.color(*g)
            })
            .map(|(&(e, g), &(gp, ep))| Square { e, g, gp, ep })
            .collect();
        out.sort();
        out
    }

    /// The squares exactly as supplied at construction.
    pub fn input_squares(&self) -> &SquareSet {
        &self.base.squares
    }

    /// The sub-k-graph `Lambda_J` on the same vertices using only colors in `J`.
    pub fn restrict(&self, colors: &[usize]) -> Result<KGraph, KGraphError> {
        if colors.is_empty() {
            return Err(KGraphError::EmptyColorSet);
        }
        let mut sorted: Vec<usize> = colors.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &c in &sorted {
            if !self.has_color(c) {
                return Err(KGraphError::BadColor {
                    color: c,
                    k: self.k(),
                });
            }
        }
        validate(&self.base.graph, &self.base.squares, &sorted)?;
        Ok(KGraph {
            base: Arc::clone(&self.base),
            colors: sorted,
        })
    }

    /// `Lambda_m`: the restriction to colors `1..=m`.
    pub fn prefix(&self, m: usize) -> Result<KGraph, KGraphError> {
        self.restrict(&(1..=m).collect::<Vec<_>>())
    }
}
