//! Paths in color-block form, factorization and minimal common extensions.

use super::degree::MultiDegree;
use super::graph::{EdgeId, KGraph, VertexId};
use super::KGraphError;

/// A path `lambda` stored last-traversed-first in canonical color-block order.
///
/// Only a [`KGraph`] constructs paths, so every `Path` is composable and
/// canonical for the graph that produced it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    range: VertexId,
    edges: Vec<EdgeId>,
    source: VertexId,
    degree: MultiDegree,
}

impl Path {
    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl KGraph {
    pub fn vertex_path(&self, v: VertexId) -> Path {
        Path {
            range: v,
            edges: Vec::new(),
            source: v,
            degree: MultiDegree::zero(self.k()),
        }
    }

    pub fn edge_path(&self, e: EdgeId) -> Path {
        Path {
            range: self.range(e),
            edges: vec![e],
            source: self.source(e),
            degree: MultiDegree::unit(self.k(), self.color(e)),
        }
    }

    /// Builds the path of a composable edge word (in any color order).
    pub fn path(&self, word: &[EdgeId]) -> Result<Path, KGraphError> {
        for &e in word {
            if !self.contains_edge(e) {
                return Err(KGraphError::UnknownEdge(format!("#{}", e.0)));
            }
        }
        for pair in word.windows(2) {
            if self.source(pair[0]) != self.range(pair[1]) {
                return Err(KGraphError::NotComposable {
                    left: self.edge_name(pair[0]).to_string(),
                    right: self.edge_name(pair[1]).to_string(),
                });
            }
        }
        let (Some(&first), Some(&last)) = (word.first(), word.last()) else {
            return Err(KGraphError::EmptyWord);
        };
        let mut degree = MultiDegree::zero(self.k());
        for &e in word {
            degree.bump(self.color(e));
        }
        Ok(Path {
            range: self.range(first),
            edges: self.canonical_word(word),
            source: self.source(last),
            degree,
        })
    }

    /// Path from edge names, e.g. `["a", "f"]`.
    pub fn path_from_names(&self, names: &[&str]) -> Result<Path, KGraphError> {
        let word = names
            .iter()
            .map(|n| self.edge_id(n))
            .collect::<Result<Vec<_>, _>>()?;
        self.path(&word)
    }

    /// Rewrites a composable word into the given color sequence by adjacent
    /// flips, moving the nearest edge of each needed color leftwards.
    ///
    /// `colors` must be a permutation of the word's colors.
    pub fn reorder(&self, word: &[EdgeId], colors: &[usize]) -> Vec<EdgeId> {
        debug_assert_eq!(word.len(), colors.len());
        let mut w = word.to_vec();
        for (p, &want) in colors.iter().enumerate() {
            let q = (p..w.len())
                .find(|&q| self.color(w[q]) == want)
                .expect("target colors must permute the word's colors");
            for t in (p + 1..=q).rev() {
                let (y, x) = self
                    .flip(w[t - 1], w[t])
                    .expect("adjacent edges of a path are composable");
                w[t - 1] = y;
                w[t] = x;
            }
        }
        w
    }

    pub fn canonical_word(&self, word: &[EdgeId]) -> Vec<EdgeId> {
        let mut colors: Vec<usize> = word.iter().map(|&e| self.color(e)).collect();
        colors.sort_unstable();
        self.reorder(word, &colors)
    }

    /// `mu nu`, defined when `s(mu) = r(nu)`.
    pub fn concat(&self, mu: &Path, nu: &Path) -> Option<Path> {
        if mu.source != nu.range {
            return None;
        }
        let mut word = mu.edges.clone();
        word.extend_from_slice(&nu.edges);
        Some(Path {
            range: mu.range,
            edges: self.canonical_word(&word),
            source: nu.source,
            degree: mu.degree.add(&nu.degree),
        })
    }

    /// The unique `(mu, nu)` with `p = mu nu`, `d(mu) = head`, `d(nu) = tail`.
    pub fn factorize(
        &self,
        p: &Path,
        head: &MultiDegree,
        tail: &MultiDegree,
    ) -> Result<(Path, Path), KGraphError> {
        if head.k() != self.k() || tail.k() != self.k() || head.add(tail) != p.degree {
            return Err(KGraphError::BadSplit {
                degree: p.degree.to_string(),
                head: head.to_string(),
                tail: tail.to_string(),
            });
        }
        let mut target = head.color_sequence();
        target.extend(tail.color_sequence());
        let w = self.reorder(&p.edges, &target);
        let cut = head.total() as usize;
        let (left, right) = w.split_at(cut);
        let mid = match left.last() {
            Some(&e) => self.source(e),
            None => p.range,
        };
        Ok((
            Path {
                range: p.range,
                edges: left.to_vec(),
                source: mid,
                degree: head.clone(),
            },
            Path {
                range: mid,
                edges: right.to_vec(),
                source: p.source,
                degree: tail.clone(),
            },
        ))
    }

    /// All paths of degree `n`, optionally with a fixed range, in a
    /// deterministic order. Empty if `n` uses an inactive color.
    pub fn paths_of_degree(&self, n: &MultiDegree, range: Option<VertexId>) -> Vec<Path> {
        let colors = n.color_sequence();
        if colors.iter().any(|&c| !self.has_color(c)) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let starts: Vec<VertexId> = match range {
            Some(v) => vec![v],
            None => self.vertices().collect(),
        };
        let mut word = Vec::with_capacity(colors.len());
        for v in starts {
            self.extend_paths(v, v, &colors, &mut word, n, &mut out);
        }
        out
    }

    fn extend_paths(
        &self,
        range: VertexId,
        at: VertexId,
        colors: &[usize],
        word: &mut Vec<EdgeId>,
        degree: &MultiDegree,
        out: &mut Vec<Path>,
    ) {
        let Some((&c, rest)) = colors.split_first() else {
            out.push(Path {
                range,
                edges: word.clone(),
                source: at,
                degree: degree.clone(),
            });
            return;
        };
        for &e in self.in_edges(at, c) {
            word.push(e);
            self.extend_paths(range, self.source(e), rest, word, degree, out);
            word.pop();
        }
    }

    /// `Lambda^min(mu, nu)`: pairs `(eta, zeta)` with `mu eta = nu zeta` and
    /// `d(mu eta) = d(mu) v d(nu)`.
    pub fn min_common_extensions(&self, mu: &Path, nu: &Path) -> Vec<(Path, Path)> {
        if mu.range != nu.range {
            return Vec::new();
        }
        let join = mu.degree.join(&nu.degree);
        let eta_degree = join.checked_sub(&mu.degree).expect("join dominates");
        let zeta_degree = join.checked_sub(&nu.degree).expect("join dominates");
        let mut out = Vec::new();
        for eta in self.paths_of_degree(&eta_degree, Some(mu.source)) {
            let whole = self.concat(mu, &eta).expect("eta starts at s(mu)");
            let (head, zeta) = self
                .factorize(&whole, &nu.degree, &zeta_degree)
                .expect("degrees add up");
            if head == *nu {
                out.push((eta, zeta));
            }
        }
        out
    }

    /// Edge names joined by commas; a vertex path shows the vertex name.
    pub fn path_label(&self, p: &Path) -> String {
        if p.is_vertex() {
            return self.vertex_name(p.range).to_string();
        }
        p.edges
            .iter()
            .map(|&e| self.edge_name(e))
            .collect::<Vec<_>>()
            .join(",")
    }
}
