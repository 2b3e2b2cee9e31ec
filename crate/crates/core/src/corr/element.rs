use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::CorrError;
use crate::kgraph::{EdgeId, KGraph, VertexId};
use crate::kpalg::literal::render_term;
use crate::kpalg::Scalar;

/// A function on the vertex set: an element of the coefficient algebra `A`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexFn(BTreeMap<VertexId, Scalar>);

impl VertexFn {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The point mass `delta_v`.
    pub fn delta(v: VertexId) -> Self {
        let mut out = Self::zero();
        out.add(v, Scalar::one());
        out
    }

    pub fn add(&mut self, v: VertexId, c: Scalar) {
        let entry = self.0.entry(v).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&v);
        }
    }

    pub fn get(&self, v: VertexId) -> Scalar {
        self.0.get(&v).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &BTreeMap<VertexId, Scalar> {
        &self.0
    }

    pub fn render(&self, g: &KGraph) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        self.0
            .iter()
            .enumerate()
            .map(|(i, (v, c))| render_term(c, &format!("δ[{}]", g.vertex_name(*v)), i == 0))
            .collect()
    }
}

/// An element of `Y_{w1} ⊗ ... ⊗ Y_{wn}`: a combination of composable edge
/// tuples whose colors spell `word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrElement {
    word: Vec<usize>,
    coeffs: BTreeMap<Vec<EdgeId>, Scalar>,
}

impl CorrElement {
    pub fn zero(word: Vec<usize>) -> Self {
        CorrElement {
            word,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<EdgeId>, Scalar> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_raw(&mut self, tuple: Vec<EdgeId>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(tuple.clone())
            .or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&tuple);
        }
    }

    pub fn try_add(&self, other: &CorrElement) -> Result<CorrElement, CorrError> {
        if self.word != other.word {
            return Err(CorrError::Mismatch);
        }
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.add_raw(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> CorrElement {
        let mut out = CorrElement::zero(self.word.clone());
        for (t, x) in &self.coeffs {
            out.add_raw(t.clone(), x * c);
        }
        out
    }

    pub fn render(&self, g: &KGraph) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, (t, c))| {
                let body = t
                    .iter()
                    .map(|&e| g.edge_name(e))
                    .collect::<Vec<_>>()
                    .join(" ⊗ ");
                render_term(c, &body, i == 0)
            })
            .collect()
    }
}

/// `sum c * theta_{x,y}` where `theta_{x,y}(z) = x <y, z>`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RankOneSum {
    pub terms: Vec<(CorrElement, CorrElement, Scalar)>,
}

/// The edge correspondences `Y_i` of a k-graph over the vertex algebra.
#[derive(Clone, Debug)]
pub struct EdgeCorrespondences {
    graph: KGraph,
}

impl EdgeCorrespondences {
    pub fn new(graph: KGraph) -> Self {
        EdgeCorrespondences { graph }
    }

    pub fn graph(&self) -> &KGraph {
        &self.graph
    }

    fn check_word(&self, word: &[usize]) -> Result<(), CorrError> {
        match word.iter().find(|c| !self.graph.has_color(**c)) {
            Some(&c) => Err(CorrError::ColorOutOfRange(c)),
            None => Ok(()),
        }
    }

    /// The basis tensor `x1 ⊗ ... ⊗ xn`; zero when the tuple is not composable.
    pub fn tensor(&self, tuple: &[EdgeId]) -> Result<CorrElement, CorrError> {
        let word: Vec<usize> = tuple.iter().map(|&e| self.graph.color(e)).collect();
        self.check_word(&word)?;
        let mut out = CorrElement::zero(word);
        let composable = tuple
            .windows(2)
            .all(|w| self.graph.source(w[0]) == self.graph.range(w[1]));
        if composable && !tuple.is_empty() {
            out.add_raw(tuple.to_vec(), Scalar::one());
        }
        Ok(out)
    }

    pub fn named(&self, names: &[&str]) -> Result<CorrElement, CorrError> {
        let tuple = names
            .iter()
            .map(|n| self.graph.edge_id(n))
            .collect::<Result<Vec<_>, _>>()?;
        self.tensor(&tuple)
    }

    /// All composable tuples with the given colors.
    pub fn basis(&self, word: &[usize]) -> Result<Vec<Vec<EdgeId>>, CorrError> {
        self.check_word(word)?;
        let Some((&first, rest)) = word.split_first() else {
            return Ok(Vec::new());
        };
        let mut out: Vec<Vec<EdgeId>> = self.graph.edges_of_color(first).map(|e| vec![e]).collect();
        for &c in rest {
            out = out
                .into_iter()
                .flat_map(|t| {
                    let s = self.graph.source(*t.last().expect("nonempty"));
                    self.graph.in_edges(s, c).iter().map(move |&e| {
                        let mut next = t.clone();
                        next.push(e);
                        next
                    })
                })
                .collect();
        }
        Ok(out)
    }

    pub fn inner(&self, x: &CorrElement, y: &CorrElement) -> Result<VertexFn, CorrError> {
        if x.word != y.word {
            return Err(CorrError::Mismatch);
        }
        let mut out = VertexFn::zero();
        for (t, c) in &x.coeffs {
            if let Some(d) = y.coeffs.get(t) {
                let last = *t.last().expect("nonempty tuple");
                out.add(self.graph.source(last), c * d);
            }
        }
        Ok(out)
    }

    /// `a · x`, acting on the range of the first edge.
    pub fn left_action(&self, a: &VertexFn, x: &CorrElement) -> CorrElement {
        let mut out = CorrElement::zero(x.word.clone());
        for (t, c) in &x.coeffs {
            out.add_raw(t.clone(), c * a.get(self.graph.range(t[0])));
        }
        out
    }

    /// `x · a`, acting on the source of the last edge.
    pub fn right_action(&self, x: &CorrElement, a: &VertexFn) -> CorrElement {
        let mut out = CorrElement::zero(x.word.clone());
        for (t, c) in &x.coeffs {
            let last = *t.last().expect("nonempty tuple");
            out.add_raw(t.clone(), c * a.get(self.graph.source(last)));
        }
        out
    }

    /// Applies the flip to letters `pos, pos + 1` (so `theta ⊗ 1` or `1 ⊗ theta`).
    pub fn flip_at(&self, x: &CorrElement, pos: usize) -> Result<CorrElement, CorrError> {
        if pos + 1 >= x.word.len() {
            return Err(CorrError::Mismatch);
        }
        let mut word = x.word.clone();
        word.swap(pos, pos + 1);
        let mut out = CorrElement::zero(word);
        for (t, c) in &x.coeffs {
            let (a, b) = self
                .graph
                .flip(t[pos], t[pos + 1])
                .expect("tuples are composable");
            let mut next = t.clone();
            next[pos] = a;
            next[pos + 1] = b;
            out.add_raw(next, c.clone());
        }
        Ok(out)
    }

    /// `theta_{ij}` on `Y_i ⊗ Y_j`.
    pub fn theta(&self, i: usize, j: usize, x: &CorrElement) -> Result<CorrElement, CorrError> {
        if x.word != [i, j] {
            return Err(CorrError::Mismatch);
        }
        self.flip_at(x, 0)
    }

    /// `phi(a)` on `Y_color` as a finite sum of rank-one operators.
    pub fn phi(&self, a: &VertexFn, color: usize) -> Result<RankOneSum, CorrError> {
        self.check_word(&[color])?;
        let mut terms = Vec::new();
        for (&v, c) in a.entries() {
            for &e in self.graph.in_edges(v, color) {
                let x = self.tensor(&[e])?;
                terms.push((x.clone(), x, c.clone()));
            }
        }
        Ok(RankOneSum { terms })
    }

    pub fn apply(&self, op: &RankOneSum, z: &CorrElement) -> Result<CorrElement, CorrError> {
        let mut out = CorrElement::zero(z.word.clone());
        for (x, y, c) in &op.terms {
            let ip = self.inner(y, z)?;
            let piece = self.right_action(x, &ip).scale(c);
            if out.word != piece.word {
                return Err(CorrError::Mismatch);
            }
            out = out.try_add(&piece)?;
        }
        Ok(out)
    }

    /// `K ⊗ 1` on `X ⊗ Y_word`: each `theta_{t,u}` becomes
    /// `sum_g theta_{t⊗g, u⊗g}` over basis tuples `g` of `Y_word`.
    pub fn tensor_identity(
        &self,
        op: &RankOneSum,
        word: &[usize],
    ) -> Result<RankOneSum, CorrError> {
        let tail = self.basis(word)?;
        let mut terms = Vec::new();
        for (x, y, c) in &op.terms {
            for (t, ct) in &x.coeffs {
                for (u, cu) in &y.coeffs {
                    let (st, su) = (
                        self.graph.source(*t.last().expect("nonempty")),
                        self.graph.source(*u.last().expect("nonempty")),
                    );
                    if st != su {
                        continue;
                    }
                    for g in tail.iter().filter(|g| self.graph.range(g[0]) == st) {
                        let tg: Vec<EdgeId> = t.iter().chain(g).copied().collect();
                        let ug: Vec<EdgeId> = u.iter().chain(g).copied().collect();
                        terms.push((self.tensor(&tg)?, self.tensor(&ug)?, c * ct * cu));
                    }
                }
            }
        }
        Ok(RankOneSum { terms })
    }
}
