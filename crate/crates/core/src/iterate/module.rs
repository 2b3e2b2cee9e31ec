use std::collections::BTreeMap;
use std::sync::Arc;

use super::IterateError;
use crate::kgraph::{EdgeId, KGraph, VertexId};
use crate::kpalg::{literal, KpAlgebra, KpElement, Monomial, Scalar};

/// A generator of the coefficient algebra acting on the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Vertex(VertexId),
    Edge(EdgeId),
    EdgeStar(EdgeId),
}

impl Generator {
    pub fn render(&self, g: &KGraph) -> String {
        match self {
            Generator::Vertex(v) => format!("p[{}]", g.vertex_name(*v)),
            Generator::Edge(e) => format!("s[{}]", g.edge_name(*e)),
            Generator::EdgeStar(e) => format!("s[{}]*", g.edge_name(*e)),
        }
    }
}

/// An element of `Y_{w1} ⊗ ... ⊗ Y_{wn} ⊗ B`: composable edge tuples with
/// coefficients in the base algebra `B`, each supported at the source of
/// the last edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    word: Vec<usize>,
    coeffs: BTreeMap<Vec<EdgeId>, KpElement>,
}

impl ModuleElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<EdgeId>, KpElement> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_raw(&mut self, tuple: Vec<EdgeId>, t: KpElement) {
        if t.is_zero() {
            return;
        }
        match self.coeffs.remove(&tuple) {
            Some(old) => {
                let sum = &old + &t;
                if !sum.is_zero() {
                    self.coeffs.insert(tuple, sum);
                }
            }
            None => {
                self.coeffs.insert(tuple, t);
            }
        }
    }
}

/// The modules `Y_word ⊗ B` over a k-graph, where `B` is the Kumjian–Pask
/// algebra of some restriction of the same graph.
#[derive(Clone, Debug)]
pub struct ModuleSpace {
    graph: KGraph,
    base: Arc<KpAlgebra>,
}

impl ModuleSpace {
    pub fn new(graph: KGraph, base: Arc<KpAlgebra>) -> Self {
        ModuleSpace { graph, base }
    }

    pub fn graph(&self) -> &KGraph {
        &self.graph
    }

    pub fn base(&self) -> &KpAlgebra {
        &self.base
    }

    pub fn zero(&self, word: Vec<usize>) -> ModuleElement {
        ModuleElement {
            word,
            coeffs: BTreeMap::new(),
        }
    }

    fn check_word(&self, word: &[usize]) -> Result<(), IterateError> {
        match word.iter().find(|&&c| c == 0 || c > self.graph.k()) {
            Some(&c) => Err(IterateError::ColorOutOfRange(c)),
            None => Ok(()),
        }
    }

    /// Composable edge tuples spelling `word`.
    pub fn tuples(&self, word: &[usize]) -> Result<Vec<Vec<EdgeId>>, IterateError> {
        self.check_word(word)?;
        let Some((&first, rest)) = word.split_first() else {
            return Err(IterateError::ShapeMismatch);
        };
        let g = &self.graph;
        let mut out: Vec<Vec<EdgeId>> = g.edges_of_color(first).map(|e| vec![e]).collect();
        for &c in rest {
            out = out
                .into_iter()
                .flat_map(|t| {
                    let s = g.source(*t.last().expect("nonempty"));
                    g.in_edges(s, c).iter().map(move |&e| {
                        let mut next = t.clone();
                        next.push(e);
                        next
                    })
                })
                .collect();
        }
        Ok(out)
    }

    /// `t ⊗ T`, cut down to `t ⊗ p_{s(t)} T`; zero if `t` is not composable.
    pub fn pure(&self, tuple: &[EdgeId], t: &KpElement) -> Result<ModuleElement, IterateError> {
        self.base.check(t)?;
        let g = &self.graph;
        let word: Vec<usize> = tuple.iter().map(|&e| g.color(e)).collect();
        self.check_word(&word)?;
        let mut out = self.zero(word);
        let Some(&last) = tuple.last() else {
            return Err(IterateError::ShapeMismatch);
        };
        if tuple.windows(2).all(|w| g.source(w[0]) == g.range(w[1])) {
            let local = self.base.mul(&self.base.vertex(g.source(last)), t)?;
            out.add_raw(tuple.to_vec(), local);
        }
        Ok(out)
    }

    /// `t ⊗ p_{s(t)}`, the module's stand-in for `t ⊗ 1`.
    pub fn unit_tensor(&self, tuple: &[EdgeId]) -> Result<ModuleElement, IterateError> {
        let last = *tuple.last().ok_or(IterateError::ShapeMismatch)?;
        self.pure(tuple, &self.base.vertex(self.graph.source(last)))
    }

    /// Every `t ⊗ S` with `t` a composable tuple of `word` and `S` a base
    /// monomial at `s(t)` of length at most `level`.
    pub fn basis(&self, word: &[usize], level: u32) -> Result<Vec<ModuleElement>, IterateError> {
        let mut out = Vec::new();
        for t in self.tuples(word)? {
            let s = self.graph.source(*t.last().expect("nonempty"));
            for m in self.base.monomials(level, Some(s)) {
                out.push(self.pure(&t, &self.base.monomial_element(m))?);
            }
        }
        Ok(out)
    }

    pub fn add(&self, x: &ModuleElement, y: &ModuleElement) -> Result<ModuleElement, IterateError> {
        if x.word != y.word {
            return Err(IterateError::ShapeMismatch);
        }
        let mut out = x.clone();
        for (t, c) in &y.coeffs {
            self.base.check(c)?;
            out.add_raw(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, x: &ModuleElement, c: &Scalar) -> ModuleElement {
        let mut out = self.zero(x.word.clone());
        for (t, s) in &x.coeffs {
            out.add_raw(t.clone(), s.scale(c));
        }
        out
    }

    fn is_active(&self, e: EdgeId) -> Result<(), IterateError> {
        if self.base.graph().contains_edge(e) {
            Ok(())
        } else {
            Err(IterateError::ColorOutOfRange(self.graph.color(e)))
        }
    }

    /// Left action of one generator; `s_f` is pushed through the tuple with
    /// the flips and lands on the coefficient.
    pub fn act(&self, gen: Generator, x: &ModuleElement) -> Result<ModuleElement, IterateError> {
        let g = &self.graph;
        let b = &*self.base;
        let mut out = self.zero(x.word.clone());
        match gen {
            Generator::Vertex(v) => {
                for (t, s) in &x.coeffs {
                    if g.range(t[0]) == v {
                        out.add_raw(t.clone(), s.clone());
                    }
                }
            }
            Generator::Edge(f) => {
                self.is_active(f)?;
                for (t, s) in &x.coeffs {
                    if g.source(f) != g.range(t[0]) {
                        continue;
                    }
                    let mut cur = f;
                    let mut next = Vec::with_capacity(t.len());
                    for &e in t {
                        let (e2, c2) = g.flip(cur, e).expect("composable");
                        next.push(e2);
                        cur = c2;
                    }
                    out.add_raw(next, b.mul(&b.edge(cur)?, s)?);
                }
            }
            Generator::EdgeStar(f) => {
                self.is_active(f)?;
                for (t, s) in &x.coeffs {
                    for (next, last) in self.star_push(f, t) {
                        out.add_raw(next, b.mul(&b.edge_star(last)?, s)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// All ways to write `f^* t` as `t' h^*`: the tuples `t'` with
    /// `f t' = t h` and the trailing edge `h`.
    fn star_push(&self, f: EdgeId, t: &[EdgeId]) -> Vec<(Vec<EdgeId>, EdgeId)> {
        let g = &self.graph;
        let Some((&e1, rest)) = t.split_first() else {
            return vec![(Vec::new(), f)];
        };
        let mut out = Vec::new();
        for &f1 in g.in_edges(g.source(e1), g.color(f)) {
            let (f2, e1p) = g.flip(e1, f1).expect("composable");
            if f2 != f {
                continue;
            }
            for (mut tail, h) in self.star_push(f1, rest) {
                tail.insert(0, e1p);
                out.push((tail, h));
            }
        }
        out
    }

    /// Left action of `s_mu s_nu^*`: `s_nu^*` letter by letter from the range
    /// end, then `s_mu` from its source end.
    pub fn act_monomial(
        &self,
        m: &Monomial,
        x: &ModuleElement,
    ) -> Result<ModuleElement, IterateError> {
        if m.is_vertex() {
            return self.act(Generator::Vertex(m.mu().range()), x);
        }
        let mut cur = x.clone();
        for &e in m.nu().edges() {
            cur = self.act(Generator::EdgeStar(e), &cur)?;
        }
        for &e in m.mu().edges().iter().rev() {
            cur = self.act(Generator::Edge(e), &cur)?;
        }
        Ok(cur)
    }

    pub fn act_element(
        &self,
        s: &KpElement,
        x: &ModuleElement,
    ) -> Result<ModuleElement, IterateError> {
        self.base.check(s)?;
        let mut out = self.zero(x.word.clone());
        for (m, c) in s.terms() {
            let piece = self.act_monomial(m, x)?;
            for (t, v) in piece.coeffs {
                out.add_raw(t, v.scale(c));
            }
        }
        Ok(out)
    }

    pub fn right_act(
        &self,
        x: &ModuleElement,
        t: &KpElement,
    ) -> Result<ModuleElement, IterateError> {
        let mut out = self.zero(x.word.clone());
        for (tuple, s) in &x.coeffs {
            out.add_raw(tuple.clone(), self.base.mul(s, t)?);
        }
        Ok(out)
    }

    /// `<x, y> = sum_t x_t^* y_t`
    pub fn inner(&self, x: &ModuleElement, y: &ModuleElement) -> Result<KpElement, IterateError> {
        if x.word != y.word {
            return Err(IterateError::ShapeMismatch);
        }
        let mut out = self.base.zero();
        for (t, s) in &x.coeffs {
            if let Some(u) = y.coeffs.get(t) {
                out = &out + &self.base.mul(&s.star(), u)?;
            }
        }
        Ok(out)
    }

    /// Applies the flip to letters `pos, pos + 1` of every tuple.
    pub fn flip(&self, x: &ModuleElement, pos: usize) -> Result<ModuleElement, IterateError> {
        if pos + 1 >= x.word.len() {
            return Err(IterateError::ShapeMismatch);
        }
        let mut word = x.word.clone();
        word.swap(pos, pos + 1);
        let mut out = self.zero(word);
        for (t, s) in &x.coeffs {
            let (a, b) = self.graph.flip(t[pos], t[pos + 1]).expect("composable");
            let mut next = t.clone();
            next[pos] = a;
            next[pos + 1] = b;
            out.add_raw(next, s.clone());
        }
        Ok(out)
    }

    /// Equality with coefficients compared in the base algebra.
    pub fn equals(&self, x: &ModuleElement, y: &ModuleElement) -> Result<bool, IterateError> {
        if x.word != y.word {
            return Ok(false);
        }
        let zero = self.base.zero();
        for t in x.coeffs.keys().chain(y.coeffs.keys()) {
            let a = x.coeffs.get(t).unwrap_or(&zero);
            let b = y.coeffs.get(t).unwrap_or(&zero);
            if !self.base.equals(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn render(&self, x: &ModuleElement) -> String {
        if x.coeffs.is_empty() {
            return "0".into();
        }
        let bg = self.base.graph();
        x.coeffs
            .iter()
            .map(|(t, s)| {
                let edges: Vec<&str> = t.iter().map(|&e| self.graph.edge_name(e)).collect();
                format!("{} ⊗ ({})", edges.join(" ⊗ "), literal::render(bg, s))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
