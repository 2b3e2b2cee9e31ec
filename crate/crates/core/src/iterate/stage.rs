use std::sync::Arc;

use super::module::{ModuleElement, ModuleSpace};
use super::IterateError;
use crate::kgraph::{EdgeId, KGraph, VertexId};
use crate::kpalg::{KpAlgebra, KpElement};

/// Stage `m` of the ladder: coefficients in `B = KP(Lambda_m)`, target
/// `KP(Lambda_{m+1})`, and the modules `Y_j ⊗ B` for every color `j`.
#[derive(Clone, Debug)]
pub struct Stage {
    m: usize,
    graph: KGraph,
    base: Arc<KpAlgebra>,
    target: Arc<KpAlgebra>,
    space: ModuleSpace,
}

impl Stage {
    /// Needs `1 <= m < k`.
    pub fn new(graph: &KGraph, m: usize) -> Result<Self, IterateError> {
        if m == 0 || m >= graph.k() {
            return Err(IterateError::BadStage { m, k: graph.k() });
        }
        let base = Arc::new(KpAlgebra::new(graph.prefix(m)?));
        let target = Arc::new(KpAlgebra::new(graph.prefix(m + 1)?));
        Ok(Self::from_parts(graph, m, base, target))
    }

    fn from_parts(graph: &KGraph, m: usize, base: Arc<KpAlgebra>, target: Arc<KpAlgebra>) -> Self {
        let space = ModuleSpace::new(graph.clone(), Arc::clone(&base));
        Stage {
            m,
            graph: graph.clone(),
            base,
            target,
            space,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn graph(&self) -> &KGraph {
        &self.graph
    }

    pub fn base(&self) -> &Arc<KpAlgebra> {
        &self.base
    }

    pub fn target(&self) -> &Arc<KpAlgebra> {
        &self.target
    }

    pub fn space(&self) -> &ModuleSpace {
        &self.space
    }

    /// The same modules with coefficients in the target algebra.
    pub fn target_space(&self) -> ModuleSpace {
        ModuleSpace::new(self.graph.clone(), Arc::clone(&self.target))
    }

    /// The new color absorbed at this stage.
    pub fn new_color(&self) -> usize {
        self.m + 1
    }

    /// `pi`: the inclusion `B -> KP(Lambda_{m+1})`.
    pub fn pi(&self, s: &KpElement) -> Result<KpElement, IterateError> {
        self.base.check(s)?;
        Ok(self.target.embed(s)?)
    }

    /// `t(x)`, absorbing every tuple `t ⊗ S` into `s_t pi(S)`; also the
    /// absorption `V` for any word in colors `<= m + 1`.
    pub fn t(&self, x: &ModuleElement) -> Result<KpElement, IterateError> {
        let tg = &*self.target;
        let mut out = tg.zero();
        for (tuple, s) in x.coeffs() {
            let path = self.graph.path(tuple)?;
            let head = tg.path(&path)?;
            out = &out + &tg.mul(&head, &self.pi(s)?)?;
        }
        Ok(out)
    }

    pub fn sigma0(&self, v: VertexId) -> KpElement {
        self.target.vertex(v)
    }

    /// `sigma_i(e)`: `pi(s_e)` below the new color, `t(e ⊗ p_{s(e)})` at it.
    pub fn sigma(&self, e: EdgeId) -> Result<KpElement, IterateError> {
        let c = self.graph.color(e);
        if c <= self.m {
            self.pi(&self.base.edge(e)?)
        } else if c == self.new_color() {
            self.t(&self.space.unit_tensor(&[e])?)
        } else {
            Err(IterateError::ColorOutOfRange(c))
        }
    }
}

/// Every stage of a k-graph, sharing algebras between neighbours.
#[derive(Clone, Debug)]
pub struct Ladder {
    stages: Vec<Stage>,
}

impl Ladder {
    pub fn new(graph: &KGraph) -> Result<Self, IterateError> {
        let k = graph.k();
        let algebras: Vec<Arc<KpAlgebra>> = (1..=k)
            .map(|m| graph.prefix(m).map(|g| Arc::new(KpAlgebra::new(g))))
            .collect::<Result<_, _>>()?;
        let stages = (1..k)
            .map(|m| {
                Stage::from_parts(
                    graph,
                    m,
                    Arc::clone(&algebras[m - 1]),
                    Arc::clone(&algebras[m]),
                )
            })
            .collect();
        Ok(Ladder { stages })
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn stage(&self, m: usize) -> Option<&Stage> {
        m.checked_sub(1).and_then(|i| self.stages.get(i))
    }
}
