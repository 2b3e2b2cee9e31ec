use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::One;

use super::element::{KpElement, Monomial};
use super::rank::{RowReducer, SparseRow};
use super::scalar::Scalar;
use super::KpError;
use crate::kgraph::{EdgeId, Grade, GraphTag, KGraph, MultiDegree, Path, VertexId};

type ExtensionCache = HashMap<(Path, Path), Arc<Vec<(Path, Path)>>>;

/// One extending edge of a collapsible group, with the monomial it came
/// from and its coefficient.
type Extension = (EdgeId, Monomial, Scalar);

/// The Kumjian–Pask algebra of a validated (restricted) k-graph over the
/// rationals.
#[derive(Debug)]
pub struct KpAlgebra {
    graph: KGraph,
    extensions: Mutex<ExtensionCache>,
}

impl KpAlgebra {
    pub fn new(graph: KGraph) -> Self {
        KpAlgebra {
            graph,
            extensions: Mutex::new(HashMap::new()),
        }
    }

    pub fn graph(&self) -> &KGraph {
        &self.graph
    }

    pub fn tag(&self) -> GraphTag {
        self.graph.tag()
    }

    pub fn zero(&self) -> KpElement {
        KpElement::zero(self.tag())
    }

    /// `p_v`
    pub fn vertex(&self, v: VertexId) -> KpElement {
        let p = self.graph.vertex_path(v);
        self.monomial_element(Monomial::new(p.clone(), p).expect("same vertex"))
    }

    /// `sum_v p_v`, the unit (the vertex set is finite).
    pub fn unit(&self) -> KpElement {
        let mut out = self.zero();
        for v in self.graph.vertices() {
            let p = self.graph.vertex_path(v);
            out.add_term(
                Monomial::new(p.clone(), p).expect("same vertex"),
                Scalar::one(),
            );
        }
        out
    }

    /// `s_e`
    pub fn edge(&self, e: EdgeId) -> Result<KpElement, KpError> {
        self.path(&self.edge_path(e)?)
    }

    /// `s_e^*`
    pub fn edge_star(&self, e: EdgeId) -> Result<KpElement, KpError> {
        Ok(self.edge(e)?.star())
    }

    fn edge_path(&self, e: EdgeId) -> Result<Path, KpError> {
        if !self.graph.contains_edge(e) {
            return Err(KpError::InactiveEdge(e.0));
        }
        Ok(self.graph.edge_path(e))
    }

    /// `s_mu`
    pub fn path(&self, mu: &Path) -> Result<KpElement, KpError> {
        let v = self.graph.vertex_path(mu.source());
        self.monomial(mu.clone(), v)
    }

    /// `s_mu s_nu^*`
    pub fn monomial(&self, mu: Path, nu: Path) -> Result<KpElement, KpError> {
        for p in [&mu, &nu] {
            if let Some(&e) = p.edges().iter().find(|&&e| !self.graph.contains_edge(e)) {
                return Err(KpError::InactiveEdge(e.0));
            }
        }
        let m = Monomial::new(mu, nu).ok_or(KpError::SourceMismatch)?;
        Ok(self.monomial_element(m))
    }

    pub fn monomial_element(&self, m: Monomial) -> KpElement {
        KpElement::from_monomial(self.tag(), m, Scalar::one())
    }

    /// `s_mu s_nu^*` from edge names; an empty side means the vertex path at
    /// the other side's source.
    pub fn named(&self, mu: &[&str], nu: &[&str]) -> Result<KpElement, KpError> {
        let g = &self.graph;
        let (mu, nu) = match (mu.is_empty(), nu.is_empty()) {
            (true, true) => return Err(KpError::Parse("empty monomial".into())),
            (false, true) => {
                let mu = g.path_from_names(mu)?;
                let v = g.vertex_path(mu.source());
                (mu, v)
            }
            (true, false) => {
                let nu = g.path_from_names(nu)?;
                let v = g.vertex_path(nu.source());
                (v, nu)
            }
            (false, false) => (g.path_from_names(mu)?, g.path_from_names(nu)?),
        };
        self.monomial(mu, nu)
    }

    pub fn check(&self, t: &KpElement) -> Result<(), KpError> {
        if t.tag() != self.tag() {
            return Err(KpError::GraphMismatch);
        }
        Ok(())
    }

    /// Cached `Lambda^min(mu, nu)`.
    pub fn min_extensions(&self, mu: &Path, nu: &Path) -> Arc<Vec<(Path, Path)>> {
        let key = (mu.clone(), nu.clone());
        if let Some(hit) = self.extensions.lock().expect("cache lock").get(&key) {
            return Arc::clone(hit);
        }
        let value = Arc::new(self.graph.min_common_extensions(mu, nu));
        self.extensions
            .lock()
            .expect("cache lock")
            .insert(key, Arc::clone(&value));
        value
    }

    /// `s_mu s_nu^* s_alpha s_beta^* = sum s_{mu eta} s_{beta zeta}^*` over
    /// `(eta, zeta)` in `Lambda^min(nu, alpha)`.
    pub fn multiply_monomials(&self, left: &Monomial, right: &Monomial) -> Vec<Monomial> {
        let g = &self.graph;
        self.min_extensions(left.nu(), right.mu())
            .iter()
            .map(|(eta, zeta)| {
                let mu = g.concat(left.mu(), eta).expect("eta starts at s(nu)");
                let nu = g.concat(right.nu(), zeta).expect("zeta starts at s(alpha)");
                Monomial::new(mu, nu).expect("common source")
            })
            .collect()
    }

    pub fn mul(&self, a: &KpElement, b: &KpElement) -> Result<KpElement, KpError> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                let c = c1 * c2;
                for m in self.multiply_monomials(m1, m2) {
                    out.add_term(m, c.clone());
                }
            }
        }
        Ok(out)
    }

    /// Product of a sequence; the empty product is the unit.
    pub fn product<'a>(
        &self,
        factors: impl IntoIterator<Item = &'a KpElement>,
    ) -> Result<KpElement, KpError> {
        let mut acc: Option<KpElement> = None;
        for f in factors {
            acc = Some(match acc {
                None => {
                    self.check(f)?;
                    f.clone()
                }
                Some(a) => self.mul(&a, f)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.unit()))
    }

    /// Rewrites the grade-`grade` component so that every `mu` has degree
    /// exactly `level`, using `s_mu s_nu^* = sum_lambda s_{mu lambda} s_{nu lambda}^*`.
    pub fn expand(
        &self,
        t: &KpElement,
        grade: &Grade,
        level: &MultiDegree,
    ) -> Result<KpElement, KpError> {
        self.check(t)?;
        if level.k() != self.graph.k()
            || (1..=level.k()).any(|c| level.get(c) > 0 && !self.graph.has_color(c))
        {
            return Err(KpError::LevelTooLow {
                level: level.to_string(),
            });
        }
        let mut out = self.zero();
        for (m, c) in t.terms() {
            if &m.grade() != grade {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            for expanded in self.expand_monomial(m, level)? {
                out.add_term(expanded, c.clone());
            }
        }
        Ok(out)
    }

    fn expand_monomial(&self, m: &Monomial, level: &MultiDegree) -> Result<Vec<Monomial>, KpError> {
        let g = &self.graph;
        let rest = level
            .checked_sub(m.mu().degree())
            .ok_or_else(|| KpError::LevelTooLow {
                level: level.to_string(),
            })?;
        Ok(g.paths_of_degree(&rest, Some(m.mu().source()))
            .into_iter()
            .map(|lambda| {
                Monomial::new(
                    g.concat(m.mu(), &lambda).expect("composable"),
                    g.concat(m.nu(), &lambda).expect("composable"),
                )
                .expect("common source")
            })
            .collect())
    }

    /// Expands every grade of `t` to the join of its `mu`-degrees plus `extra`.
    pub fn normal_form(&self, t: &KpElement, extra: &MultiDegree) -> Result<KpElement, KpError> {
        let levels = grade_levels(std::iter::once(t), extra);
        let mut out = t.clone();
        for (grade, level) in &levels {
            out = self.expand(&out, grade, level)?;
        }
        Ok(out)
    }

    /// Decides `a == b` in the algebra.
    pub fn equals(&self, a: &KpElement, b: &KpElement) -> Result<bool, KpError> {
        self.equals_with_extra(a, b, &MultiDegree::zero(self.graph.k()))
    }

    /// As [`KpAlgebra::equals`], expanding `extra` beyond the minimal level.
    pub fn equals_with_extra(
        &self,
        a: &KpElement,
        b: &KpElement,
        extra: &MultiDegree,
    ) -> Result<bool, KpError> {
        self.check(a)?;
        self.check(b)?;
        let diff = a.try_sub(b)?;
        Ok(self.normal_form(&diff, extra)?.is_zero())
    }

    /// Greedily replaces complete sums `sum_{lambda in w Lambda^{e_i}} c s_{mu lambda} s_{nu lambda}^*`
    /// by `c s_mu s_nu^*`, colors ascending, until nothing changes.
    pub fn collapse(&self, t: &KpElement) -> KpElement {
        let g = &self.graph;
        let k = g.k();
        let mut cur = t.clone();
        loop {
            let mut changed = false;
            for &color in g.colors() {
                let unit = MultiDegree::unit(k, color);
                let mut groups: BTreeMap<(Path, Path), Vec<Extension>> = BTreeMap::new();
                for (m, c) in cur.terms() {
                    let (dm, dn) = (m.mu().degree(), m.nu().degree());
                    if dm.get(color) == 0 || dn.get(color) == 0 {
                        continue;
                    }
                    let (mu0, l1) = g
                        .factorize(m.mu(), &dm.checked_sub(&unit).expect("positive"), &unit)
                        .expect("degrees add up");
                    let (nu0, l2) = g
                        .factorize(m.nu(), &dn.checked_sub(&unit).expect("positive"), &unit)
                        .expect("degrees add up");
                    if l1 == l2 {
                        groups.entry((mu0, nu0)).or_default().push((
                            l1.edges()[0],
                            m.clone(),
                            c.clone(),
                        ));
                    }
                }
                for ((mu0, nu0), members) in groups {
                    let needed = g.in_edges(mu0.source(), color);
                    let c = &members[0].2;
                    if members.len() != needed.len() || members.iter().any(|(_, _, x)| x != c) {
                        continue;
                    }
                    let c = c.clone();
                    for (_, m, x) in &members {
                        cur.add_term(m.clone(), -x.clone());
                    }
                    cur.add_term(Monomial::new(mu0, nu0).expect("common source"), c);
                    changed = true;
                }
            }
            if !changed {
                return cur;
            }
        }
    }

    /// Dimension of the span of `span`.
    pub fn rank(&self, span: &[KpElement]) -> Result<usize, KpError> {
        self.rank_with_extra(span, &MultiDegree::zero(self.graph.k()))
    }

    /// Rank computed after expanding every grade `extra` beyond its minimal
    /// common level.
    pub fn rank_with_extra(
        &self,
        span: &[KpElement],
        extra: &MultiDegree,
    ) -> Result<usize, KpError> {
        for t in span {
            self.check(t)?;
        }
        let levels = grade_levels(span.iter(), extra);
        let mut columns: HashMap<Monomial, usize> = HashMap::new();
        let mut reducer = RowReducer::new();
        for t in span {
            let mut expanded = t.clone();
            for grade in t.grades() {
                expanded = self.expand(&expanded, &grade, &levels[&grade])?;
            }
            let mut row = SparseRow::new();
            for (m, c) in expanded.terms() {
                let next = columns.len();
                let col = *columns.entry(m.clone()).or_insert(next);
                row.insert(col, c.clone());
            }
            reducer.insert(row);
        }
        Ok(reducer.rank())
    }

    /// Moves an element of a restricted algebra of the same graph into this
    /// algebra.
    pub fn embed(&self, t: &KpElement) -> Result<KpElement, KpError> {
        if !t.tag().is_within(&self.tag()) {
            return Err(KpError::GraphMismatch);
        }
        Ok(t.clone().retag(self.tag()))
    }

    /// Every path of length at most `max_len` in active colors.
    pub fn paths_up_to(&self, max_len: u32, range: Option<VertexId>) -> Vec<Path> {
        let g = &self.graph;
        MultiDegree::all_up_to(g.k(), max_len)
            .into_iter()
            .filter(|d| (1..=d.k()).all(|c| d.get(c) == 0 || g.has_color(c)))
            .flat_map(|d| g.paths_of_degree(&d, range))
            .collect()
    }

    /// All monomials `s_mu s_nu^*` with `|mu| + |nu| <= max_len`, optionally
    /// with `r(mu)` fixed. Ordered by length, then by the monomial order.
    pub fn monomials(&self, max_len: u32, range: Option<VertexId>) -> Vec<Monomial> {
        let mut out = Vec::new();
        for mu in self.paths_up_to(max_len, range) {
            let left = max_len - mu.len() as u32;
            for nu in self.paths_up_to(left, None) {
                if let Some(m) = Monomial::new(mu.clone(), nu) {
                    out.push(m);
                }
            }
        }
        out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
        out
    }

    /// The grade-`grade` part of `t`.
    pub fn component(&self, t: &KpElement, grade: &Grade) -> KpElement {
        t.component(grade)
    }

    /// One unit of every active color; a convenient extra expansion level.
    pub fn active_ones(&self) -> MultiDegree {
        let mut d = MultiDegree::zero(self.graph.k());
        for &c in self.graph.colors() {
            d.bump(c);
        }
        d
    }

    pub fn is_zero(&self, t: &KpElement) -> Result<bool, KpError> {
        self.equals(t, &self.zero())
    }
}

/// For every grade present, the join of the `mu`-degrees plus `extra`.
fn grade_levels<'a>(
    elements: impl Iterator<Item = &'a KpElement>,
    extra: &MultiDegree,
) -> BTreeMap<Grade, MultiDegree> {
    let mut levels: BTreeMap<Grade, MultiDegree> = BTreeMap::new();
    for t in elements {
        for m in t.terms().keys() {
            let d = m.mu().degree();
            levels
                .entry(m.grade())
                .and_modify(|l| *l = l.join(d))
                .or_insert_with(|| d.clone());
        }
    }
    for l in levels.values_mut() {
        *l = l.add(extra);
    }
    levels
}
