use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::scalar::Scalar;
use super::KpError;
use crate::kgraph::{Grade, GraphTag, Path};

/// `s_mu s_nu^*` with `s(mu) = s(nu)`; both empty at `v` is `p_v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    mu: Path,
    nu: Path,
}

impl Monomial {
    pub fn new(mu: Path, nu: Path) -> Option<Self> {
        (mu.source() == nu.source()).then_some(Monomial { mu, nu })
    }

    pub fn mu(&self) -> &Path {
        &self.mu
    }

    pub fn nu(&self) -> &Path {
        &self.nu
    }

    pub fn grade(&self) -> Grade {
        self.mu.degree().grade_minus(self.nu.degree())
    }

    pub fn is_vertex(&self) -> bool {
        self.mu.is_vertex() && self.nu.is_vertex()
    }

    pub fn star(&self) -> Monomial {
        Monomial {
            mu: self.nu.clone(),
            nu: self.mu.clone(),
        }
    }

    /// `|mu| + |nu|`, the length of the monomial as a word in generators.
    pub fn length(&self) -> usize {
        self.mu.len() + self.nu.len()
    }
}

/// A finite rational combination of monomials in the Kumjian–Pask algebra of
/// one (restricted) k-graph.
///
/// The arithmetic operators panic when the operands belong to different
/// graphs; use [`KpElement::try_add`] to get an error instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KpElement {
    tag: GraphTag,
    terms: BTreeMap<Monomial, Scalar>,
}

impl KpElement {
    pub fn zero(tag: GraphTag) -> Self {
        KpElement {
            tag,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(tag: GraphTag, m: Monomial, c: Scalar) -> Self {
        let mut out = Self::zero(tag);
        out.add_term(m, c);
        out
    }

    pub fn tag(&self) -> GraphTag {
        self.tag
    }

    pub(crate) fn retag(mut self, tag: GraphTag) -> Self {
        self.tag = tag;
        self
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * m`, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &KpElement) -> Result<KpElement, KpError> {
        self.same_graph(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &KpElement) -> Result<KpElement, KpError> {
        self.same_graph(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> KpElement {
        if c.is_zero() {
            return KpElement::zero(self.tag);
        }
        KpElement {
            tag: self.tag,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// The involution; coefficients are real so only the monomials flip.
    pub fn star(&self) -> KpElement {
        KpElement {
            tag: self.tag,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.star(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of the given grade.
    pub fn component(&self, grade: &Grade) -> KpElement {
        KpElement {
            tag: self.tag,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| &m.grade() == grade)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn grades(&self) -> BTreeSet<Grade> {
        self.terms.keys().map(Monomial::grade).collect()
    }

    /// True when every term has the given grade (vacuously for zero).
    pub fn is_homogeneous(&self, grade: &Grade) -> bool {
        self.terms.keys().all(|m| &m.grade() == grade)
    }

    pub(crate) fn same_graph(&self, other: &KpElement) -> Result<(), KpError> {
        if self.tag != other.tag {
            return Err(KpError::GraphMismatch);
        }
        Ok(())
    }
}

impl Add for &KpElement {
    type Output = KpElement;

    fn add(self, rhs: &KpElement) -> KpElement {
        self.try_add(rhs)
            .expect("adding elements of different graphs")
    }
}

impl Add for KpElement {
    type Output = KpElement;

    fn add(self, rhs: KpElement) -> KpElement {
        &self + &rhs
    }
}

impl Sub for &KpElement {
    type Output = KpElement;

    fn sub(self, rhs: &KpElement) -> KpElement {
        self.try_sub(rhs)
            .expect("subtracting elements of different graphs")
    }
}

impl Sub for KpElement {
    type Output = KpElement;

    fn sub(self, rhs: KpElement) -> KpElement {
        &self - &rhs
    }
}

impl Neg for &KpElement {
    type Output = KpElement;

    fn neg(self) -> KpElement {
        KpElement {
            tag: self.tag,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for KpElement {
    type Output = KpElement;

    fn neg(self) -> KpElement {
        -&self
    }
}

impl Mul<&Scalar> for &KpElement {
    type Output = KpElement;

    fn mul(self, rhs: &Scalar) -> KpElement {
        self.scale(rhs)
    }
}
