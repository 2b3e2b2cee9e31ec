use super::module::{Generator, ModuleElement, ModuleSpace};
use super::IterateError;
use crate::kpalg::KpElement;

/// A sum of pure tensors `X_1 ⊗_B ... ⊗_B X_n`, each `X_i` in `Y_{w_i} ⊗ B`.
///
/// Pure tensors are kept unreduced; [`BalancedTensor::normalize`] maps the
/// whole sum isomorphically onto `Y_{w_1 ... w_n} ⊗ B`, which is how
/// equality is decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedTensor {
    shape: Vec<Vec<usize>>,
    terms: Vec<Vec<ModuleElement>>,
}

impl BalancedTensor {
    pub fn pure(factors: Vec<ModuleElement>) -> Result<Self, IterateError> {
        if factors.is_empty() {
            return Err(IterateError::ShapeMismatch);
        }
        let shape = factors.iter().map(|f| f.word().to_vec()).collect();
        Ok(BalancedTensor {
            shape,
            terms: vec![factors],
        })
    }

    pub fn shape(&self) -> &[Vec<usize>] {
        &self.shape
    }

    pub fn terms(&self) -> &[Vec<ModuleElement>] {
        &self.terms
    }

    /// The first letter of every factor flattened; valid when every factor
    /// has a single letter.
    fn letters(&self) -> Vec<usize> {
        self.shape.iter().flatten().copied().collect()
    }

    fn with_terms(shape: Vec<Vec<usize>>, terms: Vec<Vec<ModuleElement>>) -> Self {
        let terms = terms
            .into_iter()
            .filter(|t| t.iter().all(|f| !f.is_zero()))
            .collect();
        BalancedTensor { shape, terms }
    }

    pub fn render(&self, space: &ModuleSpace) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|t| {
                t.iter()
                    .map(|f| format!("[{}]", space.render(f)))
                    .collect::<Vec<_>>()
                    .join(" ⊗ ")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `x ⊗ (S · z)` summed over the terms `x ⊗ S` of `left`.
pub fn merge_pair(
    space: &ModuleSpace,
    left: &ModuleElement,
    right: &ModuleElement,
) -> Result<ModuleElement, IterateError> {
    let word: Vec<usize> = left.word().iter().chain(right.word()).copied().collect();
    let mut out = space.zero(word);
    for (t, s) in left.coeffs() {
        let moved = space.act_element(s, right)?;
        for (u, c) in moved.coeffs() {
            let tuple: Vec<_> = t.iter().chain(u).copied().collect();
            let piece = space.pure(&tuple, c)?;
            out = space.add(&out, &piece)?;
        }
    }
    Ok(out)
}

/// `(t_1..t_n) ⊗ T  ->  (t_1..t_at ⊗ p) ⊗ (t_at+1..t_n ⊗ T)`, one pure
/// tensor per term.
pub fn split_module(
    space: &ModuleSpace,
    x: &ModuleElement,
    at: usize,
) -> Result<Vec<(ModuleElement, ModuleElement)>, IterateError> {
    if at == 0 || at >= x.word().len() {
        return Err(IterateError::ShapeMismatch);
    }
    let mut out = Vec::new();
    for (t, s) in x.coeffs() {
        let head = space.unit_tensor(&t[..at])?;
        let tail = space.pure(&t[at..], s)?;
        out.push((head, tail));
    }
    Ok(out)
}

impl BalancedTensor {
    fn check_pos(&self, pos: usize, span: usize) -> Result<(), IterateError> {
        if pos + span > self.shape.len() {
            return Err(IterateError::ShapeMismatch);
        }
        Ok(())
    }

    /// Absorbs factor `pos` into factor `pos + 1`.
    pub fn merge(&self, space: &ModuleSpace, pos: usize) -> Result<Self, IterateError> {
        self.check_pos(pos, 2)?;
        let mut shape = self.shape.clone();
        let tail = shape.remove(pos + 1);
        shape[pos].extend(tail);
        let mut terms = Vec::new();
        for t in &self.terms {
            let merged = merge_pair(space, &t[pos], &t[pos + 1])?;
            let mut next = t.clone();
            next.remove(pos + 1);
            next[pos] = merged;
            terms.push(next);
        }
        Ok(Self::with_terms(shape, terms))
    }

    /// Splits factor `pos` after its first `at` letters.
    pub fn split(&self, space: &ModuleSpace, pos: usize, at: usize) -> Result<Self, IterateError> {
        self.check_pos(pos, 1)?;
        let mut shape = self.shape.clone();
        let cut = at.min(shape[pos].len());
        let tail = shape[pos].split_off(cut);
        shape.insert(pos + 1, tail);
        let mut terms = Vec::new();
        for t in &self.terms {
            for (head, tail) in split_module(space, &t[pos], at)? {
                let mut next = t.clone();
                next[pos] = head;
                next.insert(pos + 1, tail);
                terms.push(next);
            }
        }
        Ok(Self::with_terms(shape, terms))
    }

    /// Flips letters `letter, letter + 1` inside factor `pos`.
    pub fn flip(
        &self,
        space: &ModuleSpace,
        pos: usize,
        letter: usize,
    ) -> Result<Self, IterateError> {
        self.check_pos(pos, 1)?;
        if letter + 1 >= self.shape[pos].len() {
            return Err(IterateError::ShapeMismatch);
        }
        let mut shape = self.shape.clone();
        shape[pos].swap(letter, letter + 1);
        let mut terms = Vec::new();
        for t in &self.terms {
            let mut next = t.clone();
            next[pos] = space.flip(&t[pos], letter)?;
            terms.push(next);
        }
        Ok(Self::with_terms(shape, terms))
    }

    /// Left action on the first factor.
    pub fn act(&self, space: &ModuleSpace, gen: Generator) -> Result<Self, IterateError> {
        let mut terms = Vec::new();
        for t in &self.terms {
            let mut next = t.clone();
            next[0] = space.act(gen, &t[0])?;
            terms.push(next);
        }
        Ok(Self::with_terms(self.shape.clone(), terms))
    }

    /// Right action on the last factor.
    pub fn right_act(&self, space: &ModuleSpace, t: &KpElement) -> Result<Self, IterateError> {
        let mut terms = Vec::new();
        for term in &self.terms {
            let mut next = term.clone();
            let last = next.len() - 1;
            next[last] = space.right_act(&term[last], t)?;
            terms.push(next);
        }
        Ok(Self::with_terms(self.shape.clone(), terms))
    }

    /// The flip `Rtheta` on single-letter factors `pos, pos + 1`: merge, flip
    /// the two letters, split again.
    pub fn rtheta(&self, space: &ModuleSpace, pos: usize) -> Result<Self, IterateError> {
        self.check_pos(pos, 2)?;
        if self.shape[pos].len() != 1 || self.shape[pos + 1].len() != 1 {
            return Err(IterateError::ShapeMismatch);
        }
        self.merge(space, pos)?
            .flip(space, pos, 0)?
            .split(space, pos, 1)
    }

    /// Merges right to left into one module element.
    pub fn normalize(&self, space: &ModuleSpace) -> Result<ModuleElement, IterateError> {
        let mut out = space.zero(self.shape.concat());
        for t in &self.terms {
            let mut acc = t.last().expect("nonempty").clone();
            for f in t[..t.len() - 1].iter().rev() {
                acc = merge_pair(space, f, &acc)?;
            }
            out = space.add(&out, &acc)?;
        }
        Ok(out)
    }

    /// Merges left to right into one module element.
    pub fn normalize_left(&self, space: &ModuleSpace) -> Result<ModuleElement, IterateError> {
        let mut out = space.zero(self.shape.concat());
        for t in &self.terms {
            let mut acc = t[0].clone();
            for f in &t[1..] {
                acc = merge_pair(space, &acc, f)?;
            }
            out = space.add(&out, &acc)?;
        }
        Ok(out)
    }

    /// Splits a module element into one letter per factor.
    pub fn split_all(space: &ModuleSpace, x: &ModuleElement) -> Result<Self, IterateError> {
        let mut cur = BalancedTensor {
            shape: vec![x.word().to_vec()],
            terms: vec![vec![x.clone()]],
        };
        cur = Self::with_terms(cur.shape, cur.terms);
        for pos in 0..x.word().len().saturating_sub(1) {
            cur = cur.split(space, pos, 1)?;
        }
        Ok(cur)
    }

    /// `<X, Y>` computed factor by factor: `<x_n, <.., <x_1, y_1> y_2 ..> y_n>`.
    pub fn inner(&self, space: &ModuleSpace, other: &Self) -> Result<KpElement, IterateError> {
        if self.shape != other.shape {
            return Err(IterateError::ShapeMismatch);
        }
        let b = space.base();
        let mut out = b.zero();
        for x in &self.terms {
            for y in &other.terms {
                let mut acc = space.inner(&x[0], &y[0])?;
                for (xi, yi) in x.iter().zip(y).skip(1) {
                    let moved = space.act_element(&acc, yi)?;
                    acc = space.inner(xi, &moved)?;
                }
                out = &out + &acc;
            }
        }
        Ok(out)
    }

    pub fn equals(&self, space: &ModuleSpace, other: &Self) -> Result<bool, IterateError> {
        if self.shape != other.shape {
            return Ok(false);
        }
        space.equals(&self.normalize(space)?, &other.normalize(space)?)
    }

    /// True when every factor is a single letter.
    pub fn is_split(&self) -> bool {
        self.shape.iter().all(|w| w.len() == 1)
    }

    pub fn colors(&self) -> Vec<usize> {
        self.letters()
    }
}
