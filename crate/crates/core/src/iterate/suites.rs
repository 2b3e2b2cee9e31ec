//! Exhaustive suites for the ladder modules: `Rtheta` as a module map, the
//! `nu`/flip compatibilities, and the hexagon for `Rtheta`.
//!
//! Every suite runs over all stages `1 <= m < k`, all colors, and balanced
//! basis tensors whose coefficient lengths add up to at most `level`.

use std::collections::BTreeMap;

use super::balanced::BalancedTensor;
use super::module::{Generator, ModuleElement, ModuleSpace};
use super::stage::{Ladder, Stage};
use super::IterateError;
use crate::kgraph::{KGraph, VertexId};
use crate::kpalg::{literal, KpAlgebra, KpElement, Monomial};
use crate::report::{Recorder, VerificationReport};

pub(crate) type Outcome = Result<Option<(String, String)>, IterateError>;

pub(crate) fn compare_tensors(
    space: &ModuleSpace,
    a: &BalancedTensor,
    b: &BalancedTensor,
) -> Outcome {
    Ok((!a.equals(space, b)?).then(|| (a.render(space), b.render(space))))
}

pub(crate) fn compare_modules(
    space: &ModuleSpace,
    a: &ModuleElement,
    b: &ModuleElement,
) -> Outcome {
    Ok((!space.equals(a, b)?).then(|| (space.render(a), space.render(b))))
}

pub(crate) fn compare_elements(alg: &KpAlgebra, a: &KpElement, b: &KpElement) -> Outcome {
    Ok((!alg.equals(a, b)?).then(|| {
        (
            literal::render(alg.graph(), a),
            literal::render(alg.graph(), b),
        )
    }))
}

/// `p_v`, `s_f` and `s_f^*` for the base algebra of a module space.
pub fn generators(space: &ModuleSpace) -> Vec<Generator> {
    let g = space.base().graph();
    let mut out: Vec<Generator> = g.vertices().map(Generator::Vertex).collect();
    out.extend(g.edges().map(Generator::Edge));
    out.extend(g.edges().map(Generator::EdgeStar));
    out
}

/// All words of the given length in the colors `1..=k`.
pub(crate) fn color_words(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=k).map(move |c| {
                    let mut next = w.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    out
}

/// Pure tensors `(t_1 ⊗ S_1) ⊗ ... ⊗ (t_n ⊗ S_n)` with `t_i` composable
/// tuples of the given words, `S_i` base monomials at `s(t_i)` with
/// `sum |S_i| <= level`, skipping tensors that vanish because `S_i` cannot
/// meet `t_{i+1}`.
pub fn balanced_basis(
    space: &ModuleSpace,
    shape: &[Vec<usize>],
    level: u32,
) -> Result<Vec<BalancedTensor>, IterateError> {
    let b = space.base();
    let g = space.graph();
    let mut monomials: BTreeMap<VertexId, Vec<Monomial>> = BTreeMap::new();
    for v in g.vertices() {
        monomials.insert(v, b.monomials(level, Some(v)));
    }
    let tuples = shape
        .iter()
        .map(|w| space.tuples(w))
        .collect::<Result<Vec<_>, _>>()?;
    let mut partial: Vec<(Vec<ModuleElement>, u32, Option<VertexId>)> = vec![(Vec::new(), 0, None)];
    for choices in &tuples {
        let mut next = Vec::new();
        for (factors, used, need) in &partial {
            for t in choices {
                if need.is_some_and(|v| v != g.range(t[0])) {
                    continue;
                }
                let s = g.source(*t.last().expect("nonempty"));
                for m in &monomials[&s] {
                    let len = m.length() as u32;
                    if used + len > level {
                        continue;
                    }
                    let mut f = factors.clone();
                    f.push(space.pure(t, &b.monomial_element(m.clone()))?);
                    next.push((f, used + len, Some(m.nu().range())));
                }
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(f, _, _)| BalancedTensor::pure(f))
        .collect()
}

fn singles(colors: &[usize]) -> Vec<Vec<usize>> {
    colors.iter().map(|&c| vec![c]).collect()
}

fn label(stage: &Stage, what: &str, x: &BalancedTensor) -> String {
    format!("m={} {what} on {}", stage.m(), x.render(stage.space()))
}

/// `Rtheta` commutes with the left and right actions of the generators,
/// preserves inner products, is its own inverse up to swapping colors and
/// is the identity for equal colors; `nu` round trips; `s_f` and `s_f^*` are
/// adjoint on every module.
pub fn check_module(graph: &KGraph, level: u32, timed: bool) -> VerificationReport {
    let mut rec = Recorder::new("module");
    match Ladder::new(graph) {
        Ok(ladder) => {
            for stage in ladder.stages() {
                module_stage(stage, level, &mut rec);
            }
        }
        Err(e) => rec.fail("ladder".into(), format!("error: {e}"), String::new()),
    }
    rec.finish(timed)
}

fn module_stage(stage: &Stage, level: u32, rec: &mut Recorder) {
    let sp = stage.space();
    let gens = generators(sp);
    let k = stage.graph().k();
    let b = sp.base();

    for word in color_words(k, 2) {
        let shape = singles(&word);
        let basis = match balanced_basis(sp, &shape, level) {
            Ok(x) => x,
            Err(e) => {
                rec.fail(
                    format!("basis {word:?}"),
                    format!("error: {e}"),
                    String::new(),
                );
                continue;
            }
        };
        let units = balanced_basis(sp, &shape, 0).unwrap_or_default();
        for x in &basis {
            let rx = x.rtheta(sp, 0);
            for &gen in &gens {
                let outcome = (|| {
                    let lhs = x.act(sp, gen)?.rtheta(sp, 0)?;
                    let rhs = rx.clone()?.act(sp, gen)?;
                    compare_tensors(sp, &lhs, &rhs)
                })();
                rec.check_outcome(outcome, || {
                    format!(
                        "{} with {}",
                        label(stage, "Rtheta(g · X) = g · Rtheta(X)", x),
                        gen.render(sp.graph())
                    )
                });
                let outcome = (|| {
                    let t = gen_element(b, gen)?;
                    let lhs = x.right_act(sp, &t)?.rtheta(sp, 0)?;
                    let rhs = rx.clone()?.right_act(sp, &t)?;
                    compare_tensors(sp, &lhs, &rhs)
                })();
                rec.check_outcome(outcome, || {
                    format!(
                        "{} with {}",
                        label(stage, "Rtheta(X · g) = Rtheta(X) · g", x),
                        gen.render(sp.graph())
                    )
                });
            }
            let outcome = (|| compare_tensors(sp, &rx.clone()?.rtheta(sp, 0)?, x))();
            rec.check_outcome(outcome, || label(stage, "Rtheta Rtheta = id", x));
            if word[0] == word[1] {
                let outcome = (|| compare_tensors(sp, &rx.clone()?, x))();
                rec.check_outcome(outcome, || label(stage, "Rtheta_ii = id", x));
            }
            for y in &units {
                let outcome = (|| {
                    let before = x.inner(sp, y)?;
                    let after = rx.clone()?.inner(sp, &y.rtheta(sp, 0)?)?;
                    compare_elements(b, &after, &before)
                })();
                rec.check_outcome(outcome, || {
                    format!(
                        "{} and Y = {}",
                        label(stage, "<Rtheta X, Rtheta Y> = <X, Y>", x),
                        y.render(sp)
                    )
                });
            }
            let outcome = (|| {
                let merged = x.merge(sp, 0)?;
                let back = BalancedTensor::split_all(sp, &merged.normalize(sp)?)?;
                compare_tensors(sp, &back, x)
            })();
            rec.check_outcome(outcome, || label(stage, "nu^-1 nu = id", x));
        }
    }

    for c in 1..=k {
        let basis = sp.basis(&[c], level).unwrap_or_default();
        let units = sp.basis(&[c], 0).unwrap_or_default();
        for f in b.graph().edges() {
            for x in &basis {
                for y in &units {
                    let outcome = (|| {
                        let lhs = sp.inner(&sp.act(Generator::Edge(f), x)?, y)?;
                        let rhs = sp.inner(x, &sp.act(Generator::EdgeStar(f), y)?)?;
                        compare_elements(b, &lhs, &rhs)
                    })();
                    rec.check_outcome(outcome, || {
                        format!(
                            "m={} <s[{f}] x, y> = <x, s[{f}]* y> with x = {}, y = {}",
                            stage.m(),
                            sp.render(x),
                            sp.render(y),
                            f = sp.graph().edge_name(f)
                        )
                    });
                }
            }
        }
    }
}

fn gen_element(b: &KpAlgebra, gen: Generator) -> Result<KpElement, IterateError> {
    Ok(match gen {
        Generator::Vertex(v) => b.vertex(v),
        Generator::Edge(e) => b.edge(e)?,
        Generator::EdgeStar(e) => b.edge_star(e)?,
    })
}

/// The three `nu`/flip compatibilities, plus agreement of the two ways of
/// merging three factors.
pub fn check_mlem1(graph: &KGraph, level: u32, timed: bool) -> VerificationReport {
    let mut rec = Recorder::new("mlem1");
    let ladder = match Ladder::new(graph) {
        Ok(l) => l,
        Err(e) => {
            rec.fail("ladder".into(), format!("error: {e}"), String::new());
            return rec.finish(timed);
        }
    };
    for stage in ladder.stages() {
        let sp = stage.space();
        for w in color_words(graph.k(), 3) {
            let (l, j, i) = (w[0], w[1], w[2]);
            let run = |shape: Vec<Vec<usize>>,
                       rec: &mut Recorder,
                       what: &str,
                       f: &dyn Fn(&BalancedTensor) -> Outcome| {
                match balanced_basis(sp, &shape, level) {
                    Ok(basis) => {
                        for x in &basis {
                            rec.check_outcome(f(x), || label(stage, what, x));
                        }
                    }
                    Err(e) => rec.fail(
                        format!("basis {shape:?}"),
                        format!("error: {e}"),
                        String::new(),
                    ),
                }
            };
            run(
                vec![vec![l, j], vec![i]],
                &mut rec,
                "(1) theta ⊗ 1 after nu",
                &|x| {
                    let lhs = x.merge(sp, 0)?.flip(sp, 0, 0)?;
                    let rhs = x.flip(sp, 0, 0)?.merge(sp, 0)?;
                    compare_tensors(sp, &lhs, &rhs)
                },
            );
            run(
                vec![vec![l], vec![j, i]],
                &mut rec,
                "(2) nu after 1 ⊗ theta",
                &|x| {
                    let lhs = x.flip(sp, 1, 0)?.merge(sp, 0)?;
                    let rhs = x.merge(sp, 0)?.flip(sp, 0, 1)?;
                    compare_tensors(sp, &lhs, &rhs)
                },
            );
            run(
                vec![vec![l], vec![j, i]],
                &mut rec,
                "(3) nu nu nu^-1 = nu",
                &|x| {
                    let lhs = x.split(sp, 1, 1)?.merge(sp, 0)?.merge(sp, 0)?;
                    let rhs = x.merge(sp, 0)?;
                    compare_tensors(sp, &lhs, &rhs)
                },
            );
            run(
                singles(&w),
                &mut rec,
                "left and right merging agree",
                &|x| compare_modules(sp, &x.normalize_left(sp)?, &x.normalize(sp)?),
            );
        }
    }
    rec.finish(timed)
}

fn flip_letters(
    sp: &ModuleSpace,
    x: &ModuleElement,
    letters: &[usize],
) -> Result<ModuleElement, IterateError> {
    let mut cur = x.clone();
    for &p in letters {
        cur = sp.flip(&cur, p)?;
    }
    Ok(cur)
}

fn rthetas(
    sp: &ModuleSpace,
    x: &BalancedTensor,
    positions: &[usize],
) -> Result<BalancedTensor, IterateError> {
    let mut cur = x.clone();
    for &p in positions {
        cur = cur.rtheta(sp, p)?;
    }
    Ok(cur)
}

/// A composite of `Rtheta`s equals merging, the same composite of flips on
/// the letters, and splitting again.
fn route_agrees(sp: &ModuleSpace, x: &BalancedTensor, positions: &[usize]) -> Outcome {
    let direct = rthetas(sp, x, positions)?;
    let letters = flip_letters(sp, &x.normalize(sp)?, positions)?;
    let routed = BalancedTensor::split_all(sp, &letters)?;
    compare_tensors(sp, &direct, &routed)
}

/// Two- and four-fold composites of `Rtheta` computed through the merged
/// module.
pub fn check_mlem2(graph: &KGraph, level: u32, timed: bool) -> VerificationReport {
    let mut rec = Recorder::new("mlem2");
    let ladder = match Ladder::new(graph) {
        Ok(l) => l,
        Err(e) => {
            rec.fail("ladder".into(), format!("error: {e}"), String::new());
            return rec.finish(timed);
        }
    };
    for stage in ladder.stages() {
        let sp = stage.space();
        for w in color_words(graph.k(), 3) {
            let basis = match balanced_basis(sp, &singles(&w), level) {
                Ok(b) => b,
                Err(e) => {
                    rec.fail(format!("basis {w:?}"), format!("error: {e}"), String::new());
                    continue;
                }
            };
            for x in &basis {
                rec.check_outcome(route_agrees(sp, x, &[1, 0]), || {
                    label(
                        stage,
                        "(Rtheta ⊗ 1)(1 ⊗ Rtheta) through the merged module",
                        x,
                    )
                });
                rec.check_outcome(route_agrees(sp, x, &[0, 1, 0, 1]), || {
                    label(stage, "four-fold composite through the merged module", x)
                });
            }
        }
    }
    rec.finish(timed)
}

/// `Rtheta_ii = id`, symmetry, and the hexagon for `Rtheta`, directly and
/// through the merged module.
pub fn check_hexagon(graph: &KGraph, level: u32, timed: bool) -> VerificationReport {
    let mut rec = Recorder::new("hexagon");
    let ladder = match Ladder::new(graph) {
        Ok(l) => l,
        Err(e) => {
            rec.fail("ladder".into(), format!("error: {e}"), String::new());
            return rec.finish(timed);
        }
    };
    for stage in ladder.stages() {
        let sp = stage.space();
        for w in color_words(graph.k(), 2) {
            for x in balanced_basis(sp, &singles(&w), level).unwrap_or_default() {
                let outcome = (|| compare_tensors(sp, &rthetas(sp, &x, &[0, 0])?, &x))();
                rec.check_outcome(outcome, || label(stage, "symmetry", &x));
                if w[0] == w[1] {
                    let outcome = (|| compare_tensors(sp, &x.rtheta(sp, 0)?, &x))();
                    rec.check_outcome(outcome, || label(stage, "Rtheta_ii = id", &x));
                }
            }
        }
        for w in color_words(graph.k(), 3) {
            let basis = match balanced_basis(sp, &singles(&w), level) {
                Ok(b) => b,
                Err(e) => {
                    rec.fail(format!("basis {w:?}"), format!("error: {e}"), String::new());
                    continue;
                }
            };
            for x in &basis {
                let outcome = (|| {
                    compare_tensors(
                        sp,
                        &rthetas(sp, x, &[0, 1, 0])?,
                        &rthetas(sp, x, &[1, 0, 1])?,
                    )
                })();
                rec.check_outcome(outcome, || label(stage, "hexagon", x));
                let outcome = (|| {
                    compare_tensors(
                        sp,
                        &rthetas(sp, x, &[0, 1, 0, 1])?,
                        &rthetas(sp, x, &[1, 0])?,
                    )
                })();
                rec.check_outcome(outcome, || label(stage, "four against two", x));
                for positions in [[0, 1, 0], [1, 0, 1]] {
                    rec.check_outcome(route_agrees(sp, x, &positions), || {
                        label(stage, &format!("routes agree for {positions:?}"), x)
                    });
                }
            }
        }
    }
    rec.finish(timed)
}
