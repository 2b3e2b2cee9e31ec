//! The dictionary into `KP(Lambda_{m+1})`: the Toeplitz relations and
//! covariance of `(pi, t)`, the commutation relations of the `sigma_i`, the
//! absorption identity, and the isomorphism `phi` of the next stage.

use super::balanced::BalancedTensor;
use super::module::{Generator, ModuleElement, ModuleSpace};
use super::stage::{Ladder, Stage};
use super::suites::{compare_elements, compare_modules, generators};
use super::IterateError;
use crate::kgraph::{Grade, KGraph, MultiDegree};
use crate::kpalg::{literal, KpElement};
use crate::report::{Recorder, VerificationReport};

/// `sum theta_{x, y}` on a module, `theta_{x,y}(z) = x <y, z>`.
#[derive(Clone, Debug, Default)]
pub struct ModuleRankOne {
    pub terms: Vec<(ModuleElement, ModuleElement)>,
}

impl ModuleRankOne {
    pub fn apply(
        &self,
        space: &ModuleSpace,
        z: &ModuleElement,
    ) -> Result<ModuleElement, IterateError> {
        let mut out = space.zero(z.word().to_vec());
        for (x, y) in &self.terms {
            let piece = space.right_act(x, &space.inner(y, z)?)?;
            out = space.add(&out, &piece)?;
        }
        Ok(out)
    }
}

/// The left action of a base generator on `Y_{m+1} ⊗ B` as an explicit sum
/// of rank-one operators.
pub fn phi(stage: &Stage, gen: Generator) -> Result<ModuleRankOne, IterateError> {
    let g = stage.graph();
    let sp = stage.space();
    let b = stage.base();
    let c = stage.new_color();
    let mut terms = Vec::new();
    match gen {
        Generator::Vertex(v) => {
            for &e in g.in_edges(v, c) {
                let x = sp.unit_tensor(&[e])?;
                terms.push((x.clone(), x));
            }
        }
        Generator::Edge(f) | Generator::EdgeStar(f) => {
            for &e in g.in_edges(g.source(f), c) {
                let (e2, f2) = g.flip(f, e).expect("composable");
                let pushed = sp.pure(&[e2], &b.edge(f2)?)?;
                let plain = sp.unit_tensor(&[e])?;
                terms.push(match gen {
                    Generator::Edge(_) => (pushed, plain),
                    _ => (plain, pushed),
                });
            }
        }
    }
    Ok(ModuleRankOne { terms })
}

/// `t^(1)(sum theta_{x,y}) = sum t(x) t(y)^*`
pub fn t_one(stage: &Stage, op: &ModuleRankOne) -> Result<KpElement, IterateError> {
    let tg = stage.target();
    let mut out = tg.zero();
    for (x, y) in &op.terms {
        out = &out + &tg.mul(&stage.t(x)?, &stage.t(y)?.star())?;
    }
    Ok(out)
}

fn gen_in_target(stage: &Stage, gen: Generator) -> Result<KpElement, IterateError> {
    let b = stage.base();
    let s = match gen {
        Generator::Vertex(v) => b.vertex(v),
        Generator::Edge(e) => b.edge(e)?,
        Generator::EdgeStar(e) => b.edge_star(e)?,
    };
    stage.pi(&s)
}

fn run_ladder(
    graph: &KGraph,
    suite: &str,
    timed: bool,
    mut body: impl FnMut(&Stage, &mut Recorder),
) -> VerificationReport {
    let mut rec = Recorder::new(suite);
    match Ladder::new(graph) {
        Ok(ladder) => {
            for stage in ladder.stages() {
                body(stage, &mut rec);
            }
        }
        Err(e) => rec.fail("ladder".into(), format!("error: {e}"), String::new()),
    }
    rec.finish(timed)
}

/// The pair `(pi, t)` on `Y_{m+1} ⊗ B` into `KP(Lambda_{m+1})` at every
/// stage: Toeplitz relations, covariance with explicit rank-one sums, the
/// commutation relations of the `sigma_i`, and the grading.
pub fn check_representation(graph: &KGraph, level: u32, timed: bool) -> VerificationReport {
    run_ladder(graph, "rep", timed, |stage, rec| {
        rep_stage(stage, level, rec)
    })
}

fn rep_stage(stage: &Stage, level: u32, rec: &mut Recorder) {
    let sp = stage.space();
    let tg = stage.target();
    let g = stage.graph();
    let m = stage.m();
    let c = stage.new_color();
    let basis = sp.basis(&[c], level).unwrap_or_default();
    let gens = generators(sp);

    for x in &basis {
        for y in &basis {
            let outcome = (|| {
                let lhs = tg.mul(&stage.t(x)?.star(), &stage.t(y)?)?;
                let rhs = stage.pi(&sp.inner(x, y)?)?;
                compare_elements(tg, &lhs, &rhs)
            })();
            rec.check_outcome(outcome, || {
                format!(
                    "m={m} (a) t(x)* t(y) = pi(<x, y>) with x = {}, y = {}",
                    sp.render(x),
                    sp.render(y)
                )
            });
        }
        for &gen in &gens {
            let outcome = (|| {
                let lhs = stage.t(&sp.act(gen, x)?)?;
                let rhs = tg.mul(&gen_in_target(stage, gen)?, &stage.t(x)?)?;
                compare_elements(tg, &lhs, &rhs)
            })();
            rec.check_outcome(outcome, || {
                format!(
                    "m={m} (b) t(S · x) = pi(S) t(x) with S = {}, x = {}",
                    gen.render(g),
                    sp.render(x)
                )
            });
        }
    }

    for &gen in &gens {
        let op = match phi(stage, gen) {
            Ok(op) => op,
            Err(e) => {
                rec.fail(
                    format!("m={m} phi({})", gen.render(g)),
                    format!("error: {e}"),
                    String::new(),
                );
                continue;
            }
        };
        let outcome = (|| compare_elements(tg, &t_one(stage, &op)?, &gen_in_target(stage, gen)?))();
        rec.check_outcome(outcome, || {
            format!("m={m} (c) t^(1)(phi(S)) = pi(S) with S = {}", gen.render(g))
        });
        for z in &basis {
            let outcome = (|| compare_modules(sp, &op.apply(sp, z)?, &sp.act(gen, z)?))();
            rec.check_outcome(outcome, || {
                format!(
                    "m={m} (c) rank-one form of {} on {}",
                    gen.render(g),
                    sp.render(z)
                )
            });
        }
    }

    let edges: Vec<_> = g.edges().filter(|&e| g.color(e) <= c).collect();
    for &x in &edges {
        for &y in &edges {
            let outcome = (|| {
                let lhs = tg.mul(&stage.sigma(x)?, &stage.sigma(y)?)?;
                let rhs = match g.flip(x, y) {
                    Some((y2, x2)) => tg.mul(&stage.sigma(y2)?, &stage.sigma(x2)?)?,
                    None => tg.zero(),
                };
                compare_elements(tg, &lhs, &rhs)
            })();
            rec.check_outcome(outcome, || {
                format!(
                    "m={m} (d) sigma(x) sigma(y) = sigma(y') sigma(x') with x = {}, y = {}",
                    g.edge_name(x),
                    g.edge_name(y)
                )
            });
        }
        let outcome = (|| {
            let s = stage.sigma(x)?;
            let want = Grade::from_degree(&MultiDegree::unit(g.k(), g.color(x)));
            Ok::<_, IterateError>(
                (!s.is_homogeneous(&want) || s.is_zero())
                    .then(|| (literal::render(tg.graph(), &s), format!("grade {want}"))),
            )
        })();
        rec.check_outcome(outcome, || {
            format!("m={m} (e) grade of sigma({})", g.edge_name(x))
        });
    }
    let unit = Grade::from_degree(&MultiDegree::unit(g.k(), c));
    for x in &basis {
        let outcome = (|| {
            let (_, s) = x.coeffs().iter().next().expect("basis element");
            let (mono, _) = s.terms().iter().next().expect("monomial");
            let want = unit.add(&mono.grade());
            let tx = stage.t(x)?;
            Ok::<_, IterateError>(
                (!tx.is_homogeneous(&want))
                    .then(|| (literal::render(tg.graph(), &tx), format!("grade {want}"))),
            )
        })();
        rec.check_outcome(outcome, || {
            format!("m={m} (e) grade of t({})", sp.render(x))
        });
    }
}

/// `V_j (1 ⊗ V_i)(theta_ij ⊗ 1) = V_i (1 ⊗ V_j)` on `x ⊗ y ⊗ z` for edges of
/// colors up to `m + 1` and monomials `z` of length at most one.
pub fn check_veq(graph: &KGraph, timed: bool) -> VerificationReport {
    run_ladder(graph, "veq", timed, |stage, rec| {
        let g = stage.graph();
        let tg = stage.target();
        let zs: Vec<KpElement> = tg
            .monomials(1, None)
            .into_iter()
            .map(|m| tg.monomial_element(m))
            .collect();
        let edges: Vec<_> = tg.graph().edges().collect();
        for &x in &edges {
            for &y in &edges {
                for z in &zs {
                    let outcome = (|| {
                        let absorb = |e, t: &KpElement| tg.mul(&tg.edge(e)?, t);
                        let lhs = match g.flip(x, y) {
                            Some((y2, x2)) => absorb(y2, &absorb(x2, z)?)?,
                            None => tg.zero(),
                        };
                        let rhs = absorb(x, &absorb(y, z)?)?;
                        compare_elements(tg, &lhs, &rhs)
                    })();
                    rec.check_outcome(outcome, || {
                        format!(
                            "m={} x = {}, y = {}, z = {}",
                            stage.m(),
                            g.edge_name(x),
                            g.edge_name(y),
                            literal::render(tg.graph(), z)
                        )
                    });
                }
            }
        }
    })
}

/// `phi((x ⊗ S) ⊗ T) = x ⊗ pi(S) T`, from `(Y_j ⊗ B) ⊗ KP(Lambda_{m+1})`
/// to `Y_j ⊗ KP(Lambda_{m+1})`.
fn phi_iso(
    stage: &Stage,
    target: &ModuleSpace,
    x: &ModuleElement,
    t: &KpElement,
) -> Result<ModuleElement, IterateError> {
    let tg = stage.target();
    let mut out = target.zero(x.word().to_vec());
    for (tuple, s) in x.coeffs() {
        let piece = target.pure(tuple, &tg.mul(&stage.pi(s)?, t)?)?;
        out = target.add(&out, &piece)?;
    }
    Ok(out)
}

/// `phi` intertwines the left actions of `p_v`, `s_y`, `s_y^*` (colors up
/// to `m`) and `sigma_{m+1}(y)`, the last one computed through
/// `Rtheta_{m+1, j}` and absorption; and `phi (1 ⊗ V)(nu^-1 ⊗ 1)` agrees
/// with `1 ⊗ V`.
pub fn check_iota_phi(graph: &KGraph, level: u32, timed: bool) -> VerificationReport {
    run_ladder(graph, "iotaphi", timed, |stage, rec| {
        let sp = stage.space();
        let target = stage.target_space();
        let tg = stage.target();
        let g = stage.graph();
        let m = stage.m();
        let c = stage.new_color();
        let gens = generators(sp);
        let ts = tg.monomials(level, None);
        for j in 1..=g.k() {
            let xs = sp.basis(&[j], level).unwrap_or_default();
            for x in &xs {
                let used = x
                    .coeffs()
                    .values()
                    .next()
                    .and_then(|s| s.terms().keys().next())
                    .map_or(0, |mono| mono.length());
                for tm in ts.iter().filter(|t| t.length() + used <= level as usize) {
                    let t = tg.monomial_element(tm.clone());
                    let describe = |what: &str| {
                        format!(
                            "m={m} j={j} {what} on ({}) ⊗ ({})",
                            sp.render(x),
                            literal::render(tg.graph(), &t)
                        )
                    };
                    for &gen in &gens {
                        let outcome = (|| {
                            let lhs = phi_iso(stage, &target, &sp.act(gen, x)?, &t)?;
                            let rhs = target.act(gen, &phi_iso(stage, &target, x, &t)?)?;
                            compare_modules(&target, &lhs, &rhs)
                        })();
                        rec.check_outcome(outcome, || describe(&gen.render(g)));
                    }
                    for y in g.edges_of_color(c) {
                        let outcome = (|| {
                            let pair =
                                BalancedTensor::pure(vec![sp.unit_tensor(&[y])?, x.clone()])?;
                            let flipped = pair.rtheta(sp, 0)?;
                            let mut lhs = target.zero(x.word().to_vec());
                            for term in flipped.terms() {
                                let absorbed = tg.mul(&stage.t(&term[1])?, &t)?;
                                let piece = phi_iso(stage, &target, &term[0], &absorbed)?;
                                lhs = target.add(&lhs, &piece)?;
                            }
                            let rhs =
                                target.act(Generator::Edge(y), &phi_iso(stage, &target, x, &t)?)?;
                            compare_modules(&target, &lhs, &rhs)
                        })();
                        rec.check_outcome(outcome, || {
                            describe(&format!("sigma_{c}({})", g.edge_name(y)))
                        });
                    }
                }
            }
            for tuple in sp.tuples(&[j, c]).unwrap_or_default() {
                let s_b = stage
                    .base()
                    .monomials(level.saturating_sub(1), Some(g.source(tuple[1])));
                for s in s_b {
                    let outcome = (|| {
                        let s = stage.base().monomial_element(s.clone());
                        let whole = sp.pure(&tuple, &s)?;
                        let mut lhs = target.zero(vec![j]);
                        for (head, tail) in super::balanced::split_module(sp, &whole, 1)? {
                            let piece = phi_iso(stage, &target, &head, &stage.t(&tail)?)?;
                            lhs = target.add(&lhs, &piece)?;
                        }
                        let tail = sp.pure(&tuple[1..], &s)?;
                        let rhs = target.pure(&tuple[..1], &stage.t(&tail)?)?;
                        compare_modules(&target, &lhs, &rhs)
                    })();
                    rec.check_outcome(outcome, || {
                        format!(
                            "m={m} j={j} phi(1 ⊗ V)(nu^-1 ⊗ 1) = 1 ⊗ V on {} ⊗ {} ⊗ ({})",
                            g.edge_name(tuple[0]),
                            g.edge_name(tuple[1]),
                            literal::render_monomial(stage.base().graph(), &s)
                        )
                    });
                }
            }
        }
    })
}
