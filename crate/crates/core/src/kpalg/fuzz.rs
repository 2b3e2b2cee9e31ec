//! Randomized algebra laws on small elements, reproducible from a seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::KpAlgebra;
use super::element::{KpElement, Monomial};
use super::literal::render;
use super::scalar::{self, Scalar};
use super::KpError;
use crate::kgraph::{KGraph, MultiDegree};
use crate::report::{Recorder, VerificationReport};

/// Cases per graph used by the `kp` suite.
pub const DEFAULT_CASES: usize = 200;

/// Seed used by the `kp` suite unless another is given.
pub const DEFAULT_SEED: u64 = 7;

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let mut n: i64 = rng.gen_range(-3..=3);
    if n == 0 {
        n = 1;
    }
    scalar::ratio(n, rng.gen_range(1..=3))
}

/// One to three random monomials from `pool`, resampled until nonzero.
pub fn random_element(alg: &KpAlgebra, pool: &[Monomial], rng: &mut ChaCha8Rng) -> KpElement {
    loop {
        let mut out = alg.zero();
        for _ in 0..rng.gen_range(1..=3) {
            let m = pool.choose(rng).expect("nonempty pool").clone();
            out.add_term(m, random_scalar(rng));
        }
        if !out.is_zero() {
            return out;
        }
    }
}

fn expansion_level(t: &KpElement, m: &Monomial, extra: &MultiDegree) -> MultiDegree {
    let grade = m.grade();
    let mut level = m.mu().degree().clone();
    for other in t.terms().keys().filter(|o| o.grade() == grade) {
        level = level.join(other.mu().degree());
    }
    level.add(extra)
}

/// Associativity, the involution reversing products, grading, expansion,
/// collapse and level-stable equality on `cases` random triples.
pub fn check_kp(graph: &KGraph, cases: usize, seed: u64, timed: bool) -> VerificationReport {
    let alg = KpAlgebra::new(graph.clone());
    let mut rec = Recorder::new("kp");
    let pool = alg.monomials(2, None);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = alg.graph();
    let extra = alg.active_ones();
    for case in 0..cases {
        let a = random_element(&alg, &pool, &mut rng);
        let b = random_element(&alg, &pool, &mut rng);
        let c = random_element(&alg, &pool, &mut rng);
        let input = || {
            format!(
                "case {case}: a = {}, b = {}, c = {}",
                render(g, &a),
                render(g, &b),
                render(g, &c)
            )
        };
        let verdict =
            |lhs: &KpElement, rhs: &KpElement| -> Result<Option<(String, String)>, KpError> {
                Ok((!alg.equals(lhs, rhs)?).then(|| (render(g, lhs), render(g, rhs))))
            };

        let outcome = (|| {
            let lhs = alg.mul(&alg.mul(&a, &b)?, &c)?;
            let rhs = alg.mul(&a, &alg.mul(&b, &c)?)?;
            verdict(&lhs, &rhs)
        })();
        rec.check_outcome(outcome, || format!("associativity, {}", input()));

        let outcome = (|| verdict(&alg.mul(&a, &b)?.star(), &alg.mul(&b.star(), &a.star())?))();
        rec.check_outcome(outcome, || format!("(ab)* = b* a*, {}", input()));

        let (ma, mb) = (
            a.terms().keys().next().expect("nonzero"),
            b.terms().keys().next().expect("nonzero"),
        );
        let want = ma.grade().add(&mb.grade());
        let product = alg.multiply_monomials(ma, mb);
        rec.check(product.iter().all(|m| m.grade() == want), || {
            (
                format!("grading, {}", input()),
                product
                    .iter()
                    .map(|m| m.grade().to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                want.to_string(),
            )
        });

        for t in [&a, &b] {
            for m in t.terms().keys() {
                let outcome = (|| {
                    let level = expansion_level(t, m, &extra);
                    verdict(&alg.expand(t, &m.grade(), &level)?, t)
                })();
                rec.check_outcome(outcome, || {
                    format!("expansion of grade {}, {}", m.grade(), input())
                });
            }
            let once = alg.collapse(t);
            let outcome = verdict(&once, t);
            rec.check_outcome(outcome, || format!("collapse keeps the value, {}", input()));
            let twice = alg.collapse(&once);
            rec.check(twice == once, || {
                (
                    format!("collapse is idempotent, {}", input()),
                    render(g, &twice),
                    render(g, &once),
                )
            });
        }

        let same = "operands come from one algebra";
        let left = alg.mul(&alg.mul(&a, &b).expect(same), &c).expect(same);
        let right = alg.mul(&a, &alg.mul(&b, &c).expect(same)).expect(same);
        for (x, y) in [(&a, &b), (&b, &c), (&left, &right)] {
            let outcome = (|| {
                let plain = alg.equals(x, y)?;
                let deeper = alg.equals_with_extra(x, y, &extra)?;
                Ok::<_, KpError>((plain != deeper).then(|| (plain.to_string(), deeper.to_string())))
            })();
            rec.check_outcome(outcome, || {
                format!("equality verdict stable under extra level, {}", input())
            });
        }
    }
    rec.finish(timed)
}
