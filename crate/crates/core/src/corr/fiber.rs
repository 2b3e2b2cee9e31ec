//! Fibers `X_n` of the product system: paths of degree `n` as an orthonormal
//! basis over the vertex algebra, with concatenation as the structure map.

use crate::kgraph::{KGraph, MultiDegree, Path};
use crate::report::{Recorder, VerificationReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub degree: MultiDegree,
    pub basis: Vec<Path>,
}

pub fn fiber(graph: &KGraph, n: &MultiDegree) -> Fiber {
    Fiber {
        degree: n.clone(),
        basis: graph.paths_of_degree(n, None),
    }
}

/// The structure map `X_m ⊗ X_n -> X_{m+n}` on basis tensors; `None` for a
/// non-composable (zero) tensor.
pub fn multiply(graph: &KGraph, mu: &Path, nu: &Path) -> Option<Path> {
    graph.concat(mu, nu)
}

/// For all `m, n` with `|m + n| <= max_total`: the composable pairs are
/// equinumerous with `Lambda^{m+n}`, and factorize and concatenation are
/// mutually inverse.
pub fn check_factorization(graph: &KGraph, max_total: u32, timed: bool) -> VerificationReport {
    let mut rec = Recorder::new("fiber");
    let active = |d: &MultiDegree| (1..=d.k()).all(|c| d.get(c) == 0 || graph.has_color(c));
    let degrees: Vec<MultiDegree> = MultiDegree::all_up_to(graph.k(), max_total)
        .into_iter()
        .filter(|d| active(d))
        .collect();
    for total in &degrees {
        let whole = graph.paths_of_degree(total, None);
        for m in degrees.iter().filter(|m| m.dominated_by(total)) {
            let n = total.checked_sub(m).expect("dominated");
            let left = graph.paths_of_degree(m, None);
            let mut pairs = 0usize;
            for mu in &left {
                for nu in graph.paths_of_degree(&n, Some(mu.source())) {
                    pairs += 1;
                    let joined = multiply(graph, mu, &nu).expect("composable");
                    let back = graph.factorize(&joined, m, &n).expect("degrees add up");
                    rec.check(back == (mu.clone(), nu.clone()), || {
                        (
                            format!(
                                "factorize(concat({}, {}))",
                                graph.path_label(mu),
                                graph.path_label(&nu)
                            ),
                            format!(
                                "({}, {})",
                                graph.path_label(&back.0),
                                graph.path_label(&back.1)
                            ),
                            format!("({}, {})", graph.path_label(mu), graph.path_label(&nu)),
                        )
                    });
                }
            }
            rec.check(pairs == whole.len(), || {
                (
                    format!("count {m} + {n}"),
                    pairs.to_string(),
                    whole.len().to_string(),
                )
            });
            for p in &whole {
                let (mu, nu) = graph.factorize(p, m, &n).expect("degrees add up");
                let again = multiply(graph, &mu, &nu);
                rec.check(again.as_ref() == Some(p), || {
                    (
                        format!("concat(factorize({}))", graph.path_label(p)),
                        again.map(|q| graph.path_label(&q)).unwrap_or_default(),
                        graph.path_label(p),
                    )
                });
            }
        }
    }
    rec.finish(timed)
}
