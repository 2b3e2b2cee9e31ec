//! Randomized checks of the structural laws, over the curated graphs.

use proptest::prelude::*;

use kladder::cli::fuzz::{generate, FuzzShape};
use kladder::corr::EdgeCorrespondences;
use kladder::iterate::suites::balanced_basis;
use kladder::iterate::{BalancedTensor, Generator, ModuleElement, ModuleSpace, Stage};
use kladder::kgraph::{samples, Grade, KGraph, MultiDegree, Path};
use kladder::kpalg::scalar::ratio;
use kladder::kpalg::{KpAlgebra, KpElement};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Terms = Vec<(usize, i64, i64)>;

fn graph(i: usize) -> KGraph {
    let all = samples::all();
    all[i % all.len()].1.clone()
}

fn rank_three(i: usize) -> KGraph {
    let all: Vec<KGraph> = samples::all()
        .into_iter()
        .map(|(_, g)| g)
        .filter(|g| g.k() == 3)
        .collect();
    all[i % all.len()].clone()
}

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((any::<usize>(), -3i64..=3, 1i64..=3), 1..4)
}

fn element(alg: &KpAlgebra, max_len: u32, picks: &Terms) -> KpElement {
    let pool = alg.monomials(max_len, None);
    let mut out = alg.zero();
    for &(i, n, d) in picks {
        out.add_term(pool[i % pool.len()].clone(), ratio(n, d));
    }
    out
}

fn any_path(g: &KGraph, pick: usize, total: u32) -> Option<Path> {
    let degrees: Vec<MultiDegree> = MultiDegree::all_up_to(g.k(), total)
        .into_iter()
        .filter(|d| d.total() == total)
        .collect();
    let paths = g.paths_of_degree(&degrees[pick % degrees.len()], None);
    (!paths.is_empty()).then(|| paths[pick % paths.len()].clone())
}

fn module_element(space: &ModuleSpace, word: &[usize], picks: &Terms) -> ModuleElement {
    let basis = space.basis(word, 1).unwrap();
    let mut out = space.zero(word.to_vec());
    for &(i, n, d) in picks {
        let x = space.scale(&basis[i % basis.len()], &ratio(n, d));
        out = space.add(&out, &x).unwrap();
    }
    out
}

fn stage(i: usize, m: usize) -> Stage {
    let g = graph(i);
    let m = 1 + m % (g.k() - 1);
    Stage::new(&g, m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flips_are_involutions(gi in 0usize..7, xi in any::<usize>(), yi in any::<usize>()) {
        let g = graph(gi);
        let edges: Vec<_> = g.edges().collect();
        let x = edges[xi % edges.len()];
        let colors = g.colors().to_vec();
        let c = colors[yi % colors.len()];
        let ins = g.in_edges(g.source(x), c);
        let y = ins[yi % ins.len()];
        let (y2, x2) = g.flip(x, y).unwrap();
        prop_assert_eq!(g.source(y2), g.range(x2));
        prop_assert_eq!(g.flip(y2, x2), Some((x, y)));
    }

    #[test]
    fn every_reordering_returns_to_the_canonical_word(gi in 0usize..7, pick in any::<usize>(), total in 1u32..5, perm in any::<u64>()) {
        let g = graph(gi);
        let Some(p) = any_path(&g, pick, total) else { return Ok(()) };
        let mut colors: Vec<usize> = p.edges().iter().map(|&e| g.color(e)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(perm);
        rand::seq::SliceRandom::shuffle(colors.as_mut_slice(), &mut rng);
        let moved = g.reorder(p.edges(), &colors);
        prop_assert_eq!(g.canonical_word(&moved), p.edges().to_vec());
    }

    #[test]
    fn factorize_then_concat_is_the_identity(gi in 0usize..7, pick in any::<usize>(), total in 0u32..6, cut in any::<u64>()) {
        let g = graph(gi);
        let Some(p) = any_path(&g, pick, total) else { return Ok(()) };
        let mut rng = ChaCha8Rng::seed_from_u64(cut);
        let head = MultiDegree::new(
            p.degree().coords().iter().map(|&n| rand::Rng::gen_range(&mut rng, 0..=n)).collect(),
        );
        let tail = p.degree().checked_sub(&head).unwrap();
        let (mu, nu) = g.factorize(&p, &head, &tail).unwrap();
        prop_assert_eq!(g.concat(&mu, &nu), Some(p));
    }

    #[test]
    fn nested_restrictions_agree(gi in 0usize..3, keep in 1usize..3) {
        let g = rank_three(gi);
        let outer = g.restrict(&[1, keep + 1]).unwrap();
        let inner = outer.restrict(&[keep + 1]).unwrap();
        let direct = g.restrict(&[keep + 1]).unwrap();
        prop_assert_eq!(inner.colors(), direct.colors());
        prop_assert_eq!(inner.edges().collect::<Vec<_>>(), direct.edges().collect::<Vec<_>>());
        prop_assert_eq!(inner.squares(), direct.squares());
    }

    #[test]
    fn multiplication_is_associative(gi in 0usize..7, a in terms(), b in terms(), c in terms()) {
        let alg = KpAlgebra::new(graph(gi));
        let (a, b, c) = (element(&alg, 2, &a), element(&alg, 2, &b), element(&alg, 2, &c));
        let left = alg.mul(&alg.mul(&a, &b).unwrap(), &c).unwrap();
        let right = alg.mul(&a, &alg.mul(&b, &c).unwrap()).unwrap();
        prop_assert!(alg.equals(&left, &right).unwrap());
    }

    #[test]
    fn star_reverses_products(gi in 0usize..7, a in terms(), b in terms()) {
        let alg = KpAlgebra::new(graph(gi));
        let (a, b) = (element(&alg, 2, &a), element(&alg, 2, &b));
        let lhs = alg.mul(&a, &b).unwrap().star();
        let rhs = alg.mul(&b.star(), &a.star()).unwrap();
        prop_assert!(alg.equals(&lhs, &rhs).unwrap());
    }

    #[test]
    fn components_multiply_by_grade(gi in 0usize..7, a in terms(), b in terms()) {
        let alg = KpAlgebra::new(graph(gi));
        let (a, b) = (element(&alg, 2, &a), element(&alg, 2, &b));
        let ab = alg.mul(&a, &b).unwrap();
        let mut targets = ab.grades();
        for ga in a.grades() {
            for gb in b.grades() {
                targets.insert(ga.add(&gb));
            }
        }
        for delta in targets {
            let mut sum = alg.zero();
            for ga in a.grades() {
                let gb = delta.sub(&ga);
                let piece = alg.mul(&a.component(&ga), &b.component(&gb)).unwrap();
                sum = &sum + &piece;
            }
            prop_assert!(alg.equals(&ab.component(&delta), &sum).unwrap(), "grade {}", delta);
        }
    }

    #[test]
    fn expansion_keeps_the_value(gi in 0usize..7, a in terms(), bump in any::<usize>()) {
        let alg = KpAlgebra::new(graph(gi));
        let a = element(&alg, 2, &a);
        let colors = alg.graph().colors().to_vec();
        for grade in a.grades() {
            let mut level = MultiDegree::zero(alg.graph().k());
            for m in a.terms().keys().filter(|m| m.grade() == grade) {
                level = level.join(m.mu().degree());
            }
            level.bump(colors[bump % colors.len()]);
            let expanded = alg.expand(&a, &grade, &level).unwrap();
            prop_assert!(alg.equals(&a, &expanded).unwrap());
            prop_assert!(alg.equals(&a, &alg.collapse(&expanded)).unwrap());
        }
    }

    #[test]
    fn verdicts_and_ranks_ignore_the_level(gi in 0usize..7, a in terms(), b in terms(), c in terms()) {
        let alg = KpAlgebra::new(graph(gi));
        let (a, b, c) = (element(&alg, 2, &a), element(&alg, 2, &b), element(&alg, 2, &c));
        let extra = alg.active_ones();
        prop_assert_eq!(alg.equals(&a, &b).unwrap(), alg.equals_with_extra(&a, &b, &extra).unwrap());
        let span = [a.clone(), b.clone(), c, &a + &b];
        prop_assert_eq!(alg.rank(&span).unwrap(), alg.rank_with_extra(&span, &extra).unwrap());
    }

    #[test]
    fn edge_flips_preserve_inner_products(gi in 0usize..7, ci in any::<usize>(), cj in any::<usize>(), x in terms(), y in terms()) {
        let g = graph(gi);
        let colors = g.colors().to_vec();
        let (i, j) = (colors[ci % colors.len()], colors[cj % colors.len()]);
        let y_corr = EdgeCorrespondences::new(g);
        let basis = y_corr.basis(&[i, j]).unwrap();
        let combo = |picks: &Terms| {
            let mut out = y_corr.tensor(&basis[0]).unwrap().scale(&ratio(0, 1));
            for &(k, n, d) in picks {
                out = out.try_add(&y_corr.tensor(&basis[k % basis.len()]).unwrap().scale(&ratio(n, d))).unwrap();
            }
            out
        };
        let (x, y) = (combo(&x), combo(&y));
        let before = y_corr.inner(&x, &y).unwrap();
        let after = y_corr.inner(&y_corr.theta(i, j, &x).unwrap(), &y_corr.theta(i, j, &y).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn edge_generators_are_adjoint(gi in 0usize..7, m in any::<usize>(), ci in any::<usize>(), fi in any::<usize>(), x in terms(), y in terms()) {
        let st = stage(gi, m);
        let sp = st.space();
        let word = [1 + ci % st.graph().k()];
        let (x, y) = (module_element(sp, &word, &x), module_element(sp, &word, &y));
        let edges: Vec<_> = sp.base().graph().edges().collect();
        let f = edges[fi % edges.len()];
        let lhs = sp.inner(&sp.act(Generator::Edge(f), &x).unwrap(), &y).unwrap();
        let rhs = sp.inner(&x, &sp.act(Generator::EdgeStar(f), &y).unwrap()).unwrap();
        prop_assert!(sp.base().equals(&lhs, &rhs).unwrap());
    }

    #[test]
    fn merging_undoes_splitting(gi in 0usize..7, m in any::<usize>(), ci in any::<usize>(), cj in any::<usize>(), x in terms(), y in terms()) {
        let st = stage(gi, m);
        let sp = st.space();
        let k = st.graph().k();
        let word = [1 + ci % k, 1 + cj % k];
        let (x, y) = (module_element(sp, &word, &x), module_element(sp, &word, &y));
        let sx = BalancedTensor::split_all(sp, &x).unwrap();
        let sy = BalancedTensor::split_all(sp, &y).unwrap();
        prop_assert!(sp.equals(&sx.normalize(sp).unwrap(), &x).unwrap());
        let split_inner = sx.inner(sp, &sy).unwrap();
        prop_assert!(sp.base().equals(&split_inner, &sp.inner(&x, &y).unwrap()).unwrap());
    }

    #[test]
    fn rtheta_preserves_inner_products(gi in 0usize..7, m in any::<usize>(), ci in any::<usize>(), cj in any::<usize>(), xi in any::<usize>(), yi in any::<usize>()) {
        let st = stage(gi, m);
        let sp = st.space();
        let k = st.graph().k();
        let shape = vec![vec![1 + ci % k], vec![1 + cj % k]];
        let basis = balanced_basis(sp, &shape, 1).unwrap();
        let (x, y) = (&basis[xi % basis.len()], &basis[yi % basis.len()]);
        let before = x.inner(sp, y).unwrap();
        let after = x.rtheta(sp, 0).unwrap().inner(sp, &y.rtheta(sp, 0).unwrap()).unwrap();
        prop_assert!(sp.base().equals(&before, &after).unwrap());
    }

    #[test]
    fn dictionary_respects_the_grading(gi in 0usize..7, m in any::<usize>(), ei in any::<usize>(), ti in any::<usize>()) {
        let st = stage(gi, m);
        let g = st.graph();
        let k = g.k();
        for e in g.edges().filter(|&e| g.color(e) <= st.new_color()) {
            let unit = Grade::from_degree(&MultiDegree::unit(k, g.color(e)));
            prop_assert!(st.sigma(e).unwrap().is_homogeneous(&unit));
        }
        let new_edges: Vec<_> = g.edges_of_color(st.new_color()).collect();
        let e = new_edges[ei % new_edges.len()];
        let pool = st.base().monomials(2, Some(g.source(e)));
        let t = pool[ti % pool.len()].clone();
        let expected = Grade::from_degree(&MultiDegree::unit(k, st.new_color())).add(&t.grade());
        let x = st.space().pure(&[e], &st.base().monomial_element(t)).unwrap();
        prop_assert!(st.t(&x).unwrap().is_homogeneous(&expected));
    }

    #[test]
    fn fuzzed_documents_are_valid_and_seeded(seed in any::<u64>(), vertices in 1usize..4, extra in 0usize..2, k in 2usize..4) {
        let shape = FuzzShape { k, vertices, edges_per_color: vec![vertices + extra; k] };
        let first = generate(&shape, &mut ChaCha8Rng::seed_from_u64(seed));
        let again = generate(&shape, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(&first, &again);
        if let Ok(doc) = first {
            prop_assert_eq!(doc.build().unwrap().k(), k);
        }
    }
}
