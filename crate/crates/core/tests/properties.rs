use num_bigint::BigUint;
use num_rational::Ratio;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ectarget_core::bounds::{universal_lower_bound, universal_upper_bound};
use ectarget_core::coloring::{
    exact_acyclic_coloring, exact_star_coloring, greedy_star_coloring, verify_acyclic, verify_star,
    verify_star_by_components,
};
use ectarget_core::density::{densest_subgraph, min_orientation, orientation_from_acyclic};
use ectarget_core::generate::{random_edge_coloring, random_planar};
use ectarget_core::out_coloring::{
    build_out_coloring, out_coloring_from_universal, verify_in_coloring, verify_out_coloring,
};
use ectarget_core::universal::{
    build_homomorphism, find_homomorphism, verify_homomorphism, ColoredTarget, UniversalTarget,
};
use ectarget_core::{EdgeColoredGraph, Graph, OrientedGraph, VertexColoring};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graph_with_coloring(max_n: usize, colors: usize) -> impl Strategy<Value = (Graph, VertexColoring)> {
    graph_strategy(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(1..=colors, n))
            .prop_map(move |(g, c)| (g, VertexColoring::new(colors, c).unwrap()))
    })
}

fn oriented_with_coloring(max_n: usize, colors: usize) -> impl Strategy<Value = (OrientedGraph, VertexColoring)> {
    graph_strategy(max_n).prop_flat_map(move |g| {
        let (n, m) = (g.n(), g.m());
        (
            Just(g),
            proptest::collection::vec(any::<bool>(), m),
            proptest::collection::vec(1..=colors, n),
        )
            .prop_map(move |(g, flips, c)| {
                let heads = g
                    .edges()
                    .iter()
                    .zip(&flips)
                    .map(|(&(u, v), &f)| if f { u } else { v })
                    .collect();
                (
                    OrientedGraph::from_heads(g, heads).unwrap(),
                    VertexColoring::new(colors, c).unwrap(),
                )
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn star_implies_acyclic((g, col) in graph_with_coloring(8, 4)) {
        if verify_star(&g, &col) {
            prop_assert!(verify_acyclic(&g, &col));
        }
    }

    #[test]
    fn star_verifiers_agree((g, col) in graph_with_coloring(8, 4)) {
        prop_assert_eq!(verify_star(&g, &col), verify_star_by_components(&g, &col));
    }

    #[test]
    fn greedy_star_always_verifies(g in graph_strategy(14), seed in any::<u64>()) {
        let col = greedy_star_coloring(&g, seed);
        prop_assert!(verify_star(&g, &col));
        prop_assert_eq!(col, greedy_star_coloring(&g, seed));
    }

    #[test]
    fn out_coloring_is_star_and_dual((o, col) in oriented_with_coloring(7, 5)) {
        let out = verify_out_coloring(&o, &col);
        prop_assert_eq!(out, verify_in_coloring(&o.transpose(), &col));
        if out {
            prop_assert!(verify_star(o.graph(), &col));
            prop_assert!(verify_acyclic(o.graph(), &col));
        }
    }

    #[test]
    fn built_out_coloring_meets_budget(g in graph_strategy(14), seed in any::<u64>()) {
        let (d, o) = min_orientation(&g);
        let star = greedy_star_coloring(&g, seed);
        let s = star.palette();
        let cert = build_out_coloring(&o, &star).unwrap();
        prop_assert!(verify_out_coloring(&o, &cert.coloring));
        prop_assert!(cert.aux_max_in_degree <= d * (s - 1));
        if d > 0 {
            prop_assert!(cert.coloring.palette() <= 2 * d * s * s);
        }
        prop_assert!(cert.coloring.palette() as u128 <= cert.budget);
    }

    #[test]
    fn acyclic_orientation_degree(g in graph_strategy(9)) {
        let col = exact_acyclic_coloring(&g, g.n().max(1)).unwrap().unwrap();
        let o = orientation_from_acyclic(&g, &col).unwrap();
        prop_assert!(o.max_in_degree() < col.palette().max(1));
    }

    #[test]
    fn density_matches_min_orientation(g in graph_strategy(10)) {
        let density = densest_subgraph(&g);
        let (d, o) = min_orientation(&g);
        prop_assert_eq!(d as u64, density.ceil());
        prop_assert_eq!(o.max_in_degree(), d);
        prop_assert!(density.value >= Ratio::new(g.m() as u64, g.n() as u64));
        let inner = g.induced_subgraph(&density.witness).unwrap().graph.m();
        if g.m() > 0 {
            prop_assert_eq!(Ratio::new(inner as u64, density.witness.len() as u64), density.value);
        }
    }

    #[test]
    fn exact_star_not_worse_than_greedy(g in graph_strategy(8)) {
        let greedy = greedy_star_coloring(&g, 0);
        let exact = exact_star_coloring(&g, greedy.palette()).unwrap().unwrap();
        prop_assert!(verify_star(&g, &exact));
        prop_assert!(exact.distinct_colors() <= greedy.distinct_colors());
    }

    #[test]
    fn target_ranks_are_a_bijection(q in 1usize..=5, d in 0usize..=5, k in 2u32..=4) {
        let t = UniversalTarget::build(q, d, k).unwrap();
        for id in 0..t.len() {
            let tuple = t.tuple(id);
            prop_assert_eq!(t.rank(&tuple), Some(id));
            prop_assert!(tuple[1..].iter().filter(|&&x| x != k).count() <= t.d());
        }
    }

    #[test]
    fn edge_color_symmetric_and_in_range(q in 1usize..=4, d in 0usize..=3, k in 2u32..=4, a in any::<usize>(), b in any::<usize>()) {
        let t = UniversalTarget::build(q, d, k).unwrap();
        let (a, b) = (a % t.len(), b % t.len());
        if a != b {
            let c = t.color_between(a, b).unwrap();
            prop_assert_eq!(Some(c), t.color_between(b, a));
            prop_assert!((1..=k).contains(&c));
        } else {
            prop_assert!(t.edge_color(&t.tuple(a), &t.tuple(b)).is_err());
        }
    }

    #[test]
    fn pipeline_homomorphism_verifies(g in graph_strategy(12), k in 2u32..=5, seed in any::<u64>()) {
        let (d, o) = min_orientation(&g);
        let star = greedy_star_coloring(&g, seed);
        let cert = build_out_coloring(&o, &star).unwrap();
        let target = UniversalTarget::build(cert.coloring.palette(), d, k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let colored = random_edge_coloring(&g, k, &mut rng);
        let h = build_homomorphism(&colored, &o, &cert.coloring, &target).unwrap();
        prop_assert!(verify_homomorphism(&colored, &target, &h));
        if target.len() <= 64 {
            let found = find_homomorphism(&colored, &target).unwrap();
            prop_assert!(found.is_some_and(|f| verify_homomorphism(&colored, &target, &f)));
        }
    }

    #[test]
    fn lower_bound_below_upper_bound(g in graph_strategy(8), k in 2u64..=8) {
        let r = exact_acyclic_coloring(&g, g.n().max(1)).unwrap().unwrap().distinct_colors() as u64;
        let d = densest_subgraph(&g).ceil().max(1);
        let lower = universal_lower_bound(&g, k);
        prop_assert!(lower.ceil() <= universal_upper_bound(r, d, k));
        prop_assert!(lower.ceil() >= BigUint::from(1u32));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reverse_construction_from_pipeline_target(g in graph_strategy(5), seed in any::<u64>()) {
        let (d, o) = min_orientation(&g);
        let star = greedy_star_coloring(&g, seed);
        let cert = build_out_coloring(&o, &star).unwrap();
        let target = UniversalTarget::build(cert.coloring.palette(), d, 2).unwrap();
        prop_assume!(target.len() <= 64);
        let explicit: EdgeColoredGraph = target.to_edge_colored().unwrap();
        let back = out_coloring_from_universal(&o, &explicit, 2).unwrap();
        prop_assert!(verify_out_coloring(&o, &back.coloring));
        let m = ectarget_core::bounds::ceil_log(2, d.max(1) as u64).max(1);
        let budget = (2 * d.max(1) + 1) * explicit.graph().n().pow(m);
        prop_assert!(back.coloring.palette() <= budget);
    }
}

#[test]
fn planar_pipeline_reproducible() {
    let g = random_planar(40, 3);
    let a = build_out_coloring(&min_orientation(&g).1, &greedy_star_coloring(&g, 9)).unwrap();
    let b = build_out_coloring(&min_orientation(&g).1, &greedy_star_coloring(&g, 9)).unwrap();
    assert_eq!(a, b);
}
