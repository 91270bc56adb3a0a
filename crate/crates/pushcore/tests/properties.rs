//! Randomized laws of the push and switch calculi, checked with proptest.
//!
//! Everything here is a law that holds for *every* graph, so shrinking a
//! failure directly yields a minimal counterexample.

use num_bigint::BigUint;
use proptest::prelude::*;
use pushcore::equiv::{
    count_push_classes, decide_push_equivalent, enumerate_push_classes, fundamental_ordered_cycles,
    PushDecision,
};
use pushcore::homo::{
    check_pushable_hom, check_switchable_hom, is_homomorphism, is_sign_preserving_hom,
    search_pushable_hom, search_switchable_hom,
};
use pushcore::signed::{to_oriented, to_signed};
use pushcore::{Balance, Bipartition, OrientedGraph, Sign, SignedGraph, SimpleGraph, VertexSet};

/// All vertex pairs `(i, j)` with `i < j`, in lex order, so that a bit mask
/// picks a subset of edges deterministically.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| mask >> (i % 64) & 1 == 1)
        .map(|(_, e)| e);
    SimpleGraph::new(n, edges).expect("masked pairs are simple")
}

fn set_from_mask(n: usize, mask: u64) -> VertexSet {
    let mut s = VertexSet::new();
    for v in 0..n {
        if mask >> v & 1 == 1 {
            s.insert(v);
        }
    }
    s
}

/// A random oriented graph: edge subset of `K_n` plus a direction per edge.
fn arb_oriented(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, em, om)| {
        graph_from_mask(n, em)
            .orientation_from_mask(om)
            .expect("fewer than 64 edges")
    })
}

/// A random signed graph on the same edge model.
fn arb_signed(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, em, sm)| {
        let edges = graph_from_mask(n, em)
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                (
                    u,
                    v,
                    if sm >> (i % 64) & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    },
                )
            })
            .collect::<Vec<_>>();
        SignedGraph::new(n, edges).expect("already simple")
    })
}

/// A random oriented graph whose underlying graph is bipartite by
/// construction, along with the partition used to build it.
fn arb_bipartite(max_n: usize) -> impl Strategy<Value = (OrientedGraph, Bipartition)> {
    (2..=max_n, any::<u64>(), any::<u64>(), any::<u64>()).prop_map(|(n, pm, em, om)| {
        let part_a = set_from_mask(n, pm | 1); // vertex 0 always in A
        let cross: Vec<(usize, usize)> = pairs(n)
            .into_iter()
            .filter(|&(i, j)| part_a.contains(i) != part_a.contains(j))
            .collect();
        let arcs = cross
            .iter()
            .enumerate()
            .filter(|&(i, _)| em >> (i % 64) & 1 == 1)
            .map(|(i, &(u, v))| {
                if om >> (i % 64) & 1 == 1 {
                    (v, u)
                } else {
                    (u, v)
                }
            });
        let g = OrientedGraph::new(n, arcs).expect("cross edges are simple");
        let p = Bipartition::from_part_a(n, &part_a).expect("set is in range");
        (g, p)
    })
}

proptest! {
    #[test]
    fn push_is_an_involution(g in arb_oriented(8), sm in any::<u64>()) {
        let s = set_from_mask(g.vertex_count(), sm);
        let twice = g.push(&s).unwrap().push(&s).unwrap();
        prop_assert_eq!(twice, g);
    }

    #[test]
    fn pushing_the_complement_pushes_the_same_cut(g in arb_oriented(8), sm in any::<u64>()) {
        let n = g.vertex_count();
        let s = set_from_mask(n, sm);
        prop_assert_eq!(g.push(&s).unwrap(), g.push(&s.complement(n)).unwrap());
    }

    #[test]
    fn pushes_compose_by_symmetric_difference(
        g in arb_oriented(8),
        sm in any::<u64>(),
        tm in any::<u64>(),
    ) {
        let n = g.vertex_count();
        let (s, t) = (set_from_mask(n, sm), set_from_mask(n, tm));
        let stepwise = g.push(&s).unwrap().push(&t).unwrap();
        prop_assert_eq!(stepwise, g.push(&s.symmetric_difference(&t)).unwrap());
    }

    #[test]
    fn walk_classification_is_push_invariant(g in arb_oriented(8), sm in any::<u64>()) {
        let pushed = g.push(&set_from_mask(g.vertex_count(), sm)).unwrap();
        for walk in fundamental_ordered_cycles(&g) {
            prop_assert_eq!(
                g.classify_walk(&walk).unwrap(),
                pushed.classify_walk(&walk).unwrap()
            );
        }
    }

    #[test]
    fn conjugating_a_walk_swaps_its_parities(g in arb_oriented(8)) {
        for walk in fundamental_ordered_cycles(&g) {
            let (f, b) = g.walk_parities(&walk).unwrap();
            prop_assert_eq!(g.walk_parities(&walk.conjugate()).unwrap(), (b, f));
        }
    }

    #[test]
    fn decide_recovers_every_push(g in arb_oriented(8), sm in any::<u64>()) {
        let pushed = g.push(&set_from_mask(g.vertex_count(), sm)).unwrap();
        let decision = decide_push_equivalent(&g, &pushed).unwrap();
        let witness = match decision {
            PushDecision::Equivalent(w) => w,
            other => return Err(TestCaseError::fail(format!("expected a witness: {other:?}"))),
        };
        prop_assert_eq!(g.push(&witness).unwrap(), pushed);

        // The witness is normalized: each component's lowest vertex stays out.
        let comp = g.underlying().components();
        let mut seen = vec![false; g.vertex_count()];
        for v in 0..g.vertex_count() {
            if !seen[comp[v]] {
                seen[comp[v]] = true;
                prop_assert!(!witness.contains(v), "component root {} inside witness", v);
            }
        }
    }

    #[test]
    fn class_count_matches_class_enumeration(n in 1usize..=5, em in any::<u64>()) {
        let g = graph_from_mask(n, em);
        let classes = enumerate_push_classes(&g).unwrap();
        prop_assert_eq!(BigUint::from(classes.len()), count_push_classes(&g));
    }

    #[test]
    fn switching_is_an_involution(sg in arb_signed(8), sm in any::<u64>()) {
        let s = set_from_mask(sg.vertex_count(), sm);
        prop_assert_eq!(sg.switch(&s).unwrap().switch(&s).unwrap(), sg);
    }

    #[test]
    fn switches_compose_by_symmetric_difference(
        sg in arb_signed(8),
        sm in any::<u64>(),
        tm in any::<u64>(),
    ) {
        let n = sg.vertex_count();
        let (s, t) = (set_from_mask(n, sm), set_from_mask(n, tm));
        let stepwise = sg.switch(&s).unwrap().switch(&t).unwrap();
        prop_assert_eq!(stepwise, sg.switch(&s.symmetric_difference(&t)).unwrap());
    }

    #[test]
    fn the_dictionary_round_trips((g, p) in arb_bipartite(8)) {
        let sg = to_signed(&g, &p).unwrap();
        prop_assert_eq!(to_oriented(&sg, &p).unwrap(), g);
    }

    #[test]
    fn pushing_translates_to_switching((g, p) in arb_bipartite(8), sm in any::<u64>()) {
        let s = set_from_mask(g.vertex_count(), sm);
        let push_then_translate = to_signed(&g.push(&s).unwrap(), &p).unwrap();
        let translate_then_switch = to_signed(&g, &p).unwrap().switch(&s).unwrap();
        prop_assert_eq!(push_then_translate, translate_then_switch);
    }

    #[test]
    fn balance_translates_to_walk_sign((g, p) in arb_bipartite(8)) {
        let sg = to_signed(&g, &p).unwrap();
        for walk in fundamental_ordered_cycles(&g) {
            let balanced = g.balance_of_walk(&walk).unwrap() == Balance::Balanced;
            prop_assert_eq!(balanced, sg.sign_of_walk(&walk).unwrap() == Sign::Plus);
        }
    }

    #[test]
    fn found_pushable_witnesses_verify(g in arb_oriented(4), h in arb_oriented(4)) {
        if let Some(w) = search_pushable_hom(&g, &h).unwrap() {
            prop_assert!(is_homomorphism(&g.push(&w.modifier).unwrap(), &h, &w.mapping).unwrap());
            prop_assert!(check_pushable_hom(&g, &h, &w.mapping).unwrap().is_some());
        }
    }

    #[test]
    fn found_switchable_witnesses_verify(sg in arb_signed(4), ht in arb_signed(4)) {
        if let Some(w) = search_switchable_hom(&sg, &ht).unwrap() {
            let switched = sg.switch(&w.modifier).unwrap();
            prop_assert!(is_sign_preserving_hom(&switched, &ht, &w.mapping).unwrap());
            prop_assert!(check_switchable_hom(&sg, &ht, &w.mapping).unwrap().is_some());
        }
    }
}
