use lollipop_core::bitset::VertexSet;
use lollipop_core::blowup::{
    blowup, decomposition_family_bruteforce, decomposition_member_check, split_family, split_vertex, vertex_split,
    SplitMode,
};
use lollipop_core::canon::{canonical_form, exhaustive_canonical_form, is_isomorphic};
use lollipop_core::constructions::{edge_count_formula, lollipop, realize, ConstructionSpec};
use lollipop_core::containment::SearchLimits;
use lollipop_core::graph::{join, turan_part_sizes, Graph};
use lollipop_core::search::{dnpr_check, symmetric_check};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in (u + 1)..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(14)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permute(&perm)));
    }

    #[test]
    fn canonical_form_agrees_with_exhaustive_oracle(g in graph_strategy(7), h in graph_strategy(7)) {
        let fast = canonical_form(&g) == canonical_form(&h);
        let slow = exhaustive_canonical_form(&g).unwrap() == exhaustive_canonical_form(&h).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn canonical_graph_is_isomorphic(g in graph_strategy(12)) {
        let c = canonical_form(&g).to_graph();
        prop_assert_eq!(c.degree_sequence(), g.degree_sequence());
        prop_assert!(is_isomorphic(&c, &g));
    }

    #[test]
    fn join_edge_count(g in graph_strategy(8), h in graph_strategy(8)) {
        let j = join(&g, &h).unwrap();
        prop_assert_eq!(j.order(), g.order() + h.order());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.order() * h.order());
    }

    #[test]
    fn turan_parts_are_balanced(n in 0usize..200, p in 1usize..12) {
        let sizes = turan_part_sizes(n, p).unwrap();
        prop_assert_eq!(sizes.len(), p);
        prop_assert_eq!(sizes.iter().sum::<usize>(), n);
        prop_assert!(sizes.windows(2).all(|w| w[0] >= w[1] && w[0] - w[1] <= 1));
    }

    #[test]
    fn formulas_match_realized_graphs(n in 4usize..60, p in 1usize..5, q in 1usize..8) {
        prop_assume!(q <= n);
        for spec in [ConstructionSpec::H { n, p, q }, ConstructionSpec::HPrime { n, p, q }, ConstructionSpec::HStar { n }] {
            if spec.validate().is_ok() {
                prop_assert_eq!(edge_count_formula(&spec).unwrap(), realize(&spec).unwrap().edge_count());
            }
        }
    }

    #[test]
    fn blowup_counts(g in graph_strategy(8), p in 2usize..5) {
        let b = blowup(&g, p).unwrap();
        let e = g.edge_count();
        prop_assert_eq!(b.graph.order(), g.order() + e * (p - 1));
        prop_assert_eq!(b.graph.edge_count(), e * (p + 1) * p / 2);
    }

    #[test]
    fn split_order_does_not_matter((g, perm) in graph_and_perm(10), mask in any::<u16>()) {
        let u: VertexSet = (0..g.order()).filter(|&v| mask >> v & 1 == 1 && g.degree(v) >= 2).collect();
        let together = vertex_split(&g, u).unwrap();
        // split one vertex at a time, in the order given by the permutation
        let mut seq = g.clone();
        for &v in perm.iter().filter(|&&v| u.contains(v)) {
            seq = split_vertex(&seq, v).unwrap();
        }
        prop_assert!(is_isomorphic(&together, &seq));
        prop_assert_eq!(together.edge_count(), g.edge_count());
    }

    #[test]
    fn symmetry_witnesses_verify(g in graph_strategy(10), a in any::<u16>(), b in any::<u16>()) {
        let n = g.order();
        let h1: VertexSet = (0..n).filter(|&v| a >> v & 1 == 1).collect();
        let h2: VertexSet = (0..n).filter(|&v| b >> v & 1 == 1 && a >> v & 1 == 0).collect();
        if let Some(w) = symmetric_check(&g, h1, h2).unwrap() {
            prop_assert!(w.verify(&g, h1, h2));
        }
    }

    #[test]
    fn decompositions_verify(g in graph_strategy(9), p in 1usize..4, r in 0usize..3) {
        if let Some(d) = dnpr_check(&g, p, r).unwrap() {
            prop_assert!(d.verify(&g));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn membership_is_monotone_in_t(m in graph_strategy(5), t in 1usize..7) {
        let l = blowup(&lollipop(3, 1).unwrap(), 2).unwrap().graph;
        let small = decomposition_member_check(&m, &l, 2, t, SearchLimits::default()).unwrap();
        let large = decomposition_member_check(&m, &l, 2, t + 1, SearchLimits::default()).unwrap();
        prop_assert!(!small.is_undecided() && !large.is_undecided());
        prop_assert!(!small.is_found() || large.is_found());
    }
}

#[test]
fn split_family_chain() {
    for (k, l) in [(3, 2), (3, 3), (4, 2)] {
        let h = lollipop(k, l).unwrap();
        let all = split_family(&h, SplitMode::All).unwrap();
        let star = split_family(&h, SplitMode::Independent).unwrap();
        for p in [2, 3] {
            let mid = split_family(&h, SplitMode::ChromaticAtMost(p - 1)).unwrap();
            assert!(star.codes().is_subset(&mid.codes()), "({k},{l}) p={p}");
            assert!(mid.codes().is_subset(&all.codes()), "({k},{l}) p={p}");
        }
    }
}

#[test]
fn decomposition_members_are_minimal() {
    let l = blowup(&lollipop(3, 1).unwrap(), 2).unwrap().graph;
    let t = l.order();
    let d = decomposition_family_bruteforce(&l, 2, 6, t, SearchLimits::default()).unwrap();
    assert!(!d.is_partial());
    assert!(!d.family.is_empty());
    for m in d.family.iter() {
        let own = decomposition_member_check(m, &l, 2, t, SearchLimits::default()).unwrap();
        assert!(own.is_found());
        for (a, b) in m.edges() {
            let smaller = m.without_edge(a, b).unwrap().without_isolated();
            for s in 1..=t {
                let o = decomposition_member_check(&smaller, &l, 2, s, SearchLimits::default()).unwrap();
                assert!(o.is_absent(), "{m:?} minus ({a},{b}) at t={s}");
            }
        }
    }
}
