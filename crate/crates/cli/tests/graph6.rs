use lollipop_cli::{decode_graph6, encode_graph6};
use lollipop_core::constructions::{realize, ConstructionSpec};
use lollipop_core::graph::complete;
use lollipop_core::Graph;
use proptest::prelude::*;
use serde::Deserialize;

#[derive(Deserialize)]
struct Fixture {
    n: usize,
    edges: Vec<(usize, usize)>,
    graph6: String,
}

/// Strings produced by an independent codec (networkx).
fn fixtures() -> Vec<Fixture> {
    serde_json::from_str(include_str!("fixtures/graph6_reference.json")).unwrap()
}

#[test]
fn matches_reference_codec() {
    let all = fixtures();
    assert!(all.iter().any(|f| f.n > 62), "extended form is covered");
    for f in all {
        let g = Graph::from_edges(f.n, &f.edges).unwrap();
        assert_eq!(encode_graph6(&g), f.graph6, "n = {}", f.n);
        assert_eq!(decode_graph6(&f.graph6).unwrap(), g);
    }
}

#[test]
fn named_strings() {
    assert_eq!(encode_graph6(&complete(3).unwrap()), "Bw");
    assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
    let h = realize(&ConstructionSpec::H { n: 10, p: 2, q: 3 }).unwrap();
    assert_eq!(decode_graph6(&encode_graph6(&h)).unwrap(), h);
}

#[test]
fn errors_name_the_byte() {
    let e = decode_graph6("B!").unwrap_err();
    assert_eq!(e.offset, 1);
    let e = decode_graph6("Bww").unwrap_err();
    assert_eq!(e.offset, 2);
    let e = decode_graph6("C").unwrap_err();
    assert_eq!(e.offset, 1);
    // K_3 with a stray padding bit
    let e = decode_graph6("Bx").unwrap_err();
    assert_eq!(e.offset, 1);
    assert!(decode_graph6("").is_err());
    assert!(decode_graph6("~??").is_err());
}

proptest! {
    #[test]
    fn round_trip(n in 0usize..=100, bits in proptest::collection::vec(any::<bool>(), 0..4950)) {
        let mut edges = Vec::new();
        let mut it = bits.into_iter().cycle();
        for u in 0..n {
            for v in (u + 1)..n {
                if it.next().unwrap_or(false) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }
}
