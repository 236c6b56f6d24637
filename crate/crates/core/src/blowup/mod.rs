//! Edge blow-ups, vertex splits and decomposition families.

mod decomposition;
mod split;

pub use decomposition::{
    decomposition_family_bruteforce, decomposition_host, decomposition_member_check, DecompositionFamily,
    DEFAULT_DECOMPOSITION_ORDER,
};
pub use split::{split_family, split_family_capped, split_vertex, vertex_split, SplitMode, DEFAULT_SPLIT_CAP};

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// The blow-up `H^{p+1}` of a base graph together with its layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupResult {
    pub graph: Graph,
    /// Image of each base vertex. The layout keeps base vertices first, so
    /// this is the identity.
    pub base_map: Vec<usize>,
    /// For each base edge, in `base.edges()` order, its `p - 1` fresh
    /// vertices.
    pub edge_cliques: Vec<Vec<usize>>,
}

/// Replaces every edge of `base` by a copy of `K_{p+1}` whose `p - 1` new
/// vertices are private to that edge. Fresh vertices are appended after the
/// base vertices, edge by edge.
pub fn blowup(base: &Graph, p: usize) -> Result<BlowupResult> {
    if p < 2 {
        return invalid(format!("blow-up needs p >= 2, got {p}"));
    }
    let n = base.order();
    let edges: Vec<(usize, usize)> = base.edges().collect();
    let mut graph = Graph::empty(n + edges.len() * (p - 1))?;
    let mut edge_cliques = Vec::with_capacity(edges.len());
    let mut next = n;
    for &(u, v) in &edges {
        let fresh: Vec<usize> = (next..next + p - 1).collect();
        next += p - 1;
        let clique: Vec<usize> = [u, v].into_iter().chain(fresh.iter().copied()).collect();
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                graph.link(a, b);
            }
        }
        edge_cliques.push(fresh);
    }
    Ok(BlowupResult {
        graph,
        base_map: (0..n).collect(),
        edge_cliques,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::constructions::lollipop;
    use crate::graph::{complete, path};

    #[test]
    fn small_blowups() {
        for p in 2..5 {
            let b = blowup(&path(2).unwrap(), p).unwrap();
            assert!(is_isomorphic(&b.graph, &complete(p + 1).unwrap()));
        }
        let b = blowup(&lollipop(3, 2).unwrap(), 2).unwrap();
        assert_eq!((b.graph.order(), b.graph.edge_count()), (10, 15));
        let b = blowup(&complete(3).unwrap(), 2).unwrap();
        assert_eq!((b.graph.order(), b.graph.edge_count()), (6, 9));
    }

    #[test]
    fn cliques_are_disjoint_and_complete() {
        let base = lollipop(4, 3).unwrap();
        let b = blowup(&base, 3).unwrap();
        let mut seen = crate::bitset::VertexSet::new();
        for ((u, v), fresh) in base.edges().zip(&b.edge_cliques) {
            let mut clique: crate::bitset::VertexSet = fresh.iter().collect();
            assert!(clique.is_disjoint(&seen));
            seen |= clique;
            clique.insert(u);
            clique.insert(v);
            assert!(b.graph.is_clique(clique));
        }
    }

    #[test]
    fn rejects_small_p() {
        assert!(blowup(&path(3).unwrap(), 1).is_err());
    }
}
