use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_COVER_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCover {
    pub size: usize,
    pub cover: VertexSet,
}

pub fn min_vertex_cover(g: &Graph) -> Result<VertexCover> {
    min_vertex_cover_capped(g, DEFAULT_COVER_CAP)
}

/// Exact minimum vertex cover by branch and bound: branch on a vertex `v`
/// of maximum remaining degree (take `v`, or take all of `N(v)`), pruning
/// with a greedy matching lower bound.
pub fn min_vertex_cover_capped(g: &Graph, cap: usize) -> Result<VertexCover> {
    if g.order() > cap {
        return Err(Error::TooLarge {
            what: "vertex cover input",
            order: g.order(),
            cap,
        });
    }
    let mut best = g.vertices();
    // every vertex but one of maximum degree is a trivial upper bound
    if let Some(v) = (0..g.order()).max_by_key(|&v| g.degree(v)) {
        let mut b = g.vertices();
        b.remove(v);
        if is_cover(g, b) {
            best = b;
        }
    }
    branch(g, g.vertices(), VertexSet::new(), &mut best);
    Ok(VertexCover {
        size: best.len(),
        cover: best,
    })
}

pub(crate) fn is_cover(g: &Graph, cover: VertexSet) -> bool {
    g.edges().all(|(a, b)| cover.contains(a) || cover.contains(b))
}

fn matching_bound(g: &Graph, alive: VertexSet) -> usize {
    let mut free = alive;
    let mut size = 0;
    for v in alive.iter() {
        if !free.contains(v) {
            continue;
        }
        if let Some(u) = (g.neighbors(v) & free).first() {
            free.remove(u);
            free.remove(v);
            size += 1;
        }
    }
    size
}

fn branch(g: &Graph, alive: VertexSet, taken: VertexSet, best: &mut VertexSet) {
    let Some(v) = alive
        .iter()
        .filter(|&v| !(g.neighbors(v) & alive).is_empty())
        .max_by_key(|&v| (g.neighbors(v) & alive).len())
    else {
        if taken.len() < best.len() {
            *best = taken;
        }
        return;
    };
    if taken.len() + matching_bound(g, alive) >= best.len() {
        return;
    }
    let mut with_v = taken;
    with_v.insert(v);
    let mut rest = alive;
    rest.remove(v);
    branch(g, rest, with_v, best);

    let nbrs = g.neighbors(v) & alive;
    let mut rest = alive - nbrs;
    rest.remove(v);
    branch(g, rest, taken | nbrs, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lollipop;
    use crate::graph::{complete, cycle};

    fn brute_force(g: &Graph) -> usize {
        let n = g.order();
        (0u32..(1 << n))
            .filter(|mask| is_cover(g, (0..n).filter(|&v| mask >> v & 1 == 1).collect()))
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn named_graphs() {
        assert_eq!(min_vertex_cover(&lollipop(3, 2).unwrap()).unwrap().size, 3);
        assert_eq!(min_vertex_cover(&cycle(4).unwrap()).unwrap().size, 2);
        assert_eq!(min_vertex_cover(&complete(5).unwrap()).unwrap().size, 4);
        assert_eq!(min_vertex_cover(&Graph::empty(4).unwrap()).unwrap().size, 0);
    }

    #[test]
    fn cap() {
        assert!(min_vertex_cover(&Graph::empty(25).unwrap()).is_err());
        assert!(min_vertex_cover_capped(&Graph::empty(25).unwrap(), 30).is_ok());
    }

    #[test]
    fn matches_subset_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in (a + 1)..n {
                    if rng.gen_bool(0.35) {
                        edges.push((a, b));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let vc = min_vertex_cover(&g).unwrap();
            assert!(is_cover(&g, vc.cover));
            assert_eq!(vc.size, brute_force(&g), "{g:?}");
        }
    }
}
