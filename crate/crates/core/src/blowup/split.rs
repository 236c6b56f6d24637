use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::family::GraphFamily;
use crate::graph::Graph;

/// Default largest base order for [`split_family`].
pub const DEFAULT_SPLIT_CAP: usize = 12;

/// Which vertex subsets `U` a split family ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitMode {
    /// Any `U`.
    All,
    /// `U` independent in the base.
    Independent,
    /// `χ(base[U]) <= p`.
    ChromaticAtMost(usize),
}

fn check_splittable(base: &Graph, v: usize) -> Result<()> {
    if v >= base.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: base.order(),
        });
    }
    let degree = base.degree(v);
    if degree < 2 {
        return Err(Error::SplitDegree { vertex: v, degree });
    }
    Ok(())
}

/// Splits every vertex of `u` at once. Vertices outside `u` come first in
/// ascending order, followed by the pieces of each split vertex (split
/// vertices ascending, then by the neighbour each piece keeps).
pub fn vertex_split(base: &Graph, u: VertexSet) -> Result<Graph> {
    for v in u.iter() {
        check_splittable(base, v)?;
    }
    let n = base.order();
    let mut index = vec![usize::MAX; n];
    let mut next = 0;
    for v in (base.vertices() - u).iter() {
        index[v] = next;
        next += 1;
    }
    // piece[v][w] for v in u: the piece of v that keeps neighbour w
    let mut piece = vec![Vec::new(); n];
    for v in u.iter() {
        let mut row = vec![usize::MAX; n];
        for w in base.neighbors(v).iter() {
            row[w] = next;
            next += 1;
        }
        piece[v] = row;
    }
    let image = |a: usize, b: usize| if u.contains(a) { piece[a][b] } else { index[a] };
    let mut g = Graph::empty(next)?;
    for (a, b) in base.edges() {
        g.link(image(a, b), image(b, a));
    }
    Ok(g)
}

/// Splits the single vertex `v`. The piece keeping the smallest neighbour
/// reuses the label `v`; the other pieces are appended, so every other
/// label is unchanged and splits can be chained.
pub fn split_vertex(g: &Graph, v: usize) -> Result<Graph> {
    check_splittable(g, v)?;
    let nbrs = g.neighbors(v).to_vec();
    let n = g.order();
    let mut adj: Vec<VertexSet> = (0..n).map(|x| g.neighbors(x)).collect();
    adj[v] = VertexSet::singleton(nbrs[0]);
    for (i, &w) in nbrs.iter().enumerate().skip(1) {
        adj[w].remove(v);
        adj[w].insert(n + i - 1);
        adj.push(VertexSet::singleton(w));
    }
    Graph::from_adjacency(adj)
}

pub fn split_family(base: &Graph, mode: SplitMode) -> Result<GraphFamily> {
    split_family_capped(base, mode, DEFAULT_SPLIT_CAP)
}

/// The family of all splits of `base` over the subsets allowed by `mode`,
/// up to isomorphism. Only vertices of degree at least 2 can be split, so
/// `U` ranges over subsets of those.
pub fn split_family_capped(base: &Graph, mode: SplitMode, cap: usize) -> Result<GraphFamily> {
    if base.order() > cap {
        return Err(Error::TooLarge {
            what: "split family base",
            order: base.order(),
            cap,
        });
    }
    let eligible: Vec<usize> = (0..base.order()).filter(|&v| base.degree(v) >= 2).collect();
    let graphs: Vec<Graph> = (0u64..1 << eligible.len())
        .into_par_iter()
        .filter_map(|mask| {
            let u: VertexSet = eligible
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let admissible = match mode {
                SplitMode::All => true,
                SplitMode::Independent => base.is_independent(u),
                SplitMode::ChromaticAtMost(p) => base.induced(u).is_colorable(p),
            };
            admissible.then(|| vertex_split(base, u).expect("eligible vertices have degree >= 2"))
        })
        .collect();
    Ok(graphs.into_iter().collect())
}
