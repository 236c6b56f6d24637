//! Symmetric subgraphs and the near-join decompositions built from them.
//!
//! Two vertex sets `H1`, `H2` of `G` are symmetric if they are equal, or if
//! they are disjoint, have no edges between them, and some isomorphism
//! `ω: G[H1] -> G[H2]` satisfies `N(x) \ (H1 ∪ H2) = N(ω(x)) \ (H1 ∪ H2)`.
//!
//! A graph lies in `D(n, p, r)` if deleting at most `r` exceptional vertices
//! leaves a join `G^1 ∨ ... ∨ G^p` with `|p·n_i - n| <= p·r`, where each
//! `G^i` is a disjoint union of pairwise symmetric copies of one connected
//! block.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::canon::is_isomorphic;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`dnpr_check`].
pub const DNPR_ORDER_CAP: usize = 20;
/// Largest `r` accepted by [`dnpr_check`].
pub const DNPR_EXCEPTIONAL_CAP: usize = 4;

/// An isomorphism `ω` between two symmetric vertex sets, as pairs
/// `(x, ω(x))` with `x` ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryWitness {
    pub omega: Vec<(usize, usize)>,
}

impl SymmetryWitness {
    /// Re-checks the three conditions on `g`.
    pub fn verify(&self, g: &Graph, h1: VertexSet, h2: VertexSet) -> bool {
        if h1 == h2 {
            return self.omega.iter().all(|&(x, y)| x == y && h1.contains(x)) && self.omega.len() == h1.len();
        }
        if !h1.is_disjoint(&h2) || h1.iter().any(|x| !(g.neighbors(x) & h2).is_empty()) {
            return false;
        }
        let dom: VertexSet = self.omega.iter().map(|&(x, _)| x).collect();
        let img: VertexSet = self.omega.iter().map(|&(_, y)| y).collect();
        if dom != h1 || img != h2 || self.omega.len() != h1.len() {
            return false;
        }
        let outside = !(h1 | h2);
        self.omega.iter().all(|&(x, y)| {
            g.neighbors(x) & outside == g.neighbors(y) & outside
                && self.omega.iter().all(|&(a, b)| g.has_edge(x, a) == g.has_edge(y, b))
        })
    }
}

/// Searches for a witness that `h1` and `h2` are symmetric in `g`.
/// Overlapping but unequal sets are an error.
pub fn symmetric_check(g: &Graph, h1: VertexSet, h2: VertexSet) -> Result<Option<SymmetryWitness>> {
    let all = g.vertices();
    if !h1.is_subset(&all) || !h2.is_subset(&all) {
        return invalid("vertex sets must lie inside the graph");
    }
    if h1 == h2 {
        return Ok(Some(SymmetryWitness {
            omega: h1.iter().map(|x| (x, x)).collect(),
        }));
    }
    if !h1.is_disjoint(&h2) {
        return invalid("symmetric_check needs equal or disjoint vertex sets");
    }
    if h1.len() != h2.len() || h1.iter().any(|x| !(g.neighbors(x) & h2).is_empty()) {
        return Ok(None);
    }
    let outside = !(h1 | h2);
    let src = h1.to_vec();
    let mut map = Vec::with_capacity(src.len());
    let found = extend(g, &src, h2, outside, &mut map);
    Ok(found.then(|| SymmetryWitness {
        omega: src.iter().copied().zip(map).collect(),
    }))
}

fn extend(g: &Graph, src: &[usize], free: VertexSet, outside: VertexSet, map: &mut Vec<usize>) -> bool {
    let i = map.len();
    if i == src.len() {
        return true;
    }
    let x = src[i];
    let want = g.neighbors(x) & outside;
    for y in free.iter() {
        if g.neighbors(y) & outside != want || g.degree(y) != g.degree(x) {
            continue;
        }
        if (0..i).any(|j| g.has_edge(x, src[j]) != g.has_edge(y, map[j])) {
            continue;
        }
        map.push(y);
        let mut rest = free;
        rest.remove(y);
        if extend(g, src, rest, outside, map) {
            return true;
        }
        map.pop();
    }
    false
}

/// A witness for membership in `D(n, p, r)`, with the exceptional vertices
/// sorted into `W` and the `B_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub p: usize,
    pub r: usize,
    pub exceptional: VertexSet,
    /// The classes `A_i`.
    pub classes: Vec<VertexSet>,
    /// Per class, the vertex sets of its block copies.
    pub blocks: Vec<Vec<VertexSet>>,
    /// Exceptional vertices adjacent to every non-exceptional vertex.
    pub w: VertexSet,
    /// Per class, exceptional vertices outside `W` with no neighbour in it.
    pub b: Vec<VertexSet>,
}

impl Decomposition {
    pub fn total_blocks(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Re-checks every defining condition directly on `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        let rest = g.vertices() - self.exceptional;
        if self.exceptional.len() > self.r || self.classes.len() != self.p || self.blocks.len() != self.p {
            return false;
        }
        let mut union = VertexSet::new();
        for a in &self.classes {
            if !a.is_disjoint(&union) || a.is_empty() || (self.p * a.len()).abs_diff(n) > self.p * self.r {
                return false;
            }
            union |= *a;
        }
        if union != rest {
            return false;
        }
        for (i, a) in self.classes.iter().enumerate() {
            for x in a.iter() {
                if !(rest - *a).is_subset(&g.neighbors(x)) {
                    return false;
                }
            }
            let comps = g.induced(*a).components().len();
            let blocks = &self.blocks[i];
            let covered: VertexSet = blocks.iter().fold(VertexSet::new(), |s, b| s | *b);
            if blocks.len() != comps || covered != *a {
                return false;
            }
            for (j, b1) in blocks.iter().enumerate() {
                if !g.induced(*b1).is_connected() {
                    return false;
                }
                for b2 in &blocks[j + 1..] {
                    match symmetric_check(g, *b1, *b2) {
                        Ok(Some(w)) if w.verify(g, *b1, *b2) => {}
                        _ => return false,
                    }
                }
            }
        }
        let (w, b) = label_exceptional(g, self.exceptional, &self.classes);
        w == self.w && b == self.b
    }
}

fn label_exceptional(g: &Graph, exceptional: VertexSet, classes: &[VertexSet]) -> (VertexSet, Vec<VertexSet>) {
    let rest = g.vertices() - exceptional;
    let w: VertexSet = exceptional.iter().filter(|&x| rest.is_subset(&g.neighbors(x))).collect();
    let b = classes
        .iter()
        .map(|a| {
            (exceptional - w)
                .iter()
                .filter(|&x| (g.neighbors(x) & *a).is_empty())
                .collect()
        })
        .collect();
    (w, b)
}

/// Blocks of a class if it is a disjoint union of pairwise symmetric
/// copies of one connected graph.
fn class_blocks(g: &Graph, class: VertexSet) -> Option<Vec<VertexSet>> {
    let comps: Vec<VertexSet> = g
        .induced(class)
        .components()
        .into_iter()
        .map(|c| {
            let members = class.to_vec();
            c.iter().map(|i| members[i]).collect()
        })
        .collect();
    let first = g.induced(*comps.first()?);
    for (j, c) in comps.iter().enumerate() {
        if j > 0 && !is_isomorphic(&first, &g.induced(*c)) {
            return None;
        }
    }
    for (j, c1) in comps.iter().enumerate() {
        for c2 in &comps[j + 1..] {
            if !matches!(symmetric_check(g, *c1, *c2), Ok(Some(_))) {
                return None;
            }
        }
    }
    Some(comps)
}

struct Grouping<'a> {
    g: &'a Graph,
    p: usize,
    lo: usize,
    hi: usize,
    parts: Vec<VertexSet>,
    /// For each part, the index of an earlier part that is
    /// interchangeable with it, if any.
    twin_of: Vec<Option<usize>>,
    assign: Vec<usize>,
    sizes: Vec<usize>,
    best: Option<(usize, Vec<VertexSet>, Vec<Vec<VertexSet>>)>,
}

impl Grouping<'_> {
    fn run(&mut self, i: usize, opened: usize) {
        if i == self.parts.len() {
            if opened == self.p && self.sizes.iter().all(|&s| s >= self.lo) {
                self.evaluate();
            }
            return;
        }
        let remaining: usize = self.parts[i..].iter().map(|s| s.len()).sum();
        let missing: usize = self.sizes.iter().map(|&s| self.lo.saturating_sub(s)).sum();
        if missing > remaining {
            return;
        }
        let size = self.parts[i].len();
        let floor = self.twin_of[i].map_or(0, |j| self.assign[j]);
        for c in floor..(opened + 1).min(self.p) {
            if self.sizes[c] + size > self.hi {
                continue;
            }
            self.assign[i] = c;
            self.sizes[c] += size;
            self.run(i + 1, opened.max(c + 1));
            self.sizes[c] -= size;
        }
    }

    fn evaluate(&mut self) {
        let mut classes = vec![VertexSet::new(); self.p];
        for (part, &c) in self.parts.iter().zip(&self.assign) {
            classes[c] |= *part;
        }
        let mut blocks = Vec::with_capacity(self.p);
        for a in &classes {
            match class_blocks(self.g, *a) {
                Some(b) => blocks.push(b),
                None => return,
            }
        }
        let total: usize = blocks.iter().map(Vec::len).sum();
        if self.best.as_ref().is_none_or(|(t, _, _)| total > *t) {
            self.best = Some((total, classes, blocks));
        }
    }
}

/// Looks for a decomposition witnessing `g ∈ D(n, p, r)`.
///
/// Exceptional sets are tried by increasing size, then in lexicographic
/// order. For each, the classes are unions of the components of the
/// complement of the remaining graph, since a join can only separate
/// those. Among all decompositions found, the one with the most blocks is
/// returned, then the one with the fewest exceptional vertices, then the
/// first in search order. Classes are listed by least vertex.
pub fn dnpr_check(g: &Graph, p: usize, r: usize) -> Result<Option<Decomposition>> {
    let n = g.order();
    if n > DNPR_ORDER_CAP {
        return Err(Error::TooLarge {
            what: "decomposition search",
            order: n,
            cap: DNPR_ORDER_CAP,
        });
    }
    if r > DNPR_EXCEPTIONAL_CAP {
        return invalid(format!("r = {r} exceeds the cap of {DNPR_EXCEPTIONAL_CAP}"));
    }
    if p == 0 {
        return invalid("dnpr_check needs p >= 1");
    }
    // |p·n_i - n| <= p·r, and classes are nonempty
    let lo = (n.saturating_sub(p * r)).div_ceil(p).max(1);
    let hi = (n + p * r) / p;
    let twins = g.twin_classes();
    let mut best: Option<Decomposition> = None;
    for size in 0..=r.min(n) {
        for ex in subsets_of_size(n, size) {
            let rest = g.vertices() - ex;
            let co = g.induced(rest).complement();
            let members = rest.to_vec();
            let parts: Vec<VertexSet> = co
                .components()
                .into_iter()
                .map(|c| c.iter().map(|i| members[i]).collect())
                .collect();
            if parts.len() < p {
                continue;
            }
            // singleton parts that are twins in g can be permuted freely
            let twin_of = (0..parts.len())
                .map(|i| {
                    let v = parts[i].first()?;
                    (parts[i].len() == 1)
                        .then(|| (0..i).rev().find(|&j| parts[j].len() == 1 && twins[parts[j].first().unwrap()] == twins[v]))
                        .flatten()
                })
                .collect();
            let mut grouping = Grouping {
                g,
                p,
                lo,
                hi,
                twin_of,
                assign: vec![0; parts.len()],
                parts,
                sizes: vec![0; p],
                best: None,
            };
            grouping.run(0, 0);
            if let Some((total, classes, blocks)) = grouping.best {
                if best.as_ref().is_none_or(|b| total > b.total_blocks()) {
                    let (w, b) = label_exceptional(g, ex, &classes);
                    best = Some(Decomposition {
                        p,
                        r,
                        exceptional: ex,
                        classes,
                        blocks,
                        w,
                        b,
                    });
                }
            }
        }
    }
    Ok(best)
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out: VertexSet = idx.iter().collect();
        // advance to the next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{realize, ConstructionSpec};
    use crate::graph::{complete_multipartite, cycle};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn symmetric_basics() {
        let g = cycle(5).unwrap();
        let w = symmetric_check(&g, set(&[0, 1]), set(&[0, 1])).unwrap().unwrap();
        assert!(w.verify(&g, set(&[0, 1]), set(&[0, 1])));
        // two isolated vertices with equal outside neighbourhoods in K_{1,2}
        let star = complete_multipartite(&[1, 2]).unwrap();
        let w = symmetric_check(&star, set(&[1]), set(&[2])).unwrap().unwrap();
        assert!(w.verify(&star, set(&[1]), set(&[2])));
        // adjacent singletons
        assert!(symmetric_check(&g, set(&[0]), set(&[1])).unwrap().is_none());
        assert!(symmetric_check(&g, set(&[0, 1]), set(&[1, 2])).is_err());
    }

    #[test]
    fn subsets_enumerate_lexicographically() {
        let all: Vec<Vec<usize>> = subsets_of_size(4, 2).map(|s| s.to_vec()).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets_of_size(3, 0).count(), 1);
        assert_eq!(subsets_of_size(2, 3).count(), 0);
    }

    #[test]
    fn h_graph_decomposes_around_q() {
        let g = realize(&ConstructionSpec::H { n: 12, p: 2, q: 3 }).unwrap();
        let d = dnpr_check(&g, 2, 2).unwrap().unwrap();
        assert!(d.verify(&g));
        assert_eq!(d.exceptional, set(&[0, 1]));
        assert_eq!(d.w, d.exceptional);
        assert_eq!(d.total_blocks(), 10);
    }

    #[test]
    fn joins_and_non_joins() {
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        let d = dnpr_check(&k33, 2, 0).unwrap().unwrap();
        assert!(d.verify(&k33));
        assert!(d.blocks.iter().flatten().all(|b| b.len() == 1));
        assert!(dnpr_check(&cycle(5).unwrap(), 2, 0).unwrap().is_none());
    }
}
