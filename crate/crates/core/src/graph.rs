//! Immutable simple graphs on vertices `0..n`.

use std::fmt;

use crate::bitset::{VertexSet, MAX_ORDER};
use crate::error::{invalid, Error, Result};

/// Undirected simple graph. Adjacency is stored as one [`VertexSet`] per
/// vertex; the relation is kept symmetric and irreflexive by every
/// constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                what: "graph",
                order: n,
                cap: MAX_ORDER,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood sets, symmetrizing them.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for (u, nb) in adj.iter().enumerate() {
            if !nb.is_subset(&all) {
                let vertex = (*nb - all).first().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex, order: n });
            }
            for v in nb.iter() {
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                g.link(u, v);
            }
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let order = self.order();
        for vertex in [u, v] {
            if vertex >= order {
                return Err(Error::VertexOutOfRange { vertex, order });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| ((u + 1)..n).filter(move |&v| !self.adj[u].contains(v)).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Returns a copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    /// Returns a copy with the edge `uv` removed (a no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in
    /// ascending order of the original labels.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let verts = keep.to_vec();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|u| index[u]).collect())
            .collect();
        Graph { adj }
    }

    /// Deletes `drop` and relabels the survivors in ascending order.
    pub fn remove_vertices(&self, drop: VertexSet) -> Graph {
        self.induced(self.vertices() - drop)
    }

    /// Deletes isolated vertices.
    pub fn without_isolated(&self) -> Graph {
        let keep = (0..self.order()).filter(|&v| self.degree(v) > 0).collect();
        self.induced(keep)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let all = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut s = all - self.adj[v];
                s.remove(v);
                s
            })
            .collect();
        Graph { adj }
    }

    /// Applies the relabelling `v -> perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length must equal graph order");
        let mut adj = vec![VertexSet::new(); n];
        for u in 0..n {
            adj[perm[u]] = self.adj[u].iter().map(|v| perm[v]).collect();
        }
        Graph { adj }
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in frontier.iter() {
                    next |= self.adj[v];
                }
                frontier = next - comp;
                comp |= next;
            }
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(&set))
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set;
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// Whether the graph admits a proper colouring with `colors` colours.
    pub fn is_colorable(&self, colors: usize) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        if colors == 0 {
            return false;
        }
        // Colour vertices in descending-degree order; colour classes are
        // filled in order so that symmetric colourings are not revisited.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut classes = vec![VertexSet::new(); colors];
        self.color_rec(&order, 0, &mut classes, 0)
    }

    fn color_rec(&self, order: &[usize], i: usize, classes: &mut [VertexSet], used: usize) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        let limit = (used + 1).min(classes.len());
        for c in 0..limit {
            if classes[c].is_disjoint(&self.adj[v]) {
                classes[c].insert(v);
                if self.color_rec(order, i + 1, classes, used.max(c + 1)) {
                    return true;
                }
                classes[c].remove(v);
            }
        }
        false
    }

    /// Partition into twin classes: `u` and `v` are twins when
    /// `N(u) - {v} == N(v) - {u}`. Returns the class id of every vertex;
    /// ids are assigned in order of each class's least vertex.
    ///
    /// Swapping two twins is an automorphism fixing every other vertex.
    /// Within a class of size at least two, members are either pairwise
    /// adjacent or pairwise non-adjacent, and any two classes are joined
    /// completely or not at all.
    pub fn twin_classes(&self) -> Vec<usize> {
        let n = self.order();
        let mut class = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for v in 0..n {
            let found = reps.iter().position(|&r| {
                let mut a = self.adj[v];
                a.remove(r);
                let mut b = self.adj[r];
                b.remove(v);
                a == b
            });
            match found {
                Some(c) => class[v] = c,
                None => {
                    class[v] = reps.len();
                    reps.push(v);
                }
            }
        }
        class
    }

    pub fn chromatic_number(&self) -> usize {
        (0..=self.order()).find(|&c| self.is_colorable(c)).unwrap_or(self.order())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicKind {
    /// `P_n`: `n` vertices.
    Path,
    /// `C_n`: `n >= 3` vertices.
    Cycle,
    /// `S_n`: a centre joined to `n` leaves (order `n + 1`).
    Star,
    /// `K_n`.
    Complete,
    /// `I_n`.
    Independent,
    /// `M_k`: `k` disjoint edges (order `2k`).
    Matching,
}

/// Builds one of the named small graphs. Orders follow the usual
/// conventions: `S_n` has `n + 1` vertices and `M_k` has `2k`.
pub fn make_basic(kind: BasicKind, size: usize) -> Result<Graph> {
    if size == 0 {
        return invalid(format!("{kind:?} requires size >= 1"));
    }
    match kind {
        BasicKind::Path => {
            let edges: Vec<_> = (1..size).map(|v| (v - 1, v)).collect();
            Graph::from_edges(size, &edges)
        }
        BasicKind::Cycle => {
            if size < 3 {
                return invalid(format!("cycle requires size >= 3, got {size}"));
            }
            let edges: Vec<_> = (0..size).map(|v| (v, (v + 1) % size)).collect();
            Graph::from_edges(size, &edges)
        }
        BasicKind::Star => {
            let edges: Vec<_> = (1..=size).map(|v| (0, v)).collect();
            Graph::from_edges(size + 1, &edges)
        }
        BasicKind::Complete => complete(size),
        BasicKind::Independent => Graph::empty(size),
        BasicKind::Matching => {
            let edges: Vec<_> = (0..size).map(|i| (2 * i, 2 * i + 1)).collect();
            Graph::from_edges(2 * size, &edges)
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    make_basic(BasicKind::Path, n)
}

pub fn cycle(n: usize) -> Result<Graph> {
    make_basic(BasicKind::Cycle, n)
}

/// `K_n`; unlike [`make_basic`] this accepts `n = 0`.
pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let all = VertexSet::full(n);
    for v in 0..n {
        let mut s = all;
        s.remove(v);
        g.adj[v] = s;
    }
    Ok(g)
}

/// Vertex-disjoint union; `h` is relabelled by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.order();
    let mut out = Graph::empty(off + h.order())?;
    for (u, v) in g.edges() {
        out.link(u, v);
    }
    for (u, v) in h.edges() {
        out.link(u + off, v + off);
    }
    Ok(out)
}

/// `k` disjoint copies of `h`.
pub fn copies(k: usize, h: &Graph) -> Result<Graph> {
    let mut out = Graph::empty(0)?;
    for _ in 0..k {
        out = disjoint_union(&out, h)?;
    }
    Ok(out)
}

/// Disjoint union plus every edge between the two vertex sets.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = disjoint_union(g, h)?;
    let off = g.order();
    for u in 0..off {
        for v in 0..h.order() {
            out.link(u, v + off);
        }
    }
    Ok(out)
}

/// Complete multipartite graph; parts are laid out consecutively in the
/// given order. Zero-sized parts are allowed and contribute nothing.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    let n: usize = sizes.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if part[u] != part[v] {
                g.link(u, v);
            }
        }
    }
    Ok(g)
}

/// Part sizes of `T_p(n)`: the `n mod p` larger parts come first.
pub fn turan_part_sizes(n: usize, p: usize) -> Result<Vec<usize>> {
    if p == 0 {
        return invalid("Turan graph requires p >= 1");
    }
    let (base, big) = (n / p, n % p);
    Ok((0..p).map(|i| if i < big { base + 1 } else { base }).collect())
}

/// Turán graph `T_p(n)`.
pub fn turan(n: usize, p: usize) -> Result<Graph> {
    complete_multipartite(&turan_part_sizes(n, p)?)
}

pub(crate) fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `e(T_p(n))` in closed form.
pub fn turan_edge_count(n: usize, p: usize) -> Result<usize> {
    let sizes = turan_part_sizes(n, p)?;
    Ok(binom2(n) - sizes.iter().map(|&s| binom2(s)).sum::<usize>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_orders() {
        let p3 = make_basic(BasicKind::Path, 3).unwrap();
        assert_eq!((p3.order(), p3.edge_count()), (3, 2));
        let s4 = make_basic(BasicKind::Star, 4).unwrap();
        assert_eq!((s4.order(), s4.edge_count()), (5, 4));
        let m3 = make_basic(BasicKind::Matching, 3).unwrap();
        assert_eq!((m3.order(), m3.edge_count()), (6, 3));
        assert_eq!(m3.max_degree(), 1);
        let k4 = make_basic(BasicKind::Complete, 4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let c5 = make_basic(BasicKind::Cycle, 5).unwrap();
        assert_eq!(c5.degree_sequence(), vec![2; 5]);
    }

    #[test]
    fn basic_rejects() {
        assert!(make_basic(BasicKind::Cycle, 2).is_err());
        assert!(make_basic(BasicKind::Path, 0).is_err());
        assert!(make_basic(BasicKind::Matching, 0).is_err());
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert!(Graph::empty(MAX_ORDER + 1).is_err());
    }

    #[test]
    fn unions() {
        let p2 = path(2).unwrap();
        let u = disjoint_union(&p2, &p2).unwrap();
        assert_eq!((u.order(), u.edge_count()), (4, 2));
        assert!(!u.has_edge(1, 2));
        let k3 = complete(3).unwrap();
        let two = copies(2, &k3).unwrap();
        assert_eq!((two.order(), two.edge_count()), (6, 6));
        let i5 = disjoint_union(&Graph::empty(3).unwrap(), &Graph::empty(2).unwrap()).unwrap();
        assert_eq!(i5, Graph::empty(5).unwrap());
    }

    #[test]
    fn joins() {
        let i2 = Graph::empty(2).unwrap();
        let i3 = Graph::empty(3).unwrap();
        let k23 = join(&i2, &i3).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23, complete_multipartite(&[2, 3]).unwrap());
        let wheel = join(&complete(1).unwrap(), &cycle(4).unwrap()).unwrap();
        assert_eq!(wheel.edge_count(), 8);
        let k3 = join(&complete(2).unwrap(), &Graph::empty(1).unwrap()).unwrap();
        assert_eq!(k3, complete(3).unwrap());
    }

    #[test]
    fn turan_graphs() {
        assert_eq!(turan_part_sizes(5, 2).unwrap(), vec![3, 2]);
        assert_eq!(turan(5, 2).unwrap().edge_count(), 6);
        assert_eq!(turan(8, 2).unwrap().edge_count(), 16);
        assert_eq!(turan_part_sizes(7, 3).unwrap(), vec![3, 2, 2]);
        assert!(turan(4, 0).is_err());
        // cross-part pairs of K(2,2,2): 3 pairs of parts, 2*2 each
        assert_eq!(complete_multipartite(&[2, 2, 2]).unwrap().edge_count(), 3 * 2 * 2);
    }

    #[test]
    fn induced_and_components() {
        let g = disjoint_union(&cycle(4).unwrap(), &path(3).unwrap()).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].to_vec(), vec![4, 5, 6]);
        let sub = g.induced(comps[1]);
        assert_eq!(sub, path(3).unwrap());
        assert_eq!(g.remove_vertices(comps[0]), path(3).unwrap());
    }

    #[test]
    fn twins_of_turan_plus_clique() {
        let g = join(&complete(2).unwrap(), &turan(6, 2).unwrap()).unwrap();
        assert_eq!(g.twin_classes(), vec![0, 0, 1, 1, 1, 2, 2, 2]);
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.twin_classes(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn coloring() {
        assert_eq!(cycle(5).unwrap().chromatic_number(), 3);
        assert_eq!(cycle(6).unwrap().chromatic_number(), 2);
        assert_eq!(complete(4).unwrap().chromatic_number(), 4);
        assert_eq!(Graph::empty(3).unwrap().chromatic_number(), 1);
        assert_eq!(Graph::empty(0).unwrap().chromatic_number(), 0);
    }
}
