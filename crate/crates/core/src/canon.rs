//! Canonical labelling by partition refinement and individualisation.
//!
//! The canonical code of a graph is the smallest adjacency bit string over
//! all leaves of an individualisation-refinement search tree. Since the
//! refinement and the choice of target cell are isomorphism-invariant, the
//! leaf set of a relabelled graph is the relabelled leaf set, so the minimum
//! is a complete invariant. Two prunings keep the tree small:
//!
//! * among twins in the target cell only one is individualised;
//! * vertices in the same orbit of automorphisms already discovered (and
//!   fixing the current path pointwise) are skipped.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`exhaustive_canonical_form`].
pub const EXHAUSTIVE_CAP: usize = 10;

/// Isomorphism-invariant key: equal exactly for isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct CanonicalCode {
    order: u32,
    bits: Vec<u64>,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Rebuilds the canonical representative from the code.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("code describes a valid graph")
    }
}

fn code_for_labeling(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; pairs.div_ceil(64)];
    let mut k = 0;
    for i in 0..n {
        let row = g.neighbors(lab[i]);
        for j in (i + 1)..n {
            if row.contains(lab[j]) {
                bits[k / 64] |= 1u64 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

/// Equitable refinement: split cells by the number of neighbours in each
/// splitter cell until stable. Sub-cells are ordered by that count.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let mut s = 0;
    while s < cells.len() {
        let splitter: VertexSet = cells[s].iter().collect();
        let mut out: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
        let mut split = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                out.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(usize, usize)> = cell
                .iter()
                .map(|&v| ((g.neighbors(v) & splitter).len(), v))
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    out.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            if keyed[0].0 != keyed[keyed.len() - 1].0 {
                split = true;
            }
        }
        *cells = out;
        s = if split { 0 } else { s + 1 };
    }
}

struct Search<'a> {
    g: &'a Graph,
    twin: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_for_labeling(self.g, &lab);
        match &self.best {
            None => self.best = Some((code, lab)),
            Some((best, best_lab)) => match code.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((code, lab)),
                std::cmp::Ordering::Equal => {
                    let mut gamma = vec![0; lab.len()];
                    for (i, &v) in lab.iter().enumerate() {
                        gamma[v] = best_lab[i];
                    }
                    if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                        self.autos.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Orbit representative map under discovered automorphisms that fix
    /// every vertex of `path`.
    fn orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        for gamma in &self.autos {
            if path.iter().all(|&x| gamma[x] == x) {
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }

    fn run(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) {
        let Some(ti) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut target = cells[ti].clone();
        target.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if tried.iter().any(|&u| self.twin[u] == self.twin[v]) {
                continue;
            }
            if !tried.is_empty() && !self.autos.is_empty() {
                let orb = self.orbits(path);
                if tried.iter().any(|&u| orb[u] == orb[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(vec![v]);
            child.push(target.iter().copied().filter(|&x| x != v).collect());
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.g, &mut child);
            path.push(v);
            self.run(child, path);
            path.pop();
        }
    }
}

/// `lab[i]` is the vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        twin: g.twin_classes(),
        best: None,
        autos: Vec::new(),
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    search.run(cells, &mut Vec::new());
    search.best.expect("search reaches at least one leaf").1
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    let lab = canonical_labeling(g);
    CanonicalCode {
        order: g.order() as u32,
        bits: code_for_labeling(g, &lab),
    }
}

/// The canonical representative, with vertex `lab[i]` renamed to `i`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    let mut perm = vec![0; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    g.permute(&perm)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

/// Minimum adjacency string over all `n!` labellings. Only for small
/// graphs; it serves as an independent reference for [`canonical_form`].
/// The two codes are different functions and must not be mixed.
pub fn exhaustive_canonical_form(g: &Graph) -> Result<CanonicalCode> {
    let n = g.order();
    if n > EXHAUSTIVE_CAP {
        return Err(Error::TooLarge {
            what: "exhaustive canonicalization input",
            order: n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let mut lab: Vec<usize> = (0..n).collect();
    let mut best = code_for_labeling(g, &lab);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                lab.swap(0, i);
            } else {
                lab.swap(c[i], i);
            }
            let code = code_for_labeling(g, &lab);
            if code < best {
                best = code;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CanonicalCode {
        order: n as u32,
        bits: best,
    })
}
