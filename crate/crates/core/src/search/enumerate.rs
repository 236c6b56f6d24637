//! Graphs of a fixed order up to isomorphism, generated by canonical
//! augmentation over edge additions.
//!
//! Every graph with `e > 0` edges has one designated parent: delete the last
//! edge of its canonical form. A child `P + uv` is kept only if its
//! designated parent is isomorphic to `P`, so each isomorphism class is
//! produced from exactly one parent. Children of one parent are deduplicated
//! by canonical code.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labeling, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the exhaustive enumerator.
pub const ENUMERATION_CAP: usize = 10;

/// Verdict of an enumeration filter on a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Keep,
    Reject,
    /// The filter could not decide; the graph is not expanded and the
    /// enumeration is marked incomplete.
    Unknown,
}

/// Graphs of one order grouped by edge count. Each level is sorted by
/// canonical code and holds canonical representatives.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub order: usize,
    pub levels: Vec<Vec<(CanonicalCode, Graph)>>,
    /// Number of graphs on which the filter returned [`Verdict::Unknown`].
    pub unknown: usize,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.levels.iter().flatten().map(|(_, g)| g)
    }

    pub fn is_complete(&self) -> bool {
        self.unknown == 0
    }
}

fn relabel_canonically(g: &Graph) -> (CanonicalCode, Graph) {
    let lab = canonical_labeling(g);
    let mut perm = vec![0; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    let c = g.permute(&perm);
    (canonical_form(&c), c)
}

fn children(parent_code: &CanonicalCode, parent: &Graph) -> Vec<(CanonicalCode, Graph)> {
    let mut seen: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    for (u, v) in parent.non_edges() {
        let child = parent.with_edge(u, v).expect("non-edge of a valid graph");
        let (code, canon) = relabel_canonically(&child);
        if seen.contains_key(&code) {
            continue;
        }
        let (a, b) = canon.edges().last().expect("child has an edge");
        let designated = canon.without_edge(a, b).expect("edge exists");
        if canonical_form(&designated) == *parent_code {
            seen.insert(code, canon);
        }
    }
    seen.into_iter().collect()
}

/// Enumerates graphs of order `n`, expanding only graphs the filter keeps.
/// The filter must be monotone: if it rejects a graph it must reject every
/// supergraph on the same vertex set (for example, "contains no copy of
/// some pattern"). With a filter that keeps everything this lists all
/// graphs of order `n`.
pub fn enumerate_filtered<F>(n: usize, filter: F) -> Result<Enumeration>
where
    F: Fn(&Graph) -> Verdict + Sync,
{
    if n > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            what: "exhaustive enumeration",
            order: n,
            cap: ENUMERATION_CAP,
        });
    }
    let root = Graph::empty(n)?;
    let mut unknown = 0;
    let mut levels = Vec::new();
    let mut current = match filter(&root) {
        Verdict::Keep => vec![(canonical_form(&root), root)],
        Verdict::Reject => Vec::new(),
        Verdict::Unknown => {
            unknown += 1;
            Vec::new()
        }
    };
    while !current.is_empty() {
        let next: Vec<((CanonicalCode, Graph), Verdict)> = current
            .par_iter()
            .flat_map_iter(|(code, g)| children(code, g))
            .map(|(code, g)| {
                let verdict = filter(&g);
                ((code, g), verdict)
            })
            .collect();
        levels.push(current);
        let mut kept = Vec::with_capacity(next.len());
        for (entry, verdict) in next {
            match verdict {
                Verdict::Keep => kept.push(entry),
                Verdict::Reject => {}
                Verdict::Unknown => unknown += 1,
            }
        }
        kept.sort_by(|a, b| a.0.cmp(&b.0));
        current = kept;
    }
    Ok(Enumeration {
        order: n,
        levels,
        unknown,
    })
}

/// All graphs of order `n` up to isomorphism.
pub fn all_graphs(n: usize) -> Result<Enumeration> {
    enumerate_filtered(n, |_| Verdict::Keep)
}
