//! Subgraph containment (non-induced), blow-up embedding, exact vertex
//! cover and freeness certificates for `H`/`H'` hosts.
//!
//! Every search takes a node budget. Running out of budget yields
//! [`Outcome::Undecided`], which callers carry through instead of reading
//! it as absence.

mod blowup_embed;
mod certificate;
mod cover;
mod matching;
mod subgraph;

pub use blowup_embed::{blowup_contains, blowup_contains_base, blowup_contains_with, BlowupEmbedding};
pub use certificate::{freeness_certificate, FreenessArgument, FreenessCertificate};
pub use cover::{min_vertex_cover, min_vertex_cover_capped, VertexCover, DEFAULT_COVER_CAP};
pub use matching::saturating_matching;
pub use subgraph::{subgraph_contains, subgraph_contains_with, Embedding};

use serde::Serialize;

/// Result of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Outcome<T> {
    Found(T),
    /// The search space was exhausted without a witness.
    Absent,
    /// The node budget ran out first.
    Undecided,
}

impl<T> Outcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Outcome::Absent)
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Outcome::Undecided)
    }

    pub fn found(&self) -> Option<&T> {
        match self {
            Outcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self {
            Outcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(w) => Outcome::Found(f(w)),
            Outcome::Absent => Outcome::Absent,
            Outcome::Undecided => Outcome::Undecided,
        }
    }

    /// `Some(true)` if found, `Some(false)` if absent, `None` if undecided.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Outcome::Found(_) => Some(true),
            Outcome::Absent => Some(false),
            Outcome::Undecided => None,
        }
    }
}

/// Default number of search nodes before a search gives up.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// `None` means unbounded.
    pub node_budget: Option<u64>,
    /// Split the search over root candidates with rayon. The witness
    /// returned is still the one the sequential search would find first.
    /// Each root branch gets the full budget.
    pub parallel: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            node_budget: Some(DEFAULT_NODE_BUDGET),
            parallel: false,
        }
    }
}

impl SearchLimits {
    pub fn with_budget(node_budget: u64) -> Self {
        SearchLimits {
            node_budget: Some(node_budget),
            ..Self::default()
        }
    }

    pub fn parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }
}

/// Order in which pattern vertices are matched: start from a vertex of
/// maximum degree, then repeatedly take the vertex with the most already
/// ordered neighbours (ties: larger degree, then smaller label).
pub(crate) struct MatchPlan {
    pub order: Vec<usize>,
    /// Earlier positions adjacent to each position.
    pub back: Vec<Vec<usize>>,
    /// Later positions adjacent to each position.
    pub forward: Vec<Vec<usize>>,
    pub degree: Vec<usize>,
}

impl MatchPlan {
    pub fn new(pattern: &crate::graph::Graph) -> Self {
        let n = pattern.order();
        let mut placed = vec![false; n];
        let mut pos = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut placed_set = crate::bitset::VertexSet::new();
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by(|&a, &b| {
                    let ka = ((pattern.neighbors(a) & placed_set).len(), pattern.degree(a));
                    let kb = ((pattern.neighbors(b) & placed_set).len(), pattern.degree(b));
                    ka.cmp(&kb).then(b.cmp(&a))
                })
                .expect("an unplaced vertex remains");
            placed[next] = true;
            placed_set.insert(next);
            pos[next] = order.len();
            order.push(next);
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b: Vec<usize> = pattern.neighbors(v).iter().map(|u| pos[u]).filter(|&j| j < i).collect();
                b.sort_unstable();
                b
            })
            .collect();
        let forward = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut f: Vec<usize> = pattern.neighbors(v).iter().map(|u| pos[u]).filter(|&j| j > i).collect();
                f.sort_unstable();
                f
            })
            .collect();
        let degree = order.iter().map(|&v| pattern.degree(v)).collect();
        MatchPlan {
            order,
            back,
            forward,
            degree,
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }
}
