use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::enumerate::{enumerate_filtered, Verdict, ENUMERATION_CAP};
use crate::canon::{canonical_form, CanonicalCode};
use crate::containment::{subgraph_contains_with, Outcome, SearchLimits};
use crate::error::{invalid, Error, Result};
use crate::family::GraphFamily;
use crate::graph::Graph;

/// Default largest order for [`ex_bruteforce`].
pub const EX_BRUTEFORCE_CAP: usize = 9;

/// Exact Turán number of a pattern at one order, with all extremal graphs.
#[derive(Debug, Clone)]
pub struct TuranResult {
    pub n: usize,
    pub pattern: CanonicalCode,
    pub max_edges: usize,
    /// Pattern-free graphs with `max_edges` edges, up to isomorphism.
    pub witnesses: GraphFamily,
    /// Containment checks that ran out of budget. When nonzero,
    /// `max_edges` is only a lower bound.
    pub undecided: usize,
}

impl TuranResult {
    pub fn is_exact(&self) -> bool {
        self.undecided == 0
    }
}

pub fn ex_bruteforce(n: usize, pattern: &Graph) -> Result<TuranResult> {
    ex_bruteforce_with(n, pattern, EX_BRUTEFORCE_CAP, SearchLimits::default())
}

/// `ex(n, pattern)` by enumerating pattern-free graphs on `n` vertices up
/// to isomorphism. Since every supergraph of a graph containing the
/// pattern contains it too, the enumeration never expands such graphs.
pub fn ex_bruteforce_with(n: usize, pattern: &Graph, cap: usize, limits: SearchLimits) -> Result<TuranResult> {
    if pattern.order() == 0 {
        return invalid("pattern must have at least one vertex");
    }
    let cap = cap.min(ENUMERATION_CAP);
    if n > cap {
        return Err(Error::TooLarge {
            what: "exhaustive Turán search",
            order: n,
            cap,
        });
    }
    let e = enumerate_filtered(n, |g| match subgraph_contains_with(g, pattern, limits) {
        Outcome::Found(_) => Verdict::Reject,
        Outcome::Absent => Verdict::Keep,
        Outcome::Undecided => Verdict::Unknown,
    })?;
    let Some(top) = e.levels.last() else {
        // only reachable when I_n already contains the pattern
        return invalid(format!("no graph of order {n} avoids a pattern with no edges"));
    };
    let max_edges = e.levels.len() - 1;
    let mut witnesses = GraphFamily::new();
    for (code, g) in top {
        witnesses.insert_with_code(code.clone(), g.clone());
    }
    Ok(TuranResult {
        n,
        pattern: canonical_form(pattern),
        max_edges,
        witnesses,
        undecided: e.unknown,
    })
}

/// A pattern-free graph found by randomized greedy edge addition.
#[derive(Debug, Clone)]
pub struct RandomLowerBound {
    pub graph: Graph,
    pub seed: u64,
    pub restarts: usize,
    /// Edge probes skipped because the containment check ran out of
    /// budget. The graph is still pattern-free, but may not be maximal.
    pub undecided: usize,
}

impl RandomLowerBound {
    pub fn edges(&self) -> usize {
        self.graph.edge_count()
    }
}

/// Runs `restarts` greedy trajectories: shuffle all vertex pairs with a
/// ChaCha8 stream seeded by `seed`, then add each pair whose addition keeps
/// the graph pattern-free. Containment is monotone, so a pair rejected
/// once stays rejected and every trajectory ends edge-maximal. Returns the
/// densest result (the earliest on ties); `restarts = 0` returns `I_n`.
pub fn random_maximal_lowerbound(
    n: usize,
    pattern: &Graph,
    seed: u64,
    restarts: usize,
    limits: SearchLimits,
) -> Result<RandomLowerBound> {
    let mut best = Graph::empty(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut undecided = 0;
    let pairs: Vec<(usize, usize)> = best.non_edges().collect();
    for _ in 0..restarts {
        let mut order = pairs.clone();
        order.shuffle(&mut rng);
        let mut g = Graph::empty(n)?;
        for (u, v) in order {
            let h = g.with_edge(u, v)?;
            match subgraph_contains_with(&h, pattern, limits) {
                Outcome::Absent => g = h,
                Outcome::Found(_) => {}
                Outcome::Undecided => undecided += 1,
            }
        }
        if g.edge_count() > best.edge_count() {
            best = g;
        }
    }
    Ok(RandomLowerBound {
        graph: best,
        seed,
        restarts,
        undecided,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn named_values() {
        assert_eq!(ex_bruteforce(5, &complete(3).unwrap()).unwrap().max_edges, 6);
        let r = ex_bruteforce(4, &path(3).unwrap()).unwrap();
        assert_eq!(r.max_edges, 2);
        assert_eq!(r.witnesses.len(), 1);
        let big = crate::blowup::blowup(&crate::constructions::lollipop(3, 2).unwrap(), 2).unwrap().graph;
        assert_eq!(ex_bruteforce(6, &big).unwrap().max_edges, 15);
    }

    #[test]
    fn cap_and_bad_pattern() {
        assert!(ex_bruteforce(10, &complete(3).unwrap()).is_err());
        assert!(ex_bruteforce(3, &Graph::empty(0).unwrap()).is_err());
        assert!(ex_bruteforce(3, &Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn greedy_bounds() {
        let k3 = complete(3).unwrap();
        let a = random_maximal_lowerbound(5, &k3, 11, 4, SearchLimits::default()).unwrap();
        let b = random_maximal_lowerbound(5, &k3, 11, 4, SearchLimits::default()).unwrap();
        assert_eq!(a.graph, b.graph);
        assert!(a.edges() <= 6);
        assert!(subgraph_contains_with(&a.graph, &k3, SearchLimits::default()).is_absent());
        let k2 = complete(2).unwrap();
        assert_eq!(random_maximal_lowerbound(6, &k2, 3, 2, SearchLimits::default()).unwrap().edges(), 0);
    }
}
