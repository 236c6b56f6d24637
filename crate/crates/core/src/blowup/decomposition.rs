//! Brute-force decomposition families.
//!
//! `M` belongs to the decomposition family of `L` (for `p` and some `t`)
//! when `L ⊆ (M ⊔ I_t) ∨ K_{p-1}(t, ..., t)`, and no graph obtained from
//! `M` by deleting an edge (and then any isolated vertices) has this
//! property. Deleting a vertex removes its edges, so edge-minimality
//! implies vertex-minimality. Growing `t` or `M` only grows the host, so
//! membership is monotone in both and `t = t_max` decides "some
//! `t <= t_max`".

use std::collections::HashMap;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalCode};
use crate::containment::{subgraph_contains_with, Embedding, Outcome, SearchLimits};
use crate::error::{invalid, Error, Result};
use crate::family::GraphFamily;
use crate::graph::{complete_multipartite, disjoint_union, join, Graph};
use crate::search::enumerate::{all_graphs, ENUMERATION_CAP};

/// Default bound on the order of candidate graphs `M`.
pub const DEFAULT_DECOMPOSITION_ORDER: usize = 8;

/// `(M ⊔ I_t) ∨ K_{p-1}(t, ..., t)`. The vertices of `M` keep their
/// labels; the `t` isolated vertices follow, then the `p - 1` parts.
pub fn decomposition_host(m: &Graph, p: usize, t: usize) -> Result<Graph> {
    if p == 0 {
        return invalid("decomposition host needs p >= 1");
    }
    let left = disjoint_union(m, &Graph::empty(t)?)?;
    let right = complete_multipartite(&vec![t; p - 1])?;
    join(&left, &right)
}

/// Decides `L ⊆ (M ⊔ I_t) ∨ K_{p-1}(t, ..., t)`. A host above the graph
/// order cap is an error; an exhausted budget is [`Outcome::Undecided`].
pub fn decomposition_member_check(
    m: &Graph,
    l: &Graph,
    p: usize,
    t: usize,
    limits: SearchLimits,
) -> Result<Outcome<Embedding>> {
    let host = decomposition_host(m, p, t)?;
    Ok(subgraph_contains_with(&host, l, limits))
}

/// Result of [`decomposition_family_bruteforce`].
#[derive(Debug, Clone)]
pub struct DecompositionFamily {
    /// Minimal members of order at most `max_order`.
    pub family: GraphFamily,
    pub max_order: usize,
    pub t_max: usize,
    /// Candidates whose membership or minimality stayed undecided.
    pub undecided: usize,
    /// Containment searches actually run (the rest followed by
    /// monotonicity).
    pub searches: usize,
}

impl DecompositionFamily {
    /// True if some undecided search could hide a member.
    pub fn is_partial(&self) -> bool {
        self.undecided > 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Membership {
    Member,
    NonMember,
    Unknown,
}

struct Verdict {
    own: Membership,
    searched: bool,
    minimal: bool,
    unsure: bool,
}

impl From<&Outcome<Embedding>> for Membership {
    fn from(o: &Outcome<Embedding>) -> Self {
        match o {
            Outcome::Found(_) => Membership::Member,
            Outcome::Absent => Membership::NonMember,
            Outcome::Undecided => Membership::Unknown,
        }
    }
}

/// All minimal members of the decomposition family of `l` with at most
/// `max_order` vertices, for `t = t_max`, computed by checking every graph
/// without isolated vertices up to that order. Candidates are processed by
/// increasing edge count; a candidate with a member among its one-edge
/// deletions is a member by monotonicity and is not searched.
pub fn decomposition_family_bruteforce(
    l: &Graph,
    p: usize,
    max_order: usize,
    t_max: usize,
    limits: SearchLimits,
) -> Result<DecompositionFamily> {
    if t_max < l.order() {
        return invalid(format!("t_max = {t_max} is below |V(L)| = {}", l.order()));
    }
    if max_order > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            what: "decomposition candidate",
            order: max_order,
            cap: ENUMERATION_CAP,
        });
    }
    // fail early if the largest host is out of range
    decomposition_host(&Graph::empty(max_order)?, p, t_max)?;

    let empty = Graph::empty(0)?;
    let empty_state = Membership::from(&decomposition_member_check(&empty, l, p, t_max, limits)?);
    let mut result = DecompositionFamily {
        family: GraphFamily::new(),
        max_order,
        t_max,
        undecided: usize::from(empty_state == Membership::Unknown),
        searches: 1,
    };
    if empty_state == Membership::Member {
        result.family.insert(empty.clone());
    }

    let mut by_edges: Vec<Vec<(CanonicalCode, Graph)>> = Vec::new();
    for order in 1..=max_order {
        for level in all_graphs(order)?.levels {
            for (code, g) in level {
                if g.min_degree() == 0 {
                    continue;
                }
                let e = g.edge_count();
                if by_edges.len() <= e {
                    by_edges.resize_with(e + 1, Vec::new);
                }
                by_edges[e].push((code, g));
            }
        }
    }

    let mut state: HashMap<CanonicalCode, Membership> = HashMap::new();
    state.insert(canonical_form(&empty), empty_state);
    for level in by_edges {
        let decided: Vec<Verdict> = level
            .par_iter()
            .map(|(_, m)| -> Result<Verdict> {
                let below: Vec<Membership> = m
                    .edges()
                    .map(|(a, b)| {
                        let d = m.without_edge(a, b).expect("edge exists").without_isolated();
                        state[&canonical_form(&d)]
                    })
                    .collect();
                if below.contains(&Membership::Member) {
                    return Ok(Verdict {
                        own: Membership::Member,
                        searched: false,
                        minimal: false,
                        unsure: false,
                    });
                }
                let own = Membership::from(&decomposition_member_check(m, l, p, t_max, limits)?);
                let minimal = own == Membership::Member && below.iter().all(|&s| s == Membership::NonMember);
                let unsure = own == Membership::Unknown
                    || (own == Membership::Member && below.contains(&Membership::Unknown));
                Ok(Verdict {
                    own,
                    searched: true,
                    minimal,
                    unsure,
                })
            })
            .collect::<Result<_>>()?;
        for ((code, m), v) in level.into_iter().zip(decided) {
            result.searches += usize::from(v.searched);
            result.undecided += usize::from(v.unsure);
            if v.minimal {
                result.family.insert_with_code(code.clone(), m);
            }
            state.insert(code, v.own);
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn single_vertex_against_triangle() {
        let m = Graph::empty(1).unwrap();
        let o = decomposition_member_check(&m, &complete(3).unwrap(), 2, 1, SearchLimits::default()).unwrap();
        assert!(o.is_absent());
    }

    #[test]
    fn triangle_family_is_an_edge() {
        let d = decomposition_family_bruteforce(&complete(3).unwrap(), 2, 4, 3, SearchLimits::default()).unwrap();
        assert!(!d.is_partial());
        assert_eq!(d.family.len(), 1);
        assert!(d.family.contains(&path(2).unwrap()));
    }

    #[test]
    fn rejects_small_t() {
        assert!(decomposition_family_bruteforce(&complete(3).unwrap(), 2, 4, 2, SearchLimits::default()).is_err());
    }
}
