//! Counting certificates that `H(n,p,q)` / `H'(n,p,q)` contain no
//! `C_{k,l}^{p+1}`.
//!
//! Let `Q` be the dominating clique (`|Q| = q - 1`). If the host's Turán
//! part has at most `p` classes, every `K_{p+1}` meets `Q`; in `H'` with
//! exactly `p` classes, at most one clique of a blow-up copy can avoid it
//! (the cliques of a blow-up pairwise share at most one vertex).
//!
//! * Clique counting: a vertex of the blow-up lies in at most three of its
//!   `k + l` cliques (the centre), other base vertices in at most two and
//!   apex vertices in one. So `Q` meets at most `2(|Q| - 1) + 3` cliques,
//!   and a copy is impossible once that (plus one for `H'`) is below
//!   `k + l`.
//! * Vertex cover: every clique meeting `Q` yields a base vertex covering
//!   its base edge, so `Q` induces a vertex cover of `C_{k,l}` of size at
//!   most `|Q|`; a copy is impossible if `|Q|` is below the minimum cover.

use serde::Serialize;

use super::cover::min_vertex_cover;
use crate::constructions::{ConstructionSpec, LollipopParams};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum FreenessArgument {
    CliqueCounting {
        q_size: usize,
        clique_budget: usize,
        demand: usize,
    },
    VertexCover {
        q_size: usize,
        min_cover: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessCertificate {
    pub host: ConstructionSpec,
    pub k: usize,
    pub l: usize,
    pub p: usize,
    pub argument: FreenessArgument,
}

impl FreenessCertificate {
    pub fn is_valid(&self) -> bool {
        match self.argument {
            FreenessArgument::CliqueCounting {
                clique_budget, demand, ..
            } => clique_budget < demand,
            FreenessArgument::VertexCover { q_size, min_cover } => q_size < min_cover,
        }
    }
}

/// Returns a valid certificate if one of the two arguments applies. The
/// argument matching the parity of `(k, l)` is tried first: the cover
/// argument for odd `k` with even `l`, clique counting otherwise. `None`
/// says nothing about containment.
pub fn freeness_certificate(spec: &ConstructionSpec, k: usize, l: usize, p: usize) -> Option<FreenessCertificate> {
    let params = LollipopParams::new(k, l).ok()?;
    if p < 2 || spec.validate().is_err() {
        return None;
    }
    let (host_p, q, prime) = match *spec {
        ConstructionSpec::H { p, q, .. } => (p, q, false),
        ConstructionSpec::HPrime { p, q, .. } => (p, q, true),
        _ => return None,
    };
    // more classes than p would allow cliques that avoid Q entirely
    if host_p > p {
        return None;
    }
    let q_size = q - 1;
    let avoiding = usize::from(prime && host_p == p);

    let counting = || {
        let hits = if q_size == 0 { 0 } else { 2 * (q_size - 1) + 3 };
        FreenessArgument::CliqueCounting {
            q_size,
            clique_budget: hits + avoiding,
            demand: params.order(),
        }
    };
    let cover = || {
        if avoiding > 0 {
            return None;
        }
        let min_cover = min_vertex_cover(&params.graph()).ok()?.size;
        Some(FreenessArgument::VertexCover { q_size, min_cover })
    };
    let attempts = if k % 2 == 1 && l.is_multiple_of(2) {
        [cover(), Some(counting())]
    } else {
        [Some(counting()), cover()]
    };
    attempts.into_iter().flatten().find_map(|argument| {
        let cert = FreenessCertificate {
            host: spec.clone(),
            k,
            l,
            p,
            argument,
        };
        cert.is_valid().then_some(cert)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_odd_counting() {
        // t = 2, |Q| = t, budget 2(t-1)+3 = 5 < 6
        let c = freeness_certificate(&ConstructionSpec::H { n: 40, p: 3, q: 3 }, 3, 3, 3).unwrap();
        assert_eq!(
            c.argument,
            FreenessArgument::CliqueCounting {
                q_size: 2,
                clique_budget: 5,
                demand: 6
            }
        );
    }

    #[test]
    fn odd_even_cover() {
        let c = freeness_certificate(&ConstructionSpec::H { n: 40, p: 2, q: 3 }, 3, 2, 2).unwrap();
        assert_eq!(c.argument, FreenessArgument::VertexCover { q_size: 2, min_cover: 3 });
        assert!(freeness_certificate(&ConstructionSpec::H { n: 40, p: 2, q: 4 }, 3, 2, 2).is_none());
    }

    #[test]
    fn even_odd_prime() {
        // t = 2, budget 2(t-1)+3+1 = 6 < 7
        let c = freeness_certificate(&ConstructionSpec::HPrime { n: 40, p: 2, q: 3 }, 4, 3, 2).unwrap();
        assert_eq!(
            c.argument,
            FreenessArgument::CliqueCounting {
                q_size: 2,
                clique_budget: 6,
                demand: 7
            }
        );
    }

    #[test]
    fn even_even_counting() {
        // t = 1, |Q| = t+1, budget 2t+3 = 5 < 6
        let c = freeness_certificate(&ConstructionSpec::H { n: 40, p: 3, q: 3 }, 4, 2, 3).unwrap();
        assert!(matches!(c.argument, FreenessArgument::CliqueCounting { clique_budget: 5, .. }));
    }

    #[test]
    fn rejects_other_hosts() {
        assert!(freeness_certificate(&ConstructionSpec::HStar { n: 10 }, 3, 2, 2).is_none());
        assert!(freeness_certificate(&ConstructionSpec::H { n: 40, p: 4, q: 2 }, 3, 2, 3).is_none());
    }
}
