//! Which non-edges of a host create a blown-up lollipop when added.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::containment::{blowup_contains_with, BlowupEmbedding, Outcome, SearchLimits};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which non-edges to probe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EdgeSample {
    All,
    /// `count` distinct non-edges drawn with a ChaCha8 stream.
    Random { count: usize, seed: u64 },
    Explicit { pairs: Vec<(usize, usize)> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeOutcome {
    Creates,
    Free,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeProbe {
    pub u: usize,
    pub v: usize,
    pub outcome: ProbeOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BlowupEmbedding>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub k: usize,
    pub l: usize,
    pub p: usize,
    pub order: usize,
    pub edges: usize,
    pub sample: EdgeSample,
    /// Whether the host itself already contains the blow-up.
    pub host: ProbeOutcome,
    pub creates: usize,
    pub free: usize,
    pub undecided: usize,
    pub probes: Vec<EdgeProbe>,
}

fn outcome_of(o: Outcome<BlowupEmbedding>) -> (ProbeOutcome, Option<BlowupEmbedding>) {
    match o {
        Outcome::Found(w) => (ProbeOutcome::Creates, Some(w)),
        Outcome::Absent => (ProbeOutcome::Free, None),
        Outcome::Undecided => (ProbeOutcome::Undecided, None),
    }
}

/// Probes each sampled non-edge `uv` of `g` by deciding whether
/// `g + uv` contains `C_{k,l}^{p+1}`. Probes run in parallel; the report
/// lists them in the sampled order, so it is reproducible. Explicit pairs
/// that are already edges are an error.
pub fn saturation_report(
    g: &Graph,
    k: usize,
    l: usize,
    p: usize,
    sample: EdgeSample,
    limits: SearchLimits,
) -> Result<SaturationReport> {
    let mut pairs: Vec<(usize, usize)> = match &sample {
        EdgeSample::All => g.non_edges().collect(),
        EdgeSample::Random { count, seed } => {
            let mut all: Vec<(usize, usize)> = g.non_edges().collect();
            all.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed));
            all.truncate(*count);
            all
        }
        EdgeSample::Explicit { pairs } => pairs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect(),
    };
    for &(u, v) in &pairs {
        if g.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!("({u}, {v}) is already an edge")));
        }
    }
    if matches!(sample, EdgeSample::Random { .. }) {
        pairs.sort_unstable();
    }
    let (host, _) = outcome_of(blowup_contains_with(g, k, l, p, limits)?);
    let probes: Vec<EdgeProbe> = pairs
        .par_iter()
        .map(|&(u, v)| -> Result<EdgeProbe> {
            let h = g.with_edge(u, v)?;
            let (outcome, witness) = outcome_of(blowup_contains_with(&h, k, l, p, limits)?);
            Ok(EdgeProbe { u, v, outcome, witness })
        })
        .collect::<Result<_>>()?;
    let count = |o| probes.iter().filter(|e| e.outcome == o).count();
    Ok(SaturationReport {
        k,
        l,
        p,
        order: g.order(),
        edges: g.edge_count(),
        host,
        creates: count(ProbeOutcome::Creates),
        free: count(ProbeOutcome::Free),
        undecided: count(ProbeOutcome::Undecided),
        sample,
        probes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn complete_host_has_no_probes() {
        let r = saturation_report(&complete(9).unwrap(), 3, 2, 2, EdgeSample::All, SearchLimits::default()).unwrap();
        assert!(r.probes.is_empty());
        assert_eq!(r.host, ProbeOutcome::Free);
    }

    #[test]
    fn edgeless_host_stays_free() {
        let r = saturation_report(&Graph::empty(7).unwrap(), 3, 2, 2, EdgeSample::All, SearchLimits::default()).unwrap();
        assert_eq!((r.free, r.creates, r.undecided), (21, 0, 0));
    }

    #[test]
    fn random_sample_is_seeded() {
        let g = Graph::empty(12).unwrap();
        let s = EdgeSample::Random { count: 5, seed: 9 };
        let a = saturation_report(&g, 3, 2, 2, s.clone(), SearchLimits::default()).unwrap();
        let b = saturation_report(&g, 3, 2, 2, s, SearchLimits::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.probes.len(), 5);
        let bad = EdgeSample::Explicit { pairs: vec![(0, 1)] };
        assert!(saturation_report(&complete(3).unwrap(), 3, 2, 2, bad, SearchLimits::default()).is_err());
    }
}
