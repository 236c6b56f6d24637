use rayon::prelude::*;
use serde::Serialize;

use super::{MatchPlan, Outcome, SearchLimits};
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Injective map from pattern vertices to host vertices carrying every
/// pattern edge onto a host edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Edge-by-edge check, independent of the search that produced it.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let mut seen = VertexSet::new();
        for &v in &self.map {
            if v >= host.order() || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        pattern.edges().all(|(a, b)| host.has_edge(self.map[a], self.map[b]))
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    plan: &'a MatchPlan,
    twin: &'a [usize],
    img: Vec<usize>,
    used: VertexSet,
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, plan: &'a MatchPlan, twin: &'a [usize], budget: Option<u64>) -> Self {
        Matcher {
            host,
            plan,
            twin,
            img: vec![usize::MAX; plan.len()],
            used: VertexSet::new(),
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    /// Host vertices that may take position `i`, one per twin class.
    fn candidates(&self, i: usize) -> Vec<usize> {
        let mut cand = self.host.vertices() - self.used;
        for &j in &self.plan.back[i] {
            cand &= self.host.neighbors(self.img[j]);
        }
        // Unused twins are interchangeable: swapping two of them fixes every
        // image chosen so far.
        let mut seen = VertexSet::new();
        let need = self.plan.degree[i];
        cand.iter()
            .filter(|&v| {
                if self.host.degree(v) < need || seen.contains(self.twin[v]) {
                    return false;
                }
                seen.insert(self.twin[v]);
                true
            })
            .collect()
    }

    /// Forward check after placing position `i`.
    fn feasible(&self, i: usize) -> bool {
        let x = self.img[i];
        let free_nbrs = self.host.neighbors(x) - self.used;
        if free_nbrs.len() < self.plan.forward[i].len() {
            return false;
        }
        for &f in &self.plan.forward[i] {
            let mut dom = free_nbrs;
            for &j in &self.plan.back[f] {
                if j > i {
                    break;
                }
                dom &= self.host.neighbors(self.img[j]);
            }
            if dom.is_empty() {
                return false;
            }
        }
        true
    }

    fn place(&mut self, i: usize, v: usize) {
        self.img[i] = v;
        self.used.insert(v);
    }

    fn unplace(&mut self, i: usize) {
        self.used.remove(self.img[i]);
        self.img[i] = usize::MAX;
    }

    fn extend(&mut self, i: usize) -> bool {
        if i == self.plan.len() {
            return true;
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
            return false;
        }
        for v in self.candidates(i) {
            self.place(i, v);
            if self.feasible(i) && self.extend(i + 1) {
                return true;
            }
            self.unplace(i);
            if self.exhausted {
                return false;
            }
        }
        false
    }

    fn embedding(&self, pattern_order: usize) -> Embedding {
        let mut map = vec![0; pattern_order];
        for (i, &v) in self.plan.order.iter().enumerate() {
            map[v] = self.img[i];
        }
        Embedding { map }
    }
}

/// Looks for `pattern` as a (not necessarily induced) subgraph of `host`
/// with the default limits.
pub fn subgraph_contains(host: &Graph, pattern: &Graph) -> Outcome<Embedding> {
    subgraph_contains_with(host, pattern, SearchLimits::default())
}

pub fn subgraph_contains_with(host: &Graph, pattern: &Graph, limits: SearchLimits) -> Outcome<Embedding> {
    if pattern.order() > host.order()
        || pattern.edge_count() > host.edge_count()
        || pattern.max_degree() > host.max_degree()
    {
        return Outcome::Absent;
    }
    if pattern.order() == 0 {
        return Outcome::Found(Embedding { map: Vec::new() });
    }
    let plan = MatchPlan::new(pattern);
    let twin = host.twin_classes();

    let outcome = if limits.parallel {
        let roots = Matcher::new(host, &plan, &twin, None).candidates(0);
        let results: Vec<Option<Option<Embedding>>> = roots
            .par_iter()
            .map(|&v| {
                let mut m = Matcher::new(host, &plan, &twin, limits.node_budget);
                m.place(0, v);
                if m.feasible(0) && m.extend(1) {
                    Some(Some(m.embedding(pattern.order())))
                } else if m.exhausted {
                    Some(None)
                } else {
                    None
                }
            })
            .collect();
        let mut undecided = false;
        let mut found = None;
        for r in results {
            match r {
                Some(Some(e)) => {
                    found = Some(e);
                    break;
                }
                Some(None) => undecided = true,
                None => {}
            }
        }
        match found {
            Some(e) => Outcome::Found(e),
            None if undecided => Outcome::Undecided,
            None => Outcome::Absent,
        }
    } else {
        let mut m = Matcher::new(host, &plan, &twin, limits.node_budget);
        if m.extend(0) {
            Outcome::Found(m.embedding(pattern.order()))
        } else if m.exhausted {
            Outcome::Undecided
        } else {
            Outcome::Absent
        }
    };
    if let Outcome::Found(e) = &outcome {
        assert!(e.verify(host, pattern), "subgraph search produced an invalid embedding");
    }
    outcome
}
