//! Two-phase search for edge blow-ups `B^{p+1}` of a base graph `B`.
//!
//! Phase one embeds the base graph. Phase two gives each base edge `uv`
//! its own `p - 1` apex vertices completing `{u, v}` to a `K_{p+1}`, all
//! apexes distinct and outside the base image. For `p = 2` that second
//! phase is a bipartite matching between base edges and common neighbours,
//! which decides it exactly. For larger `p` it is a backtracking search over
//! apex sets with memoised failures.
//!
//! Both phases only ever try the least unused vertex of each host twin
//! class: any solution can be moved onto such a choice by swapping twins,
//! which fixes everything already placed.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::matching::saturating_matching;
use super::subgraph::Embedding;
use super::{MatchPlan, Outcome, SearchLimits};
use crate::bitset::VertexSet;
use crate::constructions::LollipopParams;
use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Witness for `B^{p+1} ⊆ host`. `apex_sets[i]` belongs to the `i`-th
/// base edge in [`Graph::edges`] order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BlowupEmbedding {
    pub base_map: Vec<usize>,
    pub apex_sets: Vec<Vec<usize>>,
}

impl BlowupEmbedding {
    /// Checks distinctness of all images and that every base edge with its
    /// apexes spans a clique of order `p + 1`.
    pub fn verify(&self, host: &Graph, base: &Graph, p: usize) -> bool {
        if self.base_map.len() != base.order() || self.apex_sets.len() != base.edge_count() {
            return false;
        }
        let mut seen = VertexSet::new();
        for &v in self.base_map.iter().chain(self.apex_sets.iter().flatten()) {
            if v >= host.order() || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        base.edges().zip(&self.apex_sets).all(|((a, b), apex)| {
            let mut clique: VertexSet = apex.iter().collect();
            clique.insert(self.base_map[a]);
            clique.insert(self.base_map[b]);
            apex.len() == p - 1 && clique.len() == p + 1 && host.is_clique(clique)
        })
    }

    /// The same witness as a plain embedding of `blowup(base, p).graph`
    /// (base vertices first, then `p - 1` fresh vertices per edge in edge
    /// order).
    pub fn to_embedding(&self) -> Embedding {
        let mut map = self.base_map.clone();
        for apex in &self.apex_sets {
            map.extend_from_slice(apex);
        }
        Embedding { map }
    }
}

/// Searches for `C_{k,l}^{p+1}` in `host` with default limits.
pub fn blowup_contains(host: &Graph, k: usize, l: usize, p: usize) -> Result<Outcome<BlowupEmbedding>> {
    blowup_contains_with(host, k, l, p, SearchLimits::default())
}

pub fn blowup_contains_with(
    host: &Graph,
    k: usize,
    l: usize,
    p: usize,
    limits: SearchLimits,
) -> Result<Outcome<BlowupEmbedding>> {
    let base = LollipopParams::new(k, l)?.graph();
    blowup_contains_base(host, &base, p, limits)
}

/// Searches for the blow-up `base^{p+1}` of an arbitrary base graph.
pub fn blowup_contains_base(
    host: &Graph,
    base: &Graph,
    p: usize,
    limits: SearchLimits,
) -> Result<Outcome<BlowupEmbedding>> {
    if p < 2 {
        return invalid(format!("blow-up requires p >= 2, got {p}"));
    }
    let base_edges: Vec<(usize, usize)> = base.edges().collect();
    let needed = base.order() + base_edges.len() * (p - 1);
    if needed > host.order() || base.max_degree() * p > host.max_degree() {
        return Ok(Outcome::Absent);
    }
    let ctx = Context::new(host, base, p);

    let outcome = if limits.parallel && base.order() > 0 {
        let roots = Embedder::new(&ctx, None).candidates(0);
        let results: Vec<Option<Option<BlowupEmbedding>>> = roots
            .par_iter()
            .map(|&v| {
                let mut e = Embedder::new(&ctx, limits.node_budget);
                e.place(0, v);
                if e.feasible(0) && e.extend(1) {
                    Some(e.result.take())
                } else if e.exhausted {
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
                Some(Some(w)) => {
                    found = Some(w);
                    break;
                }
                Some(None) => undecided = true,
                None => {}
            }
        }
        match found {
            Some(w) => Outcome::Found(w),
            None if undecided => Outcome::Undecided,
            None => Outcome::Absent,
        }
    } else {
        let mut e = Embedder::new(&ctx, limits.node_budget);
        if e.extend(0) {
            Outcome::Found(e.result.take().expect("witness recorded"))
        } else if e.exhausted {
            Outcome::Undecided
        } else {
            Outcome::Absent
        }
    };
    if let Outcome::Found(w) = &outcome {
        assert!(w.verify(host, base, p), "blow-up search produced an invalid witness");
    }
    Ok(outcome)
}

struct Context<'a> {
    host: &'a Graph,
    plan: MatchPlan,
    p: usize,
    twin: Vec<usize>,
    class_members: Vec<VertexSet>,
    /// Base edges as pairs of plan positions, in base edge order.
    edges: Vec<(usize, usize)>,
}

impl<'a> Context<'a> {
    fn new(host: &'a Graph, base: &Graph, p: usize) -> Self {
        let plan = MatchPlan::new(base);
        let mut pos = vec![0; base.order()];
        for (i, &v) in plan.order.iter().enumerate() {
            pos[v] = i;
        }
        let edges = base.edges().map(|(a, b)| (pos[a], pos[b])).collect();
        let twin = host.twin_classes();
        let classes = twin.iter().max().map_or(0, |&c| c + 1);
        let mut class_members = vec![VertexSet::new(); classes];
        for (v, &c) in twin.iter().enumerate() {
            class_members[c].insert(v);
        }
        Context {
            host,
            plan,
            p,
            twin,
            class_members,
            edges,
        }
    }
}

struct Embedder<'c, 'a> {
    ctx: &'c Context<'a>,
    img: Vec<usize>,
    used: VertexSet,
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
    result: Option<BlowupEmbedding>,
}

impl<'c, 'a> Embedder<'c, 'a> {
    fn new(ctx: &'c Context<'a>, budget: Option<u64>) -> Self {
        Embedder {
            ctx,
            img: vec![usize::MAX; ctx.plan.len()],
            used: VertexSet::new(),
            nodes: 0,
            budget,
            exhausted: false,
            result: None,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn candidates(&self, i: usize) -> Vec<usize> {
        let host = self.ctx.host;
        let mut cand = host.vertices() - self.used;
        for &j in &self.ctx.plan.back[i] {
            cand &= host.neighbors(self.img[j]);
        }
        // each incident base edge brings p new neighbours
        let need = self.ctx.plan.degree[i] * self.ctx.p;
        let mut seen = VertexSet::new();
        cand.iter()
            .filter(|&v| {
                let c = self.ctx.twin[v];
                if host.degree(v) < need || seen.contains(c) {
                    return false;
                }
                seen.insert(c);
                true
            })
            .collect()
    }

    fn place(&mut self, i: usize, v: usize) {
        self.img[i] = v;
        self.used.insert(v);
    }

    fn unplace(&mut self, i: usize) {
        self.used.remove(self.img[i]);
        self.img[i] = usize::MAX;
    }

    fn feasible(&self, i: usize) -> bool {
        let host = self.ctx.host;
        let x = self.img[i];
        let apex_need = self.ctx.p - 1;
        for &j in &self.ctx.plan.back[i] {
            let common = host.neighbors(x) & host.neighbors(self.img[j]);
            if (common - self.used).len() < apex_need {
                return false;
            }
        }
        let free = host.neighbors(x) - self.used;
        if free.len() < self.ctx.plan.forward[i].len() {
            return false;
        }
        for &f in &self.ctx.plan.forward[i] {
            let mut dom = free;
            for &j in &self.ctx.plan.back[f] {
                if j > i {
                    break;
                }
                dom &= host.neighbors(self.img[j]);
            }
            if dom.is_empty() {
                return false;
            }
        }
        true
    }

    fn extend(&mut self, i: usize) -> bool {
        if i == self.ctx.plan.len() {
            return self.assign_apexes();
        }
        if !self.tick() {
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

    fn common(&self, e: usize) -> VertexSet {
        let (a, b) = self.ctx.edges[e];
        let host = self.ctx.host;
        (host.neighbors(self.img[a]) & host.neighbors(self.img[b])) - self.used
    }

    fn assign_apexes(&mut self) -> bool {
        if !self.tick() {
            return false;
        }
        let m = self.ctx.edges.len();
        let apex_sets = if self.ctx.p == 2 {
            let cands: Vec<VertexSet> = (0..m).map(|e| self.common(e)).collect();
            match saturating_matching(&cands) {
                Some(choice) => choice.into_iter().map(|v| vec![v]).collect(),
                None => return false,
            }
        } else {
            let mut order: Vec<usize> = (0..m).collect();
            order.sort_by_key(|&e| (self.common(e).len(), e));
            let mut search = ApexSearch {
                ctx: self.ctx,
                img: &self.img,
                order: &order,
                failed: HashSet::new(),
                chosen: vec![Vec::new(); m],
                nodes: &mut self.nodes,
                budget: self.budget,
                exhausted: false,
            };
            let ok = search.assign(0, self.used);
            let chosen = std::mem::take(&mut search.chosen);
            if search.exhausted {
                self.exhausted = true;
            }
            if !ok {
                return false;
            }
            chosen
        };
        let mut base_map = vec![0; self.ctx.plan.len()];
        for (i, &v) in self.ctx.plan.order.iter().enumerate() {
            base_map[v] = self.img[i];
        }
        self.result = Some(BlowupEmbedding { base_map, apex_sets });
        true
    }
}

struct ApexSearch<'s, 'c> {
    ctx: &'s Context<'c>,
    img: &'s [usize],
    order: &'s [usize],
    failed: HashSet<(usize, VertexSet)>,
    chosen: Vec<Vec<usize>>,
    nodes: &'s mut u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl ApexSearch<'_, '_> {
    fn assign(&mut self, idx: usize, used: VertexSet) -> bool {
        if idx == self.order.len() {
            return true;
        }
        *self.nodes += 1;
        if self.budget.is_some_and(|b| *self.nodes > b) {
            self.exhausted = true;
            return false;
        }
        if self.failed.contains(&(idx, used)) {
            return false;
        }
        let e = self.order[idx];
        let (a, b) = self.ctx.edges[e];
        let host = self.ctx.host;
        let pool = (host.neighbors(self.img[a]) & host.neighbors(self.img[b])) - used;
        let mut picked = Vec::with_capacity(self.ctx.p - 1);
        if self.choose(idx, used, pool, pool, &mut picked) {
            return true;
        }
        if !self.exhausted {
            self.failed.insert((idx, used));
        }
        false
    }

    /// Extends `picked` to a clique of `p - 1` vertices from `pool`, picking
    /// in increasing label order and always the least unpicked member of a
    /// twin class within `pool`.
    fn choose(&mut self, idx: usize, used: VertexSet, pool: VertexSet, cand: VertexSet, picked: &mut Vec<usize>) -> bool {
        if picked.len() == self.ctx.p - 1 {
            let mut now = used;
            for &v in picked.iter() {
                now.insert(v);
            }
            let e = self.order[idx];
            self.chosen[e] = picked.clone();
            return self.assign(idx + 1, now);
        }
        let host = self.ctx.host;
        let picked_set: VertexSet = picked.iter().collect();
        for v in cand.iter() {
            let class = self.ctx.class_members[self.ctx.twin[v]];
            if ((pool & class) - picked_set).first() != Some(v) {
                continue;
            }
            let rest = (cand & host.neighbors(v)) - VertexSet::full(v + 1);
            if rest.len() + picked.len() + 1 < self.ctx.p - 1 {
                continue;
            }
            picked.push(v);
            if self.choose(idx, used, pool, rest, picked) {
                return true;
            }
            picked.pop();
            if self.exhausted {
                return false;
            }
        }
        false
    }
}
