//! Lollipops, the branching-path family, and the candidate extremal graphs
//! `H(n,p,q)`, `H'(n,p,q)`, `H*(n)` and the join families for the paw.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{invalid, Result};
use crate::family::GraphFamily;
use crate::graph::{
    binom2, complete, complete_multipartite, disjoint_union, join, make_basic, turan, turan_edge_count, turan_part_sizes,
    BasicKind, Graph,
};

/// Parameters of the lollipop `C_{k,l}`: a `k`-cycle with a path of `l`
/// edges hanging off one cycle vertex (the centre).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LollipopParams {
    k: usize,
    l: usize,
}

impl LollipopParams {
    pub fn new(k: usize, l: usize) -> Result<Self> {
        if k < 3 {
            return invalid(format!("lollipop cycle length must be >= 3, got {k}"));
        }
        if l < 1 {
            return invalid("lollipop tail must have at least one edge");
        }
        Ok(LollipopParams { k, l })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `t = floor((k-1)/2) + floor((l-1)/2)`.
    pub fn t(&self) -> usize {
        (self.k - 1) / 2 + (self.l - 1) / 2
    }

    /// Order of the edge blow-up `C_{k,l}^{p+1}`: `(k + l) p`.
    pub fn m(&self, p: usize) -> usize {
        (self.k + self.l) * p
    }

    pub fn order(&self) -> usize {
        self.k + self.l
    }

    pub fn graph(&self) -> Graph {
        let (k, l) = (self.k, self.l);
        let mut edges: Vec<(usize, usize)> = (0..k).map(|v| (v, (v + 1) % k)).collect();
        let mut prev = LOLLIPOP_CENTER;
        for v in k..k + l {
            edges.push((prev, v));
            prev = v;
        }
        Graph::from_edges(k + l, &edges).expect("lollipop layout is valid")
    }
}

/// Vertex carrying the tail in [`lollipop`]: cycle vertices are `0..k` in
/// cyclic order, tail vertices are `k..k+l` moving away from the centre.
pub const LOLLIPOP_CENTER: usize = 0;

pub fn lollipop(k: usize, l: usize) -> Result<Graph> {
    Ok(LollipopParams::new(k, l)?.graph())
}

/// Graphs obtained from the path `P_{k+1}` by attaching a path `P_{l+1}` at
/// an internal vertex, up to isomorphism.
pub fn y_family(k: usize, l: usize) -> Result<GraphFamily> {
    if k < 2 {
        return invalid(format!("branching path needs k >= 2 for an internal vertex, got {k}"));
    }
    if l < 1 {
        return invalid("attached path must have at least one edge");
    }
    let mut fam = GraphFamily::new();
    for branch in 1..k {
        let mut edges: Vec<(usize, usize)> = (1..=k).map(|v| (v - 1, v)).collect();
        let mut prev = branch;
        for v in (k + 1)..(k + 1 + l) {
            edges.push((prev, v));
            prev = v;
        }
        fam.insert(Graph::from_edges(k + 1 + l, &edges)?);
    }
    Ok(fam)
}

/// Components placed on one side of a join with an independent set, as in
/// `(a K_3 ∪ b P_2 ∪ c P_1 ∪ S_s) ∨ I_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JoinLayout {
    pub triangles: usize,
    pub edges: usize,
    pub singletons: usize,
    /// Leaves of an optional star `S_s` (order `s + 1`).
    pub star_leaves: Option<usize>,
    pub independent: usize,
}

impl JoinLayout {
    fn component_order(&self) -> usize {
        3 * self.triangles + 2 * self.edges + self.singletons + self.star_leaves.map_or(0, |s| s + 1)
    }

    fn component_edges(&self) -> usize {
        3 * self.triangles + self.edges + self.star_leaves.unwrap_or(0)
    }
}

/// Symbolic description of a candidate extremal graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum ConstructionSpec {
    /// `K_{q-1} ∨ T_p(n-q+1)`.
    H { n: usize, p: usize, q: usize },
    /// `H(n,p,q)` plus one edge inside the largest Turán class, placed
    /// between its two lowest labels.
    HPrime { n: usize, p: usize, q: usize },
    /// `K_2(ceil(n/2), floor(n/2))` with a maximum matching inside each
    /// class; in an odd class the lowest label stays unmatched.
    HStar { n: usize },
    Turan { n: usize, p: usize },
    Join(JoinLayout),
}

impl ConstructionSpec {
    pub fn order(&self) -> usize {
        match *self {
            ConstructionSpec::H { n, .. }
            | ConstructionSpec::HPrime { n, .. }
            | ConstructionSpec::HStar { n }
            | ConstructionSpec::Turan { n, .. } => n,
            ConstructionSpec::Join(ref j) => j.component_order() + j.independent,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ConstructionSpec::H { n, p, q } | ConstructionSpec::HPrime { n, p, q } => {
                if p == 0 {
                    return invalid("construction requires p >= 1");
                }
                if q < 1 || q > n {
                    return invalid(format!("construction requires 1 <= q <= n, got q={q}, n={n}"));
                }
                if matches!(self, ConstructionSpec::HPrime { .. }) && (n - q + 1) <= p {
                    return invalid(format!(
                        "H'({n},{p},{q}) needs a Turan class with two vertices; T_{p}({}) has none",
                        n - q + 1
                    ));
                }
                Ok(())
            }
            ConstructionSpec::HStar { n } => {
                if n < 2 {
                    return invalid("H*(n) requires n >= 2");
                }
                Ok(())
            }
            ConstructionSpec::Turan { p, .. } => {
                if p == 0 {
                    return invalid("Turan graph requires p >= 1");
                }
                Ok(())
            }
            ConstructionSpec::Join(_) => Ok(()),
        }
    }

    /// Vertices of the dominating clique `K_{q-1}` (labels `0..q-1`) for
    /// `H` and `H'`; empty for the other variants.
    pub fn dominating_clique(&self) -> VertexSet {
        match *self {
            ConstructionSpec::H { q, .. } | ConstructionSpec::HPrime { q, .. } => (0..q - 1).collect(),
            _ => VertexSet::new(),
        }
    }

    /// Turán classes of `H`/`H'` (or of `T_p(n)`), in layout order.
    pub fn turan_classes(&self) -> Vec<VertexSet> {
        let (offset, rest, p) = match *self {
            ConstructionSpec::H { n, p, q } | ConstructionSpec::HPrime { n, p, q } => (q - 1, n - q + 1, p),
            ConstructionSpec::Turan { n, p } => (0, n, p),
            _ => return Vec::new(),
        };
        let mut start = offset;
        turan_part_sizes(rest, p)
            .unwrap_or_default()
            .into_iter()
            .map(|s| {
                let class = (start..start + s).collect();
                start += s;
                class
            })
            .collect()
    }
}

/// Builds the graph described by `spec`.
pub fn realize(spec: &ConstructionSpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        ConstructionSpec::H { n, p, q } => join(&complete(q - 1)?, &turan(n - q + 1, p)?),
        ConstructionSpec::HPrime { n, p, q } => {
            let base = join(&complete(q - 1)?, &turan(n - q + 1, p)?)?;
            base.with_edge(q - 1, q)
        }
        ConstructionSpec::HStar { n } => {
            let (big, small) = (n.div_ceil(2), n / 2);
            let mut g = complete_multipartite(&[big, small])?;
            for (start, size) in [(0, big), (big, small)] {
                let first = start + size % 2;
                for i in (first..start + size).step_by(2) {
                    g.link(i, i + 1);
                }
            }
            Ok(g)
        }
        ConstructionSpec::Turan { n, p } => turan(n, p),
        ConstructionSpec::Join(ref j) => {
            let mut side = Graph::empty(0)?;
            if let Some(s) = j.star_leaves {
                // S_0 is a lone vertex
                side = if s == 0 { Graph::empty(1)? } else { make_basic(BasicKind::Star, s)? };
            }
            let k3 = complete(3)?;
            let k2 = complete(2)?;
            for _ in 0..j.triangles {
                side = disjoint_union(&side, &k3)?;
            }
            for _ in 0..j.edges {
                side = disjoint_union(&side, &k2)?;
            }
            side = disjoint_union(&side, &Graph::empty(j.singletons)?)?;
            join(&side, &Graph::empty(j.independent)?)
        }
    }
}

/// Edge count of `realize(spec)` from closed forms, without building it.
pub fn edge_count_formula(spec: &ConstructionSpec) -> Result<usize> {
    spec.validate()?;
    Ok(match *spec {
        ConstructionSpec::H { n, p, q } => binom2(q - 1) + (q - 1) * (n - q + 1) + turan_edge_count(n - q + 1, p)?,
        ConstructionSpec::HPrime { n, p, q } => edge_count_formula(&ConstructionSpec::H { n, p, q })? + 1,
        ConstructionSpec::HStar { n } => {
            let (big, small) = (n.div_ceil(2), n / 2);
            big * small + big / 2 + small / 2
        }
        ConstructionSpec::Turan { n, p } => turan_edge_count(n, p)?,
        ConstructionSpec::Join(ref j) => j.component_edges() + j.component_order() * j.independent,
    })
}

/// Which known result governs the parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// Tail of length at least 2 with `p >= 3` (`k` even) or `p >= 4`
    /// (`k` odd).
    LargeCliques,
    /// `k` odd, tail at least 2, `p = 3`.
    OddCycleP3,
    /// `p = 2`, `k >= 4`, odd tail length at least 3.
    LongCycleOddTailP2,
    /// `p = 2`, `k >= 4`, even tail length.
    LongCycleEvenTailP2,
    /// `p = 2`, `k = 3`, tail at least 2.
    TriangleP2,
    /// Tail of one edge, `(p, k) != (2, 3)`.
    PendantEdge,
    /// Tail of one edge with `(p, k) = (2, 3)`: several extremal
    /// candidates depending on divisibility of `n`.
    PawP2,
    NotCovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub regime: Regime,
    pub specs: Vec<ConstructionSpec>,
}

/// The construction(s) stated to be extremal for the blow-up
/// `C_{k,l}^{p+1}` at order `n`. Parameter ranges are taken as stated and
/// never extrapolated; outside them the regime is [`Regime::NotCovered`]
/// with no specs.
pub fn predicted_extremal(k: usize, l: usize, p: usize, n: usize) -> Prediction {
    let none = Prediction {
        regime: Regime::NotCovered,
        specs: Vec::new(),
    };
    let Ok(params) = LollipopParams::new(k, l) else {
        return none;
    };
    if p < 2 {
        return none;
    }
    let t = params.t();
    let k_odd = k % 2 == 1;
    let l_odd = l % 2 == 1;
    let h = |q| ConstructionSpec::H { n, p, q };
    let h_prime = |q| ConstructionSpec::HPrime { n, p, q };
    let one = |regime, spec| Prediction {
        regime,
        specs: vec![spec],
    };

    if l == 1 {
        if (p, k) == (2, 3) {
            return Prediction {
                regime: Regime::PawP2,
                specs: paw_candidates(n).unwrap_or_default(),
            };
        }
        let q = (k - 1) / 2 + 1;
        return one(Regime::PendantEdge, if k_odd { h(q) } else { h_prime(q) });
    }

    let large = (!k_odd && p >= 3) || (k_odd && p >= 4);
    if large {
        let spec = match (k_odd, l_odd) {
            (false, true) => h_prime(t + 1),
            (false, false) => h(t + 2),
            (true, true) => h(t + 1),
            (true, false) => h(t + 2),
        };
        return one(Regime::LargeCliques, spec);
    }
    if k_odd && p == 3 {
        return one(Regime::OddCycleP3, if l_odd { h(t + 1) } else { h(t + 2) });
    }
    debug_assert_eq!(p, 2);
    if k == 3 {
        return one(Regime::TriangleP2, if l_odd { h(t + 1) } else { h(t + 2) });
    }
    if l_odd {
        one(Regime::LongCycleOddTailP2, if k_odd { h(t + 1) } else { h_prime(t + 1) })
    } else {
        one(Regime::LongCycleEvenTailP2, h(t + 2))
    }
}

/// Candidate extremal graphs for the blow-up of the paw `C_{3,1}` with
/// `p = 2`. In the last divisibility case every admissible star variant is
/// listed; which of them is extremal at a given `n` is not decided here.
pub fn paw_candidates(n: usize) -> Result<Vec<ConstructionSpec>> {
    if n < 2 {
        return invalid("paw candidates need n >= 2");
    }
    let up = n.div_ceil(2);
    let down = n / 2;
    let triangles_only = || -> Result<ConstructionSpec> {
        if !up.is_multiple_of(3) {
            return invalid(format!("triangle factor needs 3 | ceil(n/2), n={n}"));
        }
        Ok(ConstructionSpec::Join(JoinLayout {
            triangles: up / 3,
            edges: 0,
            singletons: 0,
            star_leaves: None,
            independent: down,
        }))
    };
    let h_star = ConstructionSpec::HStar { n };

    if n.is_multiple_of(12) {
        return Ok(vec![triangles_only()?, h_star]);
    }
    if !n.is_multiple_of(6) && n.is_multiple_of(4) {
        return Ok(vec![h_star]);
    }
    if !n.is_multiple_of(4) && up.is_multiple_of(3) {
        return Ok(vec![triangles_only()?]);
    }

    // 1 <= up - 3 k1 <= 2, k1^1 = up - 3 k1 - 1, k1^2 = 3 k1 + 2 - up
    let k1 = up / 3;
    let rem = up - 3 * k1;
    if !(1..=2).contains(&rem) {
        return invalid(format!("no admissible triangle count for n={n}"));
    }
    let mixed = ConstructionSpec::Join(JoinLayout {
        triangles: k1,
        edges: rem - 1,
        singletons: 2 - rem,
        star_leaves: None,
        independent: down,
    });
    let mut out = vec![mixed, h_star];
    // 0 <= 3 k2 <= up and 3 k2 + 1 + k2' = up
    let other_side = (n - 1).div_ceil(2);
    for k2 in 0..=(up - 1) / 3 {
        out.push(ConstructionSpec::Join(JoinLayout {
            triangles: k2,
            edges: 0,
            singletons: 0,
            star_leaves: Some(up - 1 - 3 * k2),
            independent: other_side,
        }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn lollipops() {
        let g = lollipop(3, 2).unwrap();
        assert_eq!((g.order(), g.edge_count()), (5, 5));
        assert_eq!(g.degree_sequence().iter().filter(|&&d| d == 3).count(), 1);
        assert_eq!(g.degree(LOLLIPOP_CENTER), 3);
        let g = lollipop(4, 3).unwrap();
        assert_eq!((g.order(), g.edge_count()), (7, 7));
        assert_eq!(lollipop(3, 1).unwrap().degree_sequence(), vec![3, 2, 2, 1]);
        assert!(lollipop(2, 1).is_err());
        assert!(lollipop(3, 0).is_err());
    }

    #[test]
    fn params() {
        let p = LollipopParams::new(5, 4).unwrap();
        assert_eq!(p.t(), 2 + 1);
        assert_eq!(p.m(3), 27);
        assert_eq!(LollipopParams::new(3, 2).unwrap().t(), 1);
    }

    #[test]
    fn y_families() {
        let f = y_family(3, 2).unwrap();
        assert_eq!(f.len(), 1);
        let f = y_family(4, 2).unwrap();
        assert_eq!(f.len(), 2);
        for g in f.iter() {
            assert_eq!((g.order(), g.edge_count()), (7, 6));
            assert_eq!(g.degree_sequence().iter().filter(|&&d| d == 3).count(), 1);
        }
        assert!(y_family(1, 2).is_err());
    }

    #[test]
    fn realized_counts() {
        let h = ConstructionSpec::H { n: 10, p: 2, q: 3 };
        let g = realize(&h).unwrap();
        assert_eq!((g.order(), g.edge_count()), (10, 33));
        assert_eq!(edge_count_formula(&h).unwrap(), 33);
        let hp = ConstructionSpec::HPrime { n: 10, p: 2, q: 3 };
        let g = realize(&hp).unwrap();
        assert_eq!(g.edge_count(), 34);
        assert!(g.has_edge(2, 3));
        assert_eq!(realize(&ConstructionSpec::HStar { n: 8 }).unwrap().edge_count(), 20);
        assert_eq!(edge_count_formula(&ConstructionSpec::HStar { n: 6 }).unwrap(), 11);
        let h1 = ConstructionSpec::H { n: 9, p: 3, q: 1 };
        assert_eq!(edge_count_formula(&h1).unwrap(), turan_edge_count(9, 3).unwrap());
    }

    #[test]
    fn h_star_odd_class_leaves_lowest_unmatched() {
        let g = realize(&ConstructionSpec::HStar { n: 7 }).unwrap();
        // classes {0,1,2,3} and {4,5,6}
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3));
        assert!(g.has_edge(5, 6) && !g.has_edge(4, 5));
        assert_eq!(g.edge_count(), 12 + 2 + 1);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(realize(&ConstructionSpec::H { n: 5, p: 2, q: 0 }).is_err());
        assert!(realize(&ConstructionSpec::H { n: 5, p: 2, q: 6 }).is_err());
        assert!(realize(&ConstructionSpec::HPrime { n: 4, p: 2, q: 3 }).is_err());
        assert!(realize(&ConstructionSpec::HStar { n: 1 }).is_err());
    }

    #[test]
    fn predictions() {
        assert_eq!(predicted_extremal(3, 2, 2, 40).specs, vec![ConstructionSpec::H { n: 40, p: 2, q: 3 }]);
        assert_eq!(predicted_extremal(3, 2, 2, 40).regime, Regime::TriangleP2);
        assert_eq!(
            predicted_extremal(4, 3, 2, 40).specs,
            vec![ConstructionSpec::HPrime { n: 40, p: 2, q: 3 }]
        );
        assert_eq!(predicted_extremal(3, 3, 3, 40).specs, vec![ConstructionSpec::H { n: 40, p: 3, q: 3 }]);
        assert_eq!(predicted_extremal(3, 3, 3, 40).regime, Regime::OddCycleP3);
        assert_eq!(predicted_extremal(5, 3, 4, 40).regime, Regime::LargeCliques);
        assert_eq!(predicted_extremal(4, 2, 3, 40).regime, Regime::LargeCliques);
        assert_eq!(predicted_extremal(4, 1, 2, 40).regime, Regime::PendantEdge);
        assert_eq!(predicted_extremal(2, 1, 2, 40).regime, Regime::NotCovered);
        assert!(predicted_extremal(3, 2, 1, 40).specs.is_empty());
    }

    #[test]
    fn paw_cases() {
        // 12 | 24
        let c = paw_candidates(24).unwrap();
        assert_eq!(c.len(), 2);
        // 4 | 8, 6 does not divide 8
        assert_eq!(paw_candidates(8).unwrap(), vec![ConstructionSpec::HStar { n: 8 }]);
        // 4 does not divide 6, 3 | 3
        assert_eq!(paw_candidates(6).unwrap().len(), 1);
        // n = 10: up = 5, k1 = 1, rem = 2
        let c = paw_candidates(10).unwrap();
        assert_eq!(c[1], ConstructionSpec::HStar { n: 10 });
        for spec in &c {
            let g = realize(spec).unwrap();
            assert_eq!(g.order(), 10);
            assert_eq!(g.edge_count(), edge_count_formula(spec).unwrap());
        }
        assert_eq!(predicted_extremal(3, 1, 2, 10).regime, Regime::PawP2);
    }

    #[test]
    fn join_with_single_vertex_star() {
        let spec = ConstructionSpec::Join(JoinLayout {
            triangles: 1,
            edges: 0,
            singletons: 0,
            star_leaves: Some(0),
            independent: 2,
        });
        let g = realize(&spec).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), edge_count_formula(&spec).unwrap());
    }

    #[test]
    fn h_is_clique_joined_to_multipartite() {
        let spec = ConstructionSpec::H { n: 12, p: 3, q: 3 };
        let g = realize(&spec).unwrap();
        let q = spec.dominating_clique();
        assert!(g.is_clique(q));
        let rest = g.remove_vertices(q);
        assert!(rest.is_colorable(3));
        assert!(is_isomorphic(&rest, &turan(10, 3).unwrap()));
        assert_eq!(spec.turan_classes().len(), 3);
    }
}
