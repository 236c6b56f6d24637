//! The `verify` suites. Parameter grids come from a JSON config (see
//! `suites.json`), so new cells need no code change.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use lollipop_core::blowup::{blowup, split_family, SplitMode};
use lollipop_core::constructions::{
    edge_count_formula, lollipop, paw_candidates, predicted_extremal, realize, y_family, ConstructionSpec, Regime,
};
use lollipop_core::containment::{blowup_contains_with, freeness_certificate, subgraph_contains_with};
use lollipop_core::search::{saturation_report, EdgeSample};
use lollipop_core::{Graph, Outcome, SearchLimits};

use crate::graph6::encode_graph6;
use crate::report::{timed, CaseOutcome, CaseRecord, SuiteReport};

pub const DEFAULT_CONFIG: &str = include_str!("../suites.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub k: usize,
    pub l: usize,
    pub p: usize,
    pub n: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FreenessConfig {
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FormulaConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub p: Vec<usize>,
    pub q_min: usize,
    pub q_max: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FamilyConfig {
    pub bases: Vec<(usize, usize)>,
    pub p: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct OracleConfig {
    pub hosts: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub edge_probability: f64,
    pub k: usize,
    pub l: usize,
    pub p: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SaturationCell {
    pub host: ConstructionSpec,
    pub k: usize,
    pub l: usize,
    pub p: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SaturationConfig {
    pub cells: Vec<SaturationCell>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SuiteConfig {
    pub freeness: FreenessConfig,
    pub formulas: FormulaConfig,
    pub families: FamilyConfig,
    pub oracle_equivalence: OracleConfig,
    pub saturation: SaturationConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Freeness,
    Formulas,
    Families,
    OracleEquivalence,
    Saturation,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Freeness,
        Suite::Formulas,
        Suite::Families,
        Suite::OracleEquivalence,
        Suite::Saturation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Freeness => "freeness",
            Suite::Formulas => "formulas",
            Suite::Families => "families",
            Suite::OracleEquivalence => "oracle-equivalence",
            Suite::Saturation => "saturation",
            Suite::All => "all",
        }
    }
}

pub struct Runner {
    pub limits: SearchLimits,
    pub seed: u64,
    pub timing: bool,
}

fn record(id: String, params: Value, outcome: CaseOutcome, evidence: Value, note: Option<String>) -> CaseRecord {
    CaseRecord {
        id,
        params,
        outcome,
        evidence,
        note,
        wall_time_ms: None,
    }
}

fn failure(id: String, params: Value, why: impl ToString) -> CaseRecord {
    record(id, params, CaseOutcome::Fail, Value::Null, Some(why.to_string()))
}

fn outcome_name<T>(o: &Outcome<T>) -> &'static str {
    match o {
        Outcome::Found(_) => "found",
        Outcome::Absent => "absent",
        Outcome::Undecided => "undecided",
    }
}

impl Runner {
    pub fn freeness(&self, cells: &[Cell]) -> SuiteReport {
        let mut cases = Vec::new();
        for &cell in cells {
            let pred = predicted_extremal(cell.k, cell.l, cell.p, cell.n);
            for (i, spec) in pred.specs.iter().enumerate() {
                let id = format!("freeness/k{}-l{}-p{}-n{}/{i}", cell.k, cell.l, cell.p, cell.n);
                cases.push(timed(self.timing, || self.freeness_case(id, cell, pred.regime, spec)));
            }
            if pred.specs.is_empty() {
                let id = format!("freeness/k{}-l{}-p{}-n{}", cell.k, cell.l, cell.p, cell.n);
                cases.push(failure(id, json!(cell), "parameters lie outside every stated range"));
            }
        }
        SuiteReport::new(Suite::Freeness.name(), cases)
    }

    fn freeness_case(&self, id: String, cell: Cell, regime: Regime, spec: &ConstructionSpec) -> CaseRecord {
        let params = json!({ "cell": cell, "regime": regime, "host": spec });
        let host = match realize(spec) {
            Ok(g) => g,
            Err(e) => return failure(id, params, e),
        };
        let search = match blowup_contains_with(&host, cell.k, cell.l, cell.p, self.limits) {
            Ok(o) => o,
            Err(e) => return failure(id, params, e),
        };
        let certificate = freeness_certificate(spec, cell.k, cell.l, cell.p);
        let outcome = match &search {
            Outcome::Absent => CaseOutcome::Pass,
            Outcome::Found(_) => CaseOutcome::Fail,
            Outcome::Undecided => CaseOutcome::Undecided,
        };
        let evidence = json!({
            "host_graph6": encode_graph6(&host),
            "search": outcome_name(&search),
            "witness": search.found(),
            "certificate": certificate,
        });
        let note = certificate.is_none().then(|| "no counting or cover certificate applies".to_string());
        record(id, params, outcome, evidence, note)
    }

    pub fn formulas(&self, cfg: &FormulaConfig) -> SuiteReport {
        let mut groups: Vec<(String, Value, Vec<ConstructionSpec>)> = Vec::new();
        let ns = cfg.n_min..=cfg.n_max;
        groups.push(("formulas/h-star".into(), json!({"variant": "HStar"}), ns.clone().map(|n| ConstructionSpec::HStar { n }).collect()));
        for &p in &cfg.p {
            groups.push((
                format!("formulas/turan-p{p}"),
                json!({"variant": "Turan", "p": p}),
                ns.clone().map(|n| ConstructionSpec::Turan { n, p }).collect(),
            ));
            for q in cfg.q_min..=cfg.q_max {
                groups.push((
                    format!("formulas/h-p{p}-q{q}"),
                    json!({"variant": "H", "p": p, "q": q}),
                    ns.clone().map(|n| ConstructionSpec::H { n, p, q }).collect(),
                ));
                groups.push((
                    format!("formulas/h-prime-p{p}-q{q}"),
                    json!({"variant": "HPrime", "p": p, "q": q}),
                    ns.clone().map(|n| ConstructionSpec::HPrime { n, p, q }).collect(),
                ));
            }
        }
        let paw: Vec<ConstructionSpec> = ns.clone().flat_map(|n| paw_candidates(n).unwrap_or_default()).collect();
        groups.push(("formulas/paw-joins".into(), json!({"variant": "Join"}), paw));

        let cases = groups
            .into_iter()
            .map(|(id, mut params, specs)| {
                params["n_min"] = json!(cfg.n_min);
                params["n_max"] = json!(cfg.n_max);
                timed(self.timing, || {
                    let mut checked = 0;
                    let mut skipped = 0;
                    for spec in &specs {
                        if spec.validate().is_err() {
                            skipped += 1;
                            continue;
                        }
                        let (formula, g) = match (edge_count_formula(spec), realize(spec)) {
                            (Ok(f), Ok(g)) => (f, g),
                            (Err(e), _) | (_, Err(e)) => return failure(id.clone(), params.clone(), e),
                        };
                        if formula != g.edge_count() {
                            let evidence = json!({"spec": spec, "formula": formula, "realized": g.edge_count()});
                            return record(id.clone(), params.clone(), CaseOutcome::Fail, evidence, None);
                        }
                        checked += 1;
                    }
                    let evidence = json!({"specs_checked": checked, "specs_out_of_domain": skipped});
                    record(id.clone(), params.clone(), CaseOutcome::Pass, evidence, None)
                })
            })
            .collect();
        SuiteReport::new(Suite::Formulas.name(), cases)
    }

    pub fn families(&self, cfg: &FamilyConfig) -> SuiteReport {
        let mut cases = Vec::new();
        for &(k, l) in &cfg.bases {
            let base = match lollipop(k, l) {
                Ok(g) => g,
                Err(e) => {
                    cases.push(failure(format!("families/k{k}-l{l}"), json!({"k": k, "l": l}), e));
                    continue;
                }
            };
            for &p in &cfg.p {
                let id = format!("families/chain-k{k}-l{l}-p{p}");
                let params = json!({"k": k, "l": l, "p": p});
                cases.push(timed(self.timing, || {
                    let fams = [
                        split_family(&base, SplitMode::Independent),
                        split_family(&base, SplitMode::ChromaticAtMost(p.saturating_sub(1))),
                        split_family(&base, SplitMode::All),
                    ];
                    let [star, mid, all] = match fams {
                        [Ok(a), Ok(b), Ok(c)] => [a.codes(), b.codes(), c.codes()],
                        [Err(e), ..] | [_, Err(e), _] | [.., Err(e)] => return failure(id.clone(), params.clone(), e),
                    };
                    let ok = star.is_subset(&mid) && mid.is_subset(&all);
                    let evidence = json!({"independent": star.len(), "chromatic_bound": mid.len(), "all": all.len()});
                    let outcome = if ok { CaseOutcome::Pass } else { CaseOutcome::Fail };
                    record(id.clone(), params.clone(), outcome, evidence, None)
                }));
            }
            let id = format!("families/branching-paths-k{k}-l{l}");
            let params = json!({"k": k, "l": l});
            cases.push(timed(self.timing, || {
                let (ys, star) = match (y_family(k, l), split_family(&base, SplitMode::Independent)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => return failure(id.clone(), params.clone(), e),
                };
                let missing: Vec<String> = ys.iter().filter(|y| !star.contains(y)).map(encode_graph6).collect();
                let evidence = json!({
                    "members": ys.iter().map(encode_graph6).collect::<Vec<_>>(),
                    "missing": missing,
                });
                let outcome = if missing.is_empty() { CaseOutcome::Pass } else { CaseOutcome::Fail };
                record(id.clone(), params.clone(), outcome, evidence, None)
            }));
        }
        SuiteReport::new(Suite::Families.name(), cases)
    }

    pub fn oracle_equivalence(&self, cfg: &OracleConfig) -> SuiteReport {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let pattern = lollipop(cfg.k, cfg.l).and_then(|b| blowup(&b, cfg.p)).map(|b| b.graph);
        let mut cases = Vec::new();
        for i in 0..cfg.hosts {
            let n = rng.gen_range(cfg.n_min..=cfg.n_max);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(cfg.edge_probability) {
                        edges.push((u, v));
                    }
                }
            }
            let id = format!("oracle-equivalence/{i}");
            let params = json!({"host": i, "n": n, "k": cfg.k, "l": cfg.l, "p": cfg.p, "seed": self.seed});
            cases.push(timed(self.timing, || {
                let pattern = match &pattern {
                    Ok(g) => g,
                    Err(e) => return failure(id.clone(), params.clone(), e),
                };
                let host = Graph::from_edges(n, &edges).expect("generated edges are valid");
                let fast = match blowup_contains_with(&host, cfg.k, cfg.l, cfg.p, self.limits) {
                    Ok(o) => o,
                    Err(e) => return failure(id.clone(), params.clone(), e),
                };
                let slow = subgraph_contains_with(&host, pattern, self.limits);
                let outcome = match (fast.decided(), slow.decided()) {
                    (Some(a), Some(b)) if a == b => CaseOutcome::Pass,
                    (Some(_), Some(_)) => CaseOutcome::Fail,
                    _ => CaseOutcome::Undecided,
                };
                let evidence = json!({
                    "host_graph6": encode_graph6(&host),
                    "blowup_engine": outcome_name(&fast),
                    "generic": outcome_name(&slow),
                    "witness": fast.found(),
                });
                record(id.clone(), params.clone(), outcome, evidence, None)
            }));
        }
        SuiteReport::new(Suite::OracleEquivalence.name(), cases)
    }

    pub fn saturation(&self, cells: &[SaturationCell]) -> SuiteReport {
        let cases = cells
            .iter()
            .enumerate()
            .map(|(i, cell)| {
                let id = format!("saturation/{i}");
                let params = json!(cell);
                timed(self.timing, || {
                    let host = match realize(&cell.host) {
                        Ok(g) => g,
                        Err(e) => return failure(id.clone(), params.clone(), e),
                    };
                    match saturation_report(&host, cell.k, cell.l, cell.p, EdgeSample::All, self.limits) {
                        Ok(r) => {
                            // recorded data: only unfinished probes keep the case open
                            let outcome = if r.undecided == 0 {
                                CaseOutcome::Pass
                            } else {
                                CaseOutcome::Undecided
                            };
                            let evidence = json!({"host_graph6": encode_graph6(&host), "report": r});
                            record(id.clone(), params.clone(), outcome, evidence, None)
                        }
                        Err(e) => failure(id.clone(), params.clone(), e),
                    }
                })
            })
            .collect();
        SuiteReport::new(Suite::Saturation.name(), cases)
    }
}
