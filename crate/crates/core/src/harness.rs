//! Exhaustive and seeded-random verification of the extremal results.
//!
//! Each `verify_*` function sweeps a range of instances, checks one claim on
//! every instance and returns a [`VerificationReport`]. An empty
//! `violations` list means the claim held on the whole range.
//!
//! Sweeps split their index range into contiguous chunks, one per worker.
//! Workers share nothing; their partial tallies are merged in chunk order,
//! so a report does not depend on the worker count (apart from `elapsed_ms`).

use std::collections::BTreeMap;
use std::ops::Range;
use std::time::Instant;

use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::boxes::{
    boxes_intersect, directed_intersection_graph, extremal_box_family, jittered_extremal_family,
    random_box_family,
    random_transverse_family, transverse_violations, BoxFamily,
};
use crate::dag::Dag;
use crate::error::{Error, Result};
use crate::generators::{
    dag_count, dag_from_mask, extremal_dag, extremal_for, extremal_spec_for, half_split_spec,
    instance_rng, random_dag_with, turan_dag, ExtremalSpec,
};
use crate::io::{write_box_csv, write_edge_list};
use crate::predicates::{
    classify, is_extremely_reduced, is_reduced, is_reduced_bruteforce, is_reduced_with_order,
    is_strongly_reduced, is_strongly_reduced_bruteforce, is_transitive, transitive_closure,
    DEFAULT_ORDER_CAP, DEFAULT_PATH_CAP,
};
use crate::turan::{theorem_bound, turan_graph_edges};

/// Default enumeration ceiling for claims that only need polynomial predicates.
pub const LIGHT_MAX_N: usize = 7;
/// Default ceiling for claims that enumerate paths or topological orders.
pub const HEAVY_MAX_N: usize = 6;
/// Edge masks are `u64`, so C(n, 2) must stay below 64.
pub const HARD_MAX_N: usize = 11;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest `n` to enumerate; `None` uses each claim's default ceiling.
    pub max_n: Option<usize>,
    /// Permit `max_n` above the claim's default ceiling.
    pub allow_beyond_default: bool,
    /// Global ceiling applied after the per-claim default or `max_n`.
    pub max_n_cap: Option<usize>,
    pub workers: usize,
    pub seed: u64,
    /// Random box families of each kind in [`verify_box_props`].
    pub trials: usize,
    /// Random DAGs cross-checked in [`verify_implications`].
    pub random_dags: usize,
    /// Vertex count ceiling for those random DAGs.
    pub random_max_n: usize,
    pub path_cap: usize,
    pub order_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: None,
            allow_beyond_default: false,
            max_n_cap: None,
            workers: 1,
            seed: 0x5eed,
            trials: 1000,
            random_dags: 1000,
            random_max_n: 8,
            path_cap: DEFAULT_PATH_CAP,
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

impl VerifyConfig {
    fn max_n(&self, default: usize) -> Result<usize> {
        let mut n = self.max_n.unwrap_or(default);
        if let Some(cap) = self.max_n_cap {
            n = n.min(cap);
        }
        let limit = if self.allow_beyond_default { HARD_MAX_N } else { default };
        if n > limit {
            return Err(Error::LimitExceeded { n, limit });
        }
        Ok(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub instance: String,
}

/// One `(n, ell)` cell of a maximum-edge table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessRow {
    pub n: usize,
    pub ell: usize,
    pub observed_max: Option<usize>,
    pub bound: usize,
    pub construction: String,
    pub construction_edges: usize,
    pub attained: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half_split: Option<HalfSplit>,
}

/// The `r + s = n - ell` variant of the extremal construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfSplit {
    pub spec: ExtremalSpec,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub range: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: u64,
    pub params: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub stats: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tightness: Vec<TightnessRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }

    /// Copy with timing zeroed, for comparing runs.
    pub fn normalized(&self) -> VerificationReport {
        VerificationReport { elapsed_ms: 0, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    fn new(claim: &str, range: String, tally: Tally, started: Instant) -> VerificationReport {
        VerificationReport {
            claim: claim.to_string(),
            range,
            checked: tally.checked,
            violations: tally.violations,
            witnesses: tally.witnesses,
            elapsed_ms: started.elapsed().as_millis() as u64,
            params: BTreeMap::new(),
            stats: tally.stats,
            tightness: Vec::new(),
            notes: Vec::new(),
        }
    }
}

/// Partial result of a sweep. Merging is associative; merging in index
/// order keeps every list in index order.
#[derive(Debug, Default)]
struct Tally {
    checked: u64,
    violations: Vec<Violation>,
    witnesses: Vec<Witness>,
    stats: BTreeMap<String, u64>,
    maxima: BTreeMap<(usize, usize), usize>,
    /// Earliest instance per label.
    firsts: BTreeMap<String, String>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
        self.witnesses.extend(other.witnesses);
        for (k, v) in other.stats {
            *self.stats.entry(k).or_default() += v;
        }
        for (k, v) in other.maxima {
            let e = self.maxima.entry(k).or_insert(v);
            *e = (*e).max(v);
        }
        for (k, v) in other.firsts {
            self.firsts.entry(k).or_insert(v);
        }
    }

    fn violation(&mut self, instance: String, detail: impl Into<String>) {
        self.violations.push(Violation { instance, detail: detail.into() });
    }

    fn graph_violation(&mut self, g: &Dag, detail: impl Into<String>) {
        self.violation(write_edge_list(g), detail);
    }

    fn count(&mut self, key: &str) {
        *self.stats.entry(key.to_string()).or_default() += 1;
    }

    fn observe_max(&mut self, n: usize, ell: usize, edges: usize) {
        let e = self.maxima.entry((n, ell)).or_insert(edges);
        *e = (*e).max(edges);
    }

    fn first(&mut self, label: &str, g: &Dag) {
        if !self.firsts.contains_key(label) {
            self.firsts.insert(label.to_string(), write_edge_list(g));
        }
    }
}

/// Runs `check` on every index of `range`, split across `workers` threads.
fn parallel_tally<F>(range: Range<u64>, workers: usize, check: F) -> Tally
where
    F: Fn(u64, &mut Tally) + Sync,
{
    let workers = workers.max(1) as u128;
    let (start, len) = (range.start as u128, (range.end - range.start) as u128);
    let bounds: Vec<Range<u64>> = (0..workers)
        .map(|w| (start + len * w / workers) as u64..(start + len * (w + 1) / workers) as u64)
        .filter(|r| !r.is_empty())
        .collect();
    let run = |r: Range<u64>| {
        let mut t = Tally::default();
        for i in r {
            check(i, &mut t);
        }
        t
    };
    let parts: Vec<Tally> = if bounds.len() <= 1 {
        bounds.into_iter().map(run).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = bounds
                .into_iter()
                .map(|r| scope.spawn(move || run(r)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification worker panicked"))
                .collect()
        })
    };
    let mut total = Tally::default();
    for part in parts {
        total.merge(part);
    }
    total
}

/// Every forward-edge DAG with `1 <= n <= max_n`.
fn sweep_dags<F>(max_n: usize, workers: usize, check: F) -> Tally
where
    F: Fn(&Dag, &mut Tally) + Sync,
{
    let mut total = Tally::default();
    for n in 1..=max_n {
        total.merge(parallel_tally(0..dag_count(n), workers, |mask, t| {
            check(&dag_from_mask(n, mask), t)
        }));
    }
    total
}

fn common_params(cfg: &VerifyConfig, max_n: usize) -> BTreeMap<String, Value> {
    BTreeMap::from([
        ("max_n".to_string(), json!(max_n)),
        ("workers".to_string(), json!(cfg.workers)),
    ])
}

fn with_params(mut report: VerificationReport, params: BTreeMap<String, Value>) -> VerificationReport {
    report.params.extend(params);
    report
}

/// Every DAG has at most t(n, ell + 1) edges; oriented Turán graphs attain it.
pub fn verify_turan_bound(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let max_n = cfg.max_n(LIGHT_MAX_N)?;
    let mut tally = sweep_dags(max_n, cfg.workers, |g, t| {
        t.checked += 1;
        let ell = g.longest_path_length();
        let bound = turan_graph_edges(g.n() as u64, ell as u64 + 1).expect("ell < n") as usize;
        t.observe_max(g.n(), ell, g.edge_count());
        if g.edge_count() > bound {
            t.graph_violation(g, format!("{} edges exceed t({}, {}) = {bound}", g.edge_count(), g.n(), ell + 1));
        }
    });

    let mut rows = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            tally.checked += 1;
            let g = turan_dag(n, k)?;
            let bound = turan_graph_edges(n as u64, k as u64)? as usize;
            let ell = g.longest_path_length();
            if ell + 1 != k || g.edge_count() != bound {
                tally.graph_violation(
                    &g,
                    format!("turan_dag({n}, {k}) has ell = {ell} and {} edges, expected t = {bound}", g.edge_count()),
                );
            }
            let observed = tally.maxima.get(&(n, k - 1)).copied();
            if observed != Some(bound) {
                tally.violation(
                    format!("n = {n}, ell = {}", k - 1),
                    format!("exhaustive maximum {observed:?} differs from t({n}, {k}) = {bound}"),
                );
            }
            rows.push(TightnessRow {
                n,
                ell: k - 1,
                observed_max: observed,
                bound,
                construction: format!("turan_dag({n}, {k})"),
                construction_edges: g.edge_count(),
                attained: g.edge_count() == bound,
                half_split: None,
            });
        }
    }
    let mut report = VerificationReport::new("turan", format!("n = 1..={max_n}"), tally, started);
    report.tightness = rows;
    Ok(with_params(report, common_params(cfg, max_n)))
}

/// Which of the three nested classes a sweep is restricted to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReducedClass {
    Extremely,
    Strongly,
    Reduced,
}

impl ReducedClass {
    pub const ALL: [ReducedClass; 3] = [ReducedClass::Extremely, ReducedClass::Strongly, ReducedClass::Reduced];

    pub fn name(self) -> &'static str {
        match self {
            ReducedClass::Extremely => "extremely",
            ReducedClass::Strongly => "strongly",
            ReducedClass::Reduced => "reduced",
        }
    }

    pub fn contains(self, g: &Dag, path_cap: usize) -> Result<bool> {
        Ok(match self {
            ReducedClass::Extremely => is_extremely_reduced(g),
            ReducedClass::Strongly => is_strongly_reduced(g, path_cap)?,
            ReducedClass::Reduced => is_reduced(g),
        })
    }
}

/// The largest `(n, ell)` instance shown to attain the reduced-DAG bound.
pub fn bound_construction(n: usize, ell: usize) -> Result<(String, Dag)> {
    if ell == 1 {
        Ok((format!("turan_dag({n}, 2)"), turan_dag(n, 2)?))
    } else {
        let spec = extremal_spec_for(n, ell)?;
        Ok((format!("G[{}, {}, {}]", spec.r, spec.l, spec.s), extremal_for(n, ell)?))
    }
}

/// Reduced-class DAGs with longest path `ell >= 1` have at most
/// t(n - ell + 1, 2) + T(n, ell, 1) edges, and the bound is attained for
/// every `(n, ell)` in range.
pub fn verify_theorem_bound(cfg: &VerifyConfig, class: ReducedClass) -> Result<VerificationReport> {
    let started = Instant::now();
    let max_n = cfg.max_n(LIGHT_MAX_N)?;
    let mut tally = sweep_dags(max_n, cfg.workers, |g, t| {
        let ell = g.longest_path_length();
        if ell == 0 {
            return;
        }
        match class.contains(g, cfg.path_cap) {
            Ok(true) => {}
            Ok(false) => return,
            Err(e) => {
                t.graph_violation(g, format!("class membership undecided: {e}"));
                return;
            }
        }
        t.checked += 1;
        t.observe_max(g.n(), ell, g.edge_count());
        let bound = theorem_bound(g.n() as u64, ell as u64).expect("1 <= ell < n") as usize;
        if g.edge_count() > bound {
            t.graph_violation(g, format!("{} edges exceed bound {bound} at ell = {ell}", g.edge_count()));
        }
    });

    let mut rows = Vec::new();
    for n in 2..=max_n {
        for ell in 1..n {
            let bound = theorem_bound(n as u64, ell as u64)? as usize;
            let observed = tally.maxima.get(&(n, ell)).copied();
            let (name, g) = bound_construction(n, ell)?;
            let in_class = class.contains(&g, cfg.path_cap)?;
            let attained = g.n() == n
                && g.longest_path_length() == ell
                && g.edge_count() == bound
                && in_class;
            if !attained {
                tally.graph_violation(&g, format!("{name} does not attain the bound {bound} at n = {n}, ell = {ell}"));
            }
            if observed != Some(bound) {
                tally.violation(
                    format!("n = {n}, ell = {ell}"),
                    format!("class maximum {observed:?} differs from the bound {bound}"),
                );
            }
            let half_split = half_split_spec(n, ell).ok().map(|spec| {
                let h = extremal_dag(spec);
                HalfSplit { spec, vertices: h.n(), edges: h.edge_count() }
            });
            rows.push(TightnessRow {
                n,
                ell,
                observed_max: observed,
                bound,
                construction: name,
                construction_edges: g.edge_count(),
                attained,
                half_split,
            });
        }
    }
    let mut report = VerificationReport::new(
        &format!("theorem-{}", class.name()),
        format!("n = 1..={max_n}"),
        tally,
        started,
    );
    report.tightness = rows;
    report.notes.push(
        "constructions use G[r, ell, s] with r + s = n - ell + 1 split evenly (r rounded up), \
         which has exactly n vertices; the half_split column uses r + s = n - ell, \
         which has n - 1 vertices and stays below the bound"
            .to_string(),
    );
    report.notes.push("ell = 1 instances use the oriented complete bipartite turan_dag(n, 2)".to_string());
    let mut params = common_params(cfg, max_n);
    params.insert("class".into(), json!(class.name()));
    params.insert("path_cap".into(), json!(cfg.path_cap));
    Ok(with_params(report, params))
}

/// Fast and brute-force predicates on one graph, checking both
/// implications and agreement. A cap hit is recorded as a violation.
fn check_predicate_agreement(g: &Dag, cfg: &VerifyConfig, t: &mut Tally) {
    let fast = match classify(g, cfg.path_cap) {
        Ok(c) => c,
        Err(e) => {
            t.count("skipped_cap");
            t.graph_violation(g, format!("fast predicates undecided: {e}"));
            return;
        }
    };
    let brute_reduced = is_reduced_bruteforce(g, cfg.path_cap);
    let brute_strongly = is_strongly_reduced_bruteforce(g, cfg.order_cap, cfg.path_cap);
    let (brute_reduced, brute_strongly) = match (brute_reduced, brute_strongly) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            t.count("skipped_cap");
            t.graph_violation(g, format!("brute-force oracle undecided: {e}"));
            return;
        }
    };
    t.checked += 1;
    if fast.extremely_reduced && !fast.strongly_reduced {
        t.graph_violation(g, "extremely reduced but not strongly reduced");
    }
    if fast.strongly_reduced && !fast.reduced {
        t.graph_violation(g, "strongly reduced but not reduced");
    }
    if fast.reduced != brute_reduced {
        t.graph_violation(g, format!("is_reduced = {} but oracle = {brute_reduced}", fast.reduced));
    }
    if fast.strongly_reduced != brute_strongly {
        t.graph_violation(
            g,
            format!("is_strongly_reduced = {} but oracle = {brute_strongly}", fast.strongly_reduced),
        );
    }
    for (key, on) in [
        ("reduced", fast.reduced),
        ("strongly_reduced", fast.strongly_reduced),
        ("extremely_reduced", fast.extremely_reduced),
    ] {
        if on {
            t.count(key);
        }
    }
}

/// A 5-chain with chords 1 -> 4 and 0 -> 3: reduced but not strongly reduced.
pub fn reduced_not_strongly_example() -> Dag {
    Dag::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (0, 3)])
        .expect("fixture is acyclic")
}

/// Extremely ⇒ strongly ⇒ reduced, and fast predicates agree with their
/// brute-force oracles, on every DAG up to `max_n` and on seeded random
/// DAGs up to `random_max_n` vertices.
pub fn verify_implications(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let max_n = cfg.max_n(HEAVY_MAX_N)?;
    let order_check_n = max_n.min(5);
    let mut tally = sweep_dags(max_n, cfg.workers, |g, t| {
        check_predicate_agreement(g, cfg, t);
        if g.n() <= order_check_n {
            let reduced = is_reduced(g);
            match g.all_topological_orders(cfg.order_cap) {
                Ok(orders) => {
                    if let Some(o) = orders.iter().find(|o| is_reduced_with_order(g, o) != reduced) {
                        t.graph_violation(g, format!("is_reduced changes under order {:?}", o.as_slice()));
                    }
                    t.count("order_independence_checked");
                }
                Err(e) => t.graph_violation(g, format!("orders undecided: {e}")),
            }
        }
    });

    let random_max_n = cfg.random_max_n.max(2);
    let random = parallel_tally(0..cfg.random_dags as u64, cfg.workers, |i, t| {
        let mut rng = instance_rng(cfg.seed, i);
        let n = rng.gen_range(2..=random_max_n);
        let p = rng.gen_range(0.1..0.9);
        let g = random_dag_with(&mut rng, n, p);
        check_predicate_agreement(&g, cfg, t);
        t.count("random_instances");
    });
    tally.merge(random);

    let fixture = reduced_not_strongly_example();
    let c = classify(&fixture, cfg.path_cap)?;
    tally.checked += 1;
    if c.reduced && !c.strongly_reduced {
        tally.witnesses.push(Witness {
            label: "reduced, not strongly reduced (5-chain with chords 1->4, 0->3)".into(),
            instance: write_edge_list(&fixture),
        });
    } else {
        tally.graph_violation(&fixture, format!("separation fixture misclassified: {c:?}"));
    }

    let report = VerificationReport::new(
        "implications",
        format!("n = 1..={max_n} exhaustive; {} random DAGs with n <= {random_max_n}", cfg.random_dags),
        tally,
        started,
    );
    let mut params = common_params(cfg, max_n);
    params.insert("seed".into(), json!(cfg.seed));
    params.insert("random_dags".into(), json!(cfg.random_dags));
    params.insert("random_max_n".into(), json!(random_max_n));
    params.insert("path_cap".into(), json!(cfg.path_cap));
    params.insert("order_cap".into(), json!(cfg.order_cap));
    params.insert("order_independence_max_n".into(), json!(order_check_n));
    Ok(with_params(report, params))
}

/// On transitive DAGs the three predicates coincide.
pub fn verify_equivalence_transitive(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let max_n = cfg.max_n(HEAVY_MAX_N)?;
    let tally = sweep_dags(max_n, cfg.workers, |g, t| {
        if !is_transitive(g) {
            return;
        }
        t.checked += 1;
        match classify(g, cfg.path_cap) {
            Ok(c) => {
                let values = [c.reduced, c.strongly_reduced, c.extremely_reduced];
                if values.iter().any(|&b| b != values[0]) {
                    t.graph_violation(g, format!("predicates disagree on a transitive graph: {c:?}"));
                } else if values[0] {
                    t.count("all_true");
                } else {
                    t.count("all_false");
                }
            }
            Err(e) => t.graph_violation(g, format!("undecided: {e}")),
        }
    });
    let report = VerificationReport::new("equiv-transitive", format!("n = 1..={max_n}"), tally, started);
    Ok(with_params(report, common_params(cfg, max_n)))
}

/// The transitive closure of a reduced DAG is reduced, strongly reduced and
/// extremely reduced; closure is idempotent, edge-monotone and transitive.
pub fn verify_closure(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let max_n = cfg.max_n(HEAVY_MAX_N)?;
    let tally = sweep_dags(max_n, cfg.workers, |g, t| {
        t.checked += 1;
        let closure = transitive_closure(g);
        if transitive_closure(&closure) != closure {
            t.graph_violation(g, "closure is not idempotent");
        }
        if !g.edges().iter().all(|&(u, v)| closure.has_edge(u, v)) {
            t.graph_violation(g, "closure dropped an edge");
        }
        if !is_transitive(&closure) {
            t.graph_violation(g, "closure is not transitive");
        }
        let (before, after) = match (classify(g, cfg.path_cap), classify(&closure, cfg.path_cap)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                t.graph_violation(g, format!("undecided: {e}"));
                return;
            }
        };
        if before.reduced || before.strongly_reduced || before.extremely_reduced {
            t.count("reduced_inputs");
            if !(after.reduced && after.strongly_reduced && after.extremely_reduced) {
                t.graph_violation(g, format!("closure of a reduced graph is {after:?}"));
            }
        }
    });
    let report = VerificationReport::new("closure", format!("n = 1..={max_n}"), tally, started);
    Ok(with_params(report, common_params(cfg, max_n)))
}

const SEP_REDUCED: &str = "reduced, not strongly reduced";
const SEP_STRONGLY: &str = "strongly reduced, not extremely reduced";

/// Searches for the smallest DAGs separating the three classes, and checks
/// that no transitive DAG separates them.
pub fn find_separations(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let max_n = cfg.max_n(HEAVY_MAX_N)?;
    let mut tally = sweep_dags(max_n, cfg.workers, |g, t| {
        t.checked += 1;
        let c = match classify(g, cfg.path_cap) {
            Ok(c) => c,
            Err(e) => {
                t.graph_violation(g, format!("undecided: {e}"));
                return;
            }
        };
        let separations = [
            (SEP_REDUCED, c.reduced && !c.strongly_reduced),
            (SEP_STRONGLY, c.strongly_reduced && !c.extremely_reduced),
        ];
        for (label, hit) in separations {
            if !hit {
                continue;
            }
            t.count(label);
            t.first(label, g);
            if c.transitive {
                t.graph_violation(g, format!("transitive graph is {label}"));
            }
        }
    });

    let fixture = reduced_not_strongly_example();
    let c = classify(&fixture, cfg.path_cap)?;
    if c.reduced && !c.strongly_reduced {
        tally.witnesses.push(Witness {
            label: format!("{SEP_REDUCED}: 5-chain with chords 1->4, 0->3"),
            instance: write_edge_list(&fixture),
        });
    } else {
        tally.graph_violation(&fixture, format!("separation fixture misclassified: {c:?}"));
    }
    for label in [SEP_REDUCED, SEP_STRONGLY] {
        match tally.firsts.get(label) {
            Some(instance) => {
                let instance = instance.clone();
                tally.witnesses.push(Witness { label: format!("{label}: smallest found"), instance });
            }
            None => tally.violation(format!("n <= {max_n}"), format!("no witness that is {label}")),
        }
    }
    let report = VerificationReport::new("separations", format!("n = 1..={max_n}"), tally, started);
    Ok(with_params(report, common_params(cfg, max_n)))
}

/// Pairs with a common ancestor and a common descendant must be boxes that
/// intersect. Counts the pairs examined.
fn check_intersect_prop(family: &BoxFamily, g: &Dag, t: &mut Tally, kind: &str) {
    let reach = g.reachability();
    for v in 0..g.n() {
        for w in v + 1..g.n() {
            let shared_anc = !reach.ancestors(v).is_disjoint(reach.ancestors(w));
            let shared_desc = !reach.descendants(v).is_disjoint(reach.descendants(w));
            if shared_anc && shared_desc {
                t.count(&format!("{kind}_intersect_pairs"));
                if !boxes_intersect(family.get(v), family.get(w)) {
                    t.violation(
                        write_box_csv(family),
                        format!("{} and {} share an ancestor and a descendant but are disjoint", family.id(v), family.id(w)),
                    );
                }
            }
        }
    }
}

fn check_graph_sanity(family: &BoxFamily, g: &Dag, t: &mut Tally) {
    for &(u, v) in g.edges() {
        if g.has_edge(v, u) {
            t.violation(write_box_csv(family), format!("both {u} -> {v} and {v} -> {u}"));
        }
        if family.get(u).h.width() >= family.get(v).h.width() {
            t.violation(write_box_csv(family), format!("edge {u} -> {v} does not widen"));
        }
    }
}

fn check_common_prop(family: &BoxFamily, g: &Dag, t: &mut Tally) {
    if !is_extremely_reduced(g) || !is_transitive(g) {
        t.violation(write_box_csv(family), "transverse family gives a graph that is not extremely reduced and transitive");
    }
}

/// Boxes: random transverse families give extremely reduced transitive
/// graphs; in any family, vertices with a common ancestor and a common
/// descendant have intersecting boxes; the extremal families reproduce
/// `G[r, l, s]`.
pub fn verify_box_props(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let trials = cfg.trials as u64;
    let mut tally = parallel_tally(0..2 * trials, cfg.workers, |i, t| {
        let mut rng = instance_rng(cfg.seed, i);
        let kind = if i % 2 == 0 { "transverse" } else { "general" };
        let family = if i % 2 == 0 {
            let start = if rng.gen_bool(0.5) {
                let spec = ExtremalSpec::new(rng.gen_range(1..=3), rng.gen_range(2..=4), rng.gen_range(0..=3))
                    .expect("valid ranges");
                jittered_extremal_family(&mut rng, spec)
                    .entries()
                    .iter()
                    .map(|(_, b)| *b)
                    .collect()
            } else {
                Vec::new()
            };
            let extra = rng.gen_range(2..=10);
            let f = random_transverse_family(&mut rng, start, extra, 12, 200);
            if !transverse_violations(&f).is_empty() {
                t.violation(write_box_csv(&f), "generator produced a non-transverse family");
                return;
            }
            t.count("transverse_families");
            f
        } else {
            t.count("general_families");
            let size = rng.gen_range(2..=16);
            random_box_family(&mut rng, size, 6)
        };
        t.checked += 1;
        let g = directed_intersection_graph(&family);
        *t.stats.entry(format!("{kind}_edges")).or_default() += g.edge_count() as u64;
        check_graph_sanity(&family, &g, t);
        check_intersect_prop(&family, &g, t, kind);
        if i % 2 == 0 {
            check_common_prop(&family, &g, t);
        }
    });

    for r in 1..=5 {
        for l in 2..=5 {
            for s in 0..=5 {
                let spec = ExtremalSpec::new(r, l, s)?;
                let family = extremal_box_family(spec);
                tally.checked += 1;
                tally.count("extremal_families");
                if !transverse_violations(&family).is_empty() {
                    tally.violation(write_box_csv(&family), format!("G[{r}, {l}, {s}] family is not transverse"));
                }
                let g = directed_intersection_graph(&family);
                if g != extremal_dag(spec) {
                    tally.violation(write_box_csv(&family), format!("graph differs from G[{r}, {l}, {s}]"));
                }
                check_intersect_prop(&family, &g, &mut tally, "extremal");
                check_common_prop(&family, &g, &mut tally);
            }
        }
    }

    let report = VerificationReport::new(
        "boxes",
        format!("{trials} transverse + {trials} general random families; extremal r, s <= 5, l <= 5"),
        tally,
        started,
    );
    let params = BTreeMap::from([
        ("seed".to_string(), json!(cfg.seed)),
        ("trials".to_string(), json!(cfg.trials)),
        ("workers".to_string(), json!(cfg.workers)),
    ]);
    Ok(with_params(report, params))
}

/// Claims addressable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    Turan,
    Theorem,
    Implications,
    EquivTransitive,
    Closure,
    Separations,
    Boxes,
    All,
}

impl Claim {
    pub fn parse(s: &str) -> Option<Claim> {
        Some(match s {
            "turan" => Claim::Turan,
            "theorem" => Claim::Theorem,
            "implications" => Claim::Implications,
            "equiv-transitive" => Claim::EquivTransitive,
            "closure" => Claim::Closure,
            "separations" => Claim::Separations,
            "boxes" => Claim::Boxes,
            "all" => Claim::All,
            _ => return None,
        })
    }
}

/// Runs one claim (or all of them). `theorem` covers all three classes.
pub fn run_claim(claim: Claim, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    let theorem = |cfg: &VerifyConfig| -> Result<Vec<VerificationReport>> {
        let mut reports = Vec::new();
        for class in ReducedClass::ALL {
            // strongly reduced needs path enumeration; keep it on the heavy ceiling by default
            let mut c = cfg.clone();
            if class == ReducedClass::Strongly && c.max_n.is_none() {
                c.max_n = Some(HEAVY_MAX_N);
            }
            reports.push(verify_theorem_bound(&c, class)?);
        }
        Ok(reports)
    };
    Ok(match claim {
        Claim::Turan => vec![verify_turan_bound(cfg)?],
        Claim::Theorem => theorem(cfg)?,
        Claim::Implications => vec![verify_implications(cfg)?],
        Claim::EquivTransitive => vec![verify_equivalence_transitive(cfg)?],
        Claim::Closure => vec![verify_closure(cfg)?],
        Claim::Separations => vec![find_separations(cfg)?],
        Claim::Boxes => vec![verify_box_props(cfg)?],
        Claim::All => {
            let mut all = vec![verify_turan_bound(cfg)?];
            all.extend(theorem(cfg)?);
            all.push(verify_implications(cfg)?);
            all.push(verify_equivalence_transitive(cfg)?);
            all.push(verify_closure(cfg)?);
            all.push(find_separations(cfg)?);
            all.push(verify_box_props(cfg)?);
            all
        }
    })
}
