use std::fmt::Write as _;

use serde::Serialize;

use dagx::predicates::{classify, Classification};
use dagx::turan::theorem_bound;
use dagx::Dag;

#[derive(Debug, Serialize)]
pub struct AnalysisOutput {
    pub n: usize,
    pub edges: usize,
    pub ell: usize,
    pub levels: Vec<Vec<usize>>,
    pub predicates: Classification,
    /// `None` when the graph has no edges.
    pub bound: Option<u64>,
    pub slack: Option<i64>,
}

pub fn analyze(g: &Dag, path_cap: usize) -> dagx::Result<AnalysisOutput> {
    let partition = g.level_partition();
    let ell = partition.ell();
    let bound = theorem_bound(g.n() as u64, ell as u64).ok();
    Ok(AnalysisOutput {
        n: g.n(),
        edges: g.edge_count(),
        ell,
        levels: partition.levels().to_vec(),
        predicates: classify(g, path_cap)?,
        bound,
        slack: bound.map(|b| b as i64 - g.edge_count() as i64),
    })
}

fn or_na<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

impl AnalysisOutput {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "edges: {}", self.edges);
        let _ = writeln!(out, "ell: {}", self.ell);
        let levels: Vec<String> = self
            .levels
            .iter()
            .enumerate()
            .map(|(i, vs)| {
                let vs: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                format!("V{i}={{{}}}", vs.join(","))
            })
            .collect();
        let _ = writeln!(out, "levels: {}", levels.join(" "));
        let p = &self.predicates;
        let _ = writeln!(out, "reduced: {}", p.reduced);
        let _ = writeln!(out, "strongly_reduced: {}", p.strongly_reduced);
        let _ = writeln!(out, "extremely_reduced: {}", p.extremely_reduced);
        let _ = writeln!(out, "transitive: {}", p.transitive);
        let _ = writeln!(out, "bound: {}", or_na(self.bound));
        let _ = writeln!(out, "slack: {}", or_na(self.slack));
        out
    }
}
