//! Reducedness predicates.
//!
//! Three nested classes of DAGs are decided here:
//!
//! * **reduced**: for every reachable pair `(v, w)` the vertices lying on
//!   some `v -> w` path, sorted by a topological order, form a path;
//! * **strongly reduced**: for every reachable pair and every two `v -> w`
//!   paths, their union sorted by *any* topological order is a path;
//! * **extremely reduced**: no two non-adjacent vertices have both a common
//!   ancestor and a common descendant.
//!
//! Each class has a fast check and, for the first two, a brute-force variant
//! that follows the defining quantifiers literally. The brute-force variants
//! exist to cross-validate the fast ones and are exponential.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::dag::{Dag, Reachability, TopoOrder};
use crate::error::{Error, Result};

/// Default bound on the number of paths enumerated per vertex pair.
pub const DEFAULT_PATH_CAP: usize = 100_000;

/// Default bound on the number of topological orders the brute-force
/// strongly-reduced check will enumerate.
pub const DEFAULT_ORDER_CAP: usize = 100_000;

/// A directed path given as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathSeq(Vec<usize>);

impl PathSeq {
    pub fn new(g: &Dag, vertices: Vec<usize>) -> Result<PathSeq> {
        if vertices.is_empty() {
            return Err(Error::InvalidParams("a path needs at least one vertex".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if !is_sequence_path(g, &vertices) {
            return Err(Error::InvalidParams(format!("{vertices:?} is not a directed path")));
        }
        Ok(PathSeq(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    /// Edge count.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }

    fn vertex_set(&self, n: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(n);
        set.extend(self.0.iter().copied());
        set
    }
}

/// All directed paths from `v` to `w`, in lexicographic order.
pub fn enumerate_paths(g: &Dag, v: usize, w: usize, cap: usize) -> Result<Vec<PathSeq>> {
    for vertex in [v, w] {
        if vertex >= g.n() {
            return Err(Error::VertexOutOfRange { vertex, n: g.n() });
        }
    }
    paths_between(g, &g.reachability(), v, w, cap)
}

fn paths_between(
    g: &Dag,
    reach: &Reachability,
    v: usize,
    w: usize,
    cap: usize,
) -> Result<Vec<PathSeq>> {
    let mut found = Vec::new();
    if v != w && !reach.reaches(v, w) {
        return Ok(found);
    }
    let mut stack = vec![v];
    extend_paths(g, reach, w, &mut stack, &mut found, cap)?;
    Ok(found)
}

fn extend_paths(
    g: &Dag,
    reach: &Reachability,
    target: usize,
    stack: &mut Vec<usize>,
    found: &mut Vec<PathSeq>,
    cap: usize,
) -> Result<()> {
    let last = *stack.last().expect("stack starts non-empty");
    if last == target {
        if found.len() == cap {
            return Err(Error::CapExceeded { what: "path count", cap });
        }
        found.push(PathSeq(stack.clone()));
        return Ok(());
    }
    for next in g.successors(last) {
        if next == target || reach.reaches(next, target) {
            stack.push(next);
            let res = extend_paths(g, reach, target, stack, found, cap);
            stack.pop();
            res?;
        }
    }
    Ok(())
}

/// Union of the vertices of two paths with common endpoints, listed in the
/// order given by `order`. The result need not be a path.
pub fn ordered_union(a: &PathSeq, b: &PathSeq, order: &TopoOrder) -> Result<Vec<usize>> {
    if a.start() != b.start() || a.end() != b.end() {
        return Err(Error::EndpointMismatch);
    }
    let mut union: Vec<usize> = a.vertices().iter().chain(b.vertices()).copied().collect();
    union.sort_unstable();
    union.dedup();
    union.sort_by_key(|&v| order.position(v));
    Ok(union)
}

/// True iff every consecutive pair of `seq` is an edge of `g`.
pub fn is_sequence_path(g: &Dag, seq: &[usize]) -> bool {
    seq.windows(2).all(|p| g.has_edge(p[0], p[1]))
}

pub fn is_transitive(g: &Dag) -> bool {
    is_transitive_with(g, &g.reachability())
}

fn is_transitive_with(g: &Dag, reach: &Reachability) -> bool {
    (0..g.n()).all(|v| reach.descendants(v) == g.successor_set(v))
}

/// Adds an edge `v -> w` for every pair with `w` reachable from `v`.
pub fn transitive_closure(g: &Dag) -> Dag {
    let reach = g.reachability();
    let edges = (0..g.n())
        .flat_map(|v| reach.descendants(v).ones().map(move |w| (v, w)))
        .collect();
    Dag::from_trusted(g.n(), edges)
}

pub fn is_extremely_reduced(g: &Dag) -> bool {
    is_extremely_reduced_with(g, &g.reachability())
}

fn is_extremely_reduced_with(g: &Dag, reach: &Reachability) -> bool {
    extremely_reduced_violation(g, reach).is_none()
}

/// First non-adjacent pair `(x, y)`, `x < y`, with a common ancestor and a common descendant.
pub fn extremely_reduced_violation(g: &Dag, reach: &Reachability) -> Option<(usize, usize)> {
    let n = g.n();
    for x in 0..n {
        for y in x + 1..n {
            if g.adjacent(x, y) {
                continue;
            }
            let common_ancestor = !reach.ancestors(x).is_disjoint(reach.ancestors(y));
            if common_ancestor && !reach.descendants(x).is_disjoint(reach.descendants(y)) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_reduced(g: &Dag) -> bool {
    is_reduced_with(g, &g.reachability(), &g.topological_order())
}

/// [`is_reduced`] evaluated with a caller-chosen topological order.
pub fn is_reduced_with_order(g: &Dag, order: &TopoOrder) -> bool {
    is_reduced_with(g, &g.reachability(), order)
}

fn is_reduced_with(g: &Dag, reach: &Reachability, order: &TopoOrder) -> bool {
    let mut between = FixedBitSet::with_capacity(g.n());
    let mut seq = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        for w in reach.descendants(v).ones() {
            between.clone_from(reach.descendants(v));
            between.intersect_with(reach.ancestors(w));
            seq.clear();
            seq.push(v);
            seq.extend(between.ones());
            seq.push(w);
            seq.sort_by_key(|&x| order.position(x));
            if !is_sequence_path(g, &seq) {
                return false;
            }
        }
    }
    true
}

/// For every reachable pair, checks that some path contains the vertices of
/// every other path between the same endpoints.
pub fn is_reduced_bruteforce(g: &Dag, cap: usize) -> Result<bool> {
    let reach = g.reachability();
    for v in 0..g.n() {
        for w in reach.descendants(v).ones() {
            let paths = paths_between(g, &reach, v, w, cap)?;
            let sets: Vec<FixedBitSet> = paths.iter().map(|p| p.vertex_set(g.n())).collect();
            let mut all = FixedBitSet::with_capacity(g.n());
            for s in &sets {
                all.union_with(s);
            }
            if !sets.iter().any(|s| all.is_subset(s)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Order-free check: the union of two same-endpoint paths is a path under
/// every topological order iff it is a path under one of them, since the
/// path edges then pin down the relative order of its vertices.
pub fn is_strongly_reduced(g: &Dag, cap: usize) -> Result<bool> {
    is_strongly_reduced_with(g, &g.reachability(), cap)
}

fn is_strongly_reduced_with(g: &Dag, reach: &Reachability, cap: usize) -> Result<bool> {
    let order = g.topological_order();
    for v in 0..g.n() {
        for w in reach.descendants(v).ones() {
            let paths = paths_between(g, reach, v, w, cap)?;
            if paths.len() < 2 {
                continue;
            }
            let sets: Vec<FixedBitSet> = paths.iter().map(|p| p.vertex_set(g.n())).collect();
            let mut seen = HashSet::new();
            for (i, a) in sets.iter().enumerate() {
                for b in &sets[i + 1..] {
                    let mut union = a.clone();
                    union.union_with(b);
                    if !seen.insert(union.clone()) {
                        continue;
                    }
                    let mut seq: Vec<usize> = union.ones().collect();
                    seq.sort_by_key(|&x| order.position(x));
                    if !is_sequence_path(g, &seq) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Literal check over every topological order and every pair of
/// same-endpoint paths. Pairs with identical vertex unions are checked once.
pub fn is_strongly_reduced_bruteforce(g: &Dag, order_cap: usize, path_cap: usize) -> Result<bool> {
    let reach = g.reachability();
    let mut representatives: Vec<(PathSeq, PathSeq)> = Vec::new();
    let mut seen = HashSet::new();
    for v in 0..g.n() {
        for w in reach.descendants(v).ones() {
            let paths = paths_between(g, &reach, v, w, path_cap)?;
            for (i, a) in paths.iter().enumerate() {
                for b in &paths[i..] {
                    let mut union = a.vertex_set(g.n());
                    union.union_with(&b.vertex_set(g.n()));
                    if seen.insert(union) {
                        representatives.push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    if representatives.is_empty() {
        return Ok(true);
    }
    for order in g.all_topological_orders(order_cap)? {
        for (a, b) in &representatives {
            if !is_sequence_path(g, &ordered_union(a, b, &order)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Class membership of one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Classification {
    pub reduced: bool,
    pub strongly_reduced: bool,
    pub extremely_reduced: bool,
    pub transitive: bool,
}

/// Evaluates all fast predicates with a shared reachability computation.
pub fn classify(g: &Dag, path_cap: usize) -> Result<Classification> {
    let reach = g.reachability();
    Ok(Classification {
        reduced: is_reduced_with(g, &reach, &g.topological_order()),
        strongly_reduced: is_strongly_reduced_with(g, &reach, path_cap)?,
        extremely_reduced: is_extremely_reduced_with(g, &reach),
        transitive: is_transitive_with(g, &reach),
    })
}
