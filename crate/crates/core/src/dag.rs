//! Validated directed acyclic graphs on dense vertex ids `0..n`.
//!
//! A [`Dag`] is immutable once built. Adjacency is kept both as a sorted edge
//! list and as bitset rows (successors and predecessors), so the predicates
//! in [`crate::predicates`] can work with set intersections instead of
//! repeated scans.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dag {
    n: usize,
    edges: Vec<(usize, usize)>,
    out: Vec<FixedBitSet>,
    inc: Vec<FixedBitSet>,
}

impl fmt::Debug for Dag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Dag")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Dag {
    /// Builds a graph from an explicit edge list, rejecting self-loops,
    /// duplicate edges, out-of-range endpoints and directed cycles.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Dag> {
        if n == 0 {
            return Err(Error::InvalidParams(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for &(u, v) in pairs {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        let g = Dag::from_trusted(n, seen.into_iter().collect());
        if let Some(cycle) = g.find_cycle() {
            return Err(Error::CycleDetected(cycle));
        }
        Ok(g)
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Dag {
        Dag::from_trusted(n, Vec::new())
    }

    /// Caller guarantees: endpoints in range, no loops, no duplicates, acyclic.
    pub(crate) fn from_trusted(n: usize, mut edges: Vec<(usize, usize)>) -> Dag {
        edges.sort_unstable();
        let mut out = vec![FixedBitSet::with_capacity(n); n];
        let mut inc = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in &edges {
            out[u].insert(v);
            inc[v].insert(u);
        }
        Dag { n, edges, out, inc }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    /// Joined by an edge in either direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].ones()
    }

    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inc[v].ones()
    }

    pub fn successor_set(&self, v: usize) -> &FixedBitSet {
        &self.out[v]
    }

    pub fn predecessor_set(&self, v: usize) -> &FixedBitSet {
        &self.inc[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones(..)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].count_ones(..)
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.in_degree(v) == 0).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.out_degree(v) == 0).collect()
    }

    /// Kahn's algorithm, always removing the smallest-index source.
    pub fn topological_order(&self) -> TopoOrder {
        let (order, _) = self.kahn();
        debug_assert_eq!(order.len(), self.n);
        TopoOrder::from_order_unchecked(order)
    }

    fn kahn(&self) -> (Vec<usize>, Vec<usize>) {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut heap: BinaryHeap<Reverse<usize>> = (0..self.n)
            .filter(|&v| indeg[v] == 0)
            .map(Reverse)
            .collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for w in self.out[v].ones() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        (order, indeg)
    }

    fn find_cycle(&self) -> Option<Vec<usize>> {
        let (order, indeg) = self.kahn();
        if order.len() == self.n {
            return None;
        }
        // Every vertex Kahn could not remove still has a predecessor among
        // the unremoved ones, so walking predecessors must revisit a vertex.
        let stuck = |v: usize| indeg[v] > 0;
        let start = (0..self.n).find(|&v| stuck(v))?;
        let mut walk = vec![start];
        let mut pos = vec![usize::MAX; self.n];
        pos[start] = 0;
        let mut cur = start;
        loop {
            let prev = self.inc[cur].ones().find(|&p| stuck(p))?;
            if pos[prev] != usize::MAX {
                let mut cycle: Vec<usize> = walk[pos[prev]..].to_vec();
                cycle.reverse();
                let min_at = cycle
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, v)| *v)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                cycle.rotate_left(min_at);
                return Some(cycle);
            }
            pos[prev] = walk.len();
            walk.push(prev);
            cur = prev;
        }
    }

    /// Every linear extension, in lexicographic order. Fails once more than
    /// `cap` orders exist.
    pub fn all_topological_orders(&self, cap: usize) -> Result<Vec<TopoOrder>> {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut used = vec![false; self.n];
        let mut prefix = Vec::with_capacity(self.n);
        let mut found = Vec::new();
        self.extend_orders(&mut indeg, &mut used, &mut prefix, &mut found, cap)?;
        Ok(found)
    }

    fn extend_orders(
        &self,
        indeg: &mut [usize],
        used: &mut [bool],
        prefix: &mut Vec<usize>,
        found: &mut Vec<TopoOrder>,
        cap: usize,
    ) -> Result<()> {
        if prefix.len() == self.n {
            if found.len() == cap {
                return Err(Error::CapExceeded {
                    what: "topological order count",
                    cap,
                });
            }
            found.push(TopoOrder::from_order_unchecked(prefix.clone()));
            return Ok(());
        }
        for v in 0..self.n {
            if used[v] || indeg[v] != 0 {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            for w in self.out[v].ones() {
                indeg[w] -= 1;
            }
            let res = self.extend_orders(indeg, used, prefix, found, cap);
            for w in self.out[v].ones() {
                indeg[w] += 1;
            }
            prefix.pop();
            used[v] = false;
            res?;
        }
        Ok(())
    }

    /// Γ(v): edge count of the longest directed path ending at `v`.
    pub fn levels(&self) -> Vec<usize> {
        let mut level = vec![0usize; self.n];
        for &v in self.topological_order().as_slice() {
            for w in self.out[v].ones() {
                level[w] = level[w].max(level[v] + 1);
            }
        }
        level
    }

    /// Edge count of the longest directed path.
    pub fn longest_path_length(&self) -> usize {
        self.levels().into_iter().max().unwrap_or(0)
    }

    pub fn level_partition(&self) -> LevelPartition {
        let level = self.levels();
        let ell = level.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); ell + 1];
        for (v, &l) in level.iter().enumerate() {
            levels[l].push(v);
        }
        LevelPartition { levels, level }
    }

    pub fn reachability(&self) -> Reachability {
        let order = self.topological_order();
        let mut desc = vec![FixedBitSet::with_capacity(self.n); self.n];
        for &v in order.as_slice().iter().rev() {
            let mut row = self.out[v].clone();
            for w in self.out[v].ones() {
                row.union_with(&desc[w]);
            }
            desc[v] = row;
        }
        let mut anc = vec![FixedBitSet::with_capacity(self.n); self.n];
        for (v, row) in desc.iter().enumerate() {
            for w in row.ones() {
                anc[w].insert(v);
            }
        }
        Reachability { desc, anc }
    }

    /// Vertices with a directed path to `v`, excluding `v`.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        self.reachability().ancestors(v).ones().collect()
    }

    /// Vertices reachable from `v`, excluding `v`.
    pub fn descendants(&self, v: usize) -> Vec<usize> {
        self.reachability().descendants(v).ones().collect()
    }
}

/// A permutation of the vertices in which every edge points forward.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TopoOrder {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl TopoOrder {
    fn from_order_unchecked(order: Vec<usize>) -> TopoOrder {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        TopoOrder { order, position }
    }

    /// Checks that `order` is a permutation of the vertices of `g` with every edge forward.
    pub fn new(g: &Dag, order: Vec<usize>) -> Result<TopoOrder> {
        if order.len() != g.n() {
            return Err(Error::InvalidParams(format!(
                "order has {} entries, graph has {} vertices",
                order.len(),
                g.n()
            )));
        }
        let mut seen = vec![false; g.n()];
        for &v in &order {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParams(format!("vertex {v} repeated")));
            }
        }
        let t = TopoOrder::from_order_unchecked(order);
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| t.position(u) > t.position(v)) {
            return Err(Error::InvalidParams(format!("edge {u} -> {v} points backwards")));
        }
        Ok(t)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Vertices grouped by [`Dag::levels`]: `levels[i]` holds every vertex whose
/// longest incoming path has exactly `i` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPartition {
    levels: Vec<Vec<usize>>,
    level: Vec<usize>,
}

impl LevelPartition {
    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn ell(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn level_of(&self, v: usize) -> usize {
        self.level[v]
    }
}

/// Transitive reachability, stored as descendant and ancestor bitset rows.
#[derive(Clone, Debug)]
pub struct Reachability {
    desc: Vec<FixedBitSet>,
    anc: Vec<FixedBitSet>,
}

impl Reachability {
    /// True iff a directed path with at least one edge leads from `v` to `w`.
    pub fn reaches(&self, v: usize, w: usize) -> bool {
        self.desc[v].contains(w)
    }

    pub fn comparable(&self, v: usize, w: usize) -> bool {
        self.reaches(v, w) || self.reaches(w, v)
    }

    pub fn descendants(&self, v: usize) -> &FixedBitSet {
        &self.desc[v]
    }

    pub fn ancestors(&self, v: usize) -> &FixedBitSet {
        &self.anc[v]
    }

    pub fn n(&self) -> usize {
        self.desc.len()
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        (0..n)
            .map(|v| (0..n).map(|w| self.reaches(v, w)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Dag {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Dag::from_edge_list(n, &pairs).unwrap()
    }

    fn diamond() -> Dag {
        Dag::from_edge_list(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn chorded_chain() -> Dag {
        Dag::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (0, 3)]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Dag::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap_err(),
            Error::CycleDetected(vec![0, 1])
        );
        assert_eq!(Dag::from_edge_list(2, &[(1, 1)]).unwrap_err(), Error::SelfLoop(1));
        assert_eq!(
            Dag::from_edge_list(2, &[(0, 1), (0, 1)]).unwrap_err(),
            Error::DuplicateEdge(0, 1)
        );
        assert_eq!(
            Dag::from_edge_list(2, &[(0, 2)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 2, n: 2 }
        );
        assert!(Dag::from_edge_list(0, &[]).is_err());
    }

    #[test]
    fn cycle_witness_is_a_real_cycle() {
        let pairs = [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)];
        let Err(Error::CycleDetected(cycle)) = Dag::from_edge_list(5, &pairs) else {
            panic!("expected a cycle");
        };
        assert_eq!(cycle, vec![1, 2, 3]);
        for i in 0..cycle.len() {
            let edge = (cycle[i], cycle[(i + 1) % cycle.len()]);
            assert!(pairs.contains(&edge));
        }
    }

    #[test]
    fn small_fixtures() {
        assert_eq!(chain(3).edge_count(), 2);
        assert_eq!(chorded_chain().edge_count(), 6);
    }

    #[test]
    fn topological_orders() {
        assert_eq!(chain(3).topological_order().as_slice(), &[0, 1, 2]);
        assert_eq!(Dag::empty(3).topological_order().as_slice(), &[0, 1, 2]);
        assert_eq!(chorded_chain().topological_order().as_slice(), &[0, 1, 2, 3, 4]);
        let reversed = Dag::from_edge_list(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(reversed.topological_order().as_slice(), &[2, 1, 0]);
    }

    #[test]
    fn linear_extensions() {
        let all = Dag::empty(3).all_topological_orders(100).unwrap();
        assert_eq!(all.len(), 6);
        let slices: Vec<&[usize]> = all.iter().map(|o| o.as_slice()).collect();
        let mut sorted = slices.clone();
        sorted.sort();
        assert_eq!(slices, sorted);

        assert_eq!(chain(3).all_topological_orders(100).unwrap().len(), 1);
        let d = diamond().all_topological_orders(100).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].as_slice(), &[0, 1, 2, 3]);
        assert_eq!(d[1].as_slice(), &[0, 2, 1, 3]);

        assert_eq!(
            Dag::empty(4).all_topological_orders(23).unwrap_err(),
            Error::CapExceeded { what: "topological order count", cap: 23 }
        );
        assert_eq!(Dag::empty(4).all_topological_orders(24).unwrap().len(), 24);
    }

    #[test]
    fn longest_paths_and_levels() {
        assert_eq!(Dag::empty(4).longest_path_length(), 0);
        assert_eq!(chain(5).longest_path_length(), 4);
        assert_eq!(chorded_chain().longest_path_length(), 4);

        let p = chain(3).level_partition();
        assert_eq!(p.levels(), &[vec![0], vec![1], vec![2]]);
        let star = Dag::from_edge_list(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(star.level_partition().levels(), &[vec![0], vec![1, 2]]);
        let p = chorded_chain().level_partition();
        assert_eq!(p.levels(), &[vec![0], vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(p.level_of(3), 3);
        assert_eq!(p.ell(), 4);
    }

    #[test]
    fn reachability_fixtures() {
        assert!(chain(3).reachability().reaches(0, 2));
        let r = Dag::empty(3).reachability();
        assert!(r.matrix().iter().flatten().all(|&b| !b));

        let r = diamond().reachability();
        let mut pairs = Vec::new();
        for v in 0..4 {
            for w in 0..4 {
                if r.reaches(v, w) {
                    pairs.push((v, w));
                }
            }
        }
        assert_eq!(pairs, vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
    }

    #[test]
    fn ancestors_and_descendants() {
        assert_eq!(chain(3).ancestors(2), vec![0, 1]);
        assert!(chain(3).ancestors(0).is_empty());
        assert_eq!(diamond().descendants(0), vec![1, 2, 3]);
        assert!(!diamond().descendants(0).contains(&0));
    }

    #[test]
    fn topo_order_validation() {
        let g = diamond();
        assert!(TopoOrder::new(&g, vec![0, 2, 1, 3]).is_ok());
        assert!(TopoOrder::new(&g, vec![1, 0, 2, 3]).is_err());
        assert!(TopoOrder::new(&g, vec![0, 1, 1, 3]).is_err());
        assert!(TopoOrder::new(&g, vec![0, 1, 2]).is_err());
    }
}
