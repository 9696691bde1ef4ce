//! Graph constructors: oriented Turán graphs, the three-layer extremal
//! graphs `G[r, l, s]`, exhaustive enumeration and seeded random DAGs.

use std::ops::Range;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dag::Dag;
use crate::error::{Error, Result};
use crate::turan::{binomial2, turan_part_sizes};

/// Largest `n` enumerated unless the caller raises the limit explicitly.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 7;

/// Parameters of `G[r, l, s]`: `r` sources, a chain of `l - 1` middle
/// vertices and `s` sinks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ExtremalSpec {
    pub r: usize,
    pub l: usize,
    pub s: usize,
}

impl ExtremalSpec {
    pub fn new(r: usize, l: usize, s: usize) -> Result<ExtremalSpec> {
        if r < 1 || l < 2 {
            return Err(Error::InvalidParams(format!(
                "G[r, l, s] needs r >= 1 and l >= 2, got r = {r}, l = {l}"
            )));
        }
        Ok(ExtremalSpec { r, l, s })
    }

    pub fn middle(&self) -> usize {
        self.l - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.r + self.middle() + self.s
    }

    /// r(l-1) + C(l-1, 2) + (l-1)s + rs.
    pub fn edge_count(&self) -> usize {
        let m = self.middle();
        self.r * m + binomial2(m as u64) as usize + m * self.s + self.r * self.s
    }

    pub fn x(&self, i: usize) -> usize {
        i
    }

    pub fn y(&self, j: usize) -> usize {
        self.r + j
    }

    pub fn z(&self, k: usize) -> usize {
        self.r + self.middle() + k
    }
}

/// Complete k-partite graph on balanced consecutive blocks, every edge
/// oriented from the lower block to the higher one.
pub fn turan_dag(n: usize, k: usize) -> Result<Dag> {
    let sizes = turan_part_sizes(n as u64, k as u64)?;
    let mut part = Vec::with_capacity(n);
    for (p, size) in sizes.into_iter().enumerate() {
        part.extend(std::iter::repeat_n(p, size as usize));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] < part[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Dag::from_trusted(n, edges))
}

/// `G[r, l, s]` with x-vertices first, then the y-chain, then z-vertices.
/// Its longest path has `l` edges when `s >= 1` and `l - 1` when `s = 0`.
pub fn extremal_dag(spec: ExtremalSpec) -> Dag {
    let m = spec.middle();
    let mut edges = Vec::with_capacity(spec.edge_count());
    for i in 0..spec.r {
        for j in 0..m {
            edges.push((spec.x(i), spec.y(j)));
        }
        for k in 0..spec.s {
            edges.push((spec.x(i), spec.z(k)));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            edges.push((spec.y(i), spec.y(j)));
        }
        for k in 0..spec.s {
            edges.push((spec.y(i), spec.z(k)));
        }
    }
    Dag::from_trusted(spec.vertex_count(), edges)
}

/// Parameters of the extremal graph for `(n, ell)`: `r + s = n - ell + 1`
/// split as evenly as possible, which gives exactly `n` vertices.
pub fn extremal_spec_for(n: usize, ell: usize) -> Result<ExtremalSpec> {
    if ell < 2 || n < ell + 1 {
        return Err(Error::InvalidParams(format!(
            "extremal graph needs ell >= 2 and n >= ell + 1, got n = {n}, ell = {ell}"
        )));
    }
    let outer = n - ell + 1;
    ExtremalSpec::new(outer.div_ceil(2), ell, outer / 2)
}

/// The split `r + s = n - ell` (r rounded up). It yields `n - 1` vertices;
/// kept so reports can show how far it falls short of the bound.
pub fn half_split_spec(n: usize, ell: usize) -> Result<ExtremalSpec> {
    if ell < 2 || n < ell + 2 {
        return Err(Error::InvalidParams(format!(
            "half split needs ell >= 2 and n >= ell + 2, got n = {n}, ell = {ell}"
        )));
    }
    let outer = n - ell;
    ExtremalSpec::new(outer.div_ceil(2), ell, outer / 2)
}

/// A DAG on `n` vertices with longest path `ell` attaining the reduced-DAG
/// edge bound.
pub fn extremal_for(n: usize, ell: usize) -> Result<Dag> {
    extremal_spec_for(n, ell).map(extremal_dag)
}

/// Number of labelled forward-edge DAGs on `n` vertices: 2^C(n, 2).
pub fn dag_count(n: usize) -> u64 {
    1u64 << binomial2(n as u64)
}

/// The DAG whose edge set is bit `k` of `mask` for the `k`-th pair `(i, j)`,
/// `i < j`, in lexicographic order.
pub fn dag_from_mask(n: usize, mask: u64) -> Dag {
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Dag::from_trusted(n, edges)
}

/// Every forward-edge DAG on `n` vertices, up to the default limit.
pub fn enumerate_dags(n: usize) -> Result<impl Iterator<Item = Dag>> {
    enumerate_dags_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_dags_with_limit(n: usize, limit: usize) -> Result<impl Iterator<Item = Dag>> {
    if n > limit || n > 11 {
        return Err(Error::LimitExceeded { n, limit: limit.min(11) });
    }
    Ok(enumerate_range(n, 0..dag_count(n)))
}

/// A contiguous slice of the enumeration, for sharding across workers.
pub fn enumerate_range(n: usize, masks: Range<u64>) -> impl Iterator<Item = Dag> {
    masks.map(move |mask| dag_from_mask(n, mask))
}

/// Generator for instance `index` of a seeded run. Instances are
/// independent, so any partition of the index range reproduces them.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Includes each pair `(i, j)`, `i < j`, independently with probability `p`.
pub fn random_dag(n: usize, p: f64, seed: u64) -> Result<Dag> {
    random_dag_indexed(n, p, seed, 0)
}

pub fn random_dag_indexed(n: usize, p: f64, seed: u64, index: u64) -> Result<Dag> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("edge probability {p} outside [0, 1]")));
    }
    if n == 0 {
        return Err(Error::InvalidParams("a graph needs at least one vertex".into()));
    }
    let mut rng = instance_rng(seed, index);
    Ok(random_dag_with(&mut rng, n, p))
}

pub fn random_dag_with<R: Rng>(rng: &mut R, n: usize, p: f64) -> Dag {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Dag::from_trusted(n, edges)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::predicates::{is_extremely_reduced, is_transitive};
    use crate::turan::turan_graph_edges;

    #[test]
    fn turan_dags() {
        let g = turan_dag(4, 2).unwrap();
        assert_eq!((g.edge_count(), g.longest_path_length()), (4, 1));
        assert_eq!(turan_dag(5, 1).unwrap().edge_count(), 0);
        let g = turan_dag(6, 3).unwrap();
        assert_eq!((g.edge_count(), g.longest_path_length()), (12, 2));
        assert!(turan_dag(3, 4).is_err());
        assert_eq!(turan_dag(7, 3).unwrap().edge_count() as u64, turan_graph_edges(7, 3).unwrap());
    }

    #[test]
    fn extremal_fixtures() {
        let g = extremal_dag(ExtremalSpec::new(1, 2, 1).unwrap());
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.longest_path_length(), 2);

        let g = extremal_dag(ExtremalSpec::new(2, 2, 2).unwrap());
        assert_eq!((g.n(), g.edge_count(), g.longest_path_length()), (5, 8, 2));
        assert!(is_transitive(&g) && is_extremely_reduced(&g));

        let g = extremal_dag(ExtremalSpec::new(3, 4, 0).unwrap());
        assert_eq!(g.longest_path_length(), 3);

        assert!(ExtremalSpec::new(0, 2, 1).is_err());
        assert!(ExtremalSpec::new(1, 1, 1).is_err());
    }

    #[test]
    fn extremal_for_parameters() {
        assert_eq!(extremal_spec_for(4, 2).unwrap(), ExtremalSpec { r: 2, l: 2, s: 1 });
        assert_eq!(extremal_for(4, 2).unwrap().edge_count(), 5);
        assert_eq!(extremal_spec_for(5, 2).unwrap(), ExtremalSpec { r: 2, l: 2, s: 2 });
        assert_eq!(extremal_for(5, 2).unwrap().edge_count(), 8);
        for ell in 2..10 {
            let g = extremal_for(ell + 1, ell).unwrap();
            assert_eq!(g.edge_count(), ell * (ell + 1) / 2);
            assert_eq!(g.edge_count(), binomial2(g.n() as u64) as usize);
        }
        assert!(extremal_for(3, 1).is_err());
        assert!(extremal_for(3, 3).is_err());
        assert_eq!(half_split_spec(5, 2).unwrap().vertex_count(), 4);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_dags(2).unwrap().count(), 2);
        assert_eq!(enumerate_dags(3).unwrap().count(), 8);
        assert_eq!(enumerate_dags(5).unwrap().count(), 1024);
        let all: HashSet<Dag> = enumerate_dags(4).unwrap().collect();
        assert_eq!(all.len(), 64);
        assert!(matches!(enumerate_dags(8), Err(Error::LimitExceeded { n: 8, limit: 7 })));
        assert!(enumerate_dags_with_limit(8, 8).is_ok());
    }

    #[test]
    fn random_fixtures() {
        assert_eq!(random_dag(6, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(random_dag(6, 1.0, 1).unwrap().edge_count(), 15);
        assert_eq!(random_dag(8, 0.4, 99).unwrap(), random_dag(8, 0.4, 99).unwrap());
        assert_ne!(
            random_dag_indexed(8, 0.5, 99, 0).unwrap(),
            random_dag_indexed(8, 0.5, 99, 1).unwrap()
        );
        assert!(random_dag(3, 1.5, 0).is_err());
    }
}
