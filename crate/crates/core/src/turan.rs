//! Exact Turán-type edge counts.
//!
//! All quantities are plain `u64` integers. Parameters outside their domain
//! are rejected with [`Error::InvalidParams`], never clamped.

use num_rational::Ratio;

use crate::error::{Error, Result};

pub fn binomial2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn check_range(n: u64, k: u64) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::InvalidParams(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

/// Sizes of the `k` balanced parts of an `n`-vertex Turán graph, larger parts first.
pub fn turan_part_sizes(n: u64, k: u64) -> Result<Vec<u64>> {
    check_range(n, k)?;
    let (q, rem) = (n / k, n % k);
    Ok((0..k).map(|i| if i < rem { q + 1 } else { q }).collect())
}

/// t(n, k): edges of the complete k-partite graph on balanced parts.
pub fn turan_graph_edges(n: u64, k: u64) -> Result<u64> {
    let parts = turan_part_sizes(n, k)?;
    Ok(binomial2(n) - parts.into_iter().map(binomial2).sum::<u64>())
}

/// Largest edge count of an `n`-vertex graph with no clique on `k + 1`
/// vertices. Attained by the Turán graph, so this equals [`turan_graph_edges`].
pub fn turan_number(n: u64, k: u64) -> Result<u64> {
    turan_graph_edges(n, k)
}

/// The density bound (1 - 1/k) n² / 2 as an exact rational.
pub fn turan_density_bound(n: u64, k: u64) -> Result<Ratio<u64>> {
    check_range(n, k)?;
    Ok(Ratio::new((k - 1) * n * n, 2 * k))
}

/// T(n, k, 1) = C(n, 2) - C(n - k + 1, 2): the most intersecting pairs among
/// `n` intervals with no `k + 1` of them sharing a point.
pub fn interval_turan(n: u64, k: u64) -> Result<u64> {
    check_range(n, k)?;
    Ok(binomial2(n) - binomial2(n - k + 1))
}

/// Expanded form (n - k + 1)(k - 1) + (k - 1)(k - 2) / 2 of [`interval_turan`].
pub fn interval_turan_expanded(n: u64, k: u64) -> Result<u64> {
    check_range(n, k)?;
    Ok((n - k + 1) * (k - 1) + (k - 1) * (k.saturating_sub(2)) / 2)
}

/// Edge bound t(n - ell + 1, 2) + T(n, ell, 1) for reduced DAGs on `n`
/// vertices whose longest path has `ell` edges.
pub fn theorem_bound(n: u64, ell: u64) -> Result<u64> {
    if ell < 1 || n < ell + 1 {
        return Err(Error::InvalidParams(format!(
            "need ell >= 1 and n >= ell + 1, got n = {n}, ell = {ell}"
        )));
    }
    Ok(turan_graph_edges(n - ell + 1, 2)? + interval_turan(n, ell)?)
}
