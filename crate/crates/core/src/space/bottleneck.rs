//! Separation of a correspondence between two point clouds, and the
//! bottleneck distance `d_B` (the least separation over all bijections).

use itertools::Itertools;

use super::Bijection;
use crate::error::{Error, Result};
use crate::metric::PointCloud;

pub const DEFAULT_BOTTLENECK_CAP: usize = 512;
pub const BRUTEFORCE_MAX_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct Bottleneck {
    pub value: f64,
    /// A bijection achieving `value`.
    pub matching: Bijection,
}

fn check_compatible(a: &PointCloud, b: &PointCloud) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
            index: 0,
        });
    }
    if a.norm() != b.norm() {
        return Err(Error::NormMismatch);
    }
    Ok(())
}

/// Row-major `m x m` table of ambient distances `|a_i - b_j|`.
fn cross_distances(a: &PointCloud, b: &PointCloud) -> Vec<f64> {
    let norm = a.norm();
    a.points()
        .iter()
        .flat_map(|p| b.points().iter().map(move |q| norm.distance(p, q)))
        .collect()
}

/// `max_x |x - f(x)|`.
pub fn separation(a: &PointCloud, b: &PointCloud, f: &Bijection) -> Result<f64> {
    check_compatible(a, b)?;
    if f.len() != a.len() {
        return Err(Error::SizeMismatch(a.len(), f.len()));
    }
    let norm = a.norm();
    Ok((0..a.len())
        .map(|i| norm.distance(a.point(i), b.point(f.apply(i))))
        .fold(0.0, f64::max))
}

pub fn bottleneck_distance(a: &PointCloud, b: &PointCloud) -> Result<Bottleneck> {
    bottleneck_distance_capped(a, b, DEFAULT_BOTTLENECK_CAP)
}

/// Binary search over the sorted cross distances; a threshold is feasible when
/// the bipartite graph of pairs within it has a perfect matching. The optimum
/// is always one of the `m^2` cross distances, so the search is exact.
pub fn bottleneck_distance_capped(
    a: &PointCloud,
    b: &PointCloud,
    cap: usize,
) -> Result<Bottleneck> {
    check_compatible(a, b)?;
    let m = a.len();
    if m > cap {
        return Err(Error::TooLarge {
            size: m,
            limit: cap,
        });
    }
    let cost = cross_distances(a, b);
    let mut candidates = cost.clone();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let (mut lo, mut hi) = (0, candidates.len() - 1);
    let mut best = perfect_matching(&cost, m, candidates[hi])
        .expect("every pair is admissible at the largest threshold");
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match perfect_matching(&cost, m, candidates[mid]) {
            Some(found) => {
                best = found;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    Ok(Bottleneck {
        value: candidates[lo],
        matching: Bijection::new(best).expect("perfect matching is a permutation"),
    })
}

/// Augmenting-path matching on pairs with `cost <= threshold`.
/// Returns `forward[i] = j` when every left vertex can be matched.
fn perfect_matching(cost: &[f64], m: usize, threshold: f64) -> Option<Vec<usize>> {
    let adj: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).filter(|&j| cost[i * m + j] <= threshold).collect())
        .collect();
    let mut match_right: Vec<Option<usize>> = vec![None; m];
    let mut visited = vec![false; m];

    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        visited: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            let free = match match_right[v] {
                None => true,
                Some(w) => augment(w, adj, visited, match_right),
            };
            if free {
                match_right[v] = Some(u);
                return true;
            }
        }
        false
    }

    for u in 0..m {
        visited.fill(false);
        if !augment(u, &adj, &mut visited, &mut match_right) {
            return None;
        }
    }
    let mut forward = vec![0; m];
    for (v, u) in match_right.iter().enumerate() {
        forward[u.expect("all right vertices matched")] = v;
    }
    Some(forward)
}

/// Exhaustive minimum of the separation over all `m!` bijections (`m <= 8`).
pub fn bottleneck_bruteforce(a: &PointCloud, b: &PointCloud) -> Result<f64> {
    check_compatible(a, b)?;
    let m = a.len();
    if m > BRUTEFORCE_MAX_POINTS {
        return Err(Error::TooLarge {
            size: m,
            limit: BRUTEFORCE_MAX_POINTS,
        });
    }
    let cost = cross_distances(a, b);
    Ok((0..m)
        .permutations(m)
        .map(|p| {
            p.iter()
                .enumerate()
                .map(|(i, &j)| cost[i * m + j])
                .fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min))
}
