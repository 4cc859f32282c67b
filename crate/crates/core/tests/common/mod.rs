#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use metric_graphs::prelude::*;

pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;
pub const T: usize = 3;

pub fn edges(list: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    list.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
}

/// The four-point abstract space with xy=1, xz=3, xt=4, yz=2, yt=5, zt=3.
pub fn four_point_matrix() -> Vec<Vec<f64>> {
    vec![
        vec![0.0, 1.0, 3.0, 4.0],
        vec![1.0, 0.0, 2.0, 5.0],
        vec![3.0, 2.0, 0.0, 3.0],
        vec![4.0, 5.0, 3.0, 0.0],
    ]
}

pub fn four_point_space() -> FiniteMetricSpace {
    FiniteMetricSpace::from_matrix(&four_point_matrix()).unwrap()
}

/// x=(0,0), y=(1,0), z=(2,0), t=(1,1).
pub fn t_shape_cloud() -> PointCloud {
    PointCloud::new(
        vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![2.0, 0.0],
            vec![1.0, 1.0],
        ],
        Norm::L2,
    )
    .unwrap()
}

/// a=(0,0), b=(1,0), c=(1,1).
pub fn corner_cloud(norm: Norm) -> PointCloud {
    PointCloud::new(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0]], norm).unwrap()
}

/// `a_x = x(1,...,1)` followed by the basis vectors `e_1..e_n` of `R^n`.
pub fn diagonal_basis_cloud(n: usize, x: f64) -> PointCloud {
    let mut points = vec![vec![x; n]];
    for i in 0..n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        points.push(e);
    }
    PointCloud::new(points, Norm::L2).unwrap()
}

/// The value of `x` at which `d(a_x, e_i) = sqrt 2`.
pub fn diagonal_threshold(n: usize) -> f64 {
    (1.0 - (1.0 + n as f64).sqrt()) / n as f64
}

pub fn star(n: usize, center: usize) -> BTreeSet<(usize, usize)> {
    (0..n)
        .filter(|&v| v != center)
        .map(|v| (center.min(v), center.max(v)))
        .collect()
}

pub fn complete(n: usize) -> BTreeSet<(usize, usize)> {
    (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect()
}

pub fn space(cloud: PointCloud) -> FiniteMetricSpace {
    FiniteMetricSpace::from_points(cloud).unwrap()
}

/// BFS connectivity on an edge list, independent of the library's union-find.
pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut q = VecDeque::from([0]);
    let mut count = 1;
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                q.push_back(v);
            }
        }
    }
    count == n
}

/// Inserts pairs in ascending distance order, one tolerance group at a time,
/// until the graph connects; returns the edges and the group's smallest value.
pub fn incremental_mc(space: &FiniteMetricSpace) -> (BTreeSet<(usize, usize)>, f64) {
    let tol = space.tolerance().value();
    let mut pairs: Vec<_> = space.pairs().collect();
    pairs.sort_by(|a, b| a.2.total_cmp(&b.2));
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut k = 0;
    while k < pairs.len() {
        let anchor = pairs[k].2;
        while k < pairs.len() && pairs[k].2 - anchor <= tol {
            chosen.push((pairs[k].0, pairs[k].1));
            k += 1;
        }
        if connected(space.len(), &chosen) {
            return (chosen.into_iter().collect(), anchor);
        }
    }
    unreachable!("complete graph is connected")
}

pub fn uniform_clouds(count: usize, dim: usize, m: usize, seed0: u64) -> Vec<PointCloud> {
    (0..count as u64)
        .map(|s| sample_cloud(CloudModel::UniformCube { dim, side: 1.0 }, m, seed0 + s).unwrap())
        .collect()
}
