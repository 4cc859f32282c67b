//! `Σ_M`, the smallest graph on `M` whose distance-weighted path metric is `d`.
//!
//! An edge `{x, y}` of `K_m` is dropped exactly when some geodesic of `K_m`
//! from `x` to `y` uses at least two edges. It suffices to look for a single
//! intermediate point `z` with `d(x, z) + d(z, y) = d(x, y)`: if a geodesic
//! `x, z_1, ..., z_k, y` exists, then splitting it at `z_1` and applying the
//! triangle inequality to the tail gives `d(x, z_1) + d(z_1, y) = d(x, y)`.

use crate::graph::WeightedGraph;
use crate::metric::FiniteMetricSpace;

/// True iff some third point lies on a geodesic between `x` and `y` (within tolerance).
pub fn has_shortcut(space: &FiniteMetricSpace, x: usize, y: usize) -> bool {
    let tol = space.tolerance();
    let dxy = space.d(x, y);
    let (rx, ry) = (space.row(x), space.row(y));
    (0..space.len()).any(|z| z != x && z != y && tol.le(rx[z] + ry[z], dxy))
}

pub fn build_sigma(space: &FiniteMetricSpace) -> WeightedGraph {
    let mut g = WeightedGraph::new(space.len());
    for (x, y, d) in space.pairs() {
        if !has_shortcut(space, x, y) {
            g.add_edge(x, y, d)
                .expect("pair of a valid space is a valid edge");
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{Norm, PointCloud};

    fn abc(norm: Norm) -> FiniteMetricSpace {
        let pts = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0]];
        FiniteMetricSpace::from_points(PointCloud::new(pts, norm).unwrap()).unwrap()
    }

    #[test]
    fn example_7_2() {
        let s = FiniteMetricSpace::from_matrix(&[
            vec![0.0, 1.0, 3.0, 4.0],
            vec![1.0, 0.0, 2.0, 5.0],
            vec![3.0, 2.0, 0.0, 3.0],
            vec![4.0, 5.0, 3.0, 0.0],
        ])
        .unwrap();
        assert_eq!(
            build_sigma(&s).edge_set().into_iter().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (1, 2), (2, 3)]
        );
    }

    #[test]
    fn three_points_by_norm() {
        let l1 = build_sigma(&abc(Norm::L1));
        assert_eq!(
            l1.edge_set().into_iter().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2)]
        );
        assert_eq!(build_sigma(&abc(Norm::L2)).edge_count(), 3);
        assert_eq!(build_sigma(&abc(Norm::Linf)).edge_count(), 3);
    }

    #[test]
    fn collinear_points_give_a_path() {
        let pts = (0..5).map(|i| vec![i as f64 * 0.7]).collect();
        let s = FiniteMetricSpace::from_points(PointCloud::new(pts, Norm::L2).unwrap()).unwrap();
        let g = build_sigma(&s);
        assert_eq!(
            g.edge_set().into_iter().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3), (3, 4)]
        );
    }
}
