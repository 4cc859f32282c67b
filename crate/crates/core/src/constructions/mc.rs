//! The minimum connected graph `MC(M)`: the smallest cut-value graph
//! `G_r = { {x, y} : d(x, y) <= r }`, `r` in the distance set, that is connected.

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::graph::WeightedGraph;
use crate::metric::FiniteMetricSpace;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutValue {
    pub value: f64,
    /// Position of `value` in the distance set (0 is the zero distance).
    pub index: usize,
}

/// Largest edge of a minimum spanning tree of the complete distance graph.
///
/// Kruskal over the sorted pairs: the pair whose union connects the last two
/// components is the bottleneck.
pub fn mst_bottleneck(space: &FiniteMetricSpace) -> f64 {
    let mut pairs: Vec<_> = space.pairs().collect();
    pairs.sort_by(|a, b| a.2.total_cmp(&b.2));
    let mut uf = UnionFind::<usize>::new(space.len());
    let mut remaining = space.len() - 1;
    for (i, j, d) in pairs {
        if uf.union(i, j) {
            remaining -= 1;
            if remaining == 0 {
                return d;
            }
        }
    }
    unreachable!("the complete graph on m >= 2 vertices is connected")
}

pub fn build_mc(space: &FiniteMetricSpace) -> (WeightedGraph, CutValue) {
    let ds = space.distance_set();
    let index = ds.index_of(mst_bottleneck(space));
    let mut g = WeightedGraph::new(space.len());
    for (i, j, d) in space.pairs() {
        if ds.index_of(d) <= index {
            g.add_edge(i, j, d)
                .expect("pair of a valid space is a valid edge");
        }
    }
    let cut = CutValue {
        value: ds.values()[index],
        index,
    };
    (g, cut)
}
