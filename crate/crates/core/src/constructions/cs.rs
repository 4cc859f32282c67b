//! The connected sparse graph `CS(M)`.
//!
//! Starting from the edgeless graph on `M`, every step joins each current
//! component to *all* of its nearest outside points: for a component `k` with
//! `nu(k) = min { d(x, y) : x in k, y not in k }`, every cross pair at distance
//! `nu(k)` (within tolerance) becomes an edge. Step 1 is the same rule applied
//! to singleton components, i.e. nearest neighbours. The loop stops once the
//! graph is connected. No choice is made at any step, so the result depends on
//! the distance table alone.

use serde::{Deserialize, Serialize};

use crate::graph::{components, ComponentPartition, WeightedGraph};
use crate::metric::FiniteMetricSpace;

/// One inductive step: the partition it starts from, the nearest-component
/// distance of each component (aligned with `partition.components()`), and
/// the edges it adds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsStep {
    pub partition: ComponentPartition,
    pub nu: Vec<f64>,
    pub new_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsTrace {
    pub steps: Vec<CsStep>,
    pub graph: WeightedGraph,
}

impl CsTrace {
    pub fn final_partition(&self) -> ComponentPartition {
        components(&self.graph)
    }

    /// JSON form of the trace: steps with components, nu values and edge batches.
    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<_> = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                serde_json::json!({
                    "step": i + 1,
                    "components": s.partition.components(),
                    "nu": s.nu,
                    "new_edges": s.new_edges,
                })
            })
            .collect();
        let edges: Vec<_> = self.graph.edges().map(|e| (e.u, e.v, e.weight)).collect();
        serde_json::json!({
            "m": self.graph.vertex_count(),
            "steps": steps,
            "edges": edges,
        })
    }
}

pub fn build_cs(space: &FiniteMetricSpace) -> CsTrace {
    let m = space.len();
    let tol = space.tolerance();
    let mut graph = WeightedGraph::new(m);
    let mut partition = ComponentPartition::singletons(m);
    let mut steps = Vec::new();

    while partition.len() > 1 {
        let mut nu = vec![f64::INFINITY; partition.len()];
        for (i, j, d) in space.pairs() {
            let (ci, cj) = (partition.index(i), partition.index(j));
            if ci != cj {
                nu[ci] = nu[ci].min(d);
                nu[cj] = nu[cj].min(d);
            }
        }

        let mut new_edges = Vec::new();
        for (i, j, d) in space.pairs() {
            let (ci, cj) = (partition.index(i), partition.index(j));
            if ci != cj && (tol.le(d, nu[ci]) || tol.le(d, nu[cj])) {
                new_edges.push((i, j));
            }
        }
        for &(i, j) in &new_edges {
            graph
                .add_edge(i, j, space.d(i, j))
                .expect("cross-component pair of a valid space is a valid edge");
        }

        let next = components(&graph);
        steps.push(CsStep {
            partition,
            nu,
            new_edges,
        });
        partition = next;
    }

    CsTrace { steps, graph }
}
