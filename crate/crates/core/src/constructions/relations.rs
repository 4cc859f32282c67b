//! Intrinsic/extrinsic classification and the inclusion relations among
//! `CS(M)`, `MC(M)` and `Σ_M`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{build_cs, build_mc, build_sigma, CutValue};
use crate::error::{Error, Result};
use crate::graph::{is_subgraph, WeightedGraph};
use crate::metric::FiniteMetricSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntrinsicLabel {
    Extrinsic,
    IntrinsicI,
    IntrinsicII,
}

impl fmt::Display for IntrinsicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntrinsicLabel::Extrinsic => "extrinsic",
            IntrinsicLabel::IntrinsicI => "intrinsic-I",
            IntrinsicLabel::IntrinsicII => "intrinsic-II",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntrinsicClass {
    pub label: IntrinsicLabel,
    /// The shared edge length of `Σ_M`; set iff the label is intrinsic-I.
    pub common_length: Option<f64>,
}

impl fmt::Display for IntrinsicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.common_length {
            Some(r) => write!(f, "{} (r={})", self.label, r),
            None => write!(f, "{}", self.label),
        }
    }
}

/// Classifies from an already built `Σ_M`.
pub fn classify_sigma(space: &FiniteMetricSpace, sigma: &WeightedGraph) -> IntrinsicClass {
    if sigma.edge_count() == space.pair_count() {
        return IntrinsicClass {
            label: IntrinsicLabel::Extrinsic,
            common_length: None,
        };
    }
    let tol = space.tolerance();
    let shortest = sigma
        .edges()
        .map(|e| e.weight)
        .fold(f64::INFINITY, f64::min);
    if sigma.edges().all(|e| tol.eq(e.weight, shortest)) {
        IntrinsicClass {
            label: IntrinsicLabel::IntrinsicI,
            common_length: Some(shortest),
        }
    } else {
        IntrinsicClass {
            label: IntrinsicLabel::IntrinsicII,
            common_length: None,
        }
    }
}

pub fn classify_intrinsic(space: &FiniteMetricSpace) -> IntrinsicClass {
    classify_sigma(space, &build_sigma(space))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relations {
    pub cs_subset_sigma: bool,
    pub cs_subset_mc: bool,
    pub cs_eq_sigma_cap_mc: bool,
    pub sigma_eq_cs: bool,
    pub mc_eq_cs: bool,
    pub all_equal: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationsReport {
    pub cs: WeightedGraph,
    pub mc: WeightedGraph,
    pub sigma: WeightedGraph,
    pub cut: CutValue,
    pub class: IntrinsicClass,
    pub relations: Relations,
}

impl RelationsReport {
    pub fn to_json(&self) -> serde_json::Value {
        let edges = |g: &WeightedGraph| -> Vec<(usize, usize, f64)> {
            g.edges().map(|e| (e.u, e.v, e.weight)).collect()
        };
        serde_json::json!({
            "cs_edges": edges(&self.cs),
            "mc_edges": edges(&self.mc),
            "sigma_edges": edges(&self.sigma),
            "cut_value": self.cut.value,
            "class": self.class.label.to_string(),
            "common_length": self.class.common_length,
            "relations": self.relations,
        })
    }
}

/// Builds all three graphs and compares them. `CS ⊆ Σ` and `CS ⊆ MC` hold for
/// every valid space; a failure of either is reported as an internal error.
pub fn relations_report(space: &FiniteMetricSpace) -> Result<RelationsReport> {
    let cs = build_cs(space).graph;
    let (mc, cut) = build_mc(space);
    let sigma = build_sigma(space);
    let class = classify_sigma(space, &sigma);

    let cs_subset_sigma = is_subgraph(&cs, &sigma)?;
    let cs_subset_mc = is_subgraph(&cs, &mc)?;
    if !cs_subset_sigma || !cs_subset_mc {
        return Err(Error::InternalInvariantViolation(format!(
            "CS not contained in {}",
            if cs_subset_sigma { "MC" } else { "Sigma" }
        )));
    }
    let sigma_eq_cs = sigma.same_edges(&cs);
    let mc_eq_cs = mc.same_edges(&cs);
    let relations = Relations {
        cs_subset_sigma,
        cs_subset_mc,
        cs_eq_sigma_cap_mc: sigma.intersection(&mc).same_edges(&cs),
        sigma_eq_cs,
        mc_eq_cs,
        all_equal: sigma_eq_cs && mc_eq_cs,
    };
    Ok(RelationsReport {
        cs,
        mc,
        sigma,
        cut,
        class,
        relations,
    })
}
