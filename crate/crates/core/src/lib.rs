//! Connected graphs induced by finite metric spaces.
//!
//! Given a finite metric space `(M, d)` this crate builds
//!
//! * `CS(M)`, the connected sparse graph, by repeatedly joining every component
//!   to all of its nearest outside points ([`constructions::build_cs`]);
//! * `MC(M)`, the minimum connected graph: all pairs within the smallest
//!   distance that connects `M` ([`constructions::build_mc`]);
//! * `Σ_M`, the smallest graph whose distance-weighted path metric is `d`
//!   ([`constructions::build_sigma`]);
//!
//! and the surrounding tools: distance sets and distance separation
//! ([`metric`]), path metrics and isomorphism under a bijection ([`graph`]),
//! and the bottleneck distance between equal-size point clouds together with
//! randomized perturbation into distance-separated position ([`space`]).
//!
//! ```
//! use metric_graphs::prelude::*;
//!
//! let space = FiniteMetricSpace::from_matrix(&[
//!     vec![0.0, 1.0, 3.0, 4.0],
//!     vec![1.0, 0.0, 2.0, 5.0],
//!     vec![3.0, 2.0, 0.0, 3.0],
//!     vec![4.0, 5.0, 3.0, 0.0],
//! ])?;
//! let cs = build_cs(&space).graph;
//! assert!(is_tree(&cs));
//! assert_eq!(cs.edge_count(), 3);
//! # Ok::<(), metric_graphs::Error>(())
//! ```

pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod metric;
pub mod space;
pub mod tolerance;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::constructions::{
        build_cs, build_mc, build_sigma, classify_intrinsic, relations_report, CsTrace, CutValue,
        IntrinsicClass, IntrinsicLabel, RelationsReport,
    };
    pub use crate::error::{Error, Result};
    pub use crate::graph::{
        components, distances_from, has_cycle, is_subgraph, is_tree, isomorphic_under, path_metric,
        ComponentPartition, WeightMode, WeightedGraph,
    };
    pub use crate::metric::{DistanceSet, FiniteMetricSpace, Norm, PointCloud};
    pub use crate::space::{
        bottleneck_bruteforce, bottleneck_distance, perturb_to_ds, random_rigid_motion,
        sample_cloud, separation, Bijection, CloudModel, RigidMotion,
    };
    pub use crate::tolerance::{ScaleMode, ToleranceConfig};
}
