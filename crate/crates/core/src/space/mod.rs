//! Spaces of equal-cardinality point clouds: bijections, separation and the
//! bottleneck distance, perturbation into distance-separated clouds, seeded
//! samplers, and rigid motions.

mod bijection;
mod bottleneck;
mod perturb;
mod rigid;
mod sample;

pub use bijection::Bijection;
pub use bottleneck::{
    bottleneck_bruteforce, bottleneck_distance, bottleneck_distance_capped, separation, Bottleneck,
    BRUTEFORCE_MAX_POINTS, DEFAULT_BOTTLENECK_CAP,
};
pub use perturb::{
    jitter, max_displacement, perturb_to_ds, perturb_to_ds_with, sample_ball, PerturbReport,
    DEFAULT_MAX_ATTEMPTS,
};
pub use rigid::{random_rigid_motion, RigidMotion};
pub use sample::{sample_cloud, CloudModel};
