//! Randomized perturbation of a point cloud into a distance-separated one.
//!
//! Each attempt moves every point independently and uniformly inside the
//! ambient ball of radius `epsilon / 2`, so the identity correspondence already
//! has separation below `epsilon`. The clouds that fail to be distance
//! separated form a measure-zero set, so an attempt is accepted almost surely;
//! `max_attempts` bounds the tail.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Pair, Result};
use crate::metric::{FiniteMetricSpace, Norm, PointCloud};
use crate::tolerance::ToleranceConfig;

pub const DEFAULT_MAX_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerturbReport {
    pub output: PointCloud,
    /// Largest single-point displacement; bounds `d_B(input, output)`.
    pub displacement: f64,
    pub attempts: usize,
    pub seed: u64,
}

/// A point uniform in the `norm` ball of the given radius centred at the origin.
pub fn sample_ball<R: Rng + ?Sized>(norm: Norm, dim: usize, radius: f64, rng: &mut R) -> Vec<f64> {
    match norm {
        Norm::Linf => (0..dim)
            .map(|_| rng.random_range(-radius..radius))
            .collect(),
        Norm::L2 => {
            let dir: Vec<f64> = loop {
                let g: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
                if Norm::L2.length(&g) > 0.0 {
                    break g;
                }
            };
            let len = Norm::L2.length(&dir);
            let r = radius * rng.random::<f64>().powf(1.0 / dim as f64);
            dir.into_iter().map(|x| x / len * r).collect()
        }
        Norm::L1 => {
            // dim + 1 normalized exponentials are uniform on the simplex; dropping
            // the last and attaching random signs is uniform in the L1 ball.
            let e: Vec<f64> = (0..=dim).map(|_| Exp1.sample(rng)).collect();
            let total: f64 = e.iter().sum();
            e[..dim]
                .iter()
                .map(|x| {
                    let s = if rng.random::<bool>() { 1.0 } else { -1.0 };
                    s * radius * x / total
                })
                .collect()
        }
    }
}

/// Moves every point uniformly within `radius` (in the cloud's norm).
pub fn jitter<R: Rng + ?Sized>(cloud: &PointCloud, radius: f64, rng: &mut R) -> PointCloud {
    let dim = cloud.dim();
    let points = cloud
        .points()
        .iter()
        .map(|p| {
            let dp = sample_ball(cloud.norm(), dim, radius, rng);
            p.iter().zip(dp).map(|(x, dx)| x + dx).collect()
        })
        .collect();
    PointCloud::new(points, cloud.norm()).expect("jitter preserves shape and finiteness")
}

pub fn max_displacement(a: &PointCloud, b: &PointCloud) -> f64 {
    (0..a.len())
        .map(|i| a.norm().distance(a.point(i), b.point(i)))
        .fold(0.0, f64::max)
}

pub fn perturb_to_ds(
    cloud: &PointCloud,
    epsilon: f64,
    seed: u64,
    max_attempts: usize,
) -> Result<PerturbReport> {
    perturb_to_ds_with(
        cloud,
        epsilon,
        seed,
        max_attempts,
        ToleranceConfig::default(),
    )
}

pub fn perturb_to_ds_with(
    cloud: &PointCloud,
    epsilon: f64,
    seed: u64,
    max_attempts: usize,
    config: ToleranceConfig,
) -> Result<PerturbReport> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_tie: Option<(Pair, Pair)> = None;
    for attempt in 1..=max_attempts {
        let output = jitter(cloud, epsilon / 2.0, &mut rng);
        match FiniteMetricSpace::from_points_with(output.clone(), config) {
            Ok(space) if space.is_distance_separated() => {
                let displacement = max_displacement(cloud, &output);
                return Ok(PerturbReport {
                    output,
                    displacement,
                    attempts: attempt,
                    seed,
                });
            }
            Ok(space) => last_tie = space.find_tie(),
            Err(Error::DuplicatePoint(i, j)) => last_tie = Some(((i, j), (i, j))),
            Err(e) => return Err(e),
        }
    }
    Err(Error::ExhaustedAttempts {
        attempts: max_attempts,
        tie: last_tie,
    })
}
