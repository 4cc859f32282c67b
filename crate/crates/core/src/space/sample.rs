//! Seeded point-cloud generators for ensembles.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`, which is stable
//! across platforms and crate releases.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::metric::{Norm, PointCloud};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CloudModel {
    /// Uniform in `[0, side]^dim`; almost surely distance separated.
    UniformCube { dim: usize, side: f64 },
    /// The first `m` points of the integer lattice `{0..k-1}^dim`, in
    /// lexicographic order; heavily tied.
    Grid { dim: usize, k: usize },
    /// Lattice points each moved uniformly within `[-sigma, sigma]` per coordinate.
    JitteredGrid { dim: usize, k: usize, sigma: f64 },
}

impl CloudModel {
    fn validate(&self, m: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InfeasibleModel(msg));
        if m < 2 {
            return bad(format!("need at least 2 points, got {m}"));
        }
        match *self {
            CloudModel::UniformCube { dim, side } => {
                if dim == 0 || !(side.is_finite() && side > 0.0) {
                    return bad(format!("uniform-cube needs dim >= 1 and side > 0 ({self})"));
                }
            }
            CloudModel::Grid { dim, k } | CloudModel::JitteredGrid { dim, k, .. } => {
                if dim == 0 || k == 0 {
                    return bad(format!("grid needs dim >= 1 and k >= 1 ({self})"));
                }
                let cells = u32::try_from(dim)
                    .ok()
                    .and_then(|d| k.checked_pow(d))
                    .unwrap_or(usize::MAX);
                if m > cells {
                    return bad(format!("{m} points exceed the {cells} cells of {self}"));
                }
                if let CloudModel::JitteredGrid { sigma, .. } = *self {
                    if !(sigma.is_finite() && sigma > 0.0) {
                        return bad(format!("jitter must be positive ({self})"));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for CloudModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CloudModel::UniformCube { dim, side } => write!(f, "uniform-cube:{dim}:{side}"),
            CloudModel::Grid { dim, k } => write!(f, "grid:{dim}:{k}"),
            CloudModel::JitteredGrid { dim, k, sigma } => {
                write!(f, "jittered-grid:{dim}:{k}:{sigma}")
            }
        }
    }
}

impl FromStr for CloudModel {
    type Err = Error;

    /// `uniform-cube:N:side`, `grid:N:k` or `jittered-grid:N:k:sigma`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Parse(format!("invalid model `{s}`"));
        let int = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let real = |t: &str| t.parse::<f64>().map_err(|_| bad());
        match parts.as_slice() {
            ["uniform-cube", n, side] => Ok(CloudModel::UniformCube {
                dim: int(n)?,
                side: real(side)?,
            }),
            ["grid", n, k] => Ok(CloudModel::Grid {
                dim: int(n)?,
                k: int(k)?,
            }),
            ["jittered-grid", n, k, sigma] => Ok(CloudModel::JitteredGrid {
                dim: int(n)?,
                k: int(k)?,
                sigma: real(sigma)?,
            }),
            _ => Err(bad()),
        }
    }
}

fn lattice_point(mut index: usize, dim: usize, k: usize) -> Vec<f64> {
    let mut p = vec![0.0; dim];
    for c in p.iter_mut().rev() {
        *c = (index % k) as f64;
        index /= k;
    }
    p
}

/// Samples `m` points under the L2 norm; use [`PointCloud::with_norm`] to change it.
pub fn sample_cloud(model: CloudModel, m: usize, seed: u64) -> Result<PointCloud> {
    model.validate(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<f64>> = match model {
        CloudModel::UniformCube { dim, side } => (0..m)
            .map(|_| (0..dim).map(|_| rng.random::<f64>() * side).collect())
            .collect(),
        CloudModel::Grid { dim, k } => (0..m).map(|i| lattice_point(i, dim, k)).collect(),
        CloudModel::JitteredGrid { dim, k, sigma } => (0..m)
            .map(|i| {
                lattice_point(i, dim, k)
                    .into_iter()
                    .map(|x| x + rng.random_range(-sigma..sigma))
                    .collect()
            })
            .collect(),
    };
    PointCloud::new(points, Norm::L2)
}
