//! Random Euclidean isometries with a vertex relabeling, for invariance checks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::Bijection;
use crate::error::{Error, Result};
use crate::metric::PointCloud;

/// `x -> rotation * x + translation`, with point `i` relabeled as `relabeling(i)`.
/// `rotation` is orthogonal (reflections allowed); rows are stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RigidMotion {
    pub rotation: Vec<Vec<f64>>,
    pub translation: Vec<f64>,
    pub relabeling: Bijection,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RigidMotion {
    pub fn identity(dim: usize, m: usize) -> Self {
        let rotation = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        Self {
            rotation,
            translation: vec![0.0; dim],
            relabeling: Bijection::identity(m),
        }
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    /// Rows pairwise orthonormal within `tol`.
    pub fn is_orthogonal(&self, tol: f64) -> bool {
        let r = &self.rotation;
        (0..r.len()).all(|i| {
            (0..r.len()).all(|j| {
                let target = if i == j { 1.0 } else { 0.0 };
                (dot(&r[i], &r[j]) - target).abs() <= tol
            })
        })
    }

    pub fn apply(&self, cloud: &PointCloud) -> Result<PointCloud> {
        if cloud.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: cloud.dim(),
                index: 0,
            });
        }
        if cloud.len() != self.relabeling.len() {
            return Err(Error::SizeMismatch(cloud.len(), self.relabeling.len()));
        }
        let mut out = vec![Vec::new(); cloud.len()];
        for (i, p) in cloud.points().iter().enumerate() {
            out[self.relabeling.apply(i)] = self
                .rotation
                .iter()
                .zip(&self.translation)
                .map(|(row, t)| dot(row, p) + t)
                .collect();
        }
        PointCloud::new(out, cloud.norm())
    }
}

/// Orthonormalizes Gaussian vectors (Gram-Schmidt, two passes), draws a
/// translation in `[-5, 5]^dim` and a uniformly random relabeling of `m` points.
pub fn random_rigid_motion(dim: usize, m: usize, seed: u64) -> RigidMotion {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(dim);
    while rows.len() < dim {
        let mut v: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(&mut rng)).collect();
        for _ in 0..2 {
            for q in &rows {
                let c = dot(&v, q);
                v.iter_mut().zip(q).for_each(|(x, qx)| *x -= c * qx);
            }
        }
        let len = dot(&v, &v).sqrt();
        // A nearly dependent draw is discarded and redrawn.
        if len > 1e-6 {
            rows.push(v.into_iter().map(|x| x / len).collect());
        }
    }
    let translation = (0..dim).map(|_| rng.random_range(-5.0..5.0)).collect();
    let relabeling = Bijection::random(m, &mut rng);
    RigidMotion {
        rotation: rows,
        translation,
        relabeling,
    }
}
