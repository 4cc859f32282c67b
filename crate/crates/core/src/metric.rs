//! Finite metric spaces, their distance sets, and distance separation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Pair, Result};
use crate::tolerance::{Tolerance, ToleranceConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    L1,
    #[default]
    L2,
    Linf,
}

impl Norm {
    pub fn distance(self, a: &[f64], b: &[f64]) -> f64 {
        debug_assert_eq!(a.len(), b.len());
        let diffs = a.iter().zip(b).map(|(x, y)| (x - y).abs());
        match self {
            Norm::L1 => diffs.sum(),
            Norm::L2 => diffs.map(|t| t * t).sum::<f64>().sqrt(),
            Norm::Linf => diffs.fold(0.0, f64::max),
        }
    }

    /// Length of a single vector.
    pub fn length(self, v: &[f64]) -> f64 {
        match self {
            Norm::L1 => v.iter().map(|x| x.abs()).sum(),
            Norm::L2 => v.iter().map(|x| x * x).sum::<f64>().sqrt(),
            Norm::Linf => v.iter().fold(0.0, |acc, x| acc.max(x.abs())),
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Norm::L1 => "l1",
            Norm::L2 => "l2",
            Norm::Linf => "linf",
        })
    }
}

impl FromStr for Norm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l1" | "manhattan" => Ok(Norm::L1),
            "l2" | "euclidean" => Ok(Norm::L2),
            "linf" | "chebyshev" | "max" => Ok(Norm::Linf),
            other => Err(Error::Parse(format!("unknown norm `{other}`"))),
        }
    }
}

/// `m >= 2` points of a common dimension `N >= 1`, with the norm that metrises them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointCloud {
    points: Vec<Vec<f64>>,
    norm: Norm,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>, norm: Norm) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::TooFewPoints(points.len()));
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
                index: 0,
            });
        }
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                    index,
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFinite { index });
            }
        }
        Ok(Self { points, norm })
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn norm(&self) -> Norm {
        self.norm
    }

    pub fn with_norm(mut self, norm: Norm) -> Self {
        self.norm = norm;
        self
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.norm.distance(&self.points[i], &self.points[j])
    }

    pub fn into_points(self) -> Vec<Vec<f64>> {
        self.points
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    PointCloud(PointCloud),
    ExplicitMatrix,
}

/// A finite metric space `(M, d)` on vertices `0..m`.
///
/// The full table is materialized once; every distance comparison made on the
/// space uses the tolerance resolved at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetricSpace {
    m: usize,
    dist: Vec<f64>,
    diameter: f64,
    provenance: Provenance,
    config: ToleranceConfig,
    tol: Tolerance,
}

impl FiniteMetricSpace {
    pub fn from_points(cloud: PointCloud) -> Result<Self> {
        Self::from_points_with(cloud, ToleranceConfig::default())
    }

    pub fn from_points_with(cloud: PointCloud, config: ToleranceConfig) -> Result<Self> {
        config.validate()?;
        let m = cloud.len();
        let mut dist = vec![0.0; m * m];
        for i in 0..m {
            for j in (i + 1)..m {
                let d = cloud.distance(i, j);
                dist[i * m + j] = d;
                dist[j * m + i] = d;
            }
        }
        let diameter = dist.iter().copied().fold(0.0, f64::max);
        let tol = config.resolve(diameter);
        for i in 0..m {
            for j in (i + 1)..m {
                if dist[i * m + j] <= tol.value() {
                    return Err(Error::DuplicatePoint(i, j));
                }
            }
        }
        Ok(Self {
            m,
            dist,
            diameter,
            provenance: Provenance::PointCloud(cloud),
            config,
            tol,
        })
    }

    pub fn from_matrix(table: &[Vec<f64>]) -> Result<Self> {
        Self::from_matrix_with(table, ToleranceConfig::default())
    }

    /// Validates a square table: zero diagonal, symmetry, positivity off the
    /// diagonal and the triangle inequality, each within the resolved tolerance.
    pub fn from_matrix_with(table: &[Vec<f64>], config: ToleranceConfig) -> Result<Self> {
        config.validate()?;
        let m = table.len();
        if m < 2 {
            return Err(Error::TooFewPoints(m));
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != m {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    expected: m,
                });
            }
            if r.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFinite { index: row });
            }
        }
        let diameter = table.iter().flatten().copied().fold(0.0, f64::max);
        let tol = config.resolve(diameter);

        let mut dist = vec![0.0; m * m];
        for i in 0..m {
            if !tol.eq(table[i][i], 0.0) {
                return Err(Error::NonZeroDiagonal(i));
            }
            for j in (i + 1)..m {
                let (a, b) = (table[i][j], table[j][i]);
                if !tol.eq(a, b) {
                    return Err(Error::NotSymmetric(i, j));
                }
                if a < 0.0 || b < 0.0 {
                    return Err(Error::NegativeDistance(i, j));
                }
                let d = 0.5 * (a + b);
                if d <= tol.value() {
                    return Err(Error::ZeroOffDiagonal(i, j));
                }
                dist[i * m + j] = d;
                dist[j * m + i] = d;
            }
        }
        for i in 0..m {
            for k in (i + 1)..m {
                let dik = dist[i * m + k];
                for j in 0..m {
                    if j == i || j == k {
                        continue;
                    }
                    if !tol.le(dik, dist[i * m + j] + dist[j * m + k]) {
                        return Err(Error::TriangleViolation { i, j, k });
                    }
                }
            }
        }
        Ok(Self {
            m,
            dist,
            diameter,
            provenance: Provenance::ExplicitMatrix,
            config,
            tol,
        })
    }

    /// Builds a space from a table already known to be a metric (e.g. a path metric).
    pub(crate) fn from_trusted(m: usize, dist: Vec<f64>, config: ToleranceConfig) -> Self {
        debug_assert_eq!(dist.len(), m * m);
        let diameter = dist.iter().copied().fold(0.0, f64::max);
        let tol = config.resolve(diameter);
        Self {
            m,
            dist,
            diameter,
            provenance: Provenance::ExplicitMatrix,
            config,
            tol,
        }
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.m + j]
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    pub fn tolerance_config(&self) -> ToleranceConfig {
        self.config
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn cloud(&self) -> Option<&PointCloud> {
        match &self.provenance {
            Provenance::PointCloud(c) => Some(c),
            Provenance::ExplicitMatrix => None,
        }
    }

    /// Row `i` of the distance table.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.dist[i * self.m..(i + 1) * self.m]
    }

    /// Unordered pairs `(i, j, d(i, j))` with `i < j`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let m = self.m;
        (0..m).flat_map(move |i| ((i + 1)..m).map(move |j| (i, j, self.d(i, j))))
    }

    pub fn pair_count(&self) -> usize {
        self.m * (self.m - 1) / 2
    }

    /// Row-major lower triangle, diagonal excluded: d(1,0), d(2,0), d(2,1), ...
    pub fn lower_triangle(&self) -> Vec<f64> {
        (1..self.m)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .map(|(i, j)| self.d(i, j))
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.m).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn distance_set(&self) -> DistanceSet {
        DistanceSet::of(self)
    }

    pub fn is_distance_separated(&self) -> bool {
        self.distance_set().is_separated()
    }

    /// Two distinct unordered pairs at the same distance (within tolerance),
    /// if the space is not distance separated.
    pub fn find_tie(&self) -> Option<(Pair, Pair)> {
        let mut pairs: Vec<_> = self.pairs().collect();
        pairs.sort_by(|a, b| a.2.total_cmp(&b.2));
        pairs
            .windows(2)
            .find(|w| self.tol.eq(w[0].2, w[1].2))
            .map(|w| ((w[0].0, w[0].1), (w[1].0, w[1].1)))
    }
}

/// The sorted set of distances `0 = r_0 < r_1 < ... ` with multiplicities.
///
/// Values within tolerance of each other are merged into one group whose
/// representative is its smallest member. Groups are anchored at that smallest
/// member, so a group never spans more than the tolerance. Multiplicities count
/// unordered pairs; the zero group counts the `m` diagonal entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceSet {
    values: Vec<f64>,
    multiplicity: Vec<usize>,
}

impl DistanceSet {
    fn of(space: &FiniteMetricSpace) -> Self {
        let tol = space.tolerance();
        let mut ds: Vec<f64> = space.pairs().map(|(_, _, d)| d).collect();
        ds.sort_by(f64::total_cmp);

        let mut values = vec![0.0];
        let mut multiplicity = vec![space.len()];
        for d in ds {
            let last = values.len() - 1;
            if d - values[last] <= tol.value() {
                multiplicity[last] += 1;
            } else {
                values.push(d);
                multiplicity.push(1);
            }
        }
        Self {
            values,
            multiplicity,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicity
    }

    /// Positive values (DM without 0).
    pub fn positive(&self) -> &[f64] {
        &self.values[1..]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn diameter(&self) -> f64 {
        *self.values.last().unwrap_or(&0.0)
    }

    /// Index of the group containing `d`: the last representative `<= d`.
    pub fn index_of(&self, d: f64) -> usize {
        self.values.partition_point(|&r| r <= d).saturating_sub(1)
    }

    /// Smallest gap between distinct values (0 participates).
    pub fn mesh_delta(&self) -> Result<f64> {
        if self.values.len() < 2 {
            return Err(Error::DegenerateDistanceSet);
        }
        Ok(self
            .values
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min))
    }

    pub fn is_separated(&self) -> bool {
        self.multiplicity[1..].iter().all(|&k| k == 1)
    }
}
