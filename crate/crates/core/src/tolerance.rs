//! The equality policy for real-valued distances.
//!
//! Every comparison of the form "these two distances are equal" goes through a
//! [`Tolerance`], which is resolved once per space from a [`ToleranceConfig`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_EQ_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ScaleMode {
    #[default]
    Absolute,
    /// Effective tolerance is `eq_tol * diameter`.
    Relative,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub eq_tol: f64,
    pub scale_mode: ScaleMode,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            eq_tol: DEFAULT_EQ_TOL,
            scale_mode: ScaleMode::Absolute,
        }
    }
}

impl ToleranceConfig {
    pub fn absolute(eq_tol: f64) -> Self {
        Self {
            eq_tol,
            scale_mode: ScaleMode::Absolute,
        }
    }

    pub fn relative(eq_tol: f64) -> Self {
        Self {
            eq_tol,
            scale_mode: ScaleMode::Relative,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.eq_tol.is_finite() && self.eq_tol >= 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidTolerance(self.eq_tol))
        }
    }

    /// Resolves the policy against a space of the given diameter.
    pub fn resolve(&self, diameter: f64) -> Tolerance {
        match self.scale_mode {
            ScaleMode::Absolute => Tolerance(self.eq_tol),
            ScaleMode::Relative => Tolerance(self.eq_tol * diameter),
        }
    }
}

/// An effective absolute tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance(pub f64);

impl Tolerance {
    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn eq(self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.0
    }

    /// `a <= b` with slack: true unless `a` exceeds `b` by more than the tolerance.
    #[inline]
    pub fn le(self, a: f64, b: f64) -> bool {
        a <= b + self.0
    }

    /// `a < b` by more than the tolerance.
    #[inline]
    pub fn lt(self, a: f64, b: f64) -> bool {
        a + self.0 < b
    }
}
