//! Equidistant evaluation grids and densities sampled on them.

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Densities are evaluated on grids of at most this many dimensions; the
/// point count grows as `N^d` and becomes unusable beyond it.
pub const MAX_DIM: usize = 3;

const MIN_POINTS_PER_DIM: usize = 8;

/// An equidistant rectangular grid. Points are ordered row-major with the
/// last dimension varying fastest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    lower: Vec<f64>,
    upper: Vec<f64>,
    points: Vec<usize>,
}

impl GridSpec {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>, points: Vec<usize>) -> Result<Self> {
        let dim = lower.len();
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidParameter(format!(
                "grid dimension must be in 1..={MAX_DIM}, got {dim}"
            )));
        }
        if upper.len() != dim || points.len() != dim {
            return Err(Error::InvalidParameter(
                "grid lower/upper/points length mismatch".into(),
            ));
        }
        for d in 0..dim {
            if !(upper[d] > lower[d]) || !lower[d].is_finite() || !upper[d].is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "grid bounds in dimension {d} must satisfy lower < upper, got [{}, {}]",
                    lower[d], upper[d]
                )));
            }
            if points[d] < MIN_POINTS_PER_DIM {
                return Err(Error::InvalidParameter(format!(
                    "grid needs at least {MIN_POINTS_PER_DIM} points per dimension, got {} in dimension {d}",
                    points[d]
                )));
            }
        }
        Ok(Self {
            lower,
            upper,
            points,
        })
    }

    /// Symmetric 1-D grid `[-half_width, half_width]`.
    pub fn symmetric_1d(half_width: f64, points: usize) -> Result<Self> {
        Self::new(vec![-half_width], vec![half_width], vec![points])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    /// Total number of grid points.
    pub fn len(&self) -> usize {
        self.points.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    /// Spacing along dimension `d`.
    pub fn spacing(&self, d: usize) -> f64 {
        (self.upper[d] - self.lower[d]) / (self.points[d] - 1) as f64
    }

    /// Product of the per-dimension spacings; the volume `Δ_ξ` of one cell.
    pub fn cell_volume(&self) -> f64 {
        (0..self.dim()).map(|d| self.spacing(d)).product()
    }

    /// Coordinate of point `i` along dimension `d`.
    pub fn coord(&self, d: usize, i: usize) -> f64 {
        self.lower[d] + self.spacing(d) * i as f64
    }

    /// Decompose a flat index into per-dimension indices.
    pub fn unravel(&self, mut flat: usize, out: &mut [usize]) {
        for d in (0..self.dim()).rev() {
            out[d] = flat % self.points[d];
            flat /= self.points[d];
        }
    }

    /// Write the coordinates of the flat-indexed point into `out`.
    pub fn point_into(&self, flat: usize, out: &mut [f64]) {
        let mut rest = flat;
        for d in (0..self.dim()).rev() {
            let i = rest % self.points[d];
            rest /= self.points[d];
            out[d] = self.coord(d, i);
        }
    }

    pub fn point(&self, flat: usize) -> DVector<f64> {
        let mut out = vec![0.0; self.dim()];
        self.point_into(flat, &mut out);
        DVector::from_vec(out)
    }

    /// Iterate over all grid points in flat (row-major) order.
    pub fn iter_points(&self) -> impl Iterator<Item = DVector<f64>> + '_ {
        (0..self.len()).map(|i| self.point(i))
    }

    pub fn same_layout(&self, other: &GridSpec) -> bool {
        self == other
    }
}

/// Nonnegative density values, one per grid point, in the grid's flat order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GriddedDensity {
    grid: GridSpec,
    values: Vec<f64>,
}

impl GriddedDensity {
    pub fn new(grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "expected {} values for the grid, got {}",
                grid.len(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::Numerical(format!(
                "density values must be finite and nonnegative, got {v}"
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Riemann mass `Δ_ξ · Σ values`.
    pub fn mass(&self) -> f64 {
        self.grid.cell_volume() * self.values.iter().sum::<f64>()
    }

    /// Rescale so that `mass() == 1`.
    pub fn normalize(&mut self) -> Result<()> {
        let m = self.mass();
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::Numerical(format!(
                "cannot normalize density with mass {m}"
            )));
        }
        for v in &mut self.values {
            *v /= m;
        }
        Ok(())
    }

    /// Scale every value by `factor` (used for the raw per-sample mixture
    /// sums, which carry a factor of the sample count).
    pub fn scale(&mut self, factor: f64) {
        for v in &mut self.values {
            *v *= factor;
        }
    }

    pub fn into_parts(self) -> (GridSpec, Vec<f64>) {
        (self.grid, self.values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rejects_bad_bounds_and_sizes() {
        assert!(GridSpec::new(vec![0.0], vec![0.0], vec![16]).is_err());
        assert!(GridSpec::new(vec![0.0], vec![1.0], vec![4]).is_err());
        assert!(GridSpec::new(vec![0.0; 4], vec![1.0; 4], vec![8; 4]).is_err());
        assert!(GridSpec::new(vec![0.0], vec![1.0, 2.0], vec![8]).is_err());
    }

    #[test]
    fn row_major_point_order() {
        let g = GridSpec::new(vec![0.0, 10.0], vec![1.0, 17.0], vec![8, 8]).unwrap();
        // last dimension fastest
        let p0 = g.point(0);
        let p1 = g.point(1);
        let p8 = g.point(8);
        assert_relative_eq!(p0[0], 0.0);
        assert_relative_eq!(p0[1], 10.0);
        assert_relative_eq!(p1[0], 0.0);
        assert_relative_eq!(p1[1], 11.0);
        assert_relative_eq!(p8[0], 1.0 / 7.0);
        assert_relative_eq!(p8[1], 10.0);
        assert_relative_eq!(g.cell_volume(), (1.0 / 7.0) * 1.0);
    }

    #[test]
    fn normalization_is_exact() {
        let g = GridSpec::symmetric_1d(4.0, 16).unwrap();
        let mut d = GriddedDensity::new(g, vec![0.25; 16]).unwrap();
        d.normalize().unwrap();
        assert!((d.mass() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_negative_values() {
        let g = GridSpec::symmetric_1d(1.0, 8).unwrap();
        assert!(GriddedDensity::new(g, vec![-1.0; 8]).is_err());
    }
}
