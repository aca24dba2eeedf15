//! Deterministic radial-by-angular sampling grids on closed sub-disks.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A deterministic point set `{r_j e^{i phi_k}}` on the closed disk of radius
/// `outer_radius < 1`.
///
/// Radii follow `r_j = outer * sin(pi (j+1) / (2 n))`, which clusters samples
/// toward the outer circle where the extremal behavior of the checked
/// functionals concentrates. Angles are uniform. Iteration order is
/// radius-major, so grid index `j * angles + k` is reproducible.
#[derive(Debug, Clone)]
pub struct SamplingGrid {
    radii: Vec<f64>,
    angles: Vec<f64>,
    outer_radius: f64,
}

impl SamplingGrid {
    pub fn new(n_radii: usize, n_angles: usize, outer_radius: f64) -> Result<Self> {
        if n_radii == 0 || n_angles == 0 {
            return Err(Error::invalid("SamplingGrid", "counts must be >= 1"));
        }
        if !(outer_radius > 0.0 && outer_radius < 1.0) {
            return Err(Error::invalid(
                "SamplingGrid",
                format!("outer radius {outer_radius} must lie in (0, 1)"),
            ));
        }
        let radii = (0..n_radii)
            .map(|j| {
                outer_radius * (std::f64::consts::FRAC_PI_2 * (j + 1) as f64 / n_radii as f64).sin()
            })
            .collect();
        let angles = (0..n_angles)
            .map(|k| std::f64::consts::TAU * k as f64 / n_angles as f64)
            .collect();
        Ok(SamplingGrid {
            radii,
            angles,
            outer_radius,
        })
    }

    /// The suite default: 64 radii by 256 angles with outer radius `1 - 1e-3`.
    pub fn default_disk() -> Self {
        SamplingGrid::new(64, 256, 1.0 - 1e-3).expect("default grid parameters are valid")
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn outer_radius(&self) -> f64 {
        self.outer_radius
    }

    /// Distance kept from the unit circle.
    pub fn margin(&self) -> f64 {
        1.0 - self.outer_radius
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Points in deterministic radius-major order.
    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.radii.iter().flat_map(move |&r| {
            self.angles
                .iter()
                .map(move |&phi| Complex64::from_polar(r, phi))
        })
    }

    /// A coarse copy used for trajectory-based checks, where each sample point
    /// costs a full ODE integration.
    pub fn coarsened(&self, max_radii: usize, max_angles: usize) -> SamplingGrid {
        let nr = self.radii.len().min(max_radii.max(1));
        let na = self.angles.len().min(max_angles.max(1));
        SamplingGrid::new(nr, na, self.outer_radius).expect("coarsened grid parameters are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_deterministic_and_clusters_outward() {
        let g = SamplingGrid::new(8, 16, 0.99).unwrap();
        assert_eq!(g.len(), 128);
        assert_eq!(g.radii().last().copied(), Some(0.99));
        let gaps: Vec<f64> = g.radii().windows(2).map(|w| w[1] - w[0]).collect();
        for w in gaps.windows(2) {
            assert!(w[1] <= w[0] + 1e-15, "radial gaps should shrink outward");
        }
        let p1: Vec<_> = g.points().collect();
        let p2: Vec<_> = g.points().collect();
        assert_eq!(p1, p2);
        assert!(p1.iter().all(|z| z.norm() <= 0.99 + 1e-15));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(SamplingGrid::new(0, 4, 0.5).is_err());
        assert!(SamplingGrid::new(4, 4, 1.0).is_err());
    }

    #[test]
    fn coarsened_keeps_outer_radius() {
        let g = SamplingGrid::default_disk().coarsened(4, 8);
        assert_eq!(g.radii().len(), 4);
        assert_eq!(g.angles().len(), 8);
        assert_eq!(g.outer_radius(), 1.0 - 1e-3);
    }
}
