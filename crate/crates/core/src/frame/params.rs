use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::window::{
    angular_profile, band_profile, coarse_profile, highpass_profile, wrap_angle,
};
use crate::error::{Error, Result};

/// Parameters that fully determine a discrete α-curvelet frame.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrameParams {
    /// Anisotropy exponent; 1 is isotropic, 1/2 parabolic, 0 purely directional.
    pub alpha: f64,
    /// Side length `M` of the square grid.
    pub size: usize,
    /// First anisotropic scale; the coarse window covers `|ξ| < 2^j_min`.
    pub j_min: u32,
    /// Top scale; band `j_max` ends at `2^(j_max + 1) <= M / 2`.
    pub j_max: u32,
    /// Shape parameter of the C^∞ transitions.
    pub sharpness: f64,
}

/// Scale-orientation pair `J = (j, ℓ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WedgeIndex {
    pub j: u32,
    pub ell: usize,
}

impl WedgeIndex {
    pub fn new(j: u32, ell: usize) -> Self {
        WedgeIndex { j, ell }
    }
}

impl FrameParams {
    /// Default scale range for a grid: `j_min = 1` and the largest admissible `j_max`.
    pub fn new(alpha: f64, size: usize) -> Result<Self> {
        if !size.is_power_of_two() || size < 16 {
            return Err(Error::InvalidParams(format!(
                "grid size must be a power of two >= 16, got {size}"
            )));
        }
        let j_max = size.trailing_zeros() - 2;
        let params = FrameParams {
            alpha,
            size,
            j_min: 1,
            j_max,
            sharpness: 1.0,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn with_scales(mut self, j_min: u32, j_max: u32) -> Result<Self> {
        self.j_min = j_min;
        self.j_max = j_max;
        self.validate()?;
        Ok(self)
    }

    pub fn with_sharpness(mut self, sharpness: f64) -> Result<Self> {
        self.sharpness = sharpness;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if !(0.0..=1.0).contains(&self.alpha) {
            return bad(format!("alpha must lie in [0, 1], got {}", self.alpha));
        }
        if !self.size.is_power_of_two() || self.size < 16 {
            return bad(format!(
                "grid size must be a power of two >= 16, got {}",
                self.size
            ));
        }
        if self.j_min < 1 || self.j_min > self.j_max {
            return bad(format!(
                "need 1 <= j_min <= j_max, got j_min={} j_max={}",
                self.j_min, self.j_max
            ));
        }
        if self.j_max >= 40 || (1usize << (self.j_max + 1)) > self.size / 2 {
            return bad(format!(
                "top band 2^(j_max+1) = 2^{} exceeds M/2 = {}",
                self.j_max + 1,
                self.size / 2
            ));
        }
        if !(self.sharpness > 0.0 && self.sharpness.is_finite()) {
            return bad(format!("sharpness must be positive, got {}", self.sharpness));
        }
        Ok(())
    }

    /// `⌊j(1-α)⌋`, guarded against products like `10 * (1 - 0.9)` landing just below an integer.
    pub fn orientation_exponent(&self, j: u32) -> u32 {
        (j as f64 * (1.0 - self.alpha) + 1e-9).floor() as u32
    }

    /// Number of orientations `L_j` at scale `j`.
    pub fn orientations(&self, j: u32) -> usize {
        1usize << self.orientation_exponent(j)
    }

    /// Characteristic angle `ω_j = π 2^(-⌊j(1-α)⌋)`.
    pub fn characteristic_angle(&self, j: u32) -> f64 {
        PI / self.orientations(j) as f64
    }

    /// Orientation angle `ω_J = ℓ ω_j`.
    pub fn orientation_angle(&self, wedge: WedgeIndex) -> f64 {
        wedge.ell as f64 * self.characteristic_angle(wedge.j)
    }

    pub fn scales(&self) -> std::ops::RangeInclusive<u32> {
        self.j_min..=self.j_max
    }

    /// All wedge indices ordered by `(j, ℓ)`.
    pub fn wedge_indices(&self) -> Vec<WedgeIndex> {
        self.scales()
            .flat_map(|j| (0..self.orientations(j)).map(move |ell| WedgeIndex::new(j, ell)))
            .collect()
    }

    pub fn is_valid_wedge(&self, wedge: WedgeIndex) -> bool {
        self.scales().contains(&wedge.j) && wedge.ell < self.orientations(wedge.j)
    }

    /// Radial window `W^(j)(r)`; `j = 0` selects the coarse window.
    ///
    /// Band `j >= 1` is supported in `[2^(j-1), 2^(j+1)]` with plateau
    /// `[3/4 2^j, 3/2 2^j]`. The coarse window is 1 up to `3/4 2^j_min` and
    /// vanishes from `2^j_min` on.
    pub fn radial_window(&self, j: u32, r: f64) -> f64 {
        if j == 0 {
            coarse_profile(r / (1u64 << (self.j_min - 1)) as f64, self.sharpness)
        } else {
            band_profile(r / (1u64 << j) as f64, self.sharpness)
        }
    }

    /// Isotropic closure window for frequencies beyond the top band: 0 up to
    /// `2^j_max`, 1 from `3/2 2^j_max` on.
    pub fn residual_window(&self, r: f64) -> f64 {
        highpass_profile(r / (1u64 << (self.j_max + 1)) as f64, self.sharpness)
    }

    /// Angular window `V^(j,ℓ)` at direction `θ`.
    ///
    /// The direction is rotated by `R_{j,ℓ}`, i.e. the angular coordinate
    /// becomes `θ + ω_{j,ℓ}`, then the dilated profile `V(L_j ·)` is
    /// evaluated and symmetrized over antipodes. With `L_j = 1` the two
    /// antipodal halves overlap; the sum is capped at 1.
    pub fn angular_window(&self, j: u32, ell: usize, theta: f64) -> f64 {
        let count = self.orientations(j) as f64;
        let phi = wrap_angle(theta + ell as f64 * PI / count);
        let half = |t: f64| angular_profile(count * t, self.sharpness);
        (half(phi) + half(wrap_angle(phi + PI))).min(1.0)
    }

    /// Un-normalized product `W^(j)(|ξ|) V^(j,ℓ)(ξ/|ξ|)`.
    pub fn raw_wedge_window(&self, wedge: WedgeIndex, xi: [f64; 2]) -> f64 {
        let r = xi[0].hypot(xi[1]);
        let w = self.radial_window(wedge.j, r);
        if w == 0.0 {
            return 0.0;
        }
        w * self.angular_window(wedge.j, wedge.ell, xi[1].atan2(xi[0]))
    }
}
