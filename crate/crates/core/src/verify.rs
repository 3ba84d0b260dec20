//! Self-check of a frame: partition of unity, Parseval, reconstruction and
//! per-wedge isometry on seeded random grids.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::frame::{FrameParams, CALDERON_TOLERANCE};
use crate::grid::Grid;
use crate::transform::{forward_spectrum, BlockId, Frame};

pub const DEFAULT_VERIFY_SEED: u64 = 0x5EED;
pub const PARSEVAL_TOLERANCE: f64 = 1e-10;
pub const ISOMETRY_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub params: FrameParams,
    pub trials: usize,
    pub seed: u64,
    pub calderon_deviation: f64,
    /// Largest `|Σ|θ|² - ‖f‖²| / ‖f‖²`.
    pub parseval_error: f64,
    /// Largest `‖f - synthesize(analyze f)‖ / ‖f‖`.
    pub reconstruction_error: f64,
    /// Largest `|‖c_J‖ - ‖d_J‖| / ‖d_J‖` over wedges.
    pub isometry_error: f64,
    pub passed: bool,
}

/// Uniform samples in `[-1, 1)`, real or with an independent imaginary part.
pub fn random_grid(size: usize, rng: &mut ChaCha20Rng, complex: bool) -> Grid {
    let values = (0..size * size)
        .map(|_| {
            let re = rng.gen_range(-1.0..1.0);
            let im = if complex { rng.gen_range(-1.0..1.0) } else { 0.0 };
            Complex64::new(re, im)
        })
        .collect();
    Grid::from_complex(size, values).expect("finite samples")
}

pub fn verify_frame(params: FrameParams, trials: usize, seed: u64) -> Result<VerifyReport> {
    let frame = Frame::new(params.clone())?;
    let calderon_deviation = frame.windows().calderon_deviation();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let (mut parseval_error, mut reconstruction_error, mut isometry_error) = (0.0f64, 0.0f64, 0.0f64);
    for t in 0..trials {
        let f = random_grid(params.size, &mut rng, t % 2 == 1);
        let norm2 = f.norm_sqr();
        let c = frame.analyze(&f)?;
        parseval_error = parseval_error.max((c.energy() - norm2).abs() / norm2);
        let back = frame.synthesize(&c)?;
        reconstruction_error = reconstruction_error.max(f.distance(&back) / norm2.sqrt());
        let spectrum = forward_spectrum(&f);
        for index in params.wedge_indices() {
            let d = frame.wedge_extract(&spectrum, index)?;
            let dn = d.norm_sqr().sqrt();
            let cn = c.block(BlockId::Wedge(index)).map_or(0.0, |b| b.energy().sqrt());
            if dn > 0.0 {
                isometry_error = isometry_error.max((cn - dn).abs() / dn);
            }
        }
    }
    let passed = calderon_deviation <= CALDERON_TOLERANCE
        && parseval_error <= PARSEVAL_TOLERANCE
        && reconstruction_error <= PARSEVAL_TOLERANCE
        && isometry_error <= ISOMETRY_TOLERANCE;
    Ok(VerifyReport {
        params,
        trials,
        seed,
        calderon_deviation,
        parseval_error,
        reconstruction_error,
        isometry_error,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_frames_verify() {
        for alpha in [0.0, 0.5, 1.0] {
            let r = verify_frame(FrameParams::new(alpha, 32).unwrap(), 2, 1).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }
}
