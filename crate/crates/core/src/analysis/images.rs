use crate::frame::smooth_step;
use crate::grid::Grid;

/// C^∞ window on `[0, 1]`: 0 outside `(0.1, 0.9)`, 1 on `[0.3, 0.7]`.
pub fn unit_window(t: f64) -> f64 {
    smooth_step((t - 0.1) / 0.2, 1.0) * smooth_step((0.9 - t) / 0.2, 1.0)
}

/// Straight-edge fragment `1_{x1 >= 1/2} · w(x1) w(x2)`: a vertical edge
/// whose normal points along `ξ1`.
pub fn straight_edge_image(size: usize) -> Grid {
    Grid::from_fn(size, |x1, x2| {
        if x1 >= 0.5 {
            unit_window(x1) * unit_window(x2)
        } else {
            0.0
        }
    })
}

/// Isotropic Gaussian `exp(-|x - c|² / (2σ²))` centred at `(1/2, 1/2)`.
pub fn gaussian_bump(size: usize, sigma: f64) -> Grid {
    Grid::from_fn(size, |x1, x2| {
        let r2 = (x1 - 0.5).powi(2) + (x2 - 0.5).powi(2);
        (-r2 / (2.0 * sigma * sigma)).exp()
    })
}
