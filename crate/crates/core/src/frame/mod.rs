//! Frequency-domain building blocks of the α-curvelet frame.
//!
//! Band `j` occupies integer frequencies `2^(j-1) <= |ξ| <= 2^(j+1)`, split
//! into `L_j = 2^⌊j(1-α)⌋` antipodal wedge pairs. A coarse window covers
//! `|ξ| < 2^j_min` and an isotropic residual window closes the partition
//! beyond the top band, so the squared windows sum to one on the whole grid.

mod cell;
mod geometry;
mod params;
mod tables;
pub mod window;

pub use cell::{smooth_numbers, CellLayout};
pub use geometry::{rotation, FrameGeometry, ScaleGeometry, WedgeGeometry};
pub use params::{FrameParams, WedgeIndex};
pub use tables::{WedgeWindow, WindowTables, CALDERON_TOLERANCE};
pub use window::smooth_step;

use crate::error::Result;

pub fn build_geometry(params: &FrameParams) -> Result<FrameGeometry> {
    FrameGeometry::build(params)
}

/// Tabulates the windows and checks they match `geometry`.
pub fn build_windows(params: &FrameParams, geometry: &FrameGeometry) -> Result<WindowTables> {
    let tables = WindowTables::tabulate(params)?;
    for (w, g) in tables.wedges.iter().zip(&geometry.wedges) {
        g.cell.verify_injective(&w.points)?;
    }
    Ok(tables)
}
