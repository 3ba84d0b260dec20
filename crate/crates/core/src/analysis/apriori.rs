use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::WedgeIndex;
use crate::transform::{BlockId, CoeffIndex, Frame};

/// `‖ψ_μ‖_1` of the continuum atom whose samples are `M · φ`, where `φ` is
/// the unit-norm grid atom: `(1/M²) Σ |M φ(n)| = (1/M) Σ |φ(n)|`.
pub fn atom_l1_norm(frame: &Frame, index: CoeffIndex) -> Result<f64> {
    let atom = frame.atom(index)?;
    Ok(atom.values().iter().map(|v| v.norm()).sum::<f64>() / frame.size() as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AprioriBound {
    pub j: u32,
    /// Largest sampled `‖ψ_{j,0,k}‖_1`.
    pub l1: f64,
    /// `B_j = l1 · 2^((1+α)j/2)`.
    pub b_j: f64,
    pub samples: usize,
}

/// Translation indices sampled per scale: a 3×3 pattern across the cell.
fn sample_positions(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = [0, rows / 3, (2 * rows) / 3]
        .iter()
        .flat_map(|&a| [0, cols / 3, (2 * cols) / 3].map(move |b| (a, b)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Measured `B_j = max_k ‖ψ_{j,0,k}‖_1 · 2^((1+α)j/2)` over a fixed sample
/// of translations `k`.
pub fn apriori_bound_check(frame: &Frame, j: u32) -> Result<AprioriBound> {
    let params = frame.params();
    if !params.scales().contains(&j) {
        return Err(Error::InvalidIndex(format!("scale {j} outside {:?}", params.scales())));
    }
    let block = BlockId::Wedge(WedgeIndex::new(j, 0));
    let layout = frame.layout(block)?;
    let ks = sample_positions(layout.rows, layout.cols);
    let l1 = ks
        .par_iter()
        .map(|&k| atom_l1_norm(frame, CoeffIndex { block, k }))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    Ok(AprioriBound {
        j,
        l1,
        b_j: l1 * 2f64.powf((1.0 + params.alpha) * j as f64 / 2.0),
        samples: ks.len(),
    })
}
