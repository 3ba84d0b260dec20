use rayon::prelude::*;

use super::CartoonSpec;
use crate::error::{Error, Result};
use crate::grid::Grid;

/// Samples the cartoon on an `M × M` grid.
///
/// With `supersample = s`, pixel `n` averages the point samples at
/// `(s·n + i) / (s·M)` for `i ∈ {0, …, s-1}²`, so rasterizing at `2M` and
/// averaging 2×2 blocks reproduces `s = 2` at `M` exactly. `s = 1` is plain
/// point sampling at `n / M`.
pub fn rasterize(spec: &CartoonSpec, size: usize, supersample: usize) -> Result<Grid> {
    if !size.is_power_of_two() || supersample == 0 {
        return Err(Error::InvalidInput(format!(
            "grid size must be a power of two and supersampling positive, got {size} and {supersample}"
        )));
    }
    let s = supersample;
    let denom = (s * size) as f64;
    let inv = 1.0 / (s * s) as f64;
    let mut values = vec![0.0; size * size];
    values
        .par_chunks_mut(size)
        .enumerate()
        .for_each(|(n1, row)| {
            for (n2, out) in row.iter_mut().enumerate() {
                let mut acc = 0.0;
                for i1 in 0..s {
                    for i2 in 0..s {
                        let x = [(s * n1 + i1) as f64 / denom, (s * n2 + i2) as f64 / denom];
                        acc += spec.value(x);
                    }
                }
                *out = if s == 1 { acc } else { acc * inv };
            }
        });
    Grid::from_real(size, &values)
}
