use crate::error::{Error, Result};

pub const MIN_SAMPLES: usize = 64;

/// Lower estimate of `Höl(g, a) = sup |g(x) - g(y)| / |x - y|^a` from
/// uniform samples with spacing `h`.
///
/// Pairs are taken at dyadic separations `1, 2, 4, …` samples. The result
/// never exceeds the true seminorm of any function interpolating the samples.
pub fn holder_seminorm(samples: &[f64], h: f64, order: f64) -> Result<f64> {
    check(samples.len(), order)?;
    let n = samples.len();
    let mut best = 0.0f64;
    let mut sep = 1;
    while sep < n {
        let denom = (sep as f64 * h).powf(order);
        for i in 0..n - sep {
            best = best.max((samples[i + sep] - samples[i]).abs() / denom);
        }
        sep *= 2;
    }
    Ok(best)
}

/// Same estimate for a row-major `rows × cols` sample array, using dyadic
/// separations along both axes.
pub fn holder_seminorm_2d(samples: &[f64], rows: usize, cols: usize, h: f64, order: f64) -> Result<f64> {
    if samples.len() != rows * cols {
        return Err(Error::InvalidInput(format!(
            "{} samples for a {rows}x{cols} array",
            samples.len()
        )));
    }
    check(samples.len(), order)?;
    let at = |r: usize, c: usize| samples[r * cols + c];
    let mut best = 0.0f64;
    let mut sep = 1;
    while sep < rows.max(cols) {
        let denom = (sep as f64 * h).powf(order);
        for r in 0..rows {
            for c in 0..cols {
                if r + sep < rows {
                    best = best.max((at(r + sep, c) - at(r, c)).abs() / denom);
                }
                if c + sep < cols {
                    best = best.max((at(r, c + sep) - at(r, c)).abs() / denom);
                }
            }
        }
        sep *= 2;
    }
    Ok(best)
}

fn check(len: usize, order: f64) -> Result<()> {
    if len < MIN_SAMPLES {
        return Err(Error::InvalidInput(format!(
            "need at least {MIN_SAMPLES} samples, got {len}"
        )));
    }
    if !(order > 0.0 && order <= 1.0) {
        return Err(Error::InvalidInput(format!(
            "Hölder order must lie in (0, 1], got {order}"
        )));
    }
    Ok(())
}
